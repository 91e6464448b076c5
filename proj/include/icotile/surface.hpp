#pragma once

// Lifting tilings to Z^6, planarity (thickness) measurement and the
// elementary flip that exchanges the two tilings of a 4-vector zonotope.

#include "icotile/cutproject.hpp"
#include "icotile/grassmann.hpp"

#include <stdexcept>
#include <vector>

namespace icotile {

// ------------------------------------------------------------------ lifting

struct ImportedTile {
    IndexTriple triple;
    Vec3 position;  // physical position of the anchor corner
};

/// Physical positions of every tile, in patch order.
std::vector<ImportedTile> export_physical(const Patch& patch);

class LiftError : public std::runtime_error {
public:
    enum class Kind { Inconsistent, Ambiguous, Disconnected };
    LiftError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Assigns Z^6 anchors by BFS over the vertex-edge graph, the anchor of the
/// first tile becoming the origin. Vertices closer than 1e-7 are merged;
/// a vertex between 1e-7 and 1e-3 from another is a conflict.
Patch lift_imported(const std::vector<ImportedTile>& tiles,
                    const SlopeDescriptor& slope = SlopeDescriptor::icosahedral());

// ------------------------------------------------------------ decomposition

/// x = sum a_i w_i + sum z_i r_i with r_i the conjugate of w_i.
struct ZDecomposition {
    std::array<GoldenRational, 3> base;  // coefficients along w1, w2, w3
    std::array<GoldenRational, 3> z;     // coefficients along r1, r2, r3

    GoldenVec6 reconstruct() const;
};

ZDecomposition z_decompose(const Lattice6& x);

struct ZDecompositionF {
    Vec3 base{};
    Vec3 z{};
};
ZDecompositionF z_decompose_f(const Lattice6& x);

// ---------------------------------------------------------------- thickness

struct PlanarityReport {
    /// max over window facet normals n of (spread of <n, pi'(x)>) / (window width along n)
    double thickness = 0;
    std::size_t vertices = 0;
    /// Spread of each internal coordinate over the vertices.
    Vec3 axis_extents{};
    /// Ranges of the coefficients along the internal basis (r1, r2, r3 for the icosahedral slope).
    std::array<std::pair<double, double>, 3> z_ranges{};
};

/// The slope used is the patch's own descriptor. Throws std::invalid_argument
/// on an empty patch.
PlanarityReport thickness(const Patch& patch, Exec exec = Exec::Parallel);

/// Internal projection of the unit vectors (the window generators) for a slope.
/// Icosahedral: conj(v_a). Custom: an orthonormal basis of the complement.
std::array<Vec3, 6> internal_generators(const SlopeDescriptor& slope);

namespace kernels {

struct FacetSpread {
    Vec3 normal{};
    double width = 0;
};

/// Window facet normals and widths for the given internal generators.
std::vector<FacetSpread> window_facets(const std::array<Vec3, 6>& gens);

/// max over facets of (max - min of <n, y>) / width.
double thickness_serial(const std::vector<Vec3>& internal, const std::vector<FacetSpread>& facets);
double thickness_omp(const std::vector<Vec3>& internal, const std::vector<FacetSpread>& facets);

}  // namespace kernels

// -------------------------------------------------------------------- flips

/// The unit 4-cube at corner over quad {i,j,k,l} has two boundary halves that
/// each project onto the zonotope of v_i, v_j, v_k, v_l. With the linear
/// dependency c_i v_i + ... + c_l v_l = 0 normalized to c_i > 0, the Lower
/// half takes the facet missing m at the corner when c_m > 0 and at
/// corner + e_m otherwise; Upper is the complementary half.
struct FlipSite {
    Lattice6 corner{};
    Quad quad{};
    enum class Parity { Lower, Upper } parity = Parity::Lower;

    auto operator<=>(const FlipSite&) const = default;
};

/// The four tiles of one half of the 4-cube.
std::array<Tile, 4> flip_tiles(const Lattice6& corner, const Quad& quad, FlipSite::Parity parity);

/// Sites whose four tiles are all present, sorted.
std::vector<FlipSite> find_flips(const Patch& patch);

class SiteNotPresentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Replaces the site's four tiles by the other half. The returned patch
/// carries the flipped site as parity-reversed.
Patch apply_flip(const Patch& patch, const FlipSite& site);

FlipSite reversed(const FlipSite& site);

}  // namespace icotile
