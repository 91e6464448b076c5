#pragma once

// Canonical cut-and-project generation of golden tilings as finite patches.
//
// A tile is the lifted 3-face x + [0,1]{e_i, e_j, e_k} of Z^6. The face is
// selected when the internal-space projection of x, minus the offset gamma,
// falls in the half-open parallelepiped spanned by the internal projections
// of the three complementary unit vectors. Vertices of selected faces then
// lie in the window pi'([0,1]^6) + gamma.

#include "icotile/geometry.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icotile {

struct Tile {
    Lattice6 anchor{};
    IndexTriple triple;

    auto operator<=>(const Tile&) const = default;
};

struct TileHash {
    std::size_t operator()(const Tile& t) const noexcept {
        return Lattice6Hash{}(t.anchor) * 31u + static_cast<std::size_t>(t.triple.ordinal());
    }
};

/// The eight lattice vertices of a tile.
std::array<Lattice6, 8> tile_vertices(const Tile& t);

using Vec3 = std::array<double, 3>;
using Vec6 = std::array<double, 6>;

/// Which 3-subspace of R^6 a patch approximates.
struct SlopeDescriptor {
    enum class Kind { Icosahedral, Custom };
    Kind kind = Kind::Icosahedral;
    /// Float generators; for Icosahedral these are w1, w2, w3.
    std::array<Vec6, 3> generators{};

    static SlopeDescriptor icosahedral();
    static SlopeDescriptor custom(const std::array<Vec6, 3>& gens);
};

struct Patch {
    std::vector<Tile> tiles;  // sorted, unique
    SlopeDescriptor slope = SlopeDescriptor::icosahedral();
    /// Internal offset of an exact icosahedral patch.
    std::optional<GoldenVec3> gamma_exact;
    /// Lift offset in R^6 of a float-mode patch (its internal offset is the
    /// projection of this vector).
    std::optional<Vec6> gamma_lift;
    /// Radius used to build the patch; 0 when unknown (imported).
    double radius = 0.0;

    bool contains(const Tile& t) const;
    /// Sorts and deduplicates tiles.
    void canonicalize();
    std::size_t count(RhombType type) const;
    /// All distinct lattice vertices of all tiles, sorted.
    std::vector<Lattice6> vertices() const;
};

class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BoundaryAmbiguityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateSlopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The two mirror conventions for the face-selection test.
enum class SelectionConvention {
    ProjectionMinusOffset,  // pi'(x) - gamma in the parallelepiped
    OffsetMinusProjection,  // gamma - pi'(x) in the parallelepiped
};

/// Fixed by running the exact-cover test on both conventions; only this one
/// covers space exactly once.
inline constexpr SelectionConvention kSelectionConvention = SelectionConvention::ProjectionMinusOffset;

/// The window pi'([0,1]^6) in the internal coordinates of the icosahedral
/// slope (a rhombic triacontahedron). Exact.
class Window {
public:
    Window();
    /// Generators pi'(e_1..e_6).
    const std::array<GoldenVec3, 6>& generators() const { return gens_; }
    /// pi'((1/2, ..., 1/2)).
    const GoldenVec3& center() const { return center_; }
    /// Closed membership.
    bool contains(const GoldenVec3& y) const;

    struct Facet {
        GoldenVec3 normal;
        GoldenRational lo, hi;  // lo <= <normal, y> <= hi on the window
    };
    /// One entry per antipodal facet pair (15 for six generators in general position).
    const std::vector<Facet>& facets() const { return facets_; }

private:
    std::array<GoldenVec3, 6> gens_;
    GoldenVec3 center_;
    std::vector<Facet> facets_;
};

/// Exact face selection for the icosahedral slope at internal offset gamma.
class CanonicalSelector {
public:
    explicit CanonicalSelector(GoldenVec3 gamma, SelectionConvention convention = kSelectionConvention);

    /// True iff the 3-face (x, t) belongs to the tiling. Throws
    /// GenericityError when the test point lies on the parallelepiped boundary.
    bool select_face(const Lattice6& x, IndexTriple t) const;
    /// Whether pi'(x) - gamma (or its mirror) lies in the closed window.
    bool is_vertex(const Lattice6& x) const;

    const GoldenVec3& gamma() const { return gamma_; }
    SelectionConvention convention() const { return convention_; }

private:
    struct Form {
        // <n_k, pi'(e_a)> as integer pairs (a, b) meaning a + b*phi; all lie in Z[phi]
        std::array<std::array<std::array<std::int64_t, 2>, 6>, 3> coeff;
        std::array<GoldenRational, 3> offset;                // <n_k, gamma>
        GoldenRational det;
    };
    GoldenVec3 gamma_;
    SelectionConvention convention_;
    std::array<Form, 20> forms_;
    Window window_;
};

/// Float face selection for an arbitrary slope spanned by three generators.
class FloatSelector {
public:
    /// Throws DegenerateSlopeError when the generators are (nearly) dependent.
    FloatSelector(const std::array<Vec6, 3>& generators, const Vec6& gamma_lift, double eps,
                  SelectionConvention convention = kSelectionConvention);

    /// Throws BoundaryAmbiguityError when a decision falls within eps of a boundary.
    bool select_face(const Lattice6& x, IndexTriple t) const;

    /// Rows: orthonormal basis of the orthogonal complement of the slope.
    const std::array<Vec6, 3>& internal_basis() const { return basis_; }

private:
    std::array<Vec6, 3> basis_{};
    std::array<Vec3, 6> gens_{};  // internal projections of e_a
    Vec3 gamma_int_{};
    double eps_;
    SelectionConvention convention_;
    std::array<std::array<Vec3, 3>, 20> inverse_{};  // rows of the inverse complement matrix
};

enum class Exec { Serial, Parallel };

/// BFS from the origin over vertices of selected tiles; keeps tiles whose
/// anchor lies within physical radius R. The origin must be a vertex.
Patch generate_patch(double R, const GoldenVec3& gamma, Exec exec = Exec::Parallel);

Patch generate_patch_float(const std::array<Vec6, 3>& generators, double R, const Vec6& gamma_lift, double eps,
                           Exec exec = Exec::Parallel);

/// An offset near the window center with small random rational perturbation,
/// so that the origin is a vertex and boundary hits are unlikely.
GoldenVec3 random_generic_gamma(std::uint64_t seed);
Vec6 random_generic_gamma_lift(std::uint64_t seed);

/// generate_patch with a seeded generic offset, retried on genericity errors.
Patch generate_canonical(double R, std::uint64_t seed, Exec exec = Exec::Parallel);

/// The float lift offset whose projection equals the exact internal offset.
Vec6 lift_of_gamma(const GoldenVec3& gamma);

/// w1, w2, w3 as float 6-vectors.
std::array<Vec6, 3> icosahedral_generators_f();

/// Upper bound on the distance between two points of one golden rhombohedron.
double max_tile_diameter();

struct ValidationReport {
    std::size_t duplicate_tiles = 0;
    std::size_t overfull_faces = 0;       // a lifted 2-face in three or more tiles
    std::size_t same_side_faces = 0;      // two tiles on the same side of a shared face
    std::size_t open_interior_faces = 0;  // interior 2-face with only one tile
    std::string first_problem;
    bool ok() const {
        return duplicate_tiles == 0 && overfull_faces == 0 && same_side_faces == 0 && open_interior_faces == 0;
    }
};

/// Combinatorial face-to-face check in the lift. Faces whose physical center
/// is within interior_radius must be shared by exactly two tiles; pass a
/// negative radius to skip that part.
ValidationReport validate_patch(const Patch& patch, double interior_radius);

struct CoverReport {
    std::size_t samples = 0;
    std::size_t resampled = 0;
    std::size_t uncovered = 0;
    std::size_t multiply_covered = 0;
    bool exact() const { return samples > 0 && uncovered == 0 && multiply_covered == 0; }
};

/// Samples points uniformly in the ball of the given radius around center and
/// counts containing tiles; points within 1e-9 of a tile boundary are resampled.
CoverReport check_exact_cover(const Patch& patch, double radius, std::size_t samples, std::uint64_t seed,
                              Exec exec = Exec::Parallel, Vec3 center = {0, 0, 0});

namespace kernels {

/// Evaluates select(candidates[n]) into hits[n]. The parallel variant
/// rethrows the first exception raised by any worker.
template <class Selector>
void select_batch_serial(const Selector& sel, const std::vector<Tile>& candidates, std::vector<char>& hits);
template <class Selector>
void select_batch_omp(const Selector& sel, const std::vector<Tile>& candidates, std::vector<char>& hits);

/// Number of tiles containing each point in its open interior; -1 marks a
/// point within tol of some tile boundary.
std::vector<int> cover_counts_serial(const Patch& patch, const std::vector<Vec3>& points, double tol);
std::vector<int> cover_counts_omp(const Patch& patch, const std::vector<Vec3>& points, double tol);

}  // namespace kernels

}  // namespace icotile
