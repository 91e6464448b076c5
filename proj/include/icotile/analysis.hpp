#pragma once

// Worms (chains of tiles glued along faces parallel to two fixed vectors),
// their alternation properties, and shadows onto four coordinates.

#include "icotile/cutproject.hpp"
#include "icotile/grassmann.hpp"
#include "icotile/surface.hpp"

#include <optional>
#include <vector>

namespace icotile {

// -------------------------------------------------------------------- worms

struct WormTile {
    Tile tile;
    int third = 0;    // the index of the tile triple other than i and j
    int step = 0;     // +1 when the worm crosses the tile from its face at the anchor to the face at anchor + e_third
    RhombType type = RhombType::Prolate;
};

/// A maximal face-connected chain of tiles containing {i, j}, ordered along
/// the physical direction v_i x v_j.
struct Worm {
    int i = 0, j = 0;
    std::vector<WormTile> tiles;
    bool truncated_front = true;  // first tile has no neighbor before it in the patch
    bool truncated_back = true;
};

/// All worms for the pair {i, j}, sorted by first tile. Throws
/// std::invalid_argument for an invalid pair.
std::vector<Worm> extract_worms(const Patch& patch, int i, int j);

/// The worm of pair {i, j} through one tile, traced along shared faces.
/// The tile must contain i and j.
Worm worm_through(const Patch& patch, const Tile& tile, int i, int j);

struct AlternationReport {
    bool weak_prolate = true;  // prolate tiles alternate between the two prolate orientations
    bool weak_oblate = true;
    bool full() const { return weak_prolate && weak_oblate; }
    std::size_t max_same_type_run = 0;
    /// Positions in the sequence where a tile repeats the orientation of the previous tile of its type.
    std::vector<std::size_t> violations;
};

/// Alternation of a sequence of third indices for the pair {i, j}.
AlternationReport alternation_of_sequence(int i, int j, const std::vector<int>& thirds);
AlternationReport alternation_report(const Worm& w);

enum class AlternationKind { WeakProlate, WeakOblate, Full };

struct AnalysisOptions {
    /// Only maximal runs of worm tiles whose anchor lies within this physical
    /// radius are analyzed. Negative: every tile. Consecutive tiles of a worm
    /// piece in a patch are consecutive in the whole tiling, so boundary pieces
    /// are genuine sub-worms.
    double interior_radius = -1;
    std::size_t run_bound = 8;
};

struct PatchAlternation {
    std::size_t worms = 0;
    std::size_t weak_prolate_failures = 0;
    std::size_t weak_oblate_failures = 0;
    std::size_t max_same_type_run = 0;
    bool run_bound_ok = true;
    double thickness = 0;
    bool holds(AlternationKind k) const;
};

/// Every worm of every pair, restricted to the interior.
PatchAlternation check_alternation(const Patch& patch, const AnalysisOptions& opt = {});

/// Worm pieces of the given pair that pass within the interior region.
std::vector<Worm> interior_worms(const Patch& patch, int i, int j, const AnalysisOptions& opt = {});

// ------------------------------------------------------------------ shadows

struct ShadowCell {
    std::array<int, 4> anchor{};
    /// Indices (from the quad) of the tile triple, sorted; 1 to 3 entries.
    std::vector<int> surviving;

    auto operator<=>(const ShadowCell&) const = default;
};

struct ShadowPatch {
    Quad quad{};
    std::vector<ShadowCell> cells;  // sorted, unique
    /// Physical radius of the source patch.
    double radius = 0;
    /// Linear map from the four shadow coordinates to an approximate physical
    /// position, through the least-squares slope coefficients.
    std::array<std::array<double, 4>, 3> to_physical{};

    Vec3 physical(const std::array<int, 4>& a) const;
    bool contains(const ShadowCell& c) const;
    std::size_t full_cells() const;
};

/// Projects each tile onto coordinates quad; tiles whose triple meets the quad
/// in fewer than one index are dropped.
ShadowPatch shadow(const Patch& patch, const Quad& quad);

struct PeriodicityCheck {
    bool periodic = true;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::optional<ShadowCell> first_mismatch;
};

/// Compares the full cells of the shadow with their translates by +q and -q,
/// on cells whose shadow position and translated position both lie within
/// radius - margin. Lower-dimensional cells lie on the boundary of full cells,
/// so the full cells alone determine the image; their decorations record
/// which tiles collapsed and are not translation invariant.
/// Requires margin >= max |q_k| (std::invalid_argument otherwise).
PeriodicityCheck shadow_periodicity(const ShadowPatch& s, const std::array<int, 4>& q, double margin = 3.0);
bool shadow_periodic(const ShadowPatch& s, const std::array<int, 4>& q, double margin = 3.0);

}  // namespace icotile
