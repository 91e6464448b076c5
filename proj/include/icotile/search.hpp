#pragma once

// Slab patches built from rhombohedra that are not forced to alternate,
// seeded flip walks under alternation constraints, and a summary of the
// thickness they reach.

#include "icotile/analysis.hpp"
#include "icotile/surface.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icotile {

// -------------------------------------------------------------------- slabs

struct SlabSpec {
    int i = 1, j = 2;
    /// Two indices outside {i, j} spanning tiles of one type.
    std::array<int, 2> alphabet{5, 6};
    std::vector<int> sequence;
    /// Each layer has (2 * lateral_extent + 1)^2 tiles.
    int lateral_extent = 1;
};

class InvalidAlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Layers are lattice planes spanned by e_i, e_j; between layers n and n+1
/// sits a full layer of T_{i,j,k_n}. A letter whose vector points below the
/// {v_i, v_j} plane steps the lift by -e_k so that layers stack monotonically.
/// The patch slope is spanned by e_i, e_j and the mean step.
Patch build_slab_patch(const SlabSpec& spec);

/// Uniform random word over the alphabet.
std::vector<int> random_stacking_sequence(const std::array<int, 2>& alphabet, std::size_t length, std::uint64_t seed);

// -------------------------------------------------------------------- walks

enum class WalkConstraint { None, WeakProlate, WeakOblate };

const char* to_string(WalkConstraint c);
WalkConstraint parse_constraint(const std::string& s);

struct WalkConfig {
    std::size_t steps = 1000;
    std::uint64_t seed = 1;
    /// With None no move is ever rejected for alternation or run length.
    WalkConstraint constraint = WalkConstraint::None;
    std::size_t run_bound = 8;
    enum class Acceptance {
        Always,                  // every admissible flip is taken
        NonDecreasingThickness,  // admissible flips that lower the thickness are rejected
    } acceptance = Acceptance::Always;
};

struct TraceEntry {
    std::size_t step = 0;
    bool accepted = false;
    std::string reason;  // why a move was rejected; empty when accepted
    double thickness = 0;  // of the current state after the step
    std::optional<FlipSite> site;
    /// Flags over the worms through the flipped 4-cube of the proposed state.
    bool weak_prolate = true;
    bool weak_oblate = true;
    std::size_t max_run = 0;
};

struct WalkResult {
    Patch best;  // largest thickness seen, earliest on ties
    double best_thickness = 0;
    std::size_t best_step = 0;
    Patch final_state;
    std::vector<TraceEntry> trace;
    /// Full re-analysis of the best state.
    PatchAlternation best_check;
    bool best_verified = false;
};

/// Seeded walk: each step samples a flip site uniformly, flips, and checks
/// only the worms through the new tiles. Throws std::invalid_argument if
/// run_bound is 0.
WalkResult constrained_flip_walk(const Patch& start, const WalkConfig& cfg);

/// Admissibility of a patch under a constraint, by full re-analysis of all worms.
bool satisfies(const Patch& patch, WalkConstraint c, std::size_t run_bound);

// ------------------------------------------------------------------ reports

struct EvidenceRow {
    std::string label;
    double radius = 0;
    WalkConstraint constraint = WalkConstraint::None;
    std::size_t run_bound = 8;
    std::size_t max_run = 0;
    double max_thickness = 0;
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    bool slab = false;

    /// Excluded from evidence: run bound violated, or no alternation constraint.
    bool degenerate() const;
};

EvidenceRow summarize_walk(const std::string& label, const Patch& start, const WalkConfig& cfg, const WalkResult& r);
EvidenceRow summarize_slab(const std::string& label, const Patch& slab, std::uint64_t seed);

struct ConjectureSummary {
    std::vector<EvidenceRow> rows;
    /// Per constraint, the largest thickness of nondegenerate rows at each radius.
    struct Column {
        WalkConstraint constraint;
        std::vector<std::pair<double, double>> radius_thickness;
        bool bounded = true;
    };
    std::vector<Column> columns;
    /// Labels of rows belonging to a constraint whose thickness exceeds the
    /// threshold at three or more increasing radii.
    std::vector<std::string> counterexample_candidates;
    double threshold = 0;

    std::string text() const;
};

ConjectureSummary conjecture_report(const std::vector<EvidenceRow>& rows, double threshold = 3.0);

}  // namespace icotile
