#include "icotile/search.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace icotile {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

// Side of the {v_i, v_j} plane on which v_k lies.
int side(int i, int j, int k) {
    const auto& v = icosahedron_vectors();
    return det3(v[uz(i - 1)], v[uz(j - 1)], v[uz(k - 1)]).sign();
}

}  // namespace

// -------------------------------------------------------------------- slabs

Patch build_slab_patch(const SlabSpec& spec) {
    const ComplementSplit split = worm_complement_split(spec.i, spec.j);
    auto same = [&](std::array<int, 2> a, std::array<int, 2> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    };
    if (!same(spec.alphabet, split.prolate) && !same(spec.alphabet, split.oblate))
        throw InvalidAlphabetError("stacking alphabet must be the prolate or the oblate complement pair of {" +
                                   std::to_string(spec.i) + "," + std::to_string(spec.j) + "}");
    if (spec.sequence.empty()) throw std::invalid_argument("stacking sequence is empty");
    if (spec.lateral_extent < 0) throw std::invalid_argument("lateral extent must be non-negative");
    for (int k : spec.sequence)
        if (k != spec.alphabet[0] && k != spec.alphabet[1])
            throw InvalidAlphabetError("stacking letter " + std::to_string(k) + " is not in the alphabet");

    const int ext = spec.lateral_extent;
    Patch p;
    p.tiles.reserve(spec.sequence.size() * uz((2 * ext + 1) * (2 * ext + 1)));
    Lattice6 level{};
    Vec6 total{};
    for (int k : spec.sequence) {
        const int s = side(spec.i, spec.j, k);
        const Lattice6 next = s > 0 ? level + unit(k) : level - unit(k);
        const Lattice6& base = s > 0 ? level : next;
        for (int a = -ext; a <= ext; ++a)
            for (int b = -ext; b <= ext; ++b) {
                Lattice6 x = base;
                x[uz(spec.i - 1)] += a;
                x[uz(spec.j - 1)] += b;
                p.tiles.push_back({x, IndexTriple(spec.i, spec.j, k)});
            }
        total[uz(k - 1)] += s;
        level = next;
    }
    p.canonicalize();

    std::array<Vec6, 3> gens{};
    gens[0][uz(spec.i - 1)] = 1;
    gens[1][uz(spec.j - 1)] = 1;
    for (std::size_t a = 0; a < 6; ++a) gens[2][a] = total[a] / static_cast<double>(spec.sequence.size());
    // a balanced sequence can have zero drift; the stacking direction is then
    // still the only sensible third direction
    double drift = 0;
    for (double c : gens[2]) drift += c * c;
    if (drift < 1e-24) {
        gens[2] = {};
        for (int k : spec.alphabet) gens[2][uz(k - 1)] += 0.5 * side(spec.i, spec.j, k);
    }
    p.slope = SlopeDescriptor::custom(gens);
    return p;
}

std::vector<int> random_stacking_sequence(const std::array<int, 2>& alphabet, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> out(length);
    for (auto& k : out) k = alphabet[rng() & 1u];
    return out;
}

// -------------------------------------------------------------------- walks

const char* to_string(WalkConstraint c) {
    switch (c) {
        case WalkConstraint::None: return "none";
        case WalkConstraint::WeakProlate: return "weak_prolate";
        case WalkConstraint::WeakOblate: return "weak_oblate";
    }
    return "?";
}

WalkConstraint parse_constraint(const std::string& s) {
    if (s == "none") return WalkConstraint::None;
    if (s == "weak_prolate" || s == "prolate") return WalkConstraint::WeakProlate;
    if (s == "weak_oblate" || s == "oblate") return WalkConstraint::WeakOblate;
    throw std::invalid_argument("unknown constraint '" + s + "' (expected none, weak_prolate or weak_oblate)");
}

bool satisfies(const Patch& patch, WalkConstraint c, std::size_t run_bound) {
    if (c == WalkConstraint::None) return true;
    AnalysisOptions opt;
    opt.run_bound = run_bound;
    const PatchAlternation a = check_alternation(patch, opt);
    const bool alt = c == WalkConstraint::WeakProlate ? a.holds(AlternationKind::WeakProlate)
                                                      : a.holds(AlternationKind::WeakOblate);
    return alt && a.run_bound_ok;
}

WalkResult constrained_flip_walk(const Patch& start, const WalkConfig& cfg) {
    if (cfg.run_bound == 0) throw std::invalid_argument("run bound must be at least 1");
    std::mt19937_64 rng(cfg.seed);
    Patch cur = start;
    double t = thickness(cur, Exec::Serial).thickness;

    WalkResult res;
    res.best = cur;
    res.best_thickness = t;
    res.best_step = 0;

    for (std::size_t step = 1; step <= cfg.steps; ++step) {
        TraceEntry e;
        e.step = step;
        const auto sites = find_flips(cur);
        if (sites.empty()) {
            e.reason = "no flip site";
            e.thickness = t;
            res.trace.push_back(e);
            continue;
        }
        const FlipSite site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        e.site = site;
        Patch cand = apply_flip(cur, site);

        for (const Tile& nt : flip_tiles(site.corner, site.quad, reversed(site).parity))
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    const AlternationReport r = alternation_report(worm_through(cand, nt, nt.triple[a], nt.triple[b]));
                    e.weak_prolate = e.weak_prolate && r.weak_prolate;
                    e.weak_oblate = e.weak_oblate && r.weak_oblate;
                    e.max_run = std::max(e.max_run, r.max_same_type_run);
                }

        if (cfg.constraint == WalkConstraint::WeakProlate && !e.weak_prolate)
            e.reason = "weak prolate alternation violated";
        else if (cfg.constraint == WalkConstraint::WeakOblate && !e.weak_oblate)
            e.reason = "weak oblate alternation violated";
        else if (cfg.constraint != WalkConstraint::None && e.max_run > cfg.run_bound)
            e.reason = "run bound exceeded";

        double ct = t;
        if (e.reason.empty()) {
            ct = thickness(cand, Exec::Serial).thickness;
            if (cfg.acceptance == WalkConfig::Acceptance::NonDecreasingThickness && ct < t)
                e.reason = "thickness would decrease";
        }
        if (e.reason.empty()) {
            e.accepted = true;
            cur = std::move(cand);
            t = ct;
            if (t > res.best_thickness) {
                res.best_thickness = t;
                res.best = cur;
                res.best_step = step;
            }
        }
        e.thickness = t;
        res.trace.push_back(std::move(e));
    }
    res.final_state = std::move(cur);

    AnalysisOptions opt;
    opt.run_bound = cfg.run_bound;
    res.best_check = check_alternation(res.best, opt);
    res.best_verified = satisfies(res.best, cfg.constraint, cfg.run_bound) &&
                        validate_patch(res.best, -1).ok();
    return res;
}

// ------------------------------------------------------------------ reports

bool EvidenceRow::degenerate() const { return slab || constraint == WalkConstraint::None || max_run > run_bound; }

EvidenceRow summarize_walk(const std::string& label, const Patch& start, const WalkConfig& cfg, const WalkResult& r) {
    EvidenceRow row;
    row.label = label;
    row.radius = start.radius;
    row.constraint = cfg.constraint;
    row.run_bound = cfg.run_bound;
    row.max_run = r.best_check.max_same_type_run;
    row.max_thickness = r.best_thickness;
    row.seed = cfg.seed;
    row.steps = cfg.steps;
    return row;
}

EvidenceRow summarize_slab(const std::string& label, const Patch& slab, std::uint64_t seed) {
    const PatchAlternation a = check_alternation(slab);
    EvidenceRow row;
    row.label = label;
    row.radius = slab.radius;
    row.max_run = a.max_same_type_run;
    row.max_thickness = a.thickness;
    row.seed = seed;
    row.slab = true;
    // the constraint it satisfies vacuously
    row.constraint = a.holds(AlternationKind::WeakProlate) ? WalkConstraint::WeakProlate : WalkConstraint::WeakOblate;
    return row;
}

ConjectureSummary conjecture_report(const std::vector<EvidenceRow>& rows, double threshold) {
    ConjectureSummary s;
    s.rows = rows;
    s.threshold = threshold;
    for (WalkConstraint c : {WalkConstraint::WeakProlate, WalkConstraint::WeakOblate}) {
        std::map<double, double> by_radius;
        std::map<double, std::vector<std::string>> labels_over;
        for (const auto& r : rows) {
            if (r.degenerate() || r.constraint != c) continue;
            auto [it, fresh] = by_radius.try_emplace(r.radius, r.max_thickness);
            if (!fresh) it->second = std::max(it->second, r.max_thickness);
            if (r.max_thickness > threshold) labels_over[r.radius].push_back(r.label);
        }
        if (by_radius.empty()) continue;
        ConjectureSummary::Column col{c, {by_radius.begin(), by_radius.end()}, true};
        if (labels_over.size() >= 3) {
            col.bounded = false;
            for (const auto& [radius, labels] : labels_over)
                s.counterexample_candidates.insert(s.counterexample_candidates.end(), labels.begin(), labels.end());
        }
        s.columns.push_back(std::move(col));
    }
    return s;
}

std::string ConjectureSummary::text() const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6);
    os << "# evidence, not proof\n";
    if (rows.empty()) return os.str();
    os << "label\tradius\tconstraint\trun_bound\tmax_run\tmax_thickness\tseed\tsteps\tstatus\n";
    for (const auto& r : rows)
        os << r.label << '\t' << r.radius << '\t' << to_string(r.constraint) << '\t' << r.run_bound << '\t' << r.max_run
           << '\t' << r.max_thickness << '\t' << r.seed << '\t' << r.steps << '\t'
           << (r.degenerate() ? "degenerate (excluded)" : "evidence") << '\n';
    for (const auto& c : columns) {
        os << "constraint " << to_string(c.constraint) << ":";
        for (const auto& [radius, t] : c.radius_thickness) os << " R=" << radius << " t=" << t;
        os << (c.bounded ? "  bounded, consistent with planarity\n" : "  exceeds threshold at three radii\n");
    }
    for (const auto& l : counterexample_candidates) os << "counterexample candidate: " << l << '\n';
    return os.str();
}

}  // namespace icotile
