#include "icotile/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

namespace icotile {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

template <class... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    os << std::setprecision(6);
    (os << ... << args);
    return os.str();
}

// Runs one check; exceptions become failures carrying the message.
CriterionResult run(const std::string& id, const std::string& name, double time_limit,
                    const std::function<bool(std::string&)>& body) {
    CriterionResult r{id, name, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = body(r.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0 && r.seconds > time_limit) {
        r.passed = false;
        r.detail += cat(" [over time limit of ", time_limit, " s]");
    }
    return r;
}

bool contains(const std::vector<std::array<int, 4>>& v, const std::array<int, 4>& q) {
    return std::find(v.begin(), v.end(), q) != v.end();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt) {
    std::vector<CriterionResult> out;
    const GrassmannExact ico = icosahedral_slope().grassmann;

    out.push_back(run("A1", "sign/value table", 1.0, [&](std::string& d) {
        SignTable table = alternation_sign_table();
        if (opt.corrupt_sign_table) table[0].sign = -table[0].sign;
        const GoldenRational p = GoldenRational(0, 2);  // 2 phi
        const GoldenRational q = GoldenRational(2, 2);  // 2 + 2 phi
        const GrassmannExact g = grassmann_of(icosahedral_slope().generators);
        std::size_t bad = 0;
        std::string first;
        for (const auto& t : all_triples()) {
            const SignEntry& e = table[uz(t.ordinal())];
            const GoldenRational want = e.type == RhombType::Prolate ? p : q;
            const GoldenRational got = g[t] * GoldenRational(e.sign);
            if (got != want || classify(t) != e.type) {
                if (first.empty()) first = "G" + t.str() + " = " + g[t].str();
                ++bad;
            }
        }
        const bool ratio = q / p == GoldenRational::phi();
        d = cat("p = ", p.str(), ", q = ", q.str(), ", q/p = ", (q / p).str(), "; mismatching entries: ", bad,
                first.empty() ? "" : " (first " + first + ")");
        return bad == 0 && ratio;
    }));

    out.push_back(run("A2", "Pluecker exactness", 1.0, [&](std::string& d) {
        const auto v = pluecker_violations(ico);
        d = cat(pluecker_relations().size(), " relations, ", v.size(), " violated");
        return v.empty();
    }));

    std::optional<Patch> p8, p10, p6;
    auto patch8 = [&]() -> const Patch& {
        if (!p8) p8 = generate_canonical(8, opt.seed);
        return *p8;
    };
    auto patch10 = [&]() -> const Patch& {
        if (!p10) p10 = generate_canonical(10, opt.seed);
        return *p10;
    };
    auto patch6 = [&]() -> const Patch& {
        if (!p6) p6 = generate_canonical(6, opt.seed);
        return *p6;
    };

    out.push_back(run("A3", "exact cover R=8", 120.0, [&](std::string& d) {
        const Patch& p = patch8();
        const double inner = p.radius - max_tile_diameter();
        const CoverReport c = check_exact_cover(p, inner, 10000, opt.seed);
        const ValidationReport v = validate_patch(p, inner);
        d = cat(p.tiles.size(), " tiles; ", c.samples, " samples in radius ", inner, ": ", c.uncovered,
                " uncovered, ", c.multiply_covered, " multiply covered; face-to-face ",
                v.ok() ? "ok" : "failed: " + v.first_problem);
        return c.exact() && c.samples >= 10000 && v.ok();
    }));

    out.push_back(run("A4", "canonical thickness R=8", 30.0, [&](std::string& d) {
        const PlanarityReport r = thickness(patch8());
        d = cat("thickness ", std::setprecision(9), r.thickness, " over ", r.vertices, " vertices");
        return r.thickness >= 0.9 && r.thickness <= 1 + 1e-9;
    }));

    out.push_back(run("A5", "alternation on canonical R=8", 0, [&](std::string& d) {
        const PatchAlternation a = check_alternation(patch8());
        d = cat(a.worms, " worm pieces, ", a.weak_prolate_failures, " prolate and ", a.weak_oblate_failures,
                " oblate failures, max run ", a.max_same_type_run);
        return a.worms > 0 && a.holds(AlternationKind::Full);
    }));

    out.push_back(run("A6", "subperiods R=10 margin 3", 0, [&](std::string& d) {
        const Patch& p = patch10();
        bool ok = true;
        std::ostringstream os;
        for (const Quad& quad : {Quad{1, 2, 3, 4}, Quad{1, 2, 5, 6}, Quad{3, 4, 5, 6}, Quad{1, 3, 5, 6}}) {
            const auto periods = find_integer_subperiods(ico, quad, 2);
            const ShadowPatch s = shadow(p, quad);
            std::size_t checked = 0, vacuous = 0, failed = 0;
            for (const auto& q : periods) {
                const PeriodicityCheck c = shadow_periodicity(s, q, 3.0);
                checked += c.checked;
                if (c.checked == 0) ++vacuous;
                if (!c.periodic) {
                    ++failed;
                    ok = false;
                }
            }
            os << quad_str(quad) << ": " << periods.size() << " periods, " << failed << " failed, " << checked
               << " pair checks, " << vacuous << " without pairs; ";
        }
        const auto p1234 = find_integer_subperiods(ico, {1, 2, 3, 4}, 2);
        const auto p1356 = find_integer_subperiods(ico, {1, 3, 5, 6}, 2);
        const bool named = contains(p1234, {1, 1, 0, 0}) && contains(p1234, {0, 0, 1, -1}) &&
                           contains(p1356, {0, 1, -1, 0}) && contains(p1356, {1, 0, 0, -1});
        os << (named ? "named periods present" : "a named period is missing");
        d = os.str();
        return ok && named;
    }));

    out.push_back(run("A7", "two-solution closed form", 0, [&](std::string& d) {
        const FullAlternationSolution s = solve_full_alternation();
        const GoldenRational phi = GoldenRational::phi();
        const GoldenRational conj = GoldenRational(1) - phi;
        const bool roots = (s.ratios[0] == phi && s.ratios[1] == conj);
        const bool plk = pluecker_violations(s.vectors[0]).empty() && pluecker_violations(s.vectors[1]).empty();
        const bool match = proportional(s.vectors[0], ico);
        d = cat("reduced quadratic (", s.reduced_quadratic[0], ", ", s.reduced_quadratic[1], ", ",
                s.reduced_quadratic[2], "), roots ", s.ratios[0].str(), " and ", s.ratios[1].str(),
                "; Pluecker ", plk ? "ok" : "violated", "; phi-root ", match ? "matches" : "does not match",
                " the icosahedral vector");
        return roots && plk && match;
    }));

    out.push_back(run("A8", "weak system clusters", 300.0, [&](std::string& d) {
        bool ok = true;
        std::ostringstream os;
        for (RhombType which : {RhombType::Prolate, RhombType::Oblate}) {
            if (which == RhombType::Oblate) os << "; ";
            WeakSolveOptions wo;
            wo.starts = opt.weak_starts;
            wo.tol = 1e-6;
            const WeakSolveReport r = solve_weak_alternation(which, wo);
            std::size_t known = 0, small = 0;
            for (const auto& c : r.clusters) {
                if (c.known != WeakCluster::Known::None) ++known;
                if (c.max_residual < 1e-9) ++small;
            }
            const bool good = r.clusters.size() == 2 && known == 2 && small == 2;
            ok = ok && good;
            os << to_string(which) << ": " << r.clusters.size() << " clusters (" << known
               << " match the two known solutions, " << r.nondegenerate_clusters()
               << " with all coordinates nonzero, " << small << " with residual < 1e-9)";
        }
        d = os.str();
        return ok;
    }));

    if (!opt.extended) return out;

    out.push_back(run("A9", "degenerate slab counterexample", 0, [&](std::string& d) {
        SlabSpec c;
        c.sequence.assign(10000, 5);
        SlabSpec r;
        r.sequence = random_stacking_sequence(r.alphabet, 10000, opt.seed);
        const Patch pc = build_slab_patch(c);
        const Patch pr = build_slab_patch(r);
        const double tc = thickness(pc).thickness;
        const double tr = thickness(pr).thickness;
        const PatchAlternation a = check_alternation(pr);
        // the alphabet {5,6} is the oblate pair of {1,2}: prolate tiles never occur in {1,2}-worms
        std::size_t prolate_in_worms = 0;
        for (const auto& w : extract_worms(pr, 1, 2))
            for (const auto& t : w.tiles)
                if (t.type == RhombType::Prolate) ++prolate_in_worms;
        d = cat("thickness random ", tr, " vs constant ", tc, "; weak prolate ",
                a.holds(AlternationKind::WeakProlate) ? "holds" : "fails", " with ", prolate_in_worms,
                " prolate tiles in {1,2}-worms; max run ", a.max_same_type_run);
        return tr >= 10 * tc && tr >= 10 && a.holds(AlternationKind::WeakProlate) && prolate_in_worms == 0 &&
               a.max_same_type_run == 10000 && !a.run_bound_ok;
    }));

    out.push_back(run("A10", "perturbed slope negative control", 0, [&](std::string& d) {
        auto gens = icosahedral_generators_f();
        std::mt19937_64 rng(1);
        std::uniform_real_distribution<double> u(-0.01, 0.01);
        for (auto& g : gens)
            for (auto& c : g) c += u(rng);
        const Patch p = generate_patch_float(gens, 8, random_generic_gamma_lift(1), 1e-9);
        const PatchAlternation a = check_alternation(p);
        std::size_t failing = 0;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (const auto& w : extract_worms(p, i, j))
                    if (!alternation_report(w).full()) ++failing;
        d = cat(p.tiles.size(), " tiles, ", a.worms, " worm pieces, ", failing, " with full = false; thickness ",
                a.thickness);
        return failing >= 1;
    }));

    out.push_back(run("A11", "flip correctness R=6", 0, [&](std::string& d) {
        const Patch& p = patch6();
        const auto sites = find_flips(p);
        if (sites.empty()) {
            d = "no flip site";
            return false;
        }
        const double inner = p.radius - max_tile_diameter();
        std::size_t invalid = 0, not_restored = 0;
        for (const auto& s : sites) {
            const Patch q = apply_flip(p, s);
            if (!validate_patch(q, inner).ok()) ++invalid;
            if (apply_flip(q, reversed(s)).tiles != p.tiles) ++not_restored;
        }
        WalkConfig cfg;
        cfg.steps = 1000;
        cfg.seed = opt.seed;
        const WalkResult w = constrained_flip_walk(p, cfg);
        double prev = thickness(p).thickness;
        std::optional<std::size_t> first_increase;
        for (const auto& e : w.trace) {
            if (e.thickness > prev && !first_increase) first_increase = e.step;
            prev = e.thickness;
        }
        d = cat(sites.size(), " sites, ", invalid, " invalid after flip, ", not_restored,
                " not restored by the reverse flip; walk max thickness ", w.best_thickness,
                first_increase ? cat(", first increase at step ", *first_increase) : std::string(", never increased"));
        return invalid == 0 && not_restored == 0 && first_increase.has_value();
    }));

    out.push_back(run("A12", "tile statistics R=10", 0, [&](std::string& d) {
        const Patch& p = patch10();
        const double ratio = static_cast<double>(p.count(RhombType::Oblate)) / static_cast<double>(p.count(RhombType::Prolate));
        const double phi = kPhi;
        const double rel = std::abs(ratio - phi) / phi;
        d = cat(p.count(RhombType::Oblate), " oblate / ", p.count(RhombType::Prolate), " prolate = ", ratio,
                " (", rel * 100, "% from phi)");
        return rel <= 0.05;
    }));

    return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results)
        os << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << " (" << std::fixed << std::setprecision(2)
           << r.seconds << " s): " << r.detail << '\n';
    return os.str();
}

io::json results_to_json(const std::vector<CriterionResult>& results) {
    io::json arr = io::json::array();
    for (const auto& r : results)
        arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                       {"seconds", io::rounded(r.seconds)}});
    return {{"all_passed", all_passed(results)}, {"criteria", arr}};
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace icotile
