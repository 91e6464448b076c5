// icotile: batch front end for generation, analysis, algebra, search and export.

#include "icotile/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace icotile;
using io::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::array<int, 4> parse_int4(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 4) throw std::invalid_argument("expected four comma-separated integers, got '" + s + "'");
    std::array<int, 4> q{};
    for (std::size_t k = 0; k < 4; ++k) q[k] = std::stoi(parts[k]);
    return q;
}

std::array<int, 2> parse_pair(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw std::invalid_argument("expected two comma-separated indices, got '" + s + "'");
    return {std::stoi(parts[0]), std::stoi(parts[1])};
}

GoldenVec3 parse_gamma(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw std::invalid_argument("--gamma needs three comma-separated golden numbers");
    GoldenVec3 g;
    for (std::size_t k = 0; k < 3; ++k) g[k] = GoldenRational::parse(parts[k]);
    return g;
}

std::array<Vec6, 3> read_generators(const std::string& path) {
    const json j = json::parse(io::read_text(path));
    const json& g = j.contains("generators") ? j.at("generators") : j;
    const auto rows = g.get<std::vector<std::vector<double>>>();
    if (rows.size() != 3) throw io::FormatError("slope file needs three generators of length 6");
    std::array<Vec6, 3> out{};
    for (std::size_t r = 0; r < 3; ++r) {
        if (rows[r].size() != 6) throw io::FormatError("slope file needs three generators of length 6");
        for (std::size_t a = 0; a < 6; ++a) out[r][a] = rows[r][a];
    }
    return out;
}

void emit(const json& j, const std::string& out) {
    const std::string text = j.dump(1) + "\n";
    if (out.empty() || out == "-")
        std::cout << text;
    else
        io::write_text(out, text);
}

json header(const std::string& command, json config) {
    return {{"tool", "icotile"}, {"command", command}, {"config", std::move(config)}};
}

std::vector<Quad> default_quads() { return {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}, {1, 3, 5, 6}}; }

json subperiod_verdicts(const Patch& p, double margin, int bound) {
    json out = json::array();
    if (p.radius <= 0) return out;
    const GrassmannExact ico = icosahedral_slope().grassmann;
    for (const Quad& quad : default_quads()) {
        const ShadowPatch s = shadow(p, quad);
        json periods = json::array();
        for (const auto& q : find_integer_subperiods(ico, quad, bound)) {
            json c = io::to_json(shadow_periodicity(s, q, margin));
            c["q"] = q;
            periods.push_back(c);
        }
        out.push_back({{"quad", quad_str(quad)}, {"full_cells", s.full_cells()}, {"periods", periods}});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Golden rhombohedral tilings: cut-and-project generation, alternation, planarity"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks A1-A8 (with --all also A9-A12)");
    bool verify_json = false, verify_all = false, corrupt = false;
    std::uint64_t verify_seed = 7;
    verify->add_flag("--json", verify_json, "Machine-readable report");
    verify->add_flag("--all", verify_all, "Include A9-A12");
    verify->add_flag("--corrupt-sign-table", corrupt, "Fault injection: flip one sign-table entry");
    verify->add_option("--seed", verify_seed, "Patch seed")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a cut-and-project patch");
    double gen_R = 8;
    std::uint64_t gen_seed = 7;
    std::string gen_gamma, gen_slope = "icosahedral", gen_out;
    double gen_tol = 1e-9;
    gen->add_option("-R,--radius", gen_R, "Physical radius")->capture_default_str();
    gen->add_option("--seed", gen_seed, "Seed of the random generic offset")->capture_default_str();
    gen->add_option("--gamma", gen_gamma, "Exact internal offset \"a,b,c\" (golden numbers, e.g. 1/3+1/7phi)");
    gen->add_option("--slope", gen_slope, "icosahedral, or a JSON file with three 6-vector generators")
        ->capture_default_str();
    gen->add_option("--tol", gen_tol, "Boundary margin for float slopes")->capture_default_str();
    gen->add_option("-o,--output", gen_out, "Tiling JSON (stdout if omitted)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Worms, alternation, subperiods and thickness of a patch");
    std::string an_in, an_out;
    std::size_t an_bound = 8;
    double an_margin = 3;
    analyze->add_option("patch", an_in, "Tiling JSON")->required();
    analyze->add_option("--bound", an_bound, "Run bound L")->capture_default_str();
    analyze->add_option("--margin", an_margin, "Shadow margin")->capture_default_str();
    analyze->add_option("-o,--output", an_out, "Report JSON (stdout if omitted)");

    // algebra
    auto* algebra = app.add_subcommand("algebra", "Sign tables, Pluecker relations, alternation systems, subperiods");
    algebra->require_subcommand(1);
    std::string alg_out;
    algebra->add_option("-o,--output", alg_out, "Output JSON (stdout if omitted)");
    auto* alg_table = algebra->add_subcommand("table", "Icosahedral Grassmann coordinates and the sign table");
    auto* alg_plk = algebra->add_subcommand("pluecker", "The Pluecker relations and their values on the icosahedral slope");
    auto* alg_solve = algebra->add_subcommand("solve", "Solve the full or weak alternation system");
    std::string weak_type;
    std::size_t starts = 200;
    double solve_tol = 1e-6;
    std::uint64_t solve_seed = 1;
    alg_solve->add_option("--weak", weak_type, "prolate or oblate; omit for the full system");
    alg_solve->add_option("--starts", starts, "Random starts")->capture_default_str();
    alg_solve->add_option("--tol", solve_tol, "Clustering tolerance")->capture_default_str();
    alg_solve->add_option("--seed", solve_seed, "Seed of the starts")->capture_default_str();
    auto* alg_sub = algebra->add_subcommand("subperiods", "Integer subperiods of the icosahedral slope");
    std::string sub_quad = "1234";
    int sub_bound = 2;
    alg_sub->add_option("--quad", sub_quad, "Four indices, e.g. 1356")->capture_default_str();
    alg_sub->add_option("--bound", sub_bound, "Entry bound")->capture_default_str();
    auto* alg_aux = algebra->add_subcommand("aux", "The auxiliary vectors w4, w5 and their identities");

    // shadow
    auto* shadow_cmd = app.add_subcommand("shadow", "Project a patch onto four coordinates and test periods");
    std::string sh_in, sh_quad = "1234", sh_period, sh_out;
    double sh_margin = 3;
    int sh_bound = 2;
    shadow_cmd->add_option("patch", sh_in, "Tiling JSON")->required();
    shadow_cmd->add_option("--quad", sh_quad, "Four indices")->capture_default_str();
    shadow_cmd->add_option("--period", sh_period, "Test one period \"a,b,c,d\" instead of the integer subperiods");
    shadow_cmd->add_option("--margin", sh_margin, "Margin")->capture_default_str();
    shadow_cmd->add_option("--bound", sh_bound, "Entry bound for subperiods")->capture_default_str();
    shadow_cmd->add_option("-o,--output", sh_out, "Report JSON (stdout if omitted)");

    // slab
    auto* slab = app.add_subcommand("slab", "Build a slab patch from a stacking sequence");
    std::string sl_pair = "1,2", sl_alpha = "5,6", sl_seq, sl_out, sl_report;
    std::size_t sl_len = 1000;
    std::uint64_t sl_seed = 1;
    int sl_ext = 1;
    slab->add_option("--pair", sl_pair, "Base pair i,j")->capture_default_str();
    slab->add_option("--alphabet", sl_alpha, "Two stacking indices")->capture_default_str();
    slab->add_option("--sequence", sl_seq, "Stacking letters, e.g. 5656556 (random if omitted)");
    slab->add_option("--length", sl_len, "Random sequence length")->capture_default_str();
    slab->add_option("--seed", sl_seed, "Random sequence seed")->capture_default_str();
    slab->add_option("--extent", sl_ext, "Lateral extent")->capture_default_str();
    slab->add_option("-o,--output", sl_out, "Tiling JSON");
    slab->add_option("--report", sl_report, "Report JSON with an evidence row (stdout if omitted)");

    // flip-walk
    auto* walk = app.add_subcommand("flip-walk", "Seeded flip walk under an alternation constraint");
    std::string fw_in, fw_out, fw_trace, fw_report, fw_constraint = "none", fw_accept = "always";
    WalkConfig fw_cfg;
    walk->add_option("patch", fw_in, "Start tiling JSON")->required();
    walk->add_option("--steps", fw_cfg.steps, "Steps")->capture_default_str();
    walk->add_option("--seed", fw_cfg.seed, "Seed")->capture_default_str();
    walk->add_option("--constraint", fw_constraint, "none, weak_prolate or weak_oblate")->capture_default_str();
    walk->add_option("--bound", fw_cfg.run_bound, "Run bound L")->capture_default_str()->check(CLI::PositiveNumber);
    walk->add_option("--acceptance", fw_accept, "always or nondecreasing")->capture_default_str();
    walk->add_option("-o,--output", fw_out, "Best state as tiling JSON");
    walk->add_option("--trace", fw_trace, "Trace as JSON lines");
    walk->add_option("--report", fw_report, "Summary JSON (stdout if omitted)");

    // report
    auto* report = app.add_subcommand("report", "Tabulate evidence rows from slab and flip-walk reports");
    std::vector<std::string> rep_in;
    double rep_threshold = 3.0;
    bool rep_json = false;
    report->add_option("reports", rep_in, "Report JSON files");
    report->add_option("--threshold", rep_threshold, "Thickness threshold for counterexample candidates")
        ->capture_default_str();
    report->add_flag("--json", rep_json, "Machine-readable summary");

    // export
    auto* exp = app.add_subcommand("export", "Write a patch as an OBJ mesh");
    std::string ex_in, ex_out;
    exp->add_option("patch", ex_in, "Tiling JSON")->required();
    exp->add_option("-o,--output", ex_out, "OBJ file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            VerifyOptions opt;
            opt.seed = verify_seed;
            opt.corrupt_sign_table = corrupt;
            opt.extended = verify_all;
            const auto results = run_acceptance(opt);
            if (verify_json)
                std::cout << results_to_json(results).dump(1) << '\n';
            else
                std::cout << format_results(results);
            return all_passed(results) ? 0 : 1;
        }

        if (*gen) {
            json cfg{{"radius", io::rounded(gen_R)}, {"seed", gen_seed}, {"slope", gen_slope}, {"tol", gen_tol}};
            Patch p;
            if (gen_slope == "icosahedral") {
                if (!gen_gamma.empty()) {
                    cfg["gamma"] = gen_gamma;
                    p = generate_patch(gen_R, parse_gamma(gen_gamma));
                } else {
                    p = generate_canonical(gen_R, gen_seed);
                }
            } else {
                p = generate_patch_float(read_generators(gen_slope), gen_R, random_generic_gamma_lift(gen_seed), gen_tol);
            }
            json j = header("gen", cfg);
            j.update(io::patch_to_json(p));
            emit(j, gen_out);
            if (!gen_out.empty()) std::cerr << p.tiles.size() << " tiles written to " << gen_out << '\n';
            return 0;
        }

        if (*analyze) {
            const Patch p = io::read_patch(an_in);
            AnalysisOptions opt;
            opt.run_bound = an_bound;
            const PatchAlternation a = check_alternation(p, opt);
            const double inner = p.radius > 0 ? p.radius - max_tile_diameter() : -1;
            const ValidationReport v = validate_patch(p, inner);
            json worms = json::array();
            for (int i = 1; i <= 6; ++i)
                for (int j = i + 1; j <= 6; ++j) {
                    std::size_t n = 0, tiles = 0, fp = 0, fo = 0, run = 0;
                    for (const auto& w : interior_worms(p, i, j, opt)) {
                        const AlternationReport r = alternation_report(w);
                        ++n;
                        tiles += w.tiles.size();
                        fp += r.weak_prolate ? 0 : 1;
                        fo += r.weak_oblate ? 0 : 1;
                        run = std::max(run, r.max_same_type_run);
                    }
                    worms.push_back({{"pair", {i, j}}, {"worms", n}, {"tiles", tiles}, {"weak_prolate_failures", fp},
                                     {"weak_oblate_failures", fo}, {"max_same_type_run", run}});
                }
            json j = header("analyze", {{"patch", an_in}, {"bound", an_bound}, {"margin", io::rounded(an_margin)}});
            j["tiles"] = p.tiles.size();
            j["prolate"] = p.count(RhombType::Prolate);
            j["oblate"] = p.count(RhombType::Oblate);
            j["face_to_face"] = v.ok();
            if (!v.ok()) j["face_to_face_problem"] = v.first_problem;
            j["alternation"] = io::to_json(a);
            j["full_alternation"] = a.holds(AlternationKind::Full);
            j["worms"] = worms;
            j["planarity"] = io::to_json(thickness(p));
            if (p.slope.kind == SlopeDescriptor::Kind::Icosahedral)
                j["subperiods"] = subperiod_verdicts(p, an_margin, 2);
            emit(j, an_out);
            return 0;
        }

        if (*algebra) {
            json j;
            if (*alg_table) {
                j = header("algebra table", json::object());
                j["grassmann"] = io::to_json(icosahedral_slope().grassmann);
                j["sign_table"] = io::to_json(alternation_sign_table());
            } else if (*alg_plk) {
                j = header("algebra pluecker", json::object());
                const GrassmannExact g = icosahedral_slope().grassmann;
                json rel = json::array();
                for (const auto& r : pluecker_relations()) {
                    json terms = json::array();
                    for (const auto& t : r.terms)
                        terms.push_back({{"s", all_triples()[static_cast<std::size_t>(t.s)].str()},
                                         {"t", all_triples()[static_cast<std::size_t>(t.t)].str()},
                                         {"coeff", t.coeff}});
                    rel.push_back({{"origin", r.origin}, {"terms", terms}, {"value", io::to_json(evaluate(r, g))}});
                }
                j["relations"] = rel;
                j["violations"] = pluecker_violations(g).size();
            } else if (*alg_solve) {
                if (weak_type.empty()) {
                    j = header("algebra solve", {{"system", "full"}});
                    j["solution"] = io::to_json(solve_full_alternation());
                } else {
                    RhombType which;
                    if (weak_type == "prolate") which = RhombType::Prolate;
                    else if (weak_type == "oblate") which = RhombType::Oblate;
                    else throw std::invalid_argument("--weak expects prolate or oblate");
                    WeakSolveOptions wo;
                    wo.starts = starts;
                    wo.tol = solve_tol;
                    wo.seed = solve_seed;
                    j = header("algebra solve", {{"system", "weak"}, {"fixed", weak_type}, {"starts", starts},
                                                 {"tol", solve_tol}, {"seed", solve_seed}});
                    j["report"] = io::to_json(solve_weak_alternation(which, wo));
                }
            } else if (*alg_sub) {
                const Quad q = parse_quad(sub_quad);
                j = header("algebra subperiods", {{"quad", quad_str(q)}, {"bound", sub_bound}});
                json list = json::array();
                for (const auto& v : find_integer_subperiods(icosahedral_slope().grassmann, q, sub_bound)) list.push_back(v);
                j["subperiods"] = list;
            } else if (*alg_aux) {
                j = header("algebra aux", json::object());
                j["auxiliary"] = io::to_json(proof_auxiliary_vectors());
            }
            emit(j, alg_out);
            return 0;
        }

        if (*shadow_cmd) {
            const Patch p = io::read_patch(sh_in);
            const Quad quad = parse_quad(sh_quad);
            const ShadowPatch s = shadow(p, quad);
            json j = header("shadow", {{"patch", sh_in}, {"quad", quad_str(quad)}, {"margin", io::rounded(sh_margin)},
                                       {"bound", sh_bound}});
            j["cells"] = s.cells.size();
            j["full_cells"] = s.full_cells();
            std::vector<std::array<int, 4>> periods;
            if (!sh_period.empty())
                periods.push_back(parse_int4(sh_period));
            else
                periods = find_integer_subperiods(icosahedral_slope().grassmann, quad, sh_bound);
            json res = json::array();
            bool all = true;
            for (const auto& q : periods) {
                const PeriodicityCheck c = shadow_periodicity(s, q, sh_margin);
                all = all && c.periodic;
                json cj = io::to_json(c);
                cj["q"] = q;
                res.push_back(cj);
            }
            j["periods"] = res;
            j["all_periodic"] = all;
            emit(j, sh_out);
            return 0;
        }

        if (*slab) {
            SlabSpec spec;
            const auto pr = parse_pair(sl_pair);
            spec.i = pr[0];
            spec.j = pr[1];
            spec.alphabet = parse_pair(sl_alpha);
            spec.lateral_extent = sl_ext;
            if (!sl_seq.empty()) {
                for (char c : sl_seq) {
                    if (c < '1' || c > '6') throw std::invalid_argument("sequence letters must be digits 1..6");
                    spec.sequence.push_back(c - '0');
                }
            } else {
                spec.sequence = random_stacking_sequence(spec.alphabet, sl_len, sl_seed);
            }
            const Patch p = build_slab_patch(spec);
            if (!sl_out.empty()) io::write_patch(sl_out, p);
            json j = header("slab", {{"pair", sl_pair}, {"alphabet", sl_alpha}, {"length", spec.sequence.size()},
                                     {"seed", sl_seed}, {"explicit_sequence", !sl_seq.empty()}, {"extent", sl_ext}});
            j["tiles"] = p.tiles.size();
            j["planarity"] = io::to_json(thickness(p));
            j["alternation"] = io::to_json(check_alternation(p));
            j["evidence"] = io::to_json(summarize_slab("slab seed " + std::to_string(sl_seed), p, sl_seed));
            emit(j, sl_report);
            return 0;
        }

        if (*walk) {
            const Patch start = io::read_patch(fw_in);
            fw_cfg.constraint = parse_constraint(fw_constraint);
            if (fw_accept == "always") fw_cfg.acceptance = WalkConfig::Acceptance::Always;
            else if (fw_accept == "nondecreasing") fw_cfg.acceptance = WalkConfig::Acceptance::NonDecreasingThickness;
            else throw std::invalid_argument("--acceptance expects always or nondecreasing");
            const WalkResult r = constrained_flip_walk(start, fw_cfg);
            if (!fw_out.empty()) io::write_patch(fw_out, r.best);
            if (!fw_trace.empty()) {
                std::string lines;
                for (const auto& e : r.trace) lines += io::to_json(e).dump() + "\n";
                io::write_text(fw_trace, lines);
            }
            json cfg{{"patch", fw_in},       {"steps", fw_cfg.steps},      {"seed", fw_cfg.seed},
                     {"constraint", fw_constraint}, {"bound", fw_cfg.run_bound}, {"acceptance", fw_accept}};
            json j = header("flip-walk", cfg);
            std::size_t accepted = 0;
            for (const auto& e : r.trace) accepted += e.accepted ? 1 : 0;
            j["accepted"] = accepted;
            j["best_step"] = r.best_step;
            j["best_thickness"] = io::rounded(r.best_thickness);
            j["best_verified"] = r.best_verified;
            j["best_alternation"] = io::to_json(r.best_check);
            const std::string label = "walk " + fw_constraint + " seed " + std::to_string(fw_cfg.seed);
            j["evidence"] = io::to_json(summarize_walk(label, start, fw_cfg, r));
            j["status"] = "evidence, not proof";
            emit(j, fw_report);
            return r.best_verified ? 0 : 1;
        }

        if (*report) {
            std::vector<EvidenceRow> rows;
            for (const auto& path : rep_in) {
                const json j = json::parse(io::read_text(path));
                rows.push_back(io::evidence_from_json(j.contains("evidence") ? j.at("evidence") : j));
            }
            const ConjectureSummary s = conjecture_report(rows, rep_threshold);
            if (rep_json)
                std::cout << io::to_json(s).dump(1) << '\n';
            else
                std::cout << s.text();
            return 0;
        }

        if (*exp) {
            const Patch p = io::read_patch(ex_in);
            io::write_text(ex_out, io::patch_to_obj(p));
            std::cerr << p.tiles.size() << " tiles written to " << ex_out << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
