#include "icotile/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace icotile::io {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

json vec_json(const Vec3& v) { return json::array({rounded(v[0]), rounded(v[1]), rounded(v[2])}); }

template <class T>
T field(const json& j, const char* name) {
    if (!j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field '") + name + "': " + e.what());
    }
}

}  // namespace

double rounded(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

json to_json(const GoldenRational& x) { return x.str(); }

GoldenRational golden_from_json(const json& j) {
    if (j.is_string()) return GoldenRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return GoldenRational(j.get<long>());
    throw FormatError("expected an exact golden number as a string like \"1/2+3φ\"");
}

json patch_to_json(const Patch& p) {
    json j;
    const bool ico = p.slope.kind == SlopeDescriptor::Kind::Icosahedral;
    j["slope"] = ico ? "icosahedral" : "custom";
    if (!ico) {
        json g = json::array();
        for (const auto& v : p.slope.generators) {
            json row = json::array();
            for (double c : v) row.push_back(rounded(c));
            g.push_back(row);
        }
        j["generators"] = g;
    }
    if (p.gamma_exact) {
        json g = json::array();
        for (const auto& c : *p.gamma_exact) g.push_back(to_json(c));
        j["gamma"] = g;
    } else if (p.gamma_lift) {
        json g = json::array();
        for (double c : *p.gamma_lift) g.push_back(rounded(c));
        j["gamma"] = g;
    }
    j["radius"] = rounded(p.radius);
    j["tile_count"] = p.tiles.size();
    json tiles = json::array();
    for (const auto& t : p.tiles)
        tiles.push_back({{"anchor", t.anchor}, {"triple", {t.triple[0], t.triple[1], t.triple[2]}}});
    j["tiles"] = tiles;
    return j;
}

Patch patch_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("tiling JSON must be an object");
    Patch p;
    const std::string slope = field<std::string>(j, "slope");
    if (slope == "icosahedral") {
        p.slope = SlopeDescriptor::icosahedral();
    } else if (slope == "custom") {
        const auto g = field<std::vector<std::vector<double>>>(j, "generators");
        if (g.size() != 3) throw FormatError("field 'generators' needs three 6-vectors");
        std::array<Vec6, 3> gens{};
        for (std::size_t r = 0; r < 3; ++r) {
            if (g[r].size() != 6) throw FormatError("field 'generators' needs three 6-vectors");
            for (std::size_t a = 0; a < 6; ++a) gens[r][a] = g[r][a];
        }
        p.slope = SlopeDescriptor::custom(gens);
    } else {
        throw FormatError("field 'slope' must be \"icosahedral\" or \"custom\", got \"" + slope + "\"");
    }
    if (j.contains("gamma")) {
        const json& g = j.at("gamma");
        if (!g.is_array()) throw FormatError("field 'gamma' must be an array");
        if (g.size() == 3) {
            GoldenVec3 ex;
            for (std::size_t k = 0; k < 3; ++k) {
                try {
                    ex[k] = golden_from_json(g[k]);
                } catch (const std::invalid_argument& e) {
                    throw FormatError(std::string("field 'gamma': ") + e.what());
                }
            }
            p.gamma_exact = ex;
        } else if (g.size() == 6) {
            Vec6 lift{};
            for (std::size_t a = 0; a < 6; ++a) {
                if (!g[a].is_number()) throw FormatError("field 'gamma': a lift offset needs six numbers");
                lift[a] = g[a].get<double>();
            }
            p.gamma_lift = lift;
        } else {
            throw FormatError("field 'gamma' needs 3 exact entries or 6 floats");
        }
    }
    if (j.contains("radius")) p.radius = field<double>(j, "radius");
    if (!j.contains("tiles") || !j.at("tiles").is_array()) throw FormatError("missing array field 'tiles'");
    std::size_t n = 0;
    for (const auto& t : j.at("tiles")) {
        const std::string where = "tiles[" + std::to_string(n++) + "]";
        try {
            const auto anchor = t.at("anchor").get<std::vector<int>>();
            const auto triple = t.at("triple").get<std::vector<int>>();
            if (anchor.size() != 6) throw FormatError(where + ".anchor needs 6 integers");
            if (triple.size() != 3) throw FormatError(where + ".triple needs 3 indices");
            Tile tile;
            for (std::size_t a = 0; a < 6; ++a) tile.anchor[a] = anchor[a];
            tile.triple = IndexTriple(triple[0], triple[1], triple[2]);
            p.tiles.push_back(tile);
        } catch (const json::exception& e) {
            throw FormatError(where + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw FormatError(where + ": " + e.what());
        }
    }
    const std::size_t before = p.tiles.size();
    p.canonicalize();
    if (p.tiles.size() != before) throw FormatError("tile list contains duplicates");
    return p;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_patch(const std::string& path, const Patch& p) { write_text(path, patch_to_json(p).dump(1) + "\n"); }

Patch read_patch(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
    return patch_from_json(j);
}

std::string patch_to_obj(const Patch& p) {
    std::ostringstream os;
    os << "# " << p.tiles.size() << " golden rhombohedra\n";
    const auto v = icosahedron_vectors_f();
    std::size_t next = 1;
    // quads as corner bitmasks over the triple (bit b = + v_{triple[b]})
    static const int quads[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
    char buf[96];
    for (RhombType type : {RhombType::Prolate, RhombType::Oblate}) {
        os << "g " << to_string(type) << '\n';
        for (const auto& t : p.tiles) {
            if (classify(t.triple) != type) continue;
            const Vec3 base = physical_position(t.anchor);
            for (int s = 0; s < 8; ++s) {
                Vec3 q = base;
                for (int b = 0; b < 3; ++b)
                    if (s & (1 << b))
                        for (std::size_t c = 0; c < 3; ++c) q[c] += v[uz(t.triple[b] - 1)][c];
                std::snprintf(buf, sizeof buf, "v %.9f %.9f %.9f\n", rounded(q[0]) + 0.0, rounded(q[1]) + 0.0,
                              rounded(q[2]) + 0.0);
                os << buf;
            }
            for (const auto& f : quads)
                os << "f " << next + uz(f[0]) << ' ' << next + uz(f[1]) << ' ' << next + uz(f[2]) << ' '
                   << next + uz(f[3]) << '\n';
            next += 8;
        }
    }
    return os.str();
}

json to_json(const GrassmannExact& g) {
    json j;
    for (const auto& t : all_triples()) j[t.str()] = to_json(g[t]);
    return j;
}

json to_json(const SignTable& t) {
    json j;
    for (const auto& tr : all_triples()) {
        const SignEntry& e = t[uz(tr.ordinal())];
        j[tr.str()] = {{"type", to_string(e.type)}, {"sign", e.sign}};
    }
    return j;
}

json to_json(const FullAlternationSolution& s) {
    json j;
    j["reduced_quadratic"] = s.reduced_quadratic;
    j["ratios"] = {to_json(s.ratios[0]), to_json(s.ratios[1])};
    j["vectors"] = {to_json(s.vectors[0]), to_json(s.vectors[1])};
    return j;
}

json to_json(const WeakSolveReport& r) {
    json j;
    j["fixed_type"] = to_string(r.fixed_type);
    j["starts"] = r.starts;
    j["converged"] = r.converged;
    j["non_convergent"] = r.non_convergent;
    j["tol"] = r.tol;
    j["cluster_count"] = r.clusters.size();
    j["nondegenerate_cluster_count"] = r.nondegenerate_clusters();
    json cs = json::array();
    for (const auto& c : r.clusters) {
        json cj;
        cj["hits"] = c.hits;
        cj["max_residual"] = rounded(c.max_residual);
        cj["zero_coordinates"] = c.zero_coordinates;
        cj["known"] = c.known == WeakCluster::Known::Icosahedral  ? "icosahedral"
                      : c.known == WeakCluster::Known::Conjugate ? "conjugate"
                                                                 : "none";
        json center;
        for (const auto& t : all_triples()) center[t.str()] = rounded(c.center[uz(t.ordinal())]);
        cj["center"] = center;
        if (c.exact) cj["exact"] = to_json(*c.exact);
        cj["exact_validated"] = c.exact_validated;
        cj["decomposable"] = c.decomposable;
        cs.push_back(cj);
    }
    j["clusters"] = cs;
    return j;
}

json to_json(const PlanarityReport& r) {
    json j;
    j["thickness"] = rounded(r.thickness);
    j["vertices"] = r.vertices;
    j["axis_extents"] = vec_json(r.axis_extents);
    json z = json::array();
    for (const auto& [lo, hi] : r.z_ranges) z.push_back({rounded(lo), rounded(hi)});
    j["z_ranges"] = z;
    return j;
}

json to_json(const PatchAlternation& a) {
    return {{"worms", a.worms},
            {"weak_prolate", a.holds(AlternationKind::WeakProlate)},
            {"weak_oblate", a.holds(AlternationKind::WeakOblate)},
            {"full", a.holds(AlternationKind::Full)},
            {"weak_prolate_failures", a.weak_prolate_failures},
            {"weak_oblate_failures", a.weak_oblate_failures},
            {"max_same_type_run", a.max_same_type_run},
            {"run_bound_ok", a.run_bound_ok},
            {"thickness", rounded(a.thickness)}};
}

std::string quad_vec_str(const std::array<int, 4>& q) {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
           std::to_string(q[3]) + ")";
}

json to_json(const PeriodicityCheck& c) {
    json j{{"periodic", c.periodic}, {"checked", c.checked}, {"mismatches", c.mismatches}};
    if (c.first_mismatch) j["first_mismatch"] = quad_vec_str(c.first_mismatch->anchor);
    return j;
}

json to_json(const FlipSite& s) {
    return {{"corner", s.corner},
            {"quad", s.quad},
            {"parity", s.parity == FlipSite::Parity::Lower ? "lower" : "upper"}};
}

json to_json(const TraceEntry& e) {
    json j{{"step", e.step}, {"accepted", e.accepted}, {"thickness", rounded(e.thickness)}};
    if (!e.reason.empty()) j["reason"] = e.reason;
    if (e.site) j["site"] = to_json(*e.site);
    j["weak_prolate"] = e.weak_prolate;
    j["weak_oblate"] = e.weak_oblate;
    j["max_run"] = e.max_run;
    return j;
}

json to_json(const EvidenceRow& r) {
    return {{"label", r.label},         {"radius", rounded(r.radius)},
            {"constraint", to_string(r.constraint)}, {"run_bound", r.run_bound},
            {"max_run", r.max_run},     {"max_thickness", rounded(r.max_thickness)},
            {"seed", r.seed},           {"steps", r.steps},
            {"slab", r.slab},           {"degenerate", r.degenerate()}};
}

EvidenceRow evidence_from_json(const json& j) {
    EvidenceRow r;
    r.label = field<std::string>(j, "label");
    r.radius = field<double>(j, "radius");
    try {
        r.constraint = parse_constraint(field<std::string>(j, "constraint"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    r.run_bound = field<std::size_t>(j, "run_bound");
    r.max_run = field<std::size_t>(j, "max_run");
    r.max_thickness = field<double>(j, "max_thickness");
    r.seed = field<std::uint64_t>(j, "seed");
    r.steps = field<std::size_t>(j, "steps");
    r.slab = field<bool>(j, "slab");
    return r;
}

json to_json(const ConjectureSummary& s) {
    json rows = json::array();
    for (const auto& r : s.rows) rows.push_back(to_json(r));
    json cols = json::array();
    for (const auto& c : s.columns) {
        json pts = json::array();
        for (const auto& [radius, t] : c.radius_thickness) pts.push_back({rounded(radius), rounded(t)});
        cols.push_back({{"constraint", to_string(c.constraint)}, {"radius_thickness", pts}, {"bounded", c.bounded}});
    }
    return {{"status", "evidence, not proof"},
            {"threshold", rounded(s.threshold)},
            {"rows", rows},
            {"columns", cols},
            {"counterexample_candidates", s.counterexample_candidates}};
}

json to_json(const AuxiliaryVectors& a) {
    auto vec = [](const auto& v) {
        json out = json::array();
        for (const auto& c : v) out.push_back(to_json(c));
        return out;
    };
    return {{"w4", vec(a.w4)},
            {"w5", vec(a.w5)},
            {"w4_1356", vec(a.w4_1356)},
            {"w5_1356", vec(a.w5_1356)},
            {"w1_identity", a.w1_identity},
            {"w2_identity", a.w2_identity},
            {"conjugate_identities", a.conjugate_identities},
            {"subperiods_1356", a.subperiods_1356}};
}

}  // namespace icotile::io
