#include "icotile/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace icotile;
using io::json;

TEST_CASE("rounding for stable output") {
    CHECK(io::rounded(-0.0) == 0.0);
    CHECK(!std::signbit(io::rounded(-1e-300 * 0)));
    CHECK(io::rounded(0.1 + 0.2) == 0.3);
    CHECK(io::rounded(1.0 / 3.0) == 0.333333333333);
}

TEST_CASE("golden numbers in JSON") {
    const GoldenRational x(mpq_class(-3, 4), mpq_class(5, 7));
    CHECK(io::golden_from_json(io::to_json(x)) == x);
    CHECK(io::golden_from_json(json(3)) == GoldenRational(3));
    CHECK_THROWS_AS(io::golden_from_json(json(0.5)), io::FormatError);
    CHECK_THROWS_AS(io::golden_from_json(json::array()), io::FormatError);
}

TEST_CASE("exact patch JSON round trip") {
    const Patch p = generate_canonical(4, 2);
    const json j = io::patch_to_json(p);
    CHECK(j.at("slope") == "icosahedral");
    CHECK(j.at("tiles").size() == p.tiles.size());
    const Patch q = io::patch_from_json(j);
    CHECK(q.tiles == p.tiles);
    CHECK(q.gamma_exact == p.gamma_exact);
    CHECK(q.radius == p.radius);
    CHECK(io::patch_to_json(q).dump() == j.dump());
}

TEST_CASE("float patch JSON round trip") {
    auto gens = icosahedral_generators_f();
    gens[1][2] += 0.01;
    const Patch p = generate_patch_float(gens, 4, random_generic_gamma_lift(2), 1e-9);
    const Patch q = io::patch_from_json(io::patch_to_json(p));
    CHECK(q.tiles == p.tiles);
    CHECK(q.slope.kind == SlopeDescriptor::Kind::Custom);
    REQUIRE(q.gamma_lift.has_value());
    for (std::size_t a = 0; a < 6; ++a) CHECK((*q.gamma_lift)[a] == doctest::Approx((*p.gamma_lift)[a]).epsilon(1e-11));
}

TEST_CASE("malformed tiling JSON names the field") {
    json j = io::patch_to_json(generate_canonical(3, 1));
    json bad = j;
    bad["tiles"][0]["triple"] = {1, 1, 2};
    CHECK_THROWS_AS(io::patch_from_json(bad), io::FormatError);
    bad = j;
    bad["tiles"][0]["anchor"] = {1, 2, 3};
    try {
        io::patch_from_json(bad);
        FAIL("short anchor accepted");
    } catch (const io::FormatError& e) {
        CHECK(std::string(e.what()).find("anchor") != std::string::npos);
    }
    bad = j;
    bad.erase("tiles");
    CHECK_THROWS_AS(io::patch_from_json(bad), io::FormatError);
    bad = j;
    bad["slope"] = "cubic";
    CHECK_THROWS_AS(io::patch_from_json(bad), io::FormatError);
}

TEST_CASE("file round trip is byte identical") {
    const auto dir = std::filesystem::temp_directory_path() / "icotile_io_test";
    std::filesystem::create_directories(dir);
    const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
    io::write_patch(a, generate_canonical(4, 5));
    io::write_patch(b, io::read_patch(a));
    CHECK(io::read_text(a) == io::read_text(b));
    io::write_patch(b, generate_canonical(4, 5));
    CHECK(io::read_text(a) == io::read_text(b));
    CHECK_THROWS(io::read_text((dir / "missing.json").string()));
    std::filesystem::remove_all(dir);
}

TEST_CASE("OBJ export has eight vertices and six quads per tile") {
    const Patch p = generate_canonical(3, 4);
    const std::string obj = io::patch_to_obj(p);
    std::istringstream in(obj);
    std::string line;
    std::size_t v = 0, f = 0, groups = 0;
    bool seen_oblate = false, prolate_after_oblate = false;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) ++v;
        if (line.rfind("f ", 0) == 0) {
            ++f;
            std::istringstream fs(line.substr(2));
            int idx = 0, n = 0;
            while (fs >> idx) {
                ++n;
                CHECK(idx >= 1);
                CHECK(static_cast<std::size_t>(idx) <= v);
            }
            CHECK(n == 4);
        }
        if (line == "g oblate") seen_oblate = true;
        if (line == "g prolate" && seen_oblate) prolate_after_oblate = true;
        if (line.rfind("g ", 0) == 0) ++groups;
    }
    CHECK(v == 8 * p.tiles.size());
    CHECK(f == 6 * p.tiles.size());
    CHECK(groups == 2);
    CHECK(!prolate_after_oblate);
}

TEST_CASE("evidence rows round trip") {
    EvidenceRow r;
    r.label = "walk";
    r.radius = 8;
    r.constraint = WalkConstraint::WeakOblate;
    r.max_run = 3;
    r.max_thickness = 1.25;
    r.seed = 4;
    r.steps = 900;
    const EvidenceRow s = io::evidence_from_json(io::to_json(r));
    CHECK(s.label == r.label);
    CHECK(s.radius == r.radius);
    CHECK(s.constraint == r.constraint);
    CHECK(s.max_run == r.max_run);
    CHECK(s.max_thickness == r.max_thickness);
    CHECK(s.seed == r.seed);
    CHECK(s.steps == r.steps);
    CHECK(s.slab == r.slab);
}

TEST_CASE("algebra reports") {
    const json g = io::to_json(icosahedral_slope().grassmann);
    CHECK(g.size() == 20);
    const json s = io::to_json(solve_full_alternation());
    CHECK(s.dump().find("1φ") != std::string::npos);
    CHECK(io::quad_vec_str({1, -1, 0, 2}) == "(1,-1,0,2)");
}
