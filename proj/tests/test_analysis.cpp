#include "icotile/analysis.hpp"
#include "icotile/search.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace icotile;

namespace {

const Patch& canonical8() {
    static const Patch p = generate_canonical(8, 7);
    return p;
}

const Patch& canonical10() {
    static const Patch p = generate_canonical(10, 7);
    return p;
}

}  // namespace

TEST_CASE("worm of a single tile") {
    Patch p;
    p.tiles.push_back({Lattice6{}, IndexTriple(1, 2, 3)});
    const auto worms = extract_worms(p, 1, 2);
    REQUIRE(worms.size() == 1);
    CHECK(worms[0].tiles.size() == 1);
    CHECK(worms[0].tiles[0].third == 3);
    CHECK(worms[0].truncated_front);
    CHECK(worms[0].truncated_back);
    CHECK(extract_worms(p, 4, 5).empty());
}

TEST_CASE("every tile lies in three worms") {
    const Patch& p = canonical8();
    std::map<Tile, int> seen;
    std::size_t total = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (const auto& w : extract_worms(p, i, j)) {
                total += w.tiles.size();
                for (const auto& wt : w.tiles) {
                    ++seen[wt.tile];
                    CHECK(wt.tile.triple.contains(i));
                    CHECK(wt.tile.triple.contains(j));
                    CHECK(wt.type == classify(wt.tile.triple));
                }
            }
    CHECK(total == 3 * p.tiles.size());
    CHECK(seen.size() == p.tiles.size());
    for (const auto& [t, n] : seen) CHECK(n == 3);
}

TEST_CASE("12-worms of a canonical patch are paths") {
    const Patch& p = canonical8();
    // independent of the worm code: a (v1, v2)-face at lift position y belongs to
    // tile (y, {1,2,k}) from below and (y - e_k, {1,2,k}) from above
    for (const auto& t : p.tiles) {
        if (!t.triple.contains(1) || !t.triple.contains(2)) continue;
        int k = 0;
        for (int n = 0; n < 3; ++n)
            if (t.triple[n] != 1 && t.triple[n] != 2) k = t.triple[n];
        const Lattice6 top = t.anchor + unit(k);
        int above = 0;
        for (int m = 3; m <= 6; ++m) above += p.contains({top, IndexTriple(1, 2, m)}) ? 1 : 0;
        CHECK(above <= 1);
        int below = 0;
        for (int m = 3; m <= 6; ++m) below += p.contains({t.anchor - unit(m), IndexTriple(1, 2, m)}) ? 1 : 0;
        CHECK(below <= 1);
    }
    for (const auto& w : extract_worms(p, 1, 2))
        for (std::size_t n = 0; n + 1 < w.tiles.size(); ++n) {
            const auto& a = w.tiles[n];
            const auto& b = w.tiles[n + 1];
            // consecutive tiles share a whole (v1, v2)-face
            const Lattice6 a_top = a.step > 0 ? a.tile.anchor + unit(a.third) : a.tile.anchor;
            const Lattice6 b_bottom = b.step > 0 ? b.tile.anchor : b.tile.anchor + unit(b.third);
            CHECK(a_top == b_bottom);
        }
}

TEST_CASE("worm through a tile matches the extracted worm") {
    const Patch& p = canonical8();
    const auto worms = extract_worms(p, 2, 5);
    for (std::size_t n = 0; n < worms.size(); n += 5) {
        const auto& w = worms[n];
        const Worm v = worm_through(p, w.tiles[w.tiles.size() / 2].tile, 2, 5);
        REQUIRE(v.tiles.size() == w.tiles.size());
        std::vector<Tile> a, b;
        for (const auto& t : w.tiles) a.push_back(t.tile);
        for (const auto& t : v.tiles) b.push_back(t.tile);
        if (a.front() != b.front()) std::reverse(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("alternation of third-index sequences") {
    auto r = alternation_of_sequence(1, 2, {3, 5, 4, 6, 3, 5, 4, 6});
    CHECK(r.full());
    CHECK(r.max_same_type_run == 1);
    r = alternation_of_sequence(1, 2, {3, 5, 3});
    CHECK(!r.weak_prolate);
    CHECK(r.weak_oblate);
    CHECK(!r.full());
    r = alternation_of_sequence(1, 2, {5, 6, 5, 6, 5});
    CHECK(r.weak_prolate);
    CHECK(r.weak_oblate);
    CHECK(r.max_same_type_run == 5);
    r = alternation_of_sequence(1, 2, {5, 5});
    CHECK(!r.weak_oblate);
    CHECK(alternation_of_sequence(1, 2, {}).full());
    CHECK(alternation_of_sequence(1, 2, {4}).full());
}

TEST_CASE("alternation is direction invariant") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> letter(3, 6), len(0, 12);
    for (int n = 0; n < 300; ++n) {
        std::vector<int> s(static_cast<std::size_t>(len(rng)));
        for (auto& x : s) x = letter(rng);
        const auto a = alternation_of_sequence(1, 2, s);
        std::reverse(s.begin(), s.end());
        const auto b = alternation_of_sequence(1, 2, s);
        CHECK(a.weak_prolate == b.weak_prolate);
        CHECK(a.weak_oblate == b.weak_oblate);
        CHECK(a.max_same_type_run == b.max_same_type_run);
    }
}

TEST_CASE("canonical patch has alternation and is thin") {
    const PatchAlternation a = check_alternation(canonical8());
    CHECK(a.holds(AlternationKind::Full));
    CHECK(a.holds(AlternationKind::WeakProlate));
    CHECK(a.weak_prolate_failures == 0);
    CHECK(a.weak_oblate_failures == 0);
    CHECK(a.run_bound_ok);
    CHECK(a.thickness <= 1 + 1e-9);
    CHECK(a.thickness >= 0.9);
    AnalysisOptions inner;
    inner.interior_radius = 4;
    CHECK(check_alternation(canonical8(), inner).worms < a.worms);
}

TEST_CASE("random slab breaks full alternation") {
    SlabSpec spec;
    spec.sequence = random_stacking_sequence(spec.alphabet, 400, 3);
    const Patch p = build_slab_patch(spec);
    const PatchAlternation a = check_alternation(p);
    CHECK(!a.holds(AlternationKind::Full));
    CHECK(a.holds(AlternationKind::WeakProlate));
    CHECK(!a.run_bound_ok);
    CHECK(a.max_same_type_run == 400);
}

TEST_CASE("perturbed slope breaks full alternation somewhere") {
    auto gens = icosahedral_generators_f();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-0.01, 0.01);
    for (auto& g : gens)
        for (auto& x : g) x += u(rng);
    const Patch p = generate_patch_float(gens, 8, random_generic_gamma_lift(1), 1e-9);
    CHECK(validate_patch(p, p.radius - max_tile_diameter()).ok());
    CHECK(!check_alternation(p).holds(AlternationKind::Full));
    // control: the same construction without perturbation
    const Patch control = generate_patch_float(icosahedral_generators_f(), 8, random_generic_gamma_lift(1), 1e-9);
    CHECK(check_alternation(control).holds(AlternationKind::Full));
}

TEST_CASE("shadow cells") {
    Patch p;
    p.tiles.push_back({Lattice6{}, IndexTriple(1, 2, 3)});
    p.tiles.push_back({Lattice6{}, IndexTriple(1, 5, 6)});
    p.canonicalize();
    const ShadowPatch s = shadow(p, {1, 2, 3, 4});
    CHECK(s.contains({{0, 0, 0, 0}, {1, 2, 3}}));
    CHECK(s.contains({{0, 0, 0, 0}, {1}}));
    CHECK(s.full_cells() == 1);
}

TEST_CASE("shadow periods of a canonical patch") {
    const ShadowPatch s = shadow(canonical10(), {1, 2, 3, 4});
    const auto good = shadow_periodicity(s, {1, 1, 0, 0}, 3);
    CHECK(good.periodic);
    CHECK(good.checked > 0);
    const auto bad = shadow_periodicity(s, {1, 0, 0, 0}, 3);
    CHECK(!bad.periodic);
    CHECK(bad.first_mismatch.has_value());
    const auto zero = shadow_periodicity(s, {0, 0, 0, 0}, 3);
    CHECK(zero.periodic);
    CHECK(zero.mismatches == 0);
    CHECK_THROWS_AS(shadow_periodicity(s, {3, 0, 0, 0}, 2), std::invalid_argument);
    // sums of periods are periods on a wider margin
    CHECK(shadow_periodic(s, {0, 0, 1, -1}, 3));
    CHECK(shadow_periodic(s, {1, 1, 1, -1}, 4));
}

TEST_CASE("every integer subperiod is a shadow period") {
    const GrassmannExact g = icosahedral_slope().grassmann;
    for (const Quad& q : {Quad{1, 2, 3, 4}, Quad{1, 3, 5, 6}}) {
        const ShadowPatch s = shadow(canonical10(), q);
        for (const auto& v : find_integer_subperiods(g, q, 2)) CHECK(shadow_periodic(s, v, 3));
    }
}
