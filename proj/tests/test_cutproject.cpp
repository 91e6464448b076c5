#include "icotile/cutproject.hpp"

#include <doctest.h>

#include <random>

using namespace icotile;

namespace {

const GoldenRational phi = GoldenRational::phi();

GoldenVec3 gamma_a() {
    return {GoldenRational(mpq_class(1, 7), mpq_class(1, 11)), GoldenRational(mpq_class(-2, 13), mpq_class(1, 17)),
            GoldenRational(mpq_class(1, 19), mpq_class(-1, 23))};
}

}  // namespace

TEST_CASE("window is centrally symmetric") {
    const Window w;
    CHECK(w.facets().size() == 15);
    const GoldenVec3 c = w.center();
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(0, 9);
    for (int n = 0; n < 200; ++n) {
        // point of the window as a combination of generators with coefficients in [0, 1]
        GoldenVec3 y{};
        for (const auto& g : w.generators()) {
            const GoldenRational t(mpq_class(d(rng), 9), 0);
            for (std::size_t k = 0; k < 3; ++k) y[k] += t * g[k];
        }
        CHECK(w.contains(y));
        GoldenVec3 mirror{};
        for (std::size_t k = 0; k < 3; ++k) mirror[k] = 2 * c[k] - y[k];
        CHECK(w.contains(mirror));
    }
    GoldenVec3 far{};
    for (std::size_t k = 0; k < 3; ++k) far[k] = c[k] + 10;
    CHECK(!w.contains(far));
}

TEST_CASE("selection at the center of a parallelepiped") {
    // pi'(0) - gamma sits at the center of the parallelepiped of pi'(e4), pi'(e5), pi'(e6)
    GoldenVec3 gamma{};
    for (int a : {4, 5, 6})
        for (std::size_t k = 0; k < 3; ++k) gamma[k] -= GoldenRational(mpq_class(1, 2), 0) * internal_vectors()[static_cast<std::size_t>(a - 1)][k];
    const CanonicalSelector sel(gamma);
    CHECK(sel.select_face(Lattice6{}, IndexTriple(1, 2, 3)));
}

TEST_CASE("selection is equivariant under lattice translation") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-3, 3), t(0, 19);
    const CanonicalSelector base(gamma_a());
    for (int n = 0; n < 300; ++n) {
        Lattice6 x{}, delta{};
        for (auto& c : x) c = d(rng);
        for (auto& c : delta) c = d(rng);
        GoldenVec3 shifted = gamma_a();
        const GoldenVec3 pd = internal_position(delta);
        for (std::size_t k = 0; k < 3; ++k) shifted[k] += pd[k];
        const CanonicalSelector moved(shifted);
        const IndexTriple tr = all_triples()[static_cast<std::size_t>(t(rng))];
        CHECK(base.select_face(x, tr) == moved.select_face(x + delta, tr));
    }
}

TEST_CASE("small patch contains the origin") {
    const Patch p = generate_patch(1.0, gamma_a());
    REQUIRE(!p.tiles.empty());
    bool incident = false;
    for (const auto& t : p.tiles)
        for (const auto& v : tile_vertices(t)) incident = incident || v == Lattice6{};
    CHECK(incident);
}

TEST_CASE("generated patch vertices lie in the window") {
    const Patch p = generate_patch(5.0, gamma_a());
    const Window w;
    for (const auto& x : p.vertices()) {
        GoldenVec3 y = internal_position(x);
        for (std::size_t k = 0; k < 3; ++k) y[k] -= gamma_a()[k];
        CHECK(w.contains(y));
    }
    CHECK(validate_patch(p, p.radius - max_tile_diameter()).ok());
    CHECK(check_exact_cover(p, p.radius - max_tile_diameter(), 3000, 1).exact());
}

TEST_CASE("serial and parallel generation agree") {
    const Patch a = generate_patch(5.0, gamma_a(), Exec::Serial);
    const Patch b = generate_patch(5.0, gamma_a(), Exec::Parallel);
    CHECK(a.tiles == b.tiles);
    const CanonicalSelector sel(gamma_a());
    std::vector<Tile> cand;
    for (const auto& t : a.tiles) {
        cand.push_back(t);
        cand.push_back({t.anchor + unit(1), t.triple});
    }
    std::vector<char> h1, h2;
    kernels::select_batch_serial(sel, cand, h1);
    kernels::select_batch_omp(sel, cand, h2);
    CHECK(h1 == h2);
    for (std::size_t n = 0; n < cand.size(); n += 2) CHECK(h1[n] == 1);
}

TEST_CASE("float mode reproduces the exact patch") {
    const Patch exact = generate_patch(5.0, gamma_a());
    const Patch f = generate_patch_float(icosahedral_generators_f(), 5.0, lift_of_gamma(gamma_a()), 1e-9);
    CHECK(f.tiles == exact.tiles);
}

TEST_CASE("perturbed slope gives a valid patch") {
    auto gens = icosahedral_generators_f();
    gens[0][0] += 0.01;
    const Patch p = generate_patch_float(gens, 6.0, random_generic_gamma_lift(3), 1e-9);
    CHECK(p.slope.kind == SlopeDescriptor::Kind::Custom);
    CHECK(p.tiles.size() > 50);
    CHECK(validate_patch(p, p.radius - max_tile_diameter()).ok());
    CHECK(check_exact_cover(p, p.radius - max_tile_diameter(), 3000, 2).exact());
}

TEST_CASE("degenerate float generators are rejected") {
    auto gens = icosahedral_generators_f();
    gens[2] = gens[0];
    CHECK_THROWS_AS(generate_patch_float(gens, 3.0, random_generic_gamma_lift(1), 1e-9), DegenerateSlopeError);
}

TEST_CASE("the mirror convention selects a different face set") {
    const CanonicalSelector good(gamma_a(), SelectionConvention::ProjectionMinusOffset);
    const CanonicalSelector mirror(gamma_a(), SelectionConvention::OffsetMinusProjection);
    std::size_t differ = 0;
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> d(-2, 2), t(0, 19);
    for (int n = 0; n < 2000; ++n) {
        Lattice6 x{};
        for (auto& c : x) c = d(rng);
        const IndexTriple tr = all_triples()[static_cast<std::size_t>(t(rng))];
        differ += good.select_face(x, tr) != mirror.select_face(x, tr) ? 1 : 0;
    }
    CHECK(differ > 0);
}

TEST_CASE("cover count kernels agree") {
    const Patch p = generate_patch(4.0, gamma_a());
    std::vector<Vec3> pts;
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 0; n < 500; ++n) pts.push_back({u(rng), u(rng), u(rng)});
    CHECK(kernels::cover_counts_serial(p, pts, 1e-9) == kernels::cover_counts_omp(p, pts, 1e-9));
}

TEST_CASE("tile counts approach the golden ratio") {
    const Patch p = generate_patch(10.0, gamma_a());
    const double ratio = static_cast<double>(p.count(RhombType::Oblate)) / static_cast<double>(p.count(RhombType::Prolate));
    CHECK(std::abs(ratio - phi.to_double()) / phi.to_double() < 0.05);
}
