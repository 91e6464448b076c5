#include "icotile/grassmann.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <random>

using namespace icotile;

namespace {

const GoldenRational phi = GoldenRational::phi();

// Leibniz formula on rows a, b, c of the 6x3 matrix whose columns are the generators.
GoldenRational minor_oracle(const Generators<GoldenRational>& g, int a, int b, int c) {
    const int rows[3] = {a - 1, b - 1, c - 1};
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    GoldenRational s;
    for (int p = 0; p < 6; ++p) {
        GoldenRational term = p < 3 ? GoldenRational(1) : GoldenRational(-1);
        for (int r = 0; r < 3; ++r)
            term *= g[static_cast<std::size_t>(perms[p][r])][static_cast<std::size_t>(rows[r])];
        s += term;
    }
    return s;
}

GoldenRational random_small(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("grassmann coordinates of the icosahedral slope") {
    const Slope e = icosahedral_slope();
    const GrassmannExact& g = e.grassmann;
    CHECK(g[IndexTriple(1, 2, 3)] == -2 * phi);
    CHECK(g[IndexTriple(1, 3, 5)] == 2 * phi + 2);
    for (const auto& t : all_triples()) CHECK(g[t] == minor_oracle(e.generators, t[0], t[1], t[2]));
}

TEST_CASE("antisymmetric access") {
    const GrassmannExact g = icosahedral_slope().grassmann;
    CHECK(g.at(2, 1, 3) == -g[IndexTriple(1, 2, 3)]);
    CHECK(g.at(2, 3, 1) == g[IndexTriple(1, 2, 3)]);
    CHECK(g.at(3, 2, 1) == -g[IndexTriple(1, 2, 3)]);
    CHECK(g.at(1, 1, 3) == 0);
    CHECK(permutation_sign(1, 3, 2) == -1);
}

TEST_CASE("grassmann vector is a basis invariant up to scale") {
    const auto gens = icosahedral_generators();
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<std::array<GoldenRational, 3>, 3> m{};
        for (auto& row : m)
            for (auto& x : row) x = random_small(rng);
        const GoldenRational det = det3({m[0][0], m[1][0], m[2][0]}, {m[0][1], m[1][1], m[2][1]},
                                        {m[0][2], m[1][2], m[2][2]});
        if (det.is_zero()) continue;
        Generators<GoldenRational> other{};
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t a = 0; a < 6; ++a)
                for (std::size_t s = 0; s < 3; ++s) other[r][a] += m[r][s] * gens[s][a];
        const GrassmannExact g2 = grassmann_of(other);
        CHECK(proportional(g2, icosahedral_slope().grassmann));
        // the scale is the determinant of the change of basis
        for (const auto& t : all_triples()) CHECK(g2[t] == det * icosahedral_slope().grassmann[t]);
    }
    Generators<GoldenRational> swapped{gens[1], gens[0], gens[2]};
    CHECK(proportional(grassmann_of(swapped), icosahedral_slope().grassmann));
}

TEST_CASE("degenerate generators are rejected") {
    const auto gens = icosahedral_generators();
    Generators<GoldenRational> bad{gens[0], gens[1], gens[0]};
    CHECK_THROWS(grassmann_of(bad));
}

TEST_CASE("Pluecker relations") {
    const GrassmannExact g = icosahedral_slope().grassmann;
    CHECK(!pluecker_relations().empty());
    CHECK(pluecker_violations(g).empty());
    CHECK(pluecker_violations(GrassmannExact{}).empty());
    GrassmannExact bad = g;
    bad[IndexTriple(1, 2, 3)] += 1;
    CHECK(!pluecker_violations(bad).empty());
    // the relation G123 G345 = G423 G315 + G523 G341 evaluated by hand on the perturbed vector
    const auto lhs = bad.at(1, 2, 3) * bad.at(3, 4, 5);
    const auto rhs = bad.at(4, 2, 3) * bad.at(3, 1, 5) + bad.at(5, 2, 3) * bad.at(3, 4, 1);
    CHECK(lhs != rhs);
    CHECK(pluecker_violations(to_float(g), 1e-12).empty());
    CHECK(max_pluecker_residual(to_float(g)) < 1e-12);
    // a random subspace satisfies them too
    std::mt19937_64 rng(9);
    Generators<GoldenRational> r{};
    for (auto& row : r)
        for (auto& x : row) x = random_small(rng);
    CHECK(pluecker_violations(grassmann_of(r)).empty());
}

TEST_CASE("slope and its conjugate are complementary") {
    const Slope e = icosahedral_slope();
    const Slope c = conjugate_slope(e);
    Eigen::Matrix<double, 6, 6> m;
    for (int r = 0; r < 3; ++r)
        for (int a = 0; a < 6; ++a) {
            m(a, r) = e.generators[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)].to_double();
            m(a, r + 3) = c.generators[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)].to_double();
        }
    CHECK(Eigen::FullPivLU<Eigen::Matrix<double, 6, 6>>(m).rank() == 6);
    for (const auto& w : e.generators)
        for (const auto& r : c.generators) CHECK(dot(w, r) == 0);
    CHECK(conjugate_slope(c).grassmann == e.grassmann);
}

TEST_CASE("alternation sign table") {
    const SignTable t = alternation_sign_table();
    const auto e123 = t[static_cast<std::size_t>(IndexTriple(1, 2, 3).ordinal())];
    CHECK(e123.type == RhombType::Prolate);
    CHECK(e123.sign == -1);
    const auto e135 = t[static_cast<std::size_t>(IndexTriple(1, 3, 5).ordinal())];
    CHECK(e135.type == RhombType::Oblate);
    CHECK(e135.sign == 1);
    const GrassmannExact g = icosahedral_slope().grassmann;
    for (const auto& tr : all_triples()) {
        const auto& e = t[static_cast<std::size_t>(tr.ordinal())];
        CHECK(e.type == classify(tr));
        CHECK(GoldenRational(e.sign) * g[tr] == (e.type == RhombType::Prolate ? 2 * phi : 2 * phi + 2));
    }
}

TEST_CASE("full alternation system has the two conjugate solutions") {
    const FullAlternationSolution s = solve_full_alternation();
    // r^2 - r - 1 = 0 up to an overall sign
    const auto q = s.reduced_quadratic;
    CHECK(q[0] != 0);
    CHECK(q[1] == -q[0]);
    CHECK(q[2] == -q[0]);
    CHECK(s.ratios[0] == phi);
    CHECK(s.ratios[1] == 1 - phi);
    for (const auto& r : s.ratios) CHECK(r * r - r - 1 == 0);
    for (const auto& v : s.vectors) CHECK(pluecker_violations(v).empty());
    for (const auto& t : all_triples()) {
        CHECK(s.vectors[1][t] == s.vectors[0][t].conjugate());
        CHECK(2 * phi * s.vectors[0][t] == icosahedral_slope().grassmann[t]);
    }
}

TEST_CASE("a corrupted sign table has no valid solution") {
    SignTable t = alternation_sign_table();
    t[0].sign = -t[0].sign;
    CHECK_THROWS(solve_full_alternation(t));
}

TEST_CASE("weak system: only the two full solutions use every rhombohedron") {
    WeakSolveOptions opt;
    opt.starts = 60;
    for (RhombType which : {RhombType::Prolate, RhombType::Oblate}) {
        const WeakSolveReport r = solve_weak_alternation(which, opt);
        CHECK(r.converged + r.non_convergent == r.starts);
        std::size_t known = 0;
        for (const auto& c : r.clusters) {
            CHECK(c.max_residual < 1e-9);
            if (c.known != WeakCluster::Known::None) {
                ++known;
                CHECK(c.zero_coordinates == 0);
            } else {
                // the extra solutions leave some rhombohedra out entirely
                CHECK(c.zero_coordinates > 0);
            }
            if (c.exact) {
                CHECK(c.exact_validated);
                CHECK(c.decomposable);
            }
        }
        CHECK(known == 2);
        CHECK(r.nondegenerate_clusters() == 2);
    }
}

TEST_CASE("weak multistart kernels agree") {
    WeakSolveOptions opt;
    opt.starts = 24;
    const auto a = kernels::weak_multistart_serial(RhombType::Oblate, opt);
    const auto b = kernels::weak_multistart_omp(RhombType::Oblate, opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        CHECK(a[n].x == b[n].x);
        CHECK(a[n].converged == b[n].converged);
    }
}

TEST_CASE("subperiod form") {
    const GrassmannExact g = icosahedral_slope().grassmann;
    const Quad q{1, 2, 3, 4};
    CHECK(subperiod_form(g, q, std::array<GoldenRational, 4>{phi, phi, 0, 0}) == 0);
    CHECK(subperiod_form(g, q, std::array<int, 4>{0, 0, 1, -1}) == 0);
    CHECK(subperiod_form(g, q, std::array<int, 4>{1, 0, 0, 0}) != 0);

    // every vector of the slope projects into the kernel of every form
    std::mt19937_64 rng(4);
    const auto gens = icosahedral_generators();
    for (int trial = 0; trial < 20; ++trial) {
        GoldenVec6 v{};
        for (const auto& w : gens) {
            const GoldenRational c = random_small(rng);
            for (std::size_t a = 0; a < 6; ++a) v[a] += c * w[a];
        }
        for (const Quad& quad : {Quad{1, 2, 3, 4}, Quad{1, 3, 5, 6}, Quad{2, 4, 5, 6}})
            CHECK(subperiod_form(g, quad, project(v, quad)) == 0);
    }
}

TEST_CASE("integer subperiods") {
    const GrassmannExact g = icosahedral_slope().grassmann;
    auto has = [](const std::vector<std::array<int, 4>>& v, std::array<int, 4> q) {
        return std::find(v.begin(), v.end(), q) != v.end();
    };
    const auto s1234 = find_integer_subperiods(g, {1, 2, 3, 4}, 2);
    CHECK(has(s1234, {1, 1, 0, 0}));
    CHECK(has(s1234, {0, 0, 1, -1}));
    CHECK(!has(s1234, {1, 0, 0, 0}));
    const auto s1356 = find_integer_subperiods(g, {1, 3, 5, 6}, 2);
    CHECK(has(s1356, {0, 1, -1, 0}));
    CHECK(has(s1356, {1, 0, 0, -1}));
    for (const auto& q : s1356) CHECK(subperiod_form(g, {1, 3, 5, 6}, q) == 0);
    // 1256: two independent directions
    const auto s1256 = find_integer_subperiods(g, {1, 2, 5, 6}, 2);
    REQUIRE(s1256.size() >= 2);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(s1256.size()), 4);
    for (std::size_t r = 0; r < s1256.size(); ++r)
        for (std::size_t c = 0; c < 4; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s1256[r][c];
    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank() == 2);
    for (const auto& q : s1256) {
        const auto lead = std::find_if(q.begin(), q.end(), [](int x) { return x != 0; });
        REQUIRE(lead != q.end());
        CHECK(*lead > 0);
    }
}

TEST_CASE("auxiliary vectors") {
    const AuxiliaryVectors a = proof_auxiliary_vectors();
    CHECK(a.w4_1356 == std::array<GoldenRational, 4>{0, 1, -1, 0});
    CHECK(a.w5_1356 == std::array<GoldenRational, 4>{1, 0, 0, -1});
    CHECK(a.w1_identity);
    CHECK(a.w2_identity);
    CHECK(a.conjugate_identities);
    CHECK(a.subperiods_1356);
    // w2 = (phi - 1) w3 + w4 + w5, recomputed here
    const auto& w = icosahedral_generators();
    for (std::size_t k = 0; k < 6; ++k) CHECK(w[1][k] == (phi - 1) * w[2][k] + a.w4[k] + a.w5[k]);
}

TEST_CASE("subspace reconstruction from coordinates") {
    const GrassmannExact g = icosahedral_slope().grassmann;
    const auto rows = subspace_of(g);
    REQUIRE(rows.has_value());
    CHECK(proportional(grassmann_of(*rows), g));
    GrassmannExact bad = g;
    bad[IndexTriple(1, 2, 3)] += 1;
    CHECK(!subspace_of(bad).has_value());
    CHECK(!subspace_of(GrassmannExact{}).has_value());
}

TEST_CASE("quad strings") {
    CHECK(parse_quad("1356") == Quad{1, 3, 5, 6});
    CHECK(quad_str({1, 3, 5, 6}) == "1356");
    CHECK_THROWS(parse_quad("1123"));
    CHECK_THROWS(parse_quad("12"));
}
