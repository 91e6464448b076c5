#include "icotile/geometry.hpp"

#include <doctest.h>

#include <set>

using namespace icotile;

namespace {

const GoldenRational phi = GoldenRational::phi();

// Cofactor expansion along the first row, written out independently of det3.
GoldenRational cofactor_det(const GoldenVec3& a, const GoldenVec3& b, const GoldenVec3& c) {
    // columns a, b, c
    return a[0] * (b[1] * c[2] - c[1] * b[2]) - b[0] * (a[1] * c[2] - c[1] * a[2]) + c[0] * (a[1] * b[2] - b[1] * a[2]);
}

std::set<IndexTriple> triples_of(std::initializer_list<std::array<int, 3>> list) {
    std::set<IndexTriple> out;
    for (const auto& t : list) out.insert(IndexTriple(t[0], t[1], t[2]));
    return out;
}

}  // namespace

TEST_CASE("icosahedron vectors are the columns of w1, w2, w3") {
    const GoldenVec6 w1{phi, phi, 0, 0, 1, -1}, w2{1, -1, phi, phi, 0, 0}, w3{0, 0, 1, -1, phi, phi};
    const auto& v = icosahedron_vectors();
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(v[j][0] == w1[j]);
        CHECK(v[j][1] == w2[j]);
        CHECK(v[j][2] == w3[j]);
    }
    CHECK(v[0] == GoldenVec3{phi, 1, 0});
    CHECK(v[3] == GoldenVec3{0, phi, -1});
    for (const auto& vj : v) CHECK(dot(vj, vj) == phi + 2);
    CHECK(v[4][0] == -v[5][0]);
    CHECK(v[4][1] == v[5][1]);
    CHECK(v[4][2] == v[5][2]);
}

TEST_CASE("internal vectors are conjugates") {
    for (std::size_t j = 0; j < 6; ++j) CHECK(internal_vectors()[j] == conjugate(icosahedron_vectors()[j]));
}

TEST_CASE("rhombohedron volumes") {
    const auto& v = icosahedron_vectors();
    CHECK(volume(IndexTriple(1, 2, 3)) == -2 * phi);
    CHECK(volume(IndexTriple(1, 3, 5)) == 2 * phi + 2);
    for (const auto& t : all_triples()) {
        const auto i = static_cast<std::size_t>(t[0] - 1), j = static_cast<std::size_t>(t[1] - 1),
                   k = static_cast<std::size_t>(t[2] - 1);
        CHECK(volume(t) == cofactor_det(v[i], v[j], v[k]));
        const GoldenRational a = abs(volume(t));
        CHECK((a == 2 * phi || a == 2 * phi + 2));
    }
    CHECK((2 * phi + 2) / (2 * phi) == phi);
}

TEST_CASE("type split matches the two lists of equal coordinates") {
    const auto prolate = triples_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 6}, {1, 4, 5}, {1, 5, 6},
                                     {2, 3, 5}, {2, 4, 6}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
    const auto oblate = triples_of({{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 4, 6},
                                    {2, 3, 4}, {2, 3, 6}, {2, 4, 5}, {3, 5, 6}, {4, 5, 6}});
    std::size_t np = 0;
    for (const auto& t : all_triples()) {
        const bool is_prolate = classify(t) == RhombType::Prolate;
        np += is_prolate ? 1 : 0;
        CHECK(prolate.count(t) == (is_prolate ? 1u : 0u));
        CHECK(oblate.count(t) == (is_prolate ? 0u : 1u));
    }
    CHECK(np == 10);
    CHECK(classify(IndexTriple(2, 4, 6)) == RhombType::Prolate);
    CHECK(classify(IndexTriple(4, 5, 6)) == RhombType::Oblate);
}

TEST_CASE("worm complement split") {
    auto s = worm_complement_split(1, 2);
    CHECK(s.prolate == std::array<int, 2>{3, 4});
    CHECK(s.oblate == std::array<int, 2>{5, 6});
    s = worm_complement_split(1, 3);
    CHECK(s.prolate == std::array<int, 2>{2, 6});
    CHECK(s.oblate == std::array<int, 2>{4, 5});
    s = worm_complement_split(2, 1);
    CHECK(s.prolate == std::array<int, 2>{3, 4});
    CHECK_THROWS_AS(worm_complement_split(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(worm_complement_split(0, 2), std::invalid_argument);
}

TEST_CASE("index triples") {
    CHECK(IndexTriple(3, 1, 2) == IndexTriple(1, 2, 3));
    CHECK(IndexTriple(1, 2, 3).complement() == IndexTriple(4, 5, 6));
    CHECK_THROWS_AS(IndexTriple(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(IndexTriple(1, 2, 7), std::invalid_argument);
    for (std::size_t n = 0; n < 20; ++n) CHECK(all_triples()[n].ordinal() == static_cast<int>(n));
}

TEST_CASE("physical and internal positions") {
    const Lattice6 x{1, -2, 0, 3, 0, 1};
    const auto p = physical_position(x);
    const auto y = internal_position(x);
    GoldenVec3 ep{}, ei{};
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t c = 0; c < 3; ++c) {
            ep[c] += GoldenRational(x[a]) * icosahedron_vectors()[a][c];
            ei[c] += GoldenRational(x[a]) * internal_vectors()[a][c];
        }
    CHECK(y == ei);
    for (std::size_t c = 0; c < 3; ++c) CHECK(p[c] == doctest::Approx(ep[c].to_double()));
}

TEST_CASE("physical and internal coordinate rows are orthogonal") {
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t d = 0; d < 3; ++d) {
            GoldenRational s;
            for (std::size_t a = 0; a < 6; ++a) s += icosahedron_vectors()[a][c] * internal_vectors()[a][d];
            CHECK(s == 0);
        }
}
