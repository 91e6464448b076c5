#include "icotile/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace icotile {

IndexTriple::IndexTriple(int a, int b, int c) : idx{a, b, c} {
    std::sort(idx.begin(), idx.end());
    if (idx[0] < 1 || idx[2] > 6 || idx[0] == idx[1] || idx[1] == idx[2])
        throw std::invalid_argument("invalid index triple " + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c));
}

int IndexTriple::ordinal() const {
    const auto& all = all_triples();
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), *this) - all.begin());
}

IndexTriple IndexTriple::complement() const {
    std::array<int, 3> rest{};
    std::size_t n = 0;
    for (int a = 1; a <= 6; ++a)
        if (!contains(a)) rest[n++] = a;
    return {rest[0], rest[1], rest[2]};
}

std::string IndexTriple::str() const {
    return std::to_string(idx[0]) + std::to_string(idx[1]) + std::to_string(idx[2]);
}

const std::array<IndexTriple, 20>& all_triples() {
    static const std::array<IndexTriple, 20> table = [] {
        std::array<IndexTriple, 20> t;
        std::size_t n = 0;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k) t[n++] = IndexTriple(i, j, k);
        return t;
    }();
    return table;
}

const char* to_string(RhombType t) { return t == RhombType::Prolate ? "prolate" : "oblate"; }

const std::array<GoldenVec6, 3>& icosahedral_generators() {
    static const std::array<GoldenVec6, 3> w = [] {
        const GoldenRational f = GoldenRational::phi();
        const GoldenRational o(1), z(0), m(-1);
        return std::array<GoldenVec6, 3>{GoldenVec6{f, f, z, z, o, m},  //
                                         GoldenVec6{o, m, f, f, z, z},  //
                                         GoldenVec6{z, z, o, m, f, f}};
    }();
    return w;
}

const std::array<GoldenVec3, 6>& icosahedron_vectors() {
    static const std::array<GoldenVec3, 6> v = [] {
        const auto& w = icosahedral_generators();
        std::array<GoldenVec3, 6> out;
        for (std::size_t j = 0; j < 6; ++j) out[j] = {w[0][j], w[1][j], w[2][j]};
        return out;
    }();
    return v;
}

const std::array<GoldenVec3, 6>& internal_vectors() {
    static const std::array<GoldenVec3, 6> v = [] {
        std::array<GoldenVec3, 6> out;
        for (std::size_t j = 0; j < 6; ++j) out[j] = conjugate(icosahedron_vectors()[j]);
        return out;
    }();
    return v;
}

std::array<std::array<double, 3>, 6> icosahedron_vectors_f() {
    std::array<std::array<double, 3>, 6> out{};
    for (std::size_t j = 0; j < 6; ++j) out[j] = to_double(icosahedron_vectors()[j]);
    return out;
}

std::array<std::array<double, 3>, 6> internal_vectors_f() {
    std::array<std::array<double, 3>, 6> out{};
    for (std::size_t j = 0; j < 6; ++j) out[j] = to_double(internal_vectors()[j]);
    return out;
}

GoldenRational volume(IndexTriple t) {
    const auto& v = icosahedron_vectors();
    return det3(v[static_cast<std::size_t>(t[0] - 1)], v[static_cast<std::size_t>(t[1] - 1)],
                v[static_cast<std::size_t>(t[2] - 1)]);
}

RhombType classify(IndexTriple t) {
    static const std::array<RhombType, 20> table = [] {
        std::array<RhombType, 20> out{};
        const GoldenRational thin = 2 * GoldenRational::phi();
        for (const auto& tr : all_triples())
            out[static_cast<std::size_t>(tr.ordinal())] = abs(volume(tr)) == thin ? RhombType::Prolate : RhombType::Oblate;
        return out;
    }();
    return table[static_cast<std::size_t>(t.ordinal())];
}

ComplementSplit worm_complement_split(int i, int j) {
    if (i < 1 || i > 6 || j < 1 || j > 6 || i == j)
        throw std::invalid_argument("worm pair needs two distinct indices in 1..6");
    ComplementSplit s{};
    std::size_t np = 0, no = 0;
    for (int k = 1; k <= 6; ++k) {
        if (k == i || k == j) continue;
        if (classify(IndexTriple(i, j, k)) == RhombType::Prolate) {
            if (np == 2) throw std::logic_error("complement split is not 2+2");
            s.prolate[np++] = k;
        } else {
            if (no == 2) throw std::logic_error("complement split is not 2+2");
            s.oblate[no++] = k;
        }
    }
    return s;
}

std::array<double, 3> physical_position(const Lattice6& x) {
    static const auto v = icosahedron_vectors_f();
    std::array<double, 3> p{};
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t c = 0; c < 3; ++c) p[c] += x[a] * v[a][c];
    return p;
}

GoldenVec3 internal_position(const Lattice6& x) {
    const auto& v = internal_vectors();
    GoldenVec3 p;
    for (std::size_t a = 0; a < 6; ++a) {
        if (x[a] == 0) continue;
        const GoldenRational c(x[a]);
        for (std::size_t k = 0; k < 3; ++k) p[k] += c * v[a][k];
    }
    return p;
}

}  // namespace icotile
