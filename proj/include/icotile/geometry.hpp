#pragma once

// The icosahedron vectors v1..v6 and the twenty golden rhombohedra they span.

#include "icotile/goldfield.hpp"

#include <array>
#include <compare>
#include <functional>
#include <string>

namespace icotile {

/// Sorted triple 1 <= i < j < k <= 6 naming the rhombohedron spanned by v_i, v_j, v_k.
struct IndexTriple {
    std::array<int, 3> idx{1, 2, 3};

    IndexTriple() = default;
    /// Accepts the indices in any order; throws std::invalid_argument on
    /// out-of-range or repeated indices.
    IndexTriple(int a, int b, int c);

    int operator[](int n) const { return idx[static_cast<std::size_t>(n)]; }
    bool contains(int a) const { return idx[0] == a || idx[1] == a || idx[2] == a; }
    /// Position 0..19 in lexicographic order.
    int ordinal() const;
    /// The three indices of {1..6} not in this triple, sorted.
    IndexTriple complement() const;
    std::string str() const;

    auto operator<=>(const IndexTriple&) const = default;
};

/// All 20 triples in lexicographic order; all_triples()[t.ordinal()] == t.
const std::array<IndexTriple, 20>& all_triples();

enum class RhombType { Prolate, Oblate };

const char* to_string(RhombType t);

using Lattice6 = std::array<int, 6>;

/// The three generators w1, w2, w3 of the icosahedral slope. Everything else
/// in this header is derived from them.
const std::array<GoldenVec6, 3>& icosahedral_generators();

/// v_j is column j of the 3x6 matrix with rows w1, w2, w3:
/// v1=(phi,1,0) v2=(phi,-1,0) v3=(0,phi,1) v4=(0,phi,-1) v5=(1,0,phi) v6=(-1,0,phi).
/// Index 0 holds v1.
const std::array<GoldenVec3, 6>& icosahedron_vectors();

/// Galois conjugates of v1..v6; the coordinates of the internal-space
/// projection of e1..e6.
const std::array<GoldenVec3, 6>& internal_vectors();

std::array<std::array<double, 3>, 6> icosahedron_vectors_f();
std::array<std::array<double, 3>, 6> internal_vectors_f();

/// det(v_i, v_j, v_k), exact.
GoldenRational volume(IndexTriple t);

/// Prolate iff |volume| = 2 phi.
RhombType classify(IndexTriple t);

/// The four indices outside {i, j}, split by the type of T_{ijk}.
struct ComplementSplit {
    std::array<int, 2> prolate;
    std::array<int, 2> oblate;
};

/// Throws std::invalid_argument unless 1 <= i, j <= 6 and i != j.
ComplementSplit worm_complement_split(int i, int j);

/// Sum of x_a v_a in float coordinates.
std::array<double, 3> physical_position(const Lattice6& x);

/// Exact sum of x_a conj(v_a).
GoldenVec3 internal_position(const Lattice6& x);

struct Lattice6Hash {
    std::size_t operator()(const Lattice6& x) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int c : x) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

inline Lattice6 operator+(Lattice6 x, const Lattice6& y) {
    for (std::size_t a = 0; a < 6; ++a) x[a] += y[a];
    return x;
}
inline Lattice6 operator-(Lattice6 x, const Lattice6& y) {
    for (std::size_t a = 0; a < 6; ++a) x[a] -= y[a];
    return x;
}
/// Unit vector e_a for a in 1..6.
inline Lattice6 unit(int a) {
    Lattice6 e{};
    e[static_cast<std::size_t>(a - 1)] = 1;
    return e;
}

}  // namespace icotile
