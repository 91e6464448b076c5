#pragma once

// Grassmann coordinates of 3-subspaces of R^6, the Pluecker relations, the
// icosahedral slope and the alternation equation systems.

#include "icotile/cutproject.hpp"
#include "icotile/geometry.hpp"
#include "icotile/goldfield.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace icotile {

/// Sign of the permutation sorting (a, b, c); 0 if two indices coincide.
int permutation_sign(int a, int b, int c);

/// The 20 coordinates G_ijk, stored by sorted triple.
template <class T>
class GrassmannVector {
public:
    GrassmannVector() { values_.fill(T(0)); }

    T& operator[](IndexTriple t) { return values_[static_cast<std::size_t>(t.ordinal())]; }
    const T& operator[](IndexTriple t) const { return values_[static_cast<std::size_t>(t.ordinal())]; }

    /// G with arbitrary index order; odd permutations flip the sign and
    /// repeated indices give zero.
    T at(int a, int b, int c) const {
        const int s = permutation_sign(a, b, c);
        if (s == 0) return T(0);
        const T& v = (*this)[IndexTriple(a, b, c)];
        return s > 0 ? v : T(-v);
    }

    const std::array<T, 20>& values() const { return values_; }
    std::array<T, 20>& values() { return values_; }

    bool operator==(const GrassmannVector&) const = default;

private:
    std::array<T, 20> values_;
};

using GrassmannExact = GrassmannVector<GoldenRational>;
using GrassmannFloat = GrassmannVector<double>;

GrassmannFloat to_float(const GrassmannExact& g);

template <class T>
using Generators = std::array<std::array<T, 6>, 3>;

/// G_ijk = det of rows i, j, k of the 6x3 generator matrix. Throws
/// DegenerateSlopeError when all minors vanish.
GrassmannExact grassmann_of(const Generators<GoldenRational>& gens);
GrassmannFloat grassmann_of(const Generators<double>& gens, double zero_tol = 1e-12);

struct Slope {
    Generators<GoldenRational> generators;
    GrassmannExact grassmann;
};

Slope make_slope(const Generators<GoldenRational>& gens);
/// The slope spanned by w1, w2, w3.
Slope icosahedral_slope();
/// Galois conjugate of every generator entry.
Slope conjugate_slope(const Slope& s);

/// Three vectors spanning the subspace with the given coordinates, read off
/// from the first nonzero coordinate G_abc: row m replaces one of a, b, c by each
/// index in turn. Empty when the vector is zero or not decomposable (the
/// rows then do not reproduce it up to scale).
std::optional<Generators<GoldenRational>> subspace_of(const GrassmannExact& g);

/// Two Grassmann vectors describe the same subspace iff they are proportional.
bool proportional(const GrassmannExact& a, const GrassmannExact& b);

// ----------------------------------------------------------------- Pluecker

/// A quadratic relation sum c * G_s * G_t = 0 over sorted triples s <= t,
/// with integer coefficients.
struct PlueckerRelation {
    struct Term {
        int s, t;  // ordinals, s <= t
        int coeff;
    };
    std::vector<Term> terms;
    /// One index tuple that generated it, e.g. "ijk=123 abc=345 exchange 1".
    std::string origin;
};

/// Every three-term exchange relation
///   G_ijk G_abc = G_ajk G_ibc + G_bjk G_aic + G_cjk G_abi   (and the two
/// analogous exchanges of j and of k)
/// over all index tuples, canonicalized, with trivial and duplicate relations
/// removed.
const std::vector<PlueckerRelation>& pluecker_relations();

GoldenRational evaluate(const PlueckerRelation& r, const GrassmannExact& g);
double evaluate(const PlueckerRelation& r, const GrassmannFloat& g);

/// Indices into pluecker_relations() of the relations that fail exactly.
std::vector<std::size_t> pluecker_violations(const GrassmannExact& g);
/// Relations with |lhs - rhs| > tol.
std::vector<std::size_t> pluecker_violations(const GrassmannFloat& g, double tol);
double max_pluecker_residual(const GrassmannFloat& g);

// -------------------------------------------------------------- alternation

struct SignEntry {
    RhombType type;
    int sign;  // sign * G_t equals the common value of its type
};
using SignTable = std::array<SignEntry, 20>;

/// Read off from the two chains of equalities among the icosahedral G's:
///   G213=G124=G136=G145=G516=G235=G246=G256=G435=G346 (prolate, common value p)
///   G215=G216=G314=G135=G146=G324=G236=G245=G536=G546 (oblate, common value q)
SignTable alternation_sign_table();

/// The oblate-over-prolate value pattern of a sign table: G_t = sign * (p or q).
GrassmannExact pattern_vector(const SignTable& table, const GoldenRational& p, const GoldenRational& q);

struct FullAlternationSolution {
    /// Coefficients (c2, c1, c0) of c2 r^2 + c1 r + c0 = 0 with r = q/p.
    std::array<long, 3> reduced_quadratic{};
    /// Roots in decreasing order (phi first).
    std::array<GoldenRational, 2> ratios;
    /// pattern_vector(table, 1, ratio) per root.
    std::array<GrassmannExact, 2> vectors;
};

/// Substitutes the sign table into G123 G345 = G423 G315 + G523 G341, solves
/// the resulting quadratic over Q(phi) and checks both solutions against all
/// Pluecker relations exactly. Throws std::runtime_error if a root fails.
FullAlternationSolution solve_full_alternation(const SignTable& table = alternation_sign_table());

struct WeakCluster {
    std::array<double, 20> center{};  // Grassmann coordinates, fixed type normalized to 1
    std::size_t hits = 0;
    double max_residual = 0;  // over all relations at the center
    /// Nearest exact candidate (a + b phi, a and b in Z/2), when every coordinate is within 1e-6.
    std::optional<GrassmannExact> exact;
    bool exact_validated = false;  // exact candidate satisfies all relations
    /// The exact candidate reconstructs to a 3-subspace (checked without the relations).
    bool decomposable = false;
    /// Coordinates with |G| < tol; a zero coordinate means that rhombohedron never occurs.
    std::size_t zero_coordinates = 0;
    /// Which full-alternation solution it matches within tol, if any.
    enum class Known { None, Icosahedral, Conjugate } known = Known::None;
};

struct WeakSolveReport {
    RhombType fixed_type = RhombType::Prolate;
    std::size_t starts = 0;
    std::size_t converged = 0;
    std::size_t non_convergent = 0;
    double tol = 0;
    std::vector<WeakCluster> clusters;  // sorted by center

    /// Clusters with every coordinate nonzero.
    std::size_t nondegenerate_clusters() const;
};

struct WeakSolveOptions {
    std::size_t starts = 200;
    double tol = 1e-6;  // clustering radius (max norm)
    std::uint64_t seed = 1;
    double residual_accept = 1e-9;
    int max_iterations = 200;
};

/// Fixes the 10 coordinates of the chosen type to their sign-table values
/// (common value 1), leaves the other 10 free, and solves the full Pluecker
/// system by Levenberg-Marquardt from random starts in [-3, 3]^10.
WeakSolveReport solve_weak_alternation(RhombType which, const WeakSolveOptions& opt = {}, Exec exec = Exec::Parallel);

namespace kernels {

struct StartResult {
    std::array<double, 10> x{};
    double max_residual = 0;
    bool converged = false;
};

std::vector<StartResult> weak_multistart_serial(RhombType which, const WeakSolveOptions& opt);
std::vector<StartResult> weak_multistart_omp(RhombType which, const WeakSolveOptions& opt);

}  // namespace kernels

// ---------------------------------------------------------------- subperiods

using Quad = std::array<int, 4>;  // sorted indices i < j < k < l from 1..6

/// x_i G_jkl - x_j G_ikl + x_k G_ijl - x_l G_ijk; zero iff x lies in the
/// ijkl-projection of the slope.
template <class T, class X>
T subperiod_form(const GrassmannVector<T>& g, const Quad& q, const std::array<X, 4>& x) {
    const int i = q[0], j = q[1], k = q[2], l = q[3];
    return T(x[0]) * g.at(j, k, l) - T(x[1]) * g.at(i, k, l) + T(x[2]) * g.at(i, j, l) - T(x[3]) * g.at(i, j, k);
}

/// Coordinates i, j, k, l of a 6-vector.
template <class T>
std::array<T, 4> project(const std::array<T, 6>& v, const Quad& q) {
    return {v[static_cast<std::size_t>(q[0] - 1)], v[static_cast<std::size_t>(q[1] - 1)],
            v[static_cast<std::size_t>(q[2] - 1)], v[static_cast<std::size_t>(q[3] - 1)]};
}

/// Primitive integer vectors in [-bound, bound]^4 annihilated exactly by the
/// subperiod form, one per antipodal pair (first nonzero entry positive).
std::vector<std::array<int, 4>> find_integer_subperiods(const GrassmannExact& g, const Quad& q, int bound);

struct AuxiliaryVectors {
    GoldenVec6 w4, w5;
    std::array<GoldenRational, 4> w4_1356, w5_1356;
    bool w1_identity = false;  // w1 = (2-phi) w3 + (phi-2) w4 + phi w5
    bool w2_identity = false;  // w2 = (phi-1) w3 + w4 + w5
    bool conjugate_identities = false;  // the same with every vector and coefficient conjugated
    bool subperiods_1356 = false;       // both projections annihilated by the icosahedral 1356 form
};

/// 2 w4 = -w1 + phi w2 + (1-phi) w3 and 2 w5 = w1 + (2-phi) w2 + (1-phi) w3.
/// Throws std::runtime_error if any of the identities fails.
AuxiliaryVectors proof_auxiliary_vectors();

std::string quad_str(const Quad& q);
Quad parse_quad(const std::string& s);

}  // namespace icotile
