#include "icotile/grassmann.hpp"

#include <Eigen/Dense>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace icotile {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

template <class T>
T det_rows(const Generators<T>& g, IndexTriple t) {
    // rows i, j, k of the 6x3 matrix whose columns are the generators
    auto e = [&](int row, int col) -> const T& { return g[uz(col)][uz(t[row] - 1)]; };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

int permutation_sign(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    int inv = (a > b) + (a > c) + (b > c);
    return inv % 2 == 0 ? 1 : -1;
}

GrassmannFloat to_float(const GrassmannExact& g) {
    GrassmannFloat out;
    for (std::size_t n = 0; n < 20; ++n) out.values()[n] = g.values()[n].to_double();
    return out;
}

GrassmannExact grassmann_of(const Generators<GoldenRational>& gens) {
    GrassmannExact g;
    bool any = false;
    for (const auto& t : all_triples()) {
        g[t] = det_rows(gens, t);
        any = any || !g[t].is_zero();
    }
    if (!any) throw DegenerateSlopeError("generators are linearly dependent: all Grassmann coordinates vanish");
    return g;
}

GrassmannFloat grassmann_of(const Generators<double>& gens, double zero_tol) {
    GrassmannFloat g;
    double biggest = 0;
    for (const auto& t : all_triples()) {
        g[t] = det_rows(gens, t);
        biggest = std::max(biggest, std::abs(g[t]));
    }
    if (biggest <= zero_tol) throw DegenerateSlopeError("generators are linearly dependent: all Grassmann coordinates vanish");
    return g;
}

Slope make_slope(const Generators<GoldenRational>& gens) { return Slope{gens, grassmann_of(gens)}; }

Slope icosahedral_slope() { return make_slope(icosahedral_generators()); }

Slope conjugate_slope(const Slope& s) {
    Generators<GoldenRational> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = conjugate(s.generators[i]);
    return make_slope(c);
}

bool proportional(const GrassmannExact& a, const GrassmannExact& b) {
    std::size_t pivot = 20;
    for (std::size_t n = 0; n < 20; ++n)
        if (!a.values()[n].is_zero()) {
            pivot = n;
            break;
        }
    if (pivot == 20) return false;
    const GoldenRational ratio = b.values()[pivot] / a.values()[pivot];
    if (ratio.is_zero()) return false;
    for (std::size_t n = 0; n < 20; ++n)
        if (b.values()[n] != ratio * a.values()[n]) return false;
    return true;
}

std::optional<Generators<GoldenRational>> subspace_of(const GrassmannExact& g) {
    const auto& ts = all_triples();
    std::size_t pivot = 20;
    for (std::size_t n = 0; n < 20; ++n)
        if (!g.values()[n].is_zero()) {
            pivot = n;
            break;
        }
    if (pivot == 20) return std::nullopt;
    const int a = ts[pivot][0], b = ts[pivot][1], c = ts[pivot][2];
    Generators<GoldenRational> rows;
    for (int x = 1; x <= 6; ++x) {
        const auto ux = static_cast<std::size_t>(x - 1);
        rows[0][ux] = g.at(x, b, c);
        rows[1][ux] = g.at(a, x, c);
        rows[2][ux] = g.at(a, b, x);
    }
    try {
        if (!proportional(g, grassmann_of(rows))) return std::nullopt;
    } catch (const DegenerateSlopeError&) {
        return std::nullopt;
    }
    return rows;
}

// ----------------------------------------------------------------- Pluecker

namespace {

using Poly = std::map<std::pair<int, int>, int>;

void add_product(Poly& p, std::array<int, 3> f, std::array<int, 3> s, int coeff) {
    const int sf = permutation_sign(f[0], f[1], f[2]);
    const int ss = permutation_sign(s[0], s[1], s[2]);
    if (sf == 0 || ss == 0) return;
    int a = IndexTriple(f[0], f[1], f[2]).ordinal();
    int b = IndexTriple(s[0], s[1], s[2]).ordinal();
    if (a > b) std::swap(a, b);
    p[{a, b}] += coeff * sf * ss;
}

std::vector<PlueckerRelation> build_relations() {
    std::set<std::vector<std::array<int, 3>>> seen;
    std::vector<PlueckerRelation> out;
    std::array<int, 6> ix{};
    for (int code = 0; code < 46656; ++code) {
        int c = code;
        for (auto& v : ix) {
            v = c % 6 + 1;
            c /= 6;
        }
        const std::array<int, 3> f{ix[0], ix[1], ix[2]};
        const std::array<int, 3> s{ix[3], ix[4], ix[5]};
        for (std::size_t e = 0; e < 3; ++e) {
            Poly p;
            add_product(p, f, s, 1);
            for (std::size_t m = 0; m < 3; ++m) {
                auto f2 = f;
                auto s2 = s;
                std::swap(f2[e], s2[m]);
                add_product(p, f2, s2, -1);
            }
            std::vector<std::array<int, 3>> terms;
            for (const auto& [k, v] : p)
                if (v != 0) terms.push_back({k.first, k.second, v});
            if (terms.empty()) continue;
            int g = 0;
            for (const auto& t : terms) g = std::gcd(g, std::abs(t[2]));
            const int sgn = terms.front()[2] < 0 ? -1 : 1;
            for (auto& t : terms) t[2] = t[2] / g * sgn;
            if (!seen.insert(terms).second) continue;
            PlueckerRelation r;
            for (const auto& t : terms) r.terms.push_back({t[0], t[1], t[2]});
            r.origin = "ijk=" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]) +
                       " abc=" + std::to_string(s[0]) + std::to_string(s[1]) + std::to_string(s[2]) +
                       " exchange " + std::to_string(e + 1);
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

const std::vector<PlueckerRelation>& pluecker_relations() {
    static const std::vector<PlueckerRelation> rel = build_relations();
    return rel;
}

GoldenRational evaluate(const PlueckerRelation& r, const GrassmannExact& g) {
    GoldenRational s;
    for (const auto& t : r.terms)
        s += GoldenRational(t.coeff) * g.values()[uz(t.s)] * g.values()[uz(t.t)];
    return s;
}

double evaluate(const PlueckerRelation& r, const GrassmannFloat& g) {
    double s = 0;
    for (const auto& t : r.terms) s += t.coeff * g.values()[uz(t.s)] * g.values()[uz(t.t)];
    return s;
}

std::vector<std::size_t> pluecker_violations(const GrassmannExact& g) {
    std::vector<std::size_t> out;
    const auto& rel = pluecker_relations();
    for (std::size_t n = 0; n < rel.size(); ++n)
        if (!evaluate(rel[n], g).is_zero()) out.push_back(n);
    return out;
}

std::vector<std::size_t> pluecker_violations(const GrassmannFloat& g, double tol) {
    std::vector<std::size_t> out;
    const auto& rel = pluecker_relations();
    for (std::size_t n = 0; n < rel.size(); ++n)
        if (std::abs(evaluate(rel[n], g)) > tol) out.push_back(n);
    return out;
}

double max_pluecker_residual(const GrassmannFloat& g) {
    double m = 0;
    for (const auto& r : pluecker_relations()) m = std::max(m, std::abs(evaluate(r, g)));
    return m;
}

// -------------------------------------------------------------- alternation

SignTable alternation_sign_table() {
    // the index order as written in the two chains of equalities
    static const std::array<std::array<int, 3>, 10> prolate{
        {{2, 1, 3}, {1, 2, 4}, {1, 3, 6}, {1, 4, 5}, {5, 1, 6}, {2, 3, 5}, {2, 4, 6}, {2, 5, 6}, {4, 3, 5}, {3, 4, 6}}};
    static const std::array<std::array<int, 3>, 10> oblate{
        {{2, 1, 5}, {2, 1, 6}, {3, 1, 4}, {1, 3, 5}, {1, 4, 6}, {3, 2, 4}, {2, 3, 6}, {2, 4, 5}, {5, 3, 6}, {5, 4, 6}}};
    SignTable table{};
    std::array<bool, 20> set{};
    auto put = [&](const std::array<int, 3>& ix, RhombType type) {
        const IndexTriple t(ix[0], ix[1], ix[2]);
        table[uz(t.ordinal())] = {type, permutation_sign(ix[0], ix[1], ix[2])};
        set[uz(t.ordinal())] = true;
    };
    for (const auto& ix : prolate) put(ix, RhombType::Prolate);
    for (const auto& ix : oblate) put(ix, RhombType::Oblate);
    if (!std::all_of(set.begin(), set.end(), [](bool b) { return b; }))
        throw std::logic_error("alternation sign table does not cover all 20 triples");
    return table;
}

GrassmannExact pattern_vector(const SignTable& table, const GoldenRational& p, const GoldenRational& q) {
    GrassmannExact g;
    for (std::size_t n = 0; n < 20; ++n) {
        const GoldenRational& base = table[n].type == RhombType::Prolate ? p : q;
        g.values()[n] = table[n].sign > 0 ? base : -base;
    }
    return g;
}

namespace {

std::optional<GoldenRational> sqrt_rational(long d) {
    if (d < 0) return std::nullopt;
    auto isqrt = [](long v) -> std::optional<long> {
        long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v))));
        for (long c = std::max(0L, r - 2); c <= r + 2; ++c)
            if (c * c == v) return c;
        return std::nullopt;
    };
    if (auto r = isqrt(d)) return GoldenRational(*r);
    // sqrt(5) = 2 phi - 1
    if (d % 5 == 0)
        if (auto r = isqrt(d / 5)) return GoldenRational(-*r, 2 * *r);
    return std::nullopt;
}

}  // namespace

FullAlternationSolution solve_full_alternation(const SignTable& table) {
    // G123 G345 - G423 G315 - G523 G341 = 0, written out term by term
    struct Product {
        std::array<int, 3> f, s;
        int coeff;
    };
    const std::array<Product, 3> relation{{{{1, 2, 3}, {3, 4, 5}, 1}, {{4, 2, 3}, {3, 1, 5}, -1}, {{5, 2, 3}, {3, 4, 1}, -1}}};

    // coefficients of p^2, pq, q^2
    std::array<long, 3> c{};
    for (const auto& pr : relation) {
        long sign = pr.coeff;
        int q_count = 0;
        for (const auto& ix : {pr.f, pr.s}) {
            const IndexTriple t(ix[0], ix[1], ix[2]);
            const SignEntry& e = table[uz(t.ordinal())];
            sign *= permutation_sign(ix[0], ix[1], ix[2]) * e.sign;
            if (e.type == RhombType::Oblate) ++q_count;
        }
        c[uz(q_count)] += sign;
    }
    // in r = q/p: c[2] r^2 + c[1] r + c[0] = 0, leading coefficient made positive
    FullAlternationSolution sol;
    long c2 = c[2], c1 = c[1], c0 = c[0];
    if (c2 < 0 || (c2 == 0 && c1 < 0)) {
        c2 = -c2;
        c1 = -c1;
        c0 = -c0;
    }
    sol.reduced_quadratic = {c2, c1, c0};
    if (c2 == 0) throw std::runtime_error("substituted relation is not quadratic in q/p");
    const auto root = sqrt_rational(c1 * c1 - 4 * c2 * c0);
    if (!root) throw std::runtime_error("discriminant has no square root in Q(phi)");
    const GoldenRational den(2 * c2);
    GoldenRational r1 = (GoldenRational(-c1) + *root) / den;
    GoldenRational r2 = (GoldenRational(-c1) - *root) / den;
    if (r1 < r2) std::swap(r1, r2);
    sol.ratios = {r1, r2};
    for (std::size_t n = 0; n < 2; ++n) {
        sol.vectors[n] = pattern_vector(table, GoldenRational(1), sol.ratios[n]);
        if (!pluecker_violations(sol.vectors[n]).empty())
            throw std::runtime_error("root q/p = " + sol.ratios[n].str() + " violates a Pluecker relation");
    }
    return sol;
}

// ------------------------------------------------------------ weak system

namespace {

struct WeakSystem {
    std::array<int, 10> free{};  // ordinals of free coordinates
    GrassmannFloat fixed;        // fixed coordinates set, free ones zero

    explicit WeakSystem(RhombType which) {
        const SignTable table = alternation_sign_table();
        std::size_t nf = 0;
        for (std::size_t n = 0; n < 20; ++n) {
            if (table[n].type == which)
                fixed.values()[n] = table[n].sign;
            else
                free[nf++] = static_cast<int>(n);
        }
    }

    GrassmannFloat assemble(const std::array<double, 10>& x) const {
        GrassmannFloat g = fixed;
        for (std::size_t m = 0; m < 10; ++m) g.values()[uz(free[m])] = x[m];
        return g;
    }
};

kernels::StartResult run_start(const WeakSystem& sys, const WeakSolveOptions& opt, std::size_t start) {
    const auto& rel = pluecker_relations();
    const Eigen::Index nr = static_cast<Eigen::Index>(rel.size());
    std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + start);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::array<double, 10> x{};
    for (auto& v : x) v = u(rng);

    std::array<int, 20> slot{};
    slot.fill(-1);
    for (std::size_t m = 0; m < 10; ++m) slot[uz(sys.free[m])] = static_cast<int>(m);

    auto residuals = [&](const std::array<double, 10>& y, Eigen::VectorXd& r) {
        const GrassmannFloat g = sys.assemble(y);
        r.resize(nr);
        for (Eigen::Index n = 0; n < nr; ++n) r(n) = evaluate(rel[uz(static_cast<int>(n))], g);
    };
    auto jacobian = [&](const std::array<double, 10>& y, Eigen::MatrixXd& jac) {
        const GrassmannFloat g = sys.assemble(y);
        jac.setZero(nr, 10);
        for (Eigen::Index n = 0; n < nr; ++n)
            for (const auto& t : rel[uz(static_cast<int>(n))].terms) {
                if (slot[uz(t.s)] >= 0) jac(n, slot[uz(t.s)]) += t.coeff * g.values()[uz(t.t)];
                if (slot[uz(t.t)] >= 0) jac(n, slot[uz(t.t)]) += t.coeff * g.values()[uz(t.s)];
            }
    };

    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    residuals(x, r);
    double f = r.squaredNorm();
    double lambda = 1e-3;
    for (int it = 0; it < opt.max_iterations; ++it) {
        if (r.lpNorm<Eigen::Infinity>() < 1e-15) break;
        jacobian(x, jac);
        const Eigen::MatrixXd a = jac.transpose() * jac;
        const Eigen::VectorXd grad = jac.transpose() * r;
        bool stepped = false;
        while (lambda < 1e12) {
            Eigen::MatrixXd damped = a;
            for (int d = 0; d < 10; ++d) damped(d, d) += lambda * (a(d, d) + 1e-12);
            const Eigen::VectorXd step = damped.ldlt().solve(-grad);
            std::array<double, 10> y = x;
            for (std::size_t d = 0; d < 10; ++d) y[d] += step(static_cast<Eigen::Index>(d));
            Eigen::VectorXd ry;
            residuals(y, ry);
            const double fy = ry.squaredNorm();
            if (std::isfinite(fy) && fy < f) {
                x = y;
                r = std::move(ry);
                f = fy;
                lambda = std::max(lambda / 3.0, 1e-15);
                stepped = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!stepped) break;
    }
    kernels::StartResult res;
    res.x = x;
    res.max_residual = r.lpNorm<Eigen::Infinity>();
    res.converged = std::isfinite(res.max_residual) && res.max_residual < opt.residual_accept;
    return res;
}

std::optional<GoldenRational> nearest_golden(double v, double tol) {
    std::optional<GoldenRational> best;
    double best_err = tol;
    for (int b2 = -16; b2 <= 16; ++b2) {
        const double b = b2 / 2.0;
        const double a2 = std::round(2.0 * (v - b * kPhi));
        if (std::abs(a2) > 16) continue;
        const double err = std::abs(a2 / 2.0 + b * kPhi - v);
        if (err < best_err) {
            best_err = err;
            best = GoldenRational(mpq_class(static_cast<long>(a2), 2), mpq_class(b2, 2));
        }
    }
    return best;
}

}  // namespace

namespace kernels {

std::vector<StartResult> weak_multistart_serial(RhombType which, const WeakSolveOptions& opt) {
    const WeakSystem sys(which);
    (void)pluecker_relations();
    std::vector<StartResult> out(opt.starts);
    for (std::size_t s = 0; s < opt.starts; ++s) out[s] = run_start(sys, opt, s);
    return out;
}

std::vector<StartResult> weak_multistart_omp(RhombType which, const WeakSolveOptions& opt) {
    const WeakSystem sys(which);
    (void)pluecker_relations();  // build the static table before the parallel region
    std::vector<StartResult> out(opt.starts);
    const long n = static_cast<long>(opt.starts);
#pragma omp parallel for schedule(dynamic, 1)
    for (long s = 0; s < n; ++s) out[static_cast<std::size_t>(s)] = run_start(sys, opt, static_cast<std::size_t>(s));
    return out;
}

}  // namespace kernels

WeakSolveReport solve_weak_alternation(RhombType which, const WeakSolveOptions& opt, Exec exec) {
    if (opt.starts < 1) throw std::invalid_argument("weak solve needs at least one start");
    const WeakSystem sys(which);
    const auto results = exec == Exec::Parallel ? kernels::weak_multistart_omp(which, opt)
                                                : kernels::weak_multistart_serial(which, opt);
    WeakSolveReport rep;
    rep.fixed_type = which;
    rep.starts = opt.starts;
    rep.tol = opt.tol;

    struct Acc {
        std::array<double, 10> best;
        double best_res;
        std::size_t hits;
    };
    std::vector<Acc> acc;
    for (const auto& r : results) {
        if (!r.converged) {
            ++rep.non_convergent;
            continue;
        }
        ++rep.converged;
        bool placed = false;
        for (auto& c : acc) {
            double d = 0;
            for (std::size_t m = 0; m < 10; ++m) d = std::max(d, std::abs(c.best[m] - r.x[m]));
            if (d < opt.tol) {
                ++c.hits;
                if (r.max_residual < c.best_res) {
                    c.best = r.x;
                    c.best_res = r.max_residual;
                }
                placed = true;
                break;
            }
        }
        if (!placed) acc.push_back({r.x, r.max_residual, 1});
    }
    // the two full-alternation solutions, scaled so the fixed type has common value 1
    std::array<GrassmannFloat, 2> known;
    {
        const FullAlternationSolution full = solve_full_alternation();
        const SignTable table = alternation_sign_table();
        for (std::size_t r = 0; r < 2; ++r) {
            const GoldenRational& ratio = full.ratios[r];  // q / p
            known[r] = to_float(which == RhombType::Prolate ? pattern_vector(table, GoldenRational(1), ratio)
                                                            : pattern_vector(table, ratio.inverse(), GoldenRational(1)));
        }
    }
    for (const auto& c : acc) {
        WeakCluster wc;
        const GrassmannFloat g = sys.assemble(c.best);
        wc.center = g.values();
        wc.hits = c.hits;
        wc.max_residual = max_pluecker_residual(g);
        GrassmannExact ex;
        bool all = true;
        for (std::size_t n = 0; n < 20 && all; ++n) {
            const auto v = nearest_golden(g.values()[n], 1e-6);
            if (!v) all = false;
            else ex.values()[n] = *v;
        }
        if (all) {
            wc.exact = ex;
            wc.exact_validated = pluecker_violations(ex).empty();
            wc.decomposable = subspace_of(ex).has_value();
        }
        for (double v : wc.center)
            if (std::abs(v) < opt.tol) ++wc.zero_coordinates;
        auto near = [&](const GrassmannFloat& k) {
            double d = 0;
            for (std::size_t n = 0; n < 20; ++n) d = std::max(d, std::abs(k.values()[n] - wc.center[n]));
            return d <= opt.tol;
        };
        if (near(known[0])) wc.known = WeakCluster::Known::Icosahedral;
        else if (near(known[1])) wc.known = WeakCluster::Known::Conjugate;
        rep.clusters.push_back(std::move(wc));
    }
    std::sort(rep.clusters.begin(), rep.clusters.end(),
              [](const WeakCluster& a, const WeakCluster& b) { return a.center < b.center; });
    return rep;
}

std::size_t WeakSolveReport::nondegenerate_clusters() const {
    return static_cast<std::size_t>(std::count_if(clusters.begin(), clusters.end(),
                                                  [](const WeakCluster& c) { return c.zero_coordinates == 0; }));
}

// ---------------------------------------------------------------- subperiods

std::vector<std::array<int, 4>> find_integer_subperiods(const GrassmannExact& g, const Quad& q, int bound) {
    if (bound < 1) throw std::invalid_argument("subperiod search bound must be at least 1");
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> x{};
    const int side = 2 * bound + 1;
    const int total = side * side * side * side;
    for (int code = 0; code < total; ++code) {
        int c = code;
        for (auto& v : x) {
            v = c % side - bound;
            c /= side;
        }
        int first = 0;
        for (int v : x)
            if (v != 0) {
                first = v;
                break;
            }
        if (first <= 0) continue;  // zero vector, or the antipode is kept instead
        int gg = 0;
        for (int v : x) gg = std::gcd(gg, std::abs(v));
        if (gg != 1) continue;
        if (subperiod_form(g, q, x).is_zero()) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AuxiliaryVectors proof_auxiliary_vectors() {
    const auto& w = icosahedral_generators();
    const GoldenRational phi = GoldenRational::phi();
    const GoldenRational one(1), two(2), half(mpq_class(1, 2), mpq_class(0));
    auto combo = [](const GoldenRational& a, const GoldenVec6& x, const GoldenRational& b, const GoldenVec6& y,
                    const GoldenRational& c, const GoldenVec6& z) {
        GoldenVec6 out;
        for (std::size_t n = 0; n < 6; ++n) out[n] = a * x[n] + b * y[n] + c * z[n];
        return out;
    };
    AuxiliaryVectors aux;
    aux.w4 = combo(-half, w[0], half * phi, w[1], half * (one - phi), w[2]);
    aux.w5 = combo(half, w[0], half * (two - phi), w[1], half * (one - phi), w[2]);
    const Quad q1356{1, 3, 5, 6};
    aux.w4_1356 = project(aux.w4, q1356);
    aux.w5_1356 = project(aux.w5, q1356);

    aux.w1_identity = combo(two - phi, w[2], phi - two, aux.w4, phi, aux.w5) == w[0];
    aux.w2_identity = combo(phi - one, w[2], one, aux.w4, one, aux.w5) == w[1];
    auto cj = [](const GoldenRational& x) { return x.conjugate(); };
    aux.conjugate_identities =
        combo(cj(two - phi), conjugate(w[2]), cj(phi - two), conjugate(aux.w4), cj(phi), conjugate(aux.w5)) ==
            conjugate(w[0]) &&
        combo(cj(phi - one), conjugate(w[2]), one, conjugate(aux.w4), one, conjugate(aux.w5)) == conjugate(w[1]);
    const GrassmannExact g = icosahedral_slope().grassmann;
    aux.subperiods_1356 = subperiod_form(g, q1356, aux.w4_1356).is_zero() &&
                          subperiod_form(g, q1356, aux.w5_1356).is_zero();

    const std::array<GoldenRational, 4> e4{0L, 1L, -1L, 0L}, e5{1L, 0L, 0L, -1L};
    if (aux.w4_1356 != e4 || aux.w5_1356 != e5)
        throw std::runtime_error("1356-projections of w4, w5 are not (0,1,-1,0) and (1,0,0,-1)");
    if (!aux.w1_identity || !aux.w2_identity || !aux.conjugate_identities)
        throw std::runtime_error("inversion identities for w1, w2 do not hold exactly");
    if (!aux.subperiods_1356) throw std::runtime_error("w4, w5 are not 1356-subperiod directions");
    return aux;
}

std::string quad_str(const Quad& q) {
    std::string s;
    for (int v : q) s += std::to_string(v);
    return s;
}

Quad parse_quad(const std::string& s) {
    if (s.size() != 4) throw std::invalid_argument("shadow index set must be four digits, e.g. 1234");
    Quad q{};
    for (std::size_t n = 0; n < 4; ++n) {
        q[n] = s[n] - '0';
        if (q[n] < 1 || q[n] > 6 || (n > 0 && q[n] <= q[n - 1]))
            throw std::invalid_argument("shadow index set must be increasing digits from 1..6: '" + s + "'");
    }
    return q;
}

}  // namespace icotile
