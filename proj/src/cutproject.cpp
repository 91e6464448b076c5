#include "icotile/cutproject.hpp"

#include <Eigen/Dense>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace icotile {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

double norm3(const Vec3& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

// sign of det(v_p, v_q, v_r) for the ordered triple (p, q, r)
int orientation(int p, int q, int r) {
    const auto& v = icosahedron_vectors();
    return det3(v[uz(p - 1)], v[uz(q - 1)], v[uz(r - 1)]).sign();
}

struct Face {
    Lattice6 anchor;
    int a, b;
    bool operator==(const Face&) const = default;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept {
        return Lattice6Hash{}(f.anchor) * 131u + static_cast<std::size_t>(f.a * 7 + f.b);
    }
};

std::array<std::array<double, 3>, 3> invert3(const std::array<Vec3, 3>& cols, double& det) {
    Eigen::Matrix3d m;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) m(r, c) = cols[uz(c)][uz(r)];
    det = m.determinant();
    std::array<std::array<double, 3>, 3> out{};
    if (std::abs(det) < 1e-12) return out;
    Eigen::Matrix3d inv = m.inverse();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[uz(r)][uz(c)] = inv(r, c);
    return out;
}

}  // namespace

std::array<Lattice6, 8> tile_vertices(const Tile& t) {
    std::array<Lattice6, 8> out;
    for (int s = 0; s < 8; ++s) {
        Lattice6 x = t.anchor;
        for (int b = 0; b < 3; ++b)
            if (s & (1 << b)) x[uz(t.triple[b] - 1)] += 1;
        out[uz(s)] = x;
    }
    return out;
}

SlopeDescriptor SlopeDescriptor::icosahedral() {
    SlopeDescriptor s;
    s.kind = Kind::Icosahedral;
    s.generators = icosahedral_generators_f();
    return s;
}

SlopeDescriptor SlopeDescriptor::custom(const std::array<Vec6, 3>& gens) {
    SlopeDescriptor s;
    s.kind = Kind::Custom;
    s.generators = gens;
    return s;
}

bool Patch::contains(const Tile& t) const { return std::binary_search(tiles.begin(), tiles.end(), t); }

void Patch::canonicalize() {
    std::sort(tiles.begin(), tiles.end());
    tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
}

std::size_t Patch::count(RhombType type) const {
    return static_cast<std::size_t>(
        std::count_if(tiles.begin(), tiles.end(), [&](const Tile& t) { return classify(t.triple) == type; }));
}

std::vector<Lattice6> Patch::vertices() const {
    std::vector<Lattice6> out;
    out.reserve(tiles.size() * 8);
    for (const auto& t : tiles)
        for (const auto& x : tile_vertices(t)) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------- window

Window::Window() : gens_(internal_vectors()) {
    for (const auto& g : gens_)
        for (std::size_t k = 0; k < 3; ++k) center_[k] += g[k];
    for (auto& c : center_) c *= GoldenRational(mpq_class(1, 2), 0);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) {
            Facet f;
            f.normal = cross(gens_[a], gens_[b]);
            for (const auto& g : gens_) {
                GoldenRational d = dot(f.normal, g);
                if (d.sign() > 0)
                    f.hi += d;
                else
                    f.lo += d;
            }
            facets_.push_back(std::move(f));
        }
}

bool Window::contains(const GoldenVec3& y) const {
    for (const auto& f : facets_) {
        GoldenRational d = dot(f.normal, y);
        if (d < f.lo || d > f.hi) return false;
    }
    return true;
}

// ------------------------------------------------------- exact selection

CanonicalSelector::CanonicalSelector(GoldenVec3 gamma, SelectionConvention convention)
    : gamma_(std::move(gamma)), convention_(convention) {
    const auto& g = internal_vectors();
    for (const auto& t : all_triples()) {
        const IndexTriple c = t.complement();
        const auto& gl = g[uz(c[0] - 1)];
        const auto& gm = g[uz(c[1] - 1)];
        const auto& gn = g[uz(c[2] - 1)];
        const std::array<GoldenVec3, 3> normals{cross(gm, gn), cross(gn, gl), cross(gl, gm)};
        Form& f = forms_[uz(t.ordinal())];
        f.det = dot(gl, normals[0]);
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t a = 0; a < 6; ++a) {
                const GoldenRational c = dot(normals[k], g[a]);
                if (c.rational_part().get_den() != 1 || c.phi_part().get_den() != 1)
                    throw std::logic_error("selection coefficient outside Z[phi]");
                f.coeff[k][a] = {c.rational_part().get_num().get_si(), c.phi_part().get_num().get_si()};
            }
            f.offset[k] = dot(normals[k], gamma_);
        }
    }
}

bool CanonicalSelector::select_face(const Lattice6& x, IndexTriple t) const {
    const Form& f = forms_[uz(t.ordinal())];
    const int sd = f.det.sign();
    bool inside = true;
    bool on_boundary = false;
    for (std::size_t k = 0; k < 3; ++k) {
        // numerator of the k-th parallelepiped coordinate
        std::int64_t ia = 0, ib = 0;
        for (std::size_t a = 0; a < 6; ++a) {
            ia += static_cast<std::int64_t>(x[a]) * f.coeff[k][a][0];
            ib += static_cast<std::int64_t>(x[a]) * f.coeff[k][a][1];
        }
        GoldenRational num(mpq_class(static_cast<long>(ia)), mpq_class(static_cast<long>(ib)));
        num -= f.offset[k];
        if (convention_ == SelectionConvention::OffsetMinusProjection) num = -num;
        const int lo = num.sign() * sd;           // sign of alpha
        const int hi = (num - f.det).sign() * sd;  // sign of alpha - 1
        if (lo < 0 || hi > 0) return false;
        if (lo == 0 || hi == 0) on_boundary = true;
        if (hi == 0) inside = false;
    }
    if (on_boundary)
        throw GenericityError("offset is not generic: face " + t.str() + " hits the parallelepiped boundary");
    return inside;
}

bool CanonicalSelector::is_vertex(const Lattice6& x) const {
    GoldenVec3 y = internal_position(x);
    for (std::size_t k = 0; k < 3; ++k) {
        y[k] -= gamma_[k];
        if (convention_ == SelectionConvention::OffsetMinusProjection) y[k] = -y[k];
    }
    return window_.contains(y);
}

// ------------------------------------------------------- float selection

FloatSelector::FloatSelector(const std::array<Vec6, 3>& generators, const Vec6& gamma_lift, double eps,
                             SelectionConvention convention)
    : eps_(eps), convention_(convention) {
    Eigen::Matrix<double, 6, 3> gm;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 6; ++r) gm(r, c) = generators[uz(c)][uz(r)];
    Eigen::HouseholderQR<Eigen::Matrix<double, 6, 3>> qr(gm);
    const Eigen::Matrix<double, 6, 3> rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    const double scale = gm.norm();
    for (int k = 0; k < 3; ++k)
        if (!(std::abs(rmat(k, k)) > 1e-9 * std::max(scale, 1.0)))
            throw DegenerateSlopeError("slope generators are linearly dependent");
    const Eigen::Matrix<double, 6, 6> q = qr.householderQ();
    for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 6; ++a) {
            basis_[uz(k)][uz(a)] = q(a, 3 + k);
            gens_[uz(a)][uz(k)] = q(a, 3 + k);
        }
    for (int k = 0; k < 3; ++k) {
        double s = 0;
        for (int a = 0; a < 6; ++a) s += q(a, 3 + k) * gamma_lift[uz(a)];
        gamma_int_[uz(k)] = s;
    }
    for (const auto& t : all_triples()) {
        const IndexTriple c = t.complement();
        double det = 0;
        inverse_[uz(t.ordinal())] = invert3({gens_[uz(c[0] - 1)], gens_[uz(c[1] - 1)], gens_[uz(c[2] - 1)]}, det);
    }
}

bool FloatSelector::select_face(const Lattice6& x, IndexTriple t) const {
    Vec3 y{};
    for (std::size_t k = 0; k < 3; ++k) {
        double s = 0;
        for (std::size_t a = 0; a < 6; ++a) s += basis_[k][a] * x[a];
        y[k] = s - gamma_int_[k];
        if (convention_ == SelectionConvention::OffsetMinusProjection) y[k] = -y[k];
    }
    const auto& inv = inverse_[uz(t.ordinal())];
    bool inside = true;
    bool near = false;
    for (std::size_t k = 0; k < 3; ++k) {
        const double alpha = inv[k][0] * y[0] + inv[k][1] * y[1] + inv[k][2] * y[2];
        if (alpha < -eps_ || alpha > 1 + eps_) return false;
        if (std::abs(alpha) <= eps_ || std::abs(alpha - 1) <= eps_) near = true;
        if (alpha < 0 || alpha >= 1) inside = false;
    }
    if (near) throw BoundaryAmbiguityError("face " + t.str() + " decision is within eps of a boundary");
    return inside;
}

// -------------------------------------------------------------- kernels

namespace kernels {

template <class Selector>
void select_batch_serial(const Selector& sel, const std::vector<Tile>& candidates, std::vector<char>& hits) {
    hits.assign(candidates.size(), 0);
    for (std::size_t n = 0; n < candidates.size(); ++n)
        hits[n] = sel.select_face(candidates[n].anchor, candidates[n].triple) ? 1 : 0;
}

template <class Selector>
void select_batch_omp(const Selector& sel, const std::vector<Tile>& candidates, std::vector<char>& hits) {
    hits.assign(candidates.size(), 0);
    std::exception_ptr err;
    const long n_cand = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long n = 0; n < n_cand; ++n) {
        try {
            const Tile& c = candidates[static_cast<std::size_t>(n)];
            hits[static_cast<std::size_t>(n)] = sel.select_face(c.anchor, c.triple) ? 1 : 0;
        } catch (...) {
#pragma omp critical(icotile_select_err)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

template void select_batch_serial<CanonicalSelector>(const CanonicalSelector&, const std::vector<Tile>&,
                                                     std::vector<char>&);
template void select_batch_omp<CanonicalSelector>(const CanonicalSelector&, const std::vector<Tile>&,
                                                  std::vector<char>&);
template void select_batch_serial<FloatSelector>(const FloatSelector&, const std::vector<Tile>&,
                                                 std::vector<char>&);
template void select_batch_omp<FloatSelector>(const FloatSelector&, const std::vector<Tile>&, std::vector<char>&);

namespace {

struct TileFrame {
    Vec3 anchor;
    Vec3 center;
    const std::array<std::array<double, 3>, 3>* inverse;
};

const std::array<std::array<std::array<double, 3>, 3>, 20>& tile_inverses() {
    static const auto table = [] {
        std::array<std::array<std::array<double, 3>, 3>, 20> out{};
        const auto v = icosahedron_vectors_f();
        for (const auto& t : all_triples()) {
            double det = 0;
            out[uz(t.ordinal())] = invert3({v[uz(t[0] - 1)], v[uz(t[1] - 1)], v[uz(t[2] - 1)]}, det);
        }
        return out;
    }();
    return table;
}

std::vector<TileFrame> frames(const Patch& patch) {
    const auto v = icosahedron_vectors_f();
    std::vector<TileFrame> out;
    out.reserve(patch.tiles.size());
    for (const auto& t : patch.tiles) {
        TileFrame f{};
        f.anchor = physical_position(t.anchor);
        f.center = f.anchor;
        for (int b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) f.center[c] += 0.5 * v[uz(t.triple[b] - 1)][c];
        f.inverse = &tile_inverses()[uz(t.triple.ordinal())];
        out.push_back(f);
    }
    return out;
}

int count_one(const std::vector<TileFrame>& fr, const Vec3& p, double tol, double reach) {
    int count = 0;
    for (const auto& f : fr) {
        const Vec3 d{p[0] - f.center[0], p[1] - f.center[1], p[2] - f.center[2]};
        if (d[0] * d[0] + d[1] * d[1] + d[2] * d[2] > reach * reach) continue;
        const Vec3 q{p[0] - f.anchor[0], p[1] - f.anchor[1], p[2] - f.anchor[2]};
        bool in = true, edge = false;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& row = (*f.inverse)[k];
            const double l = row[0] * q[0] + row[1] * q[1] + row[2] * q[2];
            if (l < -tol || l > 1 + tol) {
                in = false;
                edge = false;
                break;
            }
            if (l <= tol || l >= 1 - tol) edge = true;
        }
        if (edge) return -1;
        if (in) ++count;
    }
    return count;
}

}  // namespace

std::vector<int> cover_counts_serial(const Patch& patch, const std::vector<Vec3>& points, double tol) {
    const auto fr = frames(patch);
    const double reach = 0.5 * max_tile_diameter() + 1e-6;
    std::vector<int> out(points.size());
    for (std::size_t n = 0; n < points.size(); ++n) out[n] = count_one(fr, points[n], tol, reach);
    return out;
}

std::vector<int> cover_counts_omp(const Patch& patch, const std::vector<Vec3>& points, double tol) {
    const auto fr = frames(patch);
    const double reach = 0.5 * max_tile_diameter() + 1e-6;
    std::vector<int> out(points.size());
    const long n_pts = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
    for (long n = 0; n < n_pts; ++n)
        out[static_cast<std::size_t>(n)] = count_one(fr, points[static_cast<std::size_t>(n)], tol, reach);
    return out;
}

}  // namespace kernels

// ----------------------------------------------------------- generation

namespace {

template <class Selector>
std::vector<Tile> grow(const Selector& sel, double R, Exec exec) {
    const double reach = R + max_tile_diameter();
    std::unordered_set<Lattice6, Lattice6Hash> seen{Lattice6{}};
    std::unordered_set<Tile, TileHash> tested;
    std::vector<Lattice6> frontier{Lattice6{}};
    std::vector<Tile> selected;
    std::vector<char> hits;

    while (!frontier.empty()) {
        std::vector<Tile> cand;
        for (const auto& x : frontier)
            for (const auto& t : all_triples())
                for (int s = 0; s < 8; ++s) {
                    Tile c{x, t};
                    for (int b = 0; b < 3; ++b)
                        if (s & (1 << b)) c.anchor[uz(t[b] - 1)] -= 1;
                    if (tested.insert(c).second) cand.push_back(c);
                }
        if (exec == Exec::Parallel)
            kernels::select_batch_omp(sel, cand, hits);
        else
            kernels::select_batch_serial(sel, cand, hits);

        std::vector<Lattice6> next;
        for (std::size_t n = 0; n < cand.size(); ++n) {
            if (!hits[n]) continue;
            selected.push_back(cand[n]);
            for (const auto& y : tile_vertices(cand[n]))
                if (norm3(physical_position(y)) <= reach && seen.insert(y).second) next.push_back(y);
        }
        frontier = std::move(next);
    }

    std::vector<Tile> kept;
    for (const auto& t : selected)
        if (norm3(physical_position(t.anchor)) <= R) kept.push_back(t);
    return kept;
}

}  // namespace

Patch generate_patch(double R, const GoldenVec3& gamma, Exec exec) {
    if (!(R > 0)) throw std::invalid_argument("patch radius must be positive");
    CanonicalSelector sel(gamma);
    Patch p;
    p.tiles = grow(sel, R, exec);
    if (p.tiles.empty()) throw std::runtime_error("the origin is not a vertex of the tiling at this offset");
    p.canonicalize();
    p.slope = SlopeDescriptor::icosahedral();
    p.gamma_exact = gamma;
    p.radius = R;
    return p;
}

Patch generate_patch_float(const std::array<Vec6, 3>& generators, double R, const Vec6& gamma_lift, double eps,
                           Exec exec) {
    if (!(R > 0)) throw std::invalid_argument("patch radius must be positive");
    if (!(eps > 0)) throw std::invalid_argument("boundary margin eps must be positive");
    FloatSelector sel(generators, gamma_lift, eps);
    Patch p;
    p.tiles = grow(sel, R, exec);
    if (p.tiles.empty()) throw std::runtime_error("the origin is not a vertex of the tiling at this offset");
    p.canonicalize();
    p.slope = SlopeDescriptor::custom(generators);
    p.gamma_lift = gamma_lift;
    p.radius = R;
    return p;
}

GoldenVec3 random_generic_gamma(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-100000, 100000);
    const long den = 1000003;
    Window w;
    GoldenVec3 g;
    for (std::size_t k = 0; k < 3; ++k) {
        GoldenRational delta(mpq_class(d(rng), den), mpq_class(d(rng), den));
        g[k] = kSelectionConvention == SelectionConvention::ProjectionMinusOffset ? -w.center()[k] + delta
                                                                                  : w.center()[k] + delta;
    }
    return g;
}

Vec6 random_generic_gamma_lift(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-0.05, 0.05);
    Vec6 g{};
    for (auto& c : g)
        c = (kSelectionConvention == SelectionConvention::ProjectionMinusOffset ? -0.5 : 0.5) + d(rng);
    return g;
}

Patch generate_canonical(double R, std::uint64_t seed, Exec exec) {
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        try {
            return generate_patch(R, random_generic_gamma(seed + attempt * 0x9e3779b97f4a7c15ULL), exec);
        } catch (const GenericityError&) {
        }
    }
    throw GenericityError("no generic offset found after 16 attempts");
}

Vec6 lift_of_gamma(const GoldenVec3& gamma) {
    const auto& w = icosahedral_generators();
    const double norm2 = dot(conjugate(w[0]), conjugate(w[0])).to_double();
    Vec6 out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto r = to_double(conjugate(w[i]));
        const double gi = gamma[i].to_double();
        for (std::size_t a = 0; a < 6; ++a) out[a] += gi * r[a] / norm2;
    }
    return out;
}

std::array<Vec6, 3> icosahedral_generators_f() {
    std::array<Vec6, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = to_double(icosahedral_generators()[i]);
    return out;
}

double max_tile_diameter() {
    static const double d = [] {
        const auto v = icosahedron_vectors_f();
        double best = 0;
        for (const auto& t : all_triples())
            for (int s = 0; s < 8; ++s) {
                Vec3 p{};
                for (int b = 0; b < 3; ++b) {
                    const double sg = (s & (1 << b)) ? 1.0 : -1.0;
                    for (std::size_t c = 0; c < 3; ++c) p[c] += sg * v[uz(t[b] - 1)][c];
                }
                best = std::max(best, norm3(p));
            }
        return best;
    }();
    return d;
}

// ----------------------------------------------------------- validation

ValidationReport validate_patch(const Patch& patch, double interior_radius) {
    ValidationReport rep;
    auto note = [&](const std::string& s) {
        if (rep.first_problem.empty()) rep.first_problem = s;
    };
    for (std::size_t n = 1; n < patch.tiles.size(); ++n)
        if (patch.tiles[n] == patch.tiles[n - 1]) {
            ++rep.duplicate_tiles;
            note("duplicate tile " + patch.tiles[n].triple.str());
        }

    std::unordered_map<Face, std::vector<int>, FaceHash> faces;
    for (const auto& t : patch.tiles) {
        const int i = t.triple[0], j = t.triple[1], k = t.triple[2];
        const std::array<std::array<int, 3>, 3> pairs{{{i, j, k}, {i, k, j}, {j, k, i}}};
        for (const auto& pr : pairs) {
            const int s = orientation(pr[0], pr[1], pr[2]);
            faces[Face{t.anchor, pr[0], pr[1]}].push_back(s);
            faces[Face{t.anchor + unit(pr[2]), pr[0], pr[1]}].push_back(-s);
        }
    }
    const auto v = icosahedron_vectors_f();
    for (const auto& [face, sides] : faces) {
        if (sides.size() > 2) {
            ++rep.overfull_faces;
            note("face shared by " + std::to_string(sides.size()) + " tiles");
        } else if (sides.size() == 2 && sides[0] == sides[1]) {
            ++rep.same_side_faces;
            note("two tiles on the same side of a shared face");
        } else if (sides.size() == 1 && interior_radius >= 0) {
            Vec3 c = physical_position(face.anchor);
            for (std::size_t d = 0; d < 3; ++d) c[d] += 0.5 * (v[uz(face.a - 1)][d] + v[uz(face.b - 1)][d]);
            if (norm3(c) <= interior_radius) {
                ++rep.open_interior_faces;
                note("interior face with a single tile");
            }
        }
    }
    return rep;
}

CoverReport check_exact_cover(const Patch& patch, double radius, std::size_t samples, std::uint64_t seed,
                              Exec exec, Vec3 center) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto draw = [&]() {
        for (;;) {
            Vec3 p{u(rng), u(rng), u(rng)};
            if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] <= 1.0)
                return Vec3{center[0] + radius * p[0], center[1] + radius * p[1], center[2] + radius * p[2]};
        }
    };
    CoverReport rep;
    std::vector<Vec3> pts(samples);
    for (auto& p : pts) p = draw();
    constexpr double tol = 1e-9;
    for (int round = 0; round < 8 && !pts.empty(); ++round) {
        const auto counts = exec == Exec::Parallel ? kernels::cover_counts_omp(patch, pts, tol)
                                                   : kernels::cover_counts_serial(patch, pts, tol);
        std::vector<Vec3> again;
        for (std::size_t n = 0; n < pts.size(); ++n) {
            if (counts[n] < 0) {
                ++rep.resampled;
                again.push_back(draw());
                continue;
            }
            ++rep.samples;
            if (counts[n] == 0) ++rep.uncovered;
            if (counts[n] > 1) ++rep.multiply_covered;
        }
        pts = std::move(again);
    }
    return rep;
}

}  // namespace icotile
