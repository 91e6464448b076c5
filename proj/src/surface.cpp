#include "icotile/surface.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace icotile {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

constexpr double kMergeTol = 1e-7;
constexpr double kEdgeTol = 1e-6;
constexpr double kConflictTol = 1e-3;

double dist(const Vec3& a, const Vec3& b) {
    double s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return std::sqrt(s);
}

struct CellKey {
    long x, y, z;
    auto operator<=>(const CellKey&) const = default;
};

// Vertices bucketed on a grid of the conflict tolerance.
class VertexRegistry {
public:
    // Returns the vertex id, merging with an existing vertex within kMergeTol.
    std::size_t add(const Vec3& p) {
        const CellKey k = key(p);
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy)
                for (long dz = -1; dz <= 1; ++dz) {
                    auto it = grid_.find({k.x + dx, k.y + dy, k.z + dz});
                    if (it == grid_.end()) continue;
                    for (std::size_t id : it->second) {
                        const double d = dist(pos_[id], p);
                        if (d <= kMergeTol) return id;
                        if (d < kConflictTol)
                            throw LiftError(LiftError::Kind::Inconsistent,
                                            "two tile corners nearly coincide (distance " + std::to_string(d) + ")");
                    }
                }
        pos_.push_back(p);
        grid_[k].push_back(pos_.size() - 1);
        return pos_.size() - 1;
    }
    const Vec3& position(std::size_t id) const { return pos_[id]; }
    std::size_t size() const { return pos_.size(); }

private:
    static CellKey key(const Vec3& p) {
        return {static_cast<long>(std::floor(p[0] / kConflictTol)), static_cast<long>(std::floor(p[1] / kConflictTol)),
                static_cast<long>(std::floor(p[2] / kConflictTol))};
    }
    std::vector<Vec3> pos_;
    std::map<CellKey, std::vector<std::size_t>> grid_;
};

// Index a and sign s with displacement = s * v_a, or 0 when none matches.
std::pair<int, int> match_edge(const Vec3& d) {
    const auto v = icosahedron_vectors_f();
    for (int a = 1; a <= 6; ++a)
        for (int s : {1, -1}) {
            Vec3 w{s * v[uz(a - 1)][0], s * v[uz(a - 1)][1], s * v[uz(a - 1)][2]};
            if (dist(w, d) <= kEdgeTol) return {a, s};
        }
    return {0, 0};
}

}  // namespace

std::vector<ImportedTile> export_physical(const Patch& patch) {
    std::vector<ImportedTile> out;
    out.reserve(patch.tiles.size());
    for (const auto& t : patch.tiles) out.push_back({t.triple, physical_position(t.anchor)});
    return out;
}

Patch lift_imported(const std::vector<ImportedTile>& tiles, const SlopeDescriptor& slope) {
    if (tiles.empty()) throw std::invalid_argument("cannot lift an empty tile list");
    const auto v = icosahedron_vectors_f();
    VertexRegistry reg;
    // corner ids of each tile, bit b set meaning + v_{triple[b]}
    std::vector<std::array<std::size_t, 8>> corners(tiles.size());
    for (std::size_t n = 0; n < tiles.size(); ++n)
        for (int s = 0; s < 8; ++s) {
            Vec3 p = tiles[n].position;
            for (int b = 0; b < 3; ++b)
                if (s & (1 << b))
                    for (std::size_t c = 0; c < 3; ++c) p[c] += v[uz(tiles[n].triple[b] - 1)][c];
            corners[n][uz(s)] = reg.add(p);
        }

    struct Edge {
        std::size_t to;
        int axis, sign;
    };
    std::vector<std::vector<Edge>> adj(reg.size());
    for (std::size_t n = 0; n < tiles.size(); ++n)
        for (int s = 0; s < 8; ++s)
            for (int b = 0; b < 3; ++b) {
                if (s & (1 << b)) continue;
                const std::size_t lo = corners[n][uz(s)], hi = corners[n][uz(s | (1 << b))];
                const Vec3& pl = reg.position(lo);
                const Vec3& ph = reg.position(hi);
                const auto [axis, sign] = match_edge({ph[0] - pl[0], ph[1] - pl[1], ph[2] - pl[2]});
                if (axis == 0)
                    throw LiftError(LiftError::Kind::Ambiguous,
                                    "an edge of tile " + tiles[n].triple.str() + " matches no icosahedron vector");
                adj[lo].push_back({hi, axis, sign});
                adj[hi].push_back({lo, axis, -sign});
            }

    std::vector<std::optional<Lattice6>> lift(reg.size());
    lift[corners[0][0]] = Lattice6{};
    std::queue<std::size_t> q;
    q.push(corners[0][0]);
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (const Edge& e : adj[u]) {
            Lattice6 y = *lift[u];
            y[uz(e.axis - 1)] += e.sign;
            if (!lift[e.to]) {
                lift[e.to] = y;
                q.push(e.to);
            } else if (*lift[e.to] != y) {
                throw LiftError(LiftError::Kind::Inconsistent, "edge labels around a cycle do not close up");
            }
        }
    }

    Patch out;
    out.slope = slope;
    for (std::size_t n = 0; n < tiles.size(); ++n) {
        const auto& a = lift[corners[n][0]];
        if (!a)
            throw LiftError(LiftError::Kind::Disconnected,
                            "tile " + std::to_string(n) + " is not connected to the first tile");
        out.tiles.push_back({*a, tiles[n].triple});
    }
    out.canonicalize();
    if (out.tiles.size() != tiles.size())
        throw LiftError(LiftError::Kind::Inconsistent, "two imported tiles lift to the same face");
    return out;
}

// ------------------------------------------------------------ decomposition

GoldenVec6 ZDecomposition::reconstruct() const {
    const auto& w = icosahedral_generators();
    GoldenVec6 out;
    for (std::size_t a = 0; a < 6; ++a) out[a] = GoldenRational(0);
    for (std::size_t i = 0; i < 3; ++i) {
        const GoldenVec6 r = conjugate(w[i]);
        for (std::size_t a = 0; a < 6; ++a) out[a] += base[i] * w[i][a] + z[i] * r[a];
    }
    return out;
}

ZDecomposition z_decompose(const Lattice6& x) {
    const auto& w = icosahedral_generators();
    GoldenVec6 xg;
    for (std::size_t a = 0; a < 6; ++a) xg[a] = GoldenRational(x[a]);
    const GoldenRational wn = dot(w[0], w[0]).inverse();
    const GoldenRational rn = dot(conjugate(w[0]), conjugate(w[0])).inverse();
    ZDecomposition d;
    for (std::size_t i = 0; i < 3; ++i) {
        d.base[i] = dot(w[i], xg) * wn;
        d.z[i] = dot(conjugate(w[i]), xg) * rn;
    }
    return d;
}

ZDecompositionF z_decompose_f(const Lattice6& x) {
    const auto w = icosahedral_generators_f();
    const auto& wg = icosahedral_generators();
    const double wn = dot(wg[0], wg[0]).to_double();
    const double rn = dot(conjugate(wg[0]), conjugate(wg[0])).to_double();
    ZDecompositionF d;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec6 r = to_double(conjugate(wg[i]));
        double sb = 0, sz = 0;
        for (std::size_t a = 0; a < 6; ++a) {
            sb += w[i][a] * x[a];
            sz += r[a] * x[a];
        }
        d.base[i] = sb / wn;
        d.z[i] = sz / rn;
    }
    return d;
}

// ---------------------------------------------------------------- thickness

std::array<Vec3, 6> internal_generators(const SlopeDescriptor& slope) {
    if (slope.kind == SlopeDescriptor::Kind::Icosahedral) return internal_vectors_f();
    Eigen::Matrix<double, 6, 3> gm;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 6; ++r) gm(r, c) = slope.generators[uz(c)][uz(r)];
    Eigen::HouseholderQR<Eigen::Matrix<double, 6, 3>> qr(gm);
    const Eigen::Matrix<double, 6, 3> rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 3; ++k)
        if (!(std::abs(rmat(k, k)) > 1e-9 * std::max(gm.norm(), 1.0)))
            throw DegenerateSlopeError("slope generators are linearly dependent");
    const Eigen::Matrix<double, 6, 6> q = qr.householderQ();
    std::array<Vec3, 6> out{};
    for (int a = 0; a < 6; ++a)
        for (int k = 0; k < 3; ++k) out[uz(a)][uz(k)] = q(a, 3 + k);
    return out;
}

namespace kernels {

std::vector<FacetSpread> window_facets(const std::array<Vec3, 6>& g) {
    double scale = 0;
    for (const auto& v : g) scale = std::max(scale, std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
    std::vector<FacetSpread> out;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) {
            Vec3 n{g[a][1] * g[b][2] - g[a][2] * g[b][1], g[a][2] * g[b][0] - g[a][0] * g[b][2],
                   g[a][0] * g[b][1] - g[a][1] * g[b][0]};
            const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
            if (len <= 1e-9 * scale * scale) continue;
            for (auto& c : n) c /= len;
            double width = 0;
            for (const auto& v : g) width += std::abs(n[0] * v[0] + n[1] * v[1] + n[2] * v[2]);
            if (width <= 1e-12) continue;
            out.push_back({n, width});
        }
    return out;
}

namespace {
double ratio(const std::vector<Vec3>& y, const FacetSpread& f, std::size_t begin, std::size_t end, double& lo,
             double& hi) {
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (std::size_t n = begin; n < end; ++n) {
        const double s = f.normal[0] * y[n][0] + f.normal[1] * y[n][1] + f.normal[2] * y[n][2];
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return (hi - lo) / f.width;
}
}  // namespace

double thickness_serial(const std::vector<Vec3>& internal, const std::vector<FacetSpread>& facets) {
    double best = 0;
    for (const auto& f : facets) {
        double lo, hi;
        best = std::max(best, ratio(internal, f, 0, internal.size(), lo, hi));
    }
    return best;
}

double thickness_omp(const std::vector<Vec3>& internal, const std::vector<FacetSpread>& facets) {
    const std::size_t nf = facets.size();
    std::vector<double> lo(nf, std::numeric_limits<double>::infinity()), hi(nf, -std::numeric_limits<double>::infinity());
#pragma omp parallel
    {
        std::vector<double> llo(lo), lhi(hi);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(internal.size()); ++n) {
            const Vec3& y = internal[static_cast<std::size_t>(n)];
            for (std::size_t k = 0; k < nf; ++k) {
                const auto& nn = facets[k].normal;
                const double s = nn[0] * y[0] + nn[1] * y[1] + nn[2] * y[2];
                llo[k] = std::min(llo[k], s);
                lhi[k] = std::max(lhi[k], s);
            }
        }
#pragma omp critical
        for (std::size_t k = 0; k < nf; ++k) {
            lo[k] = std::min(lo[k], llo[k]);
            hi[k] = std::max(hi[k], lhi[k]);
        }
    }
    double best = 0;
    for (std::size_t k = 0; k < nf; ++k)
        if (!internal.empty()) best = std::max(best, (hi[k] - lo[k]) / facets[k].width);
    return best;
}

}  // namespace kernels

PlanarityReport thickness(const Patch& patch, Exec exec) {
    if (patch.tiles.empty()) throw std::invalid_argument("thickness of an empty patch");
    const auto g = internal_generators(patch.slope);
    const auto verts = patch.vertices();
    std::vector<Vec3> y(verts.size());
    for (std::size_t n = 0; n < verts.size(); ++n)
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t k = 0; k < 3; ++k) y[n][k] += verts[n][a] * g[a][k];

    PlanarityReport rep;
    rep.vertices = verts.size();
    const auto facets = kernels::window_facets(g);
    rep.thickness = exec == Exec::Parallel ? kernels::thickness_omp(y, facets) : kernels::thickness_serial(y, facets);

    // coefficients along the internal basis: for the icosahedral slope the
    // internal coordinate k is <r_k, x> and the coefficient divides by |r|^2
    double basis_norm2 = 1.0;
    if (patch.slope.kind == SlopeDescriptor::Kind::Icosahedral) {
        const auto& w = icosahedral_generators();
        basis_norm2 = dot(conjugate(w[0]), conjugate(w[0])).to_double();
    }
    for (std::size_t k = 0; k < 3; ++k) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& p : y) {
            lo = std::min(lo, p[k]);
            hi = std::max(hi, p[k]);
        }
        rep.axis_extents[k] = hi - lo;
        rep.z_ranges[k] = {lo / basis_norm2, hi / basis_norm2};
    }
    return rep;
}

// -------------------------------------------------------------------- flips

namespace {

// Dependency coefficients c with sum c_m v_{quad[m]} = 0, normalized so c_0 > 0.
std::array<int, 4> dependency_signs(const Quad& q) {
    const auto& v = icosahedron_vectors();
    auto vec = [&](int m) { return v[uz(q[uz(m)] - 1)]; };
    std::array<GoldenRational, 4> c{det3(vec(1), vec(2), vec(3)), -det3(vec(0), vec(2), vec(3)),
                                    det3(vec(0), vec(1), vec(3)), -det3(vec(0), vec(1), vec(2))};
    std::array<int, 4> s{};
    const int flip = c[0].sign();
    for (std::size_t m = 0; m < 4; ++m) s[m] = c[m].sign() * flip;
    return s;
}

const std::array<int, 4>& cached_signs(const Quad& q) {
    static const std::map<Quad, std::array<int, 4>> table = [] {
        std::map<Quad, std::array<int, 4>> t;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k)
                    for (int l = k + 1; l <= 6; ++l) t[{i, j, k, l}] = dependency_signs({i, j, k, l});
        return t;
    }();
    return table.at(q);
}

IndexTriple without(const Quad& q, std::size_t m) {
    std::array<int, 3> r{};
    std::size_t n = 0;
    for (std::size_t k = 0; k < 4; ++k)
        if (k != m) r[n++] = q[k];
    return IndexTriple(r[0], r[1], r[2]);
}

}  // namespace

std::array<Tile, 4> flip_tiles(const Lattice6& corner, const Quad& quad, FlipSite::Parity parity) {
    const auto& s = cached_signs(quad);
    std::array<Tile, 4> out;
    for (std::size_t m = 0; m < 4; ++m) {
        bool at_corner = s[m] > 0;
        if (parity == FlipSite::Parity::Upper) at_corner = !at_corner;
        out[m] = {at_corner ? corner : corner + unit(quad[m]), without(quad, m)};
    }
    return out;
}

std::vector<FlipSite> find_flips(const Patch& patch) {
    std::set<FlipSite> sites;
    for (const auto& t : patch.tiles) {
        for (int m = 1; m <= 6; ++m) {
            if (t.triple.contains(m)) continue;
            std::array<int, 4> qa{t.triple[0], t.triple[1], t.triple[2], m};
            std::sort(qa.begin(), qa.end());
            const Quad quad = qa;
            // t is the facet missing m, either at the corner or one step up along m
            for (const Lattice6& corner : {t.anchor, t.anchor - unit(m)})
                for (auto parity : {FlipSite::Parity::Lower, FlipSite::Parity::Upper}) {
                    FlipSite site{corner, quad, parity};
                    if (sites.count(site)) continue;
                    const auto tiles = flip_tiles(corner, quad, parity);
                    if (std::find(tiles.begin(), tiles.end(), t) == tiles.end()) continue;
                    if (std::all_of(tiles.begin(), tiles.end(), [&](const Tile& u) { return patch.contains(u); }))
                        sites.insert(site);
                }
        }
    }
    return {sites.begin(), sites.end()};
}

FlipSite reversed(const FlipSite& site) {
    FlipSite r = site;
    r.parity = site.parity == FlipSite::Parity::Lower ? FlipSite::Parity::Upper : FlipSite::Parity::Lower;
    return r;
}

Patch apply_flip(const Patch& patch, const FlipSite& site) {
    const auto old_tiles = flip_tiles(site.corner, site.quad, site.parity);
    for (const auto& t : old_tiles)
        if (!patch.contains(t)) throw SiteNotPresentError("flip site is not present in the patch: missing " + t.triple.str());
    const auto new_tiles = flip_tiles(site.corner, site.quad, reversed(site).parity);
    Patch out = patch;
    out.tiles.clear();
    out.tiles.reserve(patch.tiles.size());
    for (const auto& t : patch.tiles)
        if (std::find(old_tiles.begin(), old_tiles.end(), t) == old_tiles.end()) out.tiles.push_back(t);
    for (const auto& t : new_tiles) out.tiles.push_back(t);
    out.canonicalize();
    // a flipped patch is no longer a cut-and-project patch
    out.gamma_exact.reset();
    out.gamma_lift.reset();
    return out;
}

}  // namespace icotile
