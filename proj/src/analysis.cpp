#include "icotile/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace icotile {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

double norm3(const Vec3& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

Vec3 pair_normal(int i, int j) {
    const auto v = icosahedron_vectors_f();
    const auto& a = v[uz(i - 1)];
    const auto& b = v[uz(j - 1)];
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double along(const Vec3& n, const Lattice6& x) {
    const Vec3 p = physical_position(x);
    return n[0] * p[0] + n[1] * p[1] + n[2] * p[2];
}

double effective_interior(const AnalysisOptions& opt) { return opt.interior_radius; }

}  // namespace

// -------------------------------------------------------------------- worms

std::vector<Worm> extract_worms(const Patch& patch, int i, int j) {
    (void)worm_complement_split(i, j);  // validates the pair
    if (i > j) std::swap(i, j);

    struct Node {
        Tile tile;
        int third;
        long below = -1, above = -1;  // neighbor across the face at the anchor / at anchor + e_third
    };
    std::vector<Node> nodes;
    for (const auto& t : patch.tiles) {
        if (!t.triple.contains(i) || !t.triple.contains(j)) continue;
        int k = 0;
        for (int b = 0; b < 3; ++b)
            if (t.triple[b] != i && t.triple[b] != j) k = t.triple[b];
        nodes.push_back({t, k});
    }

    // the {i,j}-face at a lattice point: tiles below it (top face) and above it (bottom face)
    std::unordered_map<Lattice6, std::array<long, 2>, Lattice6Hash> faces;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        auto& lo = faces.try_emplace(nodes[n].tile.anchor, std::array<long, 2>{-1, -1}).first->second;
        lo[1] = static_cast<long>(n);
        auto& hi = faces.try_emplace(nodes[n].tile.anchor + unit(nodes[n].third), std::array<long, 2>{-1, -1})
                       .first->second;
        hi[0] = static_cast<long>(n);
    }
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const auto& lo = faces.at(nodes[n].tile.anchor);
        nodes[n].below = lo[0];
        const auto& hi = faces.at(nodes[n].tile.anchor + unit(nodes[n].third));
        nodes[n].above = hi[1];
    }

    const Vec3 nrm = pair_normal(i, j);
    const ComplementSplit split = worm_complement_split(i, j);
    auto type_of = [&](int k) {
        return (k == split.prolate[0] || k == split.prolate[1]) ? RhombType::Prolate : RhombType::Oblate;
    };

    // Each component is a path; the neighbor relation is symmetric, so walking
    // "above" links from a tile with no "below" link visits it in order.
    std::vector<char> used(nodes.size(), 0);
    std::vector<Worm> worms;
    for (std::size_t start = 0; start < nodes.size(); ++start) {
        if (used[start]) continue;
        std::size_t s = start;
        std::size_t guard = 0;
        while (nodes[s].below >= 0 && guard++ <= nodes.size()) s = static_cast<std::size_t>(nodes[s].below);
        Worm w;
        w.i = i;
        w.j = j;
        for (long n = static_cast<long>(s); n >= 0 && !used[static_cast<std::size_t>(n)];
             n = nodes[static_cast<std::size_t>(n)].above) {
            used[static_cast<std::size_t>(n)] = 1;
            const Node& nd = nodes[static_cast<std::size_t>(n)];
            w.tiles.push_back({nd.tile, nd.third, +1, type_of(nd.third)});
        }
        // orient along the pair normal
        const Lattice6& first = w.tiles.front().tile.anchor;
        const Lattice6 last_top = w.tiles.back().tile.anchor + unit(w.tiles.back().third);
        if (along(nrm, last_top) < along(nrm, first)) {
            std::reverse(w.tiles.begin(), w.tiles.end());
            for (auto& t : w.tiles) t.step = -1;
        }
        worms.push_back(std::move(w));
    }
    std::sort(worms.begin(), worms.end(),
              [](const Worm& a, const Worm& b) { return a.tiles.front().tile < b.tiles.front().tile; });
    return worms;
}

Worm worm_through(const Patch& patch, const Tile& tile, int i, int j) {
    const ComplementSplit split = worm_complement_split(i, j);
    if (i > j) std::swap(i, j);
    if (!tile.triple.contains(i) || !tile.triple.contains(j))
        throw std::invalid_argument("tile does not contain the worm pair");
    auto third_of = [&](const Tile& t) {
        for (int b = 0; b < 3; ++b)
            if (t.triple[b] != i && t.triple[b] != j) return t.triple[b];
        return 0;
    };
    auto type_of = [&](int k) {
        return (k == split.prolate[0] || k == split.prolate[1]) ? RhombType::Prolate : RhombType::Oblate;
    };
    const std::array<int, 4> others{split.prolate[0], split.prolate[1], split.oblate[0], split.oblate[1]};

    // tiles glued to the {i,j}-face at y: from above (anchor y) or below (anchor y - e_k)
    auto find = [&](const Lattice6& y, bool above) -> std::optional<Tile> {
        for (int k : others) {
            Tile t{above ? y : y - unit(k), IndexTriple(i, j, k)};
            if (patch.contains(t)) return t;
        }
        return std::nullopt;
    };

    std::vector<Tile> down, up;
    std::size_t guard = patch.tiles.size() + 1;
    for (auto t = find(tile.anchor, false); t && guard--; t = find(t->anchor, false)) down.push_back(*t);
    for (auto t = find(tile.anchor + unit(third_of(tile)), true); t && guard--;
         t = find(t->anchor + unit(third_of(*t)), true))
        up.push_back(*t);

    Worm w;
    w.i = i;
    w.j = j;
    for (auto it = down.rbegin(); it != down.rend(); ++it) w.tiles.push_back({*it, third_of(*it), +1, type_of(third_of(*it))});
    w.tiles.push_back({tile, third_of(tile), +1, type_of(third_of(tile))});
    for (const auto& t : up) w.tiles.push_back({t, third_of(t), +1, type_of(third_of(t))});

    const Vec3 nrm = pair_normal(i, j);
    const Lattice6 last_top = w.tiles.back().tile.anchor + unit(w.tiles.back().third);
    if (along(nrm, last_top) < along(nrm, w.tiles.front().tile.anchor)) {
        std::reverse(w.tiles.begin(), w.tiles.end());
        for (auto& t : w.tiles) t.step = -1;
    }
    return w;
}

AlternationReport alternation_of_sequence(int i, int j, const std::vector<int>& thirds) {
    const ComplementSplit split = worm_complement_split(i, j);
    AlternationReport rep;
    int last_prolate = 0, last_oblate = 0;
    std::size_t run = 0;
    std::optional<RhombType> run_type;
    for (std::size_t n = 0; n < thirds.size(); ++n) {
        const int k = thirds[n];
        const bool prolate = k == split.prolate[0] || k == split.prolate[1];
        const bool oblate = k == split.oblate[0] || k == split.oblate[1];
        if (!prolate && !oblate) throw std::invalid_argument("third index is not in the complement of the pair");
        const RhombType t = prolate ? RhombType::Prolate : RhombType::Oblate;
        run = (run_type == t) ? run + 1 : 1;
        run_type = t;
        rep.max_same_type_run = std::max(rep.max_same_type_run, run);
        int& last = prolate ? last_prolate : last_oblate;
        if (last == k) {
            (prolate ? rep.weak_prolate : rep.weak_oblate) = false;
            rep.violations.push_back(n);
        }
        last = k;
    }
    return rep;
}

AlternationReport alternation_report(const Worm& w) {
    std::vector<int> thirds;
    thirds.reserve(w.tiles.size());
    for (const auto& t : w.tiles) thirds.push_back(t.third);
    return alternation_of_sequence(w.i, w.j, thirds);
}

bool PatchAlternation::holds(AlternationKind k) const {
    switch (k) {
        case AlternationKind::WeakProlate: return weak_prolate_failures == 0;
        case AlternationKind::WeakOblate: return weak_oblate_failures == 0;
        case AlternationKind::Full: return weak_prolate_failures == 0 && weak_oblate_failures == 0;
    }
    return false;
}

std::vector<Worm> interior_worms(const Patch& patch, int i, int j, const AnalysisOptions& opt) {
    const double r = effective_interior(opt);
    std::vector<Worm> out;
    for (auto& w : extract_worms(patch, i, j)) {
        if (r < 0) {
            out.push_back(std::move(w));
            continue;
        }
        Worm piece;
        auto flush = [&] {
            if (!piece.tiles.empty()) out.push_back(piece);
            piece.tiles.clear();
        };
        piece.i = w.i;
        piece.j = w.j;
        for (const auto& t : w.tiles) {
            if (norm3(physical_position(t.tile.anchor)) <= r)
                piece.tiles.push_back(t);
            else
                flush();
        }
        flush();
    }
    return out;
}

PatchAlternation check_alternation(const Patch& patch, const AnalysisOptions& opt) {
    PatchAlternation res;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (const auto& w : interior_worms(patch, i, j, opt)) {
                const AlternationReport r = alternation_report(w);
                ++res.worms;
                if (!r.weak_prolate) ++res.weak_prolate_failures;
                if (!r.weak_oblate) ++res.weak_oblate_failures;
                res.max_same_type_run = std::max(res.max_same_type_run, r.max_same_type_run);
            }
    res.run_bound_ok = res.max_same_type_run <= opt.run_bound;
    if (!patch.tiles.empty()) res.thickness = thickness(patch).thickness;
    return res;
}

// ------------------------------------------------------------------ shadows

Vec3 ShadowPatch::physical(const std::array<int, 4>& a) const {
    Vec3 p{};
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t k = 0; k < 4; ++k) p[c] += to_physical[c][k] * a[k];
    return p;
}

bool ShadowPatch::contains(const ShadowCell& c) const { return std::binary_search(cells.begin(), cells.end(), c); }

std::size_t ShadowPatch::full_cells() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const ShadowCell& c) { return c.surviving.size() == 3; }));
}

ShadowPatch shadow(const Patch& patch, const Quad& quad) {
    for (std::size_t k = 0; k < 4; ++k)
        if (quad[k] < 1 || quad[k] > 6 || (k > 0 && quad[k] <= quad[k - 1]))
            throw std::invalid_argument("shadow quad must be four increasing indices in 1..6");
    ShadowPatch s;
    s.quad = quad;
    s.radius = patch.radius;

    Eigen::Matrix<double, 6, 3> g;
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 6; ++a) g(a, c) = patch.slope.generators[uz(c)][uz(a)];
    Eigen::Matrix<double, 4, 3> pg;
    for (int k = 0; k < 4; ++k) pg.row(k) = g.row(quad[uz(k)] - 1);
    Eigen::Matrix<double, 3, 6> m;
    const auto v = icosahedron_vectors_f();
    for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 3; ++c) m(c, a) = v[uz(a)][uz(c)];
    const Eigen::Matrix<double, 3, 4> pinv = pg.completeOrthogonalDecomposition().pseudoInverse();
    const Eigen::Matrix<double, 3, 4> map = m * g * pinv;
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 4; ++k) s.to_physical[uz(c)][uz(k)] = map(c, k);

    for (const auto& t : patch.tiles) {
        ShadowCell c;
        c.anchor = project(t.anchor, quad);
        for (int b = 0; b < 3; ++b)
            if (std::find(quad.begin(), quad.end(), t.triple[b]) != quad.end()) c.surviving.push_back(t.triple[b]);
        if (!c.surviving.empty()) s.cells.push_back(std::move(c));
    }
    std::sort(s.cells.begin(), s.cells.end());
    s.cells.erase(std::unique(s.cells.begin(), s.cells.end()), s.cells.end());
    return s;
}

PeriodicityCheck shadow_periodicity(const ShadowPatch& s, const std::array<int, 4>& q, double margin) {
    int qmax = 0;
    for (int c : q) qmax = std::max(qmax, std::abs(c));
    if (margin < qmax) throw std::invalid_argument("margin must be at least the largest entry of the period");
    const double trusted = s.radius - margin;
    PeriodicityCheck res;
    for (const auto& c : s.cells) {
        if (c.surviving.size() != 3) continue;
        if (norm3(s.physical(c.anchor)) > trusted) continue;
        for (int sign : {1, -1}) {
            ShadowCell moved = c;
            for (std::size_t k = 0; k < 4; ++k) moved.anchor[k] += sign * q[k];
            if (norm3(s.physical(moved.anchor)) > trusted) continue;
            ++res.checked;
            if (!s.contains(moved)) {
                ++res.mismatches;
                if (!res.first_mismatch) res.first_mismatch = moved;
            }
        }
    }
    res.periodic = res.mismatches == 0;
    return res;
}

bool shadow_periodic(const ShadowPatch& s, const std::array<int, 4>& q, double margin) {
    return shadow_periodicity(s, q, margin).periodic;
}

}  // namespace icotile
