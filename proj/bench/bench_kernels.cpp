// Serial vs OpenMP versions of the hot kernels. Each pair runs on identical input;
// the first iteration also checks that the two versions agree.

#include "icotile/grassmann.hpp"
#include "icotile/surface.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <stdexcept>

using namespace icotile;

namespace {

const Patch& patch10() {
    static const Patch p = generate_canonical(10, 7);
    return p;
}

std::vector<Tile> candidates() {
    // every tile shape at every vertex of the R=10 patch
    std::vector<Tile> out;
    for (const auto& x : patch10().vertices())
        for (const auto& t : all_triples()) out.push_back({x, t});
    return out;
}

std::vector<Vec3> sample_points(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-6, 6);
    std::vector<Vec3> pts(n);
    for (auto& p : pts) p = {u(rng), u(rng), u(rng)};
    return pts;
}

std::vector<Vec3> internal_points() {
    std::vector<Vec3> out;
    const auto gens = internal_generators(SlopeDescriptor::icosahedral());
    for (const auto& x : patch10().vertices()) {
        Vec3 y{};
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t k = 0; k < 3; ++k) y[k] += x[a] * gens[a][k];
        out.push_back(y);
    }
    return out;
}

template <bool Parallel>
void BM_select_batch(benchmark::State& state) {
    const CanonicalSelector sel(*patch10().gamma_exact);
    const auto cand = candidates();
    std::vector<char> hits, ref;
    kernels::select_batch_serial(sel, cand, ref);
    for (auto _ : state) {
        if (Parallel)
            kernels::select_batch_omp(sel, cand, hits);
        else
            kernels::select_batch_serial(sel, cand, hits);
        benchmark::DoNotOptimize(hits.data());
    }
    if (hits != ref) state.SkipWithError("serial and parallel selections differ");
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cand.size()));
}

template <bool Parallel>
void BM_cover_counts(benchmark::State& state) {
    const auto pts = sample_points(static_cast<std::size_t>(state.range(0)));
    const auto ref = kernels::cover_counts_serial(patch10(), pts, 1e-9);
    std::vector<int> counts;
    for (auto _ : state) {
        counts = Parallel ? kernels::cover_counts_omp(patch10(), pts, 1e-9)
                          : kernels::cover_counts_serial(patch10(), pts, 1e-9);
        benchmark::DoNotOptimize(counts.data());
    }
    if (counts != ref) state.SkipWithError("serial and parallel cover counts differ");
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

template <bool Parallel>
void BM_thickness(benchmark::State& state) {
    const auto pts = internal_points();
    const auto facets = kernels::window_facets(internal_generators(SlopeDescriptor::icosahedral()));
    const double ref = kernels::thickness_serial(pts, facets);
    double t = 0;
    for (auto _ : state) {
        t = Parallel ? kernels::thickness_omp(pts, facets) : kernels::thickness_serial(pts, facets);
        benchmark::DoNotOptimize(t);
    }
    if (t != ref) state.SkipWithError("serial and parallel thickness differ");
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pts.size()));
}

template <bool Parallel>
void BM_weak_multistart(benchmark::State& state) {
    WeakSolveOptions opt;
    opt.starts = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? kernels::weak_multistart_omp(RhombType::Prolate, opt)
                          : kernels::weak_multistart_serial(RhombType::Prolate, opt);
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

}  // namespace

BENCHMARK(BM_select_batch<false>)->Name("select_batch/serial")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_select_batch<true>)->Name("select_batch/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cover_counts<false>)->Name("cover_counts/serial")->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cover_counts<true>)->Name("cover_counts/omp")->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_thickness<false>)->Name("thickness/serial")->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_thickness<true>)->Name("thickness/omp")->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_weak_multistart<false>)->Name("weak_multistart/serial")->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_weak_multistart<true>)->Name("weak_multistart/omp")->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
