// Serial reference kernels against their OpenMP twins.

#include "gcsub/dirichlet_flow.hpp"
#include "gcsub/gc_subdivision.hpp"
#include "gcsub/generators_io.hpp"
#include "gcsub/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace gcsub;

namespace {

// C60 after `level` modified steps.
const Embedding& c60_level(int level) {
    static std::vector<Embedding> cache;
    if (cache.empty()) {
        RunOptions opt;
        opt.step.sampling = 0;
        cache = iterate(generate_c60(1.0), 5, opt).levels;
    }
    return cache[static_cast<std::size_t>(level)];
}

struct Placement {
    Subdivided sub;
    std::vector<Vec3> positions;
    std::vector<double> contraction;
};

Placement placement_for(const Embedding& parent) {
    Placement p{gc_subdivide(parent.graph()), {}, {}};
    p.positions.resize(p.sub.graph.vertex_count());
    p.contraction.resize(parent.graph().face_count());
    return p;
}

void BM_PlaceInner_Serial(benchmark::State& state) {
    const Embedding& parent = c60_level(static_cast<int>(state.range(0)));
    Placement p = placement_for(parent);
    for (auto _ : state) {
        kernels::place_inner_serial(parent, p.sub.provenance, p.positions, p.contraction);
        benchmark::DoNotOptimize(p.positions.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(parent.graph().face_count()));
}

void BM_PlaceInner_Omp(benchmark::State& state) {
    const Embedding& parent = c60_level(static_cast<int>(state.range(0)));
    Placement p = placement_for(parent);
    for (auto _ : state) {
        kernels::place_inner_omp(parent, p.sub.provenance, p.positions, p.contraction);
        benchmark::DoNotOptimize(p.positions.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(parent.graph().face_count()));
}

void BM_Curvature_Serial(benchmark::State& state) {
    const Embedding& e = c60_level(static_cast<int>(state.range(0)));
    std::vector<VertexCurvature> out(e.graph().vertex_count());
    for (auto _ : state) {
        kernels::curvature_serial(e, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(out.size()));
}

void BM_Curvature_Omp(benchmark::State& state) {
    const Embedding& e = c60_level(static_cast<int>(state.range(0)));
    std::vector<VertexCurvature> out(e.graph().vertex_count());
    for (auto _ : state) {
        kernels::curvature_omp(e, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(out.size()));
}

void BM_Hausdorff_Serial(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const auto from = kernels::skeleton_segments(c60_level(level));
    const kernels::SegmentGrid grid(kernels::skeleton_segments(c60_level(level - 1)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::directed_hausdorff_serial(from, 8, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(from.size()));
}

void BM_Hausdorff_Omp(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const auto from = kernels::skeleton_segments(c60_level(level));
    const kernels::SegmentGrid grid(kernels::skeleton_segments(c60_level(level - 1)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::directed_hausdorff_omp(from, 8, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(from.size()));
}

void BM_Step(benchmark::State& state) {
    const Embedding& e = c60_level(3);
    const StepOptions opt{StepMode::modified, 0, state.range(0) ? Exec::parallel : Exec::serial};
    for (auto _ : state) benchmark::DoNotOptimize(subdivide_step(e, opt).metrics.energy_after);
}

}  // namespace

BENCHMARK(BM_PlaceInner_Serial)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PlaceInner_Omp)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Curvature_Serial)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Curvature_Omp)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Hausdorff_Serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hausdorff_Omp)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Step)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
