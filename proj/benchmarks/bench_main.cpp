#include <benchmark/benchmark.h>

#include "mbqc/algorithms.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/photonic.hpp"

namespace {

void BM_ApplySingleQubitGate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    mbqc::StateVector st(n);
    const mbqc::Gate1Q h = mbqc::gates::h();
    for (auto _ : state) {
        st.apply(h, n / 2);
        benchmark::DoNotOptimize(st.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * st.dim());
}
BENCHMARK(BM_ApplySingleQubitGate)->DenseRange(8, 20, 4);

void BM_ApplyCz(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    mbqc::StateVector st(n);
    for (int q = 0; q < n; ++q) st.apply(mbqc::gates::h(), q);
    for (auto _ : state) {
        st.apply_cz(0, n - 1);
        benchmark::DoNotOptimize(st.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * st.dim());
}
BENCHMARK(BM_ApplyCz)->DenseRange(8, 20, 4);

void BM_ClusterFromGraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const mbqc::Graph g = mbqc::dj_bv_graph(n).first;
    for (auto _ : state) {
        mbqc::StateVector st = mbqc::cluster_from_graph(g);
        benchmark::DoNotOptimize(st.amplitudes().data());
    }
}
BENCHMARK(BM_ClusterFromGraph)->DenseRange(2, 8, 2);

void BM_EnumerateBranches(benchmark::State& state) {
    const mbqc::StateVector resource =
        mbqc::apply_y_encoding(mbqc::six_qubit_resource().first);
    const mbqc::MeasurementPattern pattern = mbqc::pattern_for_bb(mbqc::BlackBoxId::vii);
    for (auto _ : state) {
        auto records = mbqc::enumerate_branches(resource, pattern);
        benchmark::DoNotOptimize(records.data());
    }
}
BENCHMARK(BM_EnumerateBranches);

void BM_RunDjMbqc(benchmark::State& state) {
    std::mt19937_64 rng = mbqc::rng_stream(1);
    for (auto _ : state) {
        auto result = mbqc::run_dj_mbqc(mbqc::BlackBoxId::iii, rng);
        benchmark::DoNotOptimize(result.first.query_outcome.data());
    }
}
BENCHMARK(BM_RunDjMbqc);

void BM_ChipGenerationTrial(benchmark::State& state) {
    const mbqc::FusionNetwork net = mbqc::default_chip_network();
    std::mt19937_64 rng = mbqc::rng_stream(1);
    for (auto _ : state) {
        auto run = mbqc::generate_chip_state(net, 1, rng);
        benchmark::DoNotOptimize(run.successes);
    }
}
BENCHMARK(BM_ChipGenerationTrial);

}  // namespace

BENCHMARK_MAIN();
