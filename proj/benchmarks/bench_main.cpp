#include <benchmark/benchmark.h>

#include "degembed/gadgets.hpp"
#include "degembed/harness.hpp"
#include "degembed/oracle.hpp"
#include "degembed/pipeline.hpp"
#include "degembed/sequences.hpp"
#include "degembed/stars.hpp"
#include "degembed/unbalanced.hpp"

using namespace degembed;

namespace {

void BM_RealizeGraphic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    DegreeSequence seq = gen_bounded_graphic_seq(n, 5, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(realize_graphic(seq));
    }
}
BENCHMARK(BM_RealizeGraphic)->Arg(100)->Arg(500);

void BM_BoundedRealization(benchmark::State& state) {
    DegreeSequence seq = gen_bounded_graphic_seq(static_cast<int>(state.range(0)), 3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_bounded_realization(seq));
    }
}
BENCHMARK(BM_BoundedRealization)->Arg(36)->Arg(60);

void BM_StructureCertificate(benchmark::State& state) {
    DegreeSequence seq = gen_bounded_graphic_seq(60, 5, 11);
    GadgetRealization r = build_bounded_realization(seq);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_bounded_structure(r, seq));
    }
}
BENCHMARK(BM_StructureCertificate);

void BM_ZeroSumSplit(benchmark::State& state) {
    const int pairs = static_cast<int>(state.range(0));
    IntSequence seq;
    seq.bound = 16;
    for (int i = 0; i < pairs; ++i) {
        seq.values.push_back(1 + (i * 7) % 16);
        seq.values.push_back(-(1 + (i * 7) % 16));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(zero_sum_split(seq));
    }
}
BENCHMARK(BM_ZeroSumSplit)->Arg(32)->Arg(100);

void BM_BipartiteFlow(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    BipartiteDemand demand;
    demand.side_a.assign(side, 3);
    demand.side_b.assign(side, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(realize_bipartite(demand));
    }
}
BENCHMARK(BM_BipartiteFlow)->Arg(20)->Arg(50);

void BM_OracleMatchingAbsent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimpleGraph pattern(n);
    for (int i = 0; i + 1 < n; i += 2) pattern.add_edge(i, i + 1);
    SimpleGraph host = SimpleGraph::complete_bipartite(n / 2 - 1, n / 2 + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(embed_backtracking(pattern, host));
    }
}
BENCHMARK(BM_OracleMatchingAbsent)->Arg(10)->Arg(14);

void BM_OracleDenseFound(benchmark::State& state) {
    SimpleGraph host = gen_host_min_degree(30, 0.6, 5);
    DegreeSequence seq = gen_bounded_graphic_seq(30, 3, 5);
    SimpleGraph pattern = realize_graphic(seq);
    for (auto _ : state) {
        benchmark::DoNotOptimize(embed_backtracking(pattern, host));
    }
}
BENCHMARK(BM_OracleDenseFound);

void BM_StarDecompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimpleGraph host = gen_host_min_degree(n, 1.0 / 3 + 0.05, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(star_decompose(host, 2));
    }
}
BENCHMARK(BM_StarDecompose)->Arg(100)->Arg(200);

void BM_ClusterGraph(benchmark::State& state) {
    SimpleGraph host = gen_host_min_degree(120, 0.45, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_cluster_graph(host, 10, 0.3, 17));
    }
}
BENCHMARK(BM_ClusterGraph);

void BM_PipelineDense(benchmark::State& state) {
    SimpleGraph host = gen_host_min_degree(36, 0.6, 21);
    DegreeSequence seq = gen_bounded_graphic_seq(36, 3, 21);
    PipelineParams params;
    params.cluster_size = 6;
    params.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(embed_pipeline(host, seq, 1, params));
    }
}
BENCHMARK(BM_PipelineDense);

}  // namespace

BENCHMARK_MAIN();
