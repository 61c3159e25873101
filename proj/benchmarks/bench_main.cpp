#include <benchmark/benchmark.h>

#include "tokenalg/algebras.hpp"
#include "tokenalg/linalg.hpp"

using namespace tokenalg;

namespace {

Graph paw() { return make_graph(4, {{1, 3}, {1, 4}, {2, 4}, {3, 4}}); }

void bm_token_graph(benchmark::State& state) {
    Graph kn = complete_graph(static_cast<int>(state.range(0)));
    int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(token_graph(kn, k).graph.edges.size());
}
BENCHMARK(bm_token_graph)->Args({6, 3})->Args({8, 4});

void bm_char_poly(benchmark::State& state) {
    Matrix l = laplacian(johnson_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))).graph);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(l).degree());
}
BENCHMARK(bm_char_poly)->Args({6, 3})->Args({7, 3});

void bm_exact_spectrum(benchmark::State& state) {
    Matrix l = laplacian(johnson_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))).graph);
    for (auto _ : state) benchmark::DoNotOptimize(exact_spectrum(l)->size());
}
BENCHMARK(bm_exact_spectrum)->Args({6, 3})->Args({7, 3});

void bm_joint_spectrum(benchmark::State& state) {
    Graph g = paw();
    Matrix lk = laplacian(token_graph(g, 2).graph);
    Matrix lkbar = laplacian(token_graph(complement(g), 2).graph);
    for (auto _ : state) benchmark::DoNotOptimize(joint_spectrum(lk, lkbar).distinct_pairs());
}
BENCHMARK(bm_joint_spectrum);

void bm_local_algebra(benchmark::State& state) {
    Graph g = paw();
    for (auto _ : state) benchmark::DoNotOptimize(local_algebra(g, 2).dim);
}
BENCHMARK(bm_local_algebra);

void bm_recognition(benchmark::State& state) {
    Graph s = token_graph(paw(), 2).graph;
    for (auto _ : state) benchmark::DoNotOptimize(recognize_token_graph(s, 4, 2).accepted());
}
BENCHMARK(bm_recognition);

}  // namespace

BENCHMARK_MAIN();
