// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "kordered/constructions.hpp"
#include "kordered/ham_solver.hpp"
#include "kordered/regularity.hpp"
#include "kordered/scycle_dp.hpp"

namespace {

using namespace kord;

Graph dp_graph(std::size_t n) { return random_graph(n, 1, 2, 7 + n); }

void BM_DpSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = dp_graph(n);
    const std::vector<Vertex> anchors{0, 1, 2, 3};
    const dp::Problem p = dp::cycle_problem(g, anchors);
    std::vector<std::uint32_t> reach;
    for (auto _ : state) {
        dp::solve_serial(p, reach);
        benchmark::DoNotOptimize(reach.data());
    }
}

void BM_DpLayered(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = dp_graph(n);
    const std::vector<Vertex> anchors{0, 1, 2, 3};
    const dp::Problem p = dp::cycle_problem(g, anchors);
    std::vector<std::uint32_t> reach;
    for (auto _ : state) {
        dp::solve_layered(p, reach);
        benchmark::DoNotOptimize(reach.data());
    }
}

// Dense enough to be Hamiltonian and k-ordered, so the whole enumeration runs.
Graph ordered_graph(std::size_t n) { return random_graph_min_degree(n, n - 2, 3 + n); }

void BM_KOrderedSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = ordered_graph(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::is_k_ordered_serial(g, 4));
    }
}

void BM_KOrderedParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = ordered_graph(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_k_ordered(g, 4));
    }
}

struct Pair {
    Graph g;
    VertexSet a;
    VertexSet b;
};

// A random bipartite pair; the full enumeration runs whenever the pair is regular.
Pair regular_pair(std::size_t side) {
    const std::size_t n = 2 * side;
    GraphBuilder gb(n);
    const Graph r = random_graph(n, 1, 2, 11 + side);
    for (Vertex x = 0; x < side; ++x) {
        for (Vertex y = static_cast<Vertex>(side); y < n; ++y) {
            if (r.adjacent(x, y)) {
                gb.add_edge(x, y);
            }
        }
    }
    return {gb.build(), VertexSet::range(n, 0, static_cast<Vertex>(side)),
            VertexSet::range(n, static_cast<Vertex>(side), static_cast<Vertex>(n))};
}

void BM_RegularitySerial(benchmark::State& state) {
    const Pair p = regular_pair(static_cast<std::size_t>(state.range(0)));
    const Rational eps{1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::is_epsilon_regular_serial(p.g, p.a, p.b, eps));
    }
}

void BM_RegularityParallel(benchmark::State& state) {
    const Pair p = regular_pair(static_cast<std::size_t>(state.range(0)));
    const Rational eps{1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_epsilon_regular(p.g, p.a, p.b, eps));
    }
}

} // namespace

BENCHMARK(BM_DpSerial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DpLayered)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KOrderedSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KOrderedParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularitySerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularityParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
