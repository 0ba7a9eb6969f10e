#pragma once

#include <chrono>
#include <string>

#include "kordered/extremal.hpp"

namespace kord::detail {

class StageTimer {
public:
    StageTimer(SolveTrace& trace, std::string name)
        : trace_(trace), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
    ~StageTimer() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        trace_.stages.push_back({name_, std::chrono::duration<double, std::milli>(elapsed).count()});
    }
    StageTimer(const StageTimer&) = delete;
    StageTimer& operator=(const StageTimer&) = delete;

private:
    SolveTrace& trace_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

// Sizes at least (1 - alpha) n/2, disjointness, and delta(G) >= ordered_degree_bound.
// Returns an empty string when they all hold, otherwise a description of the first failure.
std::string common_hypothesis_failure(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t k,
                                      const ExtremalParams& params);

nlohmann::json sets_snapshot(const VertexSet& a, const VertexSet& b, std::span<const Vertex> partial);

// Inserts the remaining vertices of `side` (absent from `cycle`) into the cycle, either between
// two consecutive cycle vertices of that side via a Hamiltonian path of G|_T, or, when no such
// pair exists, through two distinct neighbours of a consecutive cycle pair.
// Returns false if every attempt fails.
bool absorb_side(const Graph& g, const VertexSet& side, std::vector<Vertex>& cycle, const Graph& routing_graph,
                 std::size_t retries, std::uint64_t seed, SolveTrace& trace);

} // namespace kord::detail
