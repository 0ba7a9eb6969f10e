#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kordered/graph.hpp"

// Subset DP over (visited-mask, last-vertex) for Hamiltonian searches from a fixed start.
// Every vertex u carries a prerequisite mask: u may be entered only once all of those
// vertices have been visited. Ordered anchors v_2..v_k of an S-cycle get the prerequisite
// {v_2..v_{j-1}}, so anchor progress is implicit in the mask; a path target y gets
// "everything else", forcing it to be the last vertex.
namespace kord::dp {

inline constexpr std::size_t kMaxOrder = 29;

struct Problem {
    std::size_t order = 0;           // vertices in the host graph
    Vertex start = 0;                // host index of the fixed start vertex
    std::vector<std::uint32_t> adj;  // over local indices (host vertices other than start)
    std::vector<std::uint32_t> required;
    std::uint32_t start_adj = 0;     // local neighbours of start
    bool close_cycle = true;         // last vertex must neighbour start

    std::size_t width() const noexcept { return adj.size(); }
    std::uint32_t full() const noexcept { return width() == 32 ? ~0u : (1u << width()) - 1; }
    Vertex to_host(std::uint32_t local) const noexcept { return local < start ? local : local + 1; }
    std::uint32_t to_local(Vertex host) const noexcept { return host < start ? host : host - 1; }
};

// Cycle through v_1 = anchors[0] meeting anchors[1..] in order. Throws PreconditionError
// if the graph exceeds kMaxOrder.
Problem cycle_problem(const Graph& g, std::span<const Vertex> anchors);
// Hamiltonian path from x that ends at y.
Problem path_problem(const Graph& g, Vertex x, Vertex y);

// reach[mask] = local vertices v such that some legal walk start -> ... -> v visits exactly mask.
// The serial kernel pushes forward in numeric mask order.
void solve_serial(const Problem& p, std::vector<std::uint32_t>& reach);
// OpenMP kernel: pulls each popcount layer in parallel from the previous one.
void solve_layered(const Problem& p, std::vector<std::uint32_t>& reach);

bool accepts(const Problem& p, std::span<const std::uint32_t> reach);
// Host-vertex order starting at p.start, or nullopt if the table has no accepting state.
std::optional<std::vector<Vertex>> extract(const Problem& p, std::span<const std::uint32_t> reach);

} // namespace kord::dp
