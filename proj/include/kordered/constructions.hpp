#pragma once

#include <cstdint>

#include "kordered/graph.hpp"
#include "kordered/ham_solver.hpp"
#include "kordered/rational.hpp"

namespace kord {

// ceil(n/2) + floor(k/2) - 1: the minimum degree that forces k-ordered Hamiltonicity for large n.
std::size_t ordered_degree_bound(std::size_t n, std::size_t k);

// Two cliques U (|U| = floor(n/2)) and W (|W| = ceil(n/2)) joined by
// U x {w_1..w_{k/2}} and W x {u_1..u_{k/2-1}} (k/2 rounded down). Labels: u_i -> i-1,
// w_j -> floor(n/2) + j - 1. Its minimum degree is one below ordered_degree_bound and
// `witness` admits no Hamiltonian S-cycle.
struct SharpnessGraph {
    Graph graph;
    VertexSet u;
    VertexSet w;
    OrderedSequence witness;
    std::size_t n = 0;
    std::size_t k = 0;

    Vertex u_vertex(std::size_t i) const { return static_cast<Vertex>(i - 1); }           // 1-indexed
    Vertex w_vertex(std::size_t j) const { return static_cast<Vertex>(n / 2 + j - 1); }   // 1-indexed
    // {w_1..w_{k/2}} u {u_1..u_{k/2-1}}: every U-W edge touches this set.
    VertexSet cross_hubs() const;
};

// Throws PreconditionError unless n >= 4 and 2 <= k <= floor(n/2).
SharpnessGraph build_sharpness_graph(std::size_t n, std::size_t k);

// A generated two-sided instance plus what it actually achieved.
struct ClusterInstance {
    Graph graph;
    VertexSet a;
    VertexSet b;
    std::size_t min_degree = 0;
    Rational cross_density;
};

// Cliques A (ceil(n/2)) and B (floor(n/2)); each A vertex gets `cut_degree` cross edges laid
// out round-robin over a seeded permutation of B, then any vertex still below
// ordered_degree_bound(n, k) receives extra cross edges to the least-loaded partners.
// Throws ConstructionError if cut_degree cannot reach the bound or exceeds |B|.
ClusterInstance build_sparse_cut_instance(std::size_t n, std::size_t k, std::size_t cut_degree, std::uint64_t seed);

// Near-complete bipartite graph with |A| - |B| = imbalance. Cross edges are deleted at random
// (about 5%, at most a per-vertex cap), then sparse same-side edges lift every degree to
// ordered_degree_bound(n, k); A always receives enough internal edges for an imbalance-sized
// matching. Throws ConstructionError when n - imbalance is odd or the imbalance exceeds n/10.
ClusterInstance build_dense_bipartite_instance(std::size_t n, std::size_t k, std::size_t imbalance,
                                               std::uint64_t seed);

// G(n, p) with p a little under target/(n-1), then greedy augmentation: the lowest-degree
// deficient vertex is joined to a random lowest-degree non-neighbour until delta >= target.
// Throws PreconditionError if target >= n.
Graph random_graph_min_degree(std::size_t n, std::size_t target_min_degree, std::uint64_t seed);

// G(n, p) with p = num/den.
Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

// k distinct vertices in random order.
OrderedSequence random_sequence(std::size_t n, std::size_t k, std::uint64_t seed);

} // namespace kord
