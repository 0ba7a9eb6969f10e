#pragma once

#include <vector>

#include "kordered/graph.hpp"
#include "kordered/rational.hpp"

namespace kord {

// Pairwise-disjoint edges of a host graph, each stored as (min, max), sorted.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const noexcept { return edges.size(); }
    // kNoVertex for exposed vertices.
    std::vector<Vertex> mates(std::size_t n) const;
    VertexSet covered(std::size_t n) const;
};

// True iff every pair is a host edge and no vertex is used twice.
bool is_valid_matching(const Graph& g, const Matching& m);

// Maximum cardinality matching via Edmonds' blossom contraction.
// Roots are grown in increasing index order and neighbours scanned in increasing order,
// so the result is a deterministic function of the graph.
Matching maximum_matching(const Graph& g);

struct BipartiteMatchingResult {
    Matching matching;
    VertexSet cover; // minimum vertex cover of the A-B edges, |cover| == matching.size()
};

// Hopcroft-Karp on the A-B edges only, with the Koenig cover read off the final
// alternating forest. Throws PreconditionError if A and B overlap.
BipartiteMatchingResult bipartite_matching_and_cover(const Graph& g, const VertexSet& a, const VertexSet& b);

struct MatchingBoundCheck {
    std::size_t nu = 0;
    Rational bound;
    bool holds = false;
};

// nu(G) >= min{delta(G), (n-1)/2}.
MatchingBoundCheck erdos_posa_check(const Graph& g);

// nu(G) >= delta * n / (2 (delta + Delta)); the bound is 0 on an edgeless graph.
MatchingBoundCheck degree_ratio_check(const Graph& g);

} // namespace kord
