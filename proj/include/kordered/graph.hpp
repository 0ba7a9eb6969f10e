#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "kordered/rational.hpp"

namespace kord {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = UINT32_MAX;

using Edge = std::pair<Vertex, Vertex>;

// Bitset over the vertex indices 0..universe-1 of some host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);
    // Half-open index range [first, last).
    static VertexSet range(std::size_t universe, Vertex first, Vertex last);

    std::size_t universe() const noexcept { return universe_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t count() const noexcept;
    bool empty() const noexcept;

    Vertex first() const noexcept;            // kNoVertex when empty
    Vertex next(Vertex after) const noexcept; // smallest member > after, or kNoVertex

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    std::size_t intersection_count(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    template <class F>
    void for_each(F&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;

private:
    void check_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Undirected simple graph on vertices 0..n-1, stored as symmetric adjacency bitsets.
// Immutable once built; use GraphBuilder to assemble one.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);
    static Graph empty(std::size_t n) { return from_edges(n, {}); }

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept; // edge count

    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }
    // deg(v, U): number of neighbours of v inside U.
    std::size_t degree_into(Vertex v, const VertexSet& u) const { return adj_[v].intersection_count(u); }

    VertexSet vertices() const { return VertexSet::full(order()); }
    std::vector<Edge> edges() const; // (u, v) with u < v, sorted

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph& g);

    std::size_t order() const noexcept { return adj_.size(); }
    // Loops are rejected; re-adding an existing edge is a no-op.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }
    std::size_t degree_into(Vertex v, const VertexSet& u) const { return adj_[v].intersection_count(u); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    // Adds every edge inside `members`.
    GraphBuilder& add_clique(const VertexSet& members);

    Graph build() const;

private:
    std::vector<VertexSet> adj_;
};

struct DegreeProfile {
    std::vector<std::size_t> degrees;
    std::size_t min = 0; // delta(G); 0 for the empty graph
    std::size_t max = 0; // Delta(G)
};

DegreeProfile degree_profile(const Graph& g);

// e(A, B) for disjoint A and B. Throws PreconditionError if they overlap.
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// d(A, B) = e(A, B) / (|A||B|) as an exact fraction.
// Throws DomainError for an empty side and PreconditionError for overlapping sides.
Rational density(const Graph& g, const VertexSet& a, const VertexSet& b);

// Ordered-pair count of adjacent (a, b) with a in A, b in B; A and B may overlap.
std::size_t adjacent_pairs(const Graph& g, const VertexSet& a, const VertexSet& b);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;   // local index -> host vertex
    std::vector<Vertex> from_host; // host vertex -> local index, kNoVertex if absent
};

// G|_U with vertices relabelled 0..|U|-1 in increasing host order. Throws DomainError on empty U.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u);

// Spanning subgraph keeping only the A-B edges.
Graph bipartite_restriction(const Graph& g, const VertexSet& a, const VertexSet& b);

} // namespace kord
