#include "kordered/graph.hpp"

#include <algorithm>
#include <string>

#include "kordered/errors.hpp"

namespace kord {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t universe) { return range(universe, 0, static_cast<Vertex>(universe)); }

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last) {
    VertexSet s(universe);
    for (Vertex v = first; v < last; ++v) {
        s.insert(v);
    }
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) {
            return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
        }
    }
    return kNoVertex;
}

Vertex VertexSet::next(Vertex after) const noexcept {
    std::size_t start = static_cast<std::size_t>(after) + 1;
    if (start >= universe_) {
        return kNoVertex;
    }
    std::size_t w = start >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits) {
            return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        }
        if (++w == words_.size()) {
            return kNoVertex;
        }
        bits = words_[w];
    }
}

void VertexSet::check_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) {
        throw PreconditionError("vertex sets over different universes");
    }
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & other.words_[w]) {
            return true;
        }
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~other.words_[w]) {
            return false;
        }
    }
    return true;
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
    check_universe(other);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return c;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~other.words_[w];
    }
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) {
        b.add_edge(u, v);
    }
    return b.build();
}

Graph Graph::complete(std::size_t n) {
    GraphBuilder b(n);
    b.add_clique(VertexSet::full(n));
    return b.build();
}

Graph Graph::cycle(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) {
        b.add_edge(v, static_cast<Vertex>((v + 1) % n));
    }
    return b.build();
}

Graph Graph::path(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        b.add_edge(v, v + 1);
    }
    return b.build();
}

std::size_t Graph::size() const noexcept {
    std::size_t twice = 0;
    for (const auto& row : adj_) {
        twice += row.count();
    }
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v = adj_[u].next(u); v != kNoVertex; v = adj_[u].next(v)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : adj_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(const Graph& g) : adj_(g.adj_) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) {
        throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) {
        throw PreconditionError("loop at vertex " + std::to_string(u));
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(const VertexSet& members) {
    members.for_each([&](Vertex u) {
        adj_[u] |= members;
        adj_[u].erase(u);
    });
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.adj_ = adj_;
    return g;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        p.degrees.push_back(g.degree(v));
    }
    if (!p.degrees.empty()) {
        const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min = *lo;
        p.max = *hi;
    }
    return p;
}

std::size_t adjacent_pairs(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::size_t total = 0;
    a.for_each([&](Vertex v) { total += g.degree_into(v, b); });
    return total;
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) {
        throw PreconditionError("edges_between: A and B overlap");
    }
    return adjacent_pairs(g, a, b);
}

Rational density(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) {
        throw DomainError("density of an empty vertex set");
    }
    const auto e = edges_between(g, a, b);
    return Rational(static_cast<std::int64_t>(e), static_cast<std::int64_t>(a.count() * b.count()));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
    if (u.empty()) {
        throw DomainError("induced subgraph on an empty vertex set");
    }
    InducedSubgraph out;
    out.to_host = u.to_vector();
    out.from_host.assign(g.order(), kNoVertex);
    for (Vertex i = 0; i < out.to_host.size(); ++i) {
        out.from_host[out.to_host[i]] = i;
    }
    GraphBuilder b(out.to_host.size());
    for (Vertex i = 0; i < out.to_host.size(); ++i) {
        const auto& row = g.neighbors(out.to_host[i]);
        for (Vertex j = i + 1; j < out.to_host.size(); ++j) {
            if (row.contains(out.to_host[j])) {
                b.add_edge(i, j);
            }
        }
    }
    out.graph = b.build();
    return out;
}

Graph bipartite_restriction(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) {
        throw PreconditionError("bipartite_restriction: A and B overlap");
    }
    GraphBuilder out(g.order());
    a.for_each([&](Vertex u) {
        (g.neighbors(u) & b).for_each([&](Vertex v) { out.add_edge(u, v); });
    });
    return out.build();
}

} // namespace kord
