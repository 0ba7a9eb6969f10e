#include "kordered/matching.hpp"

#include <algorithm>
#include <deque>

#include "kordered/errors.hpp"

namespace kord {

std::vector<Vertex> Matching::mates(std::size_t n) const {
    std::vector<Vertex> mate(n, kNoVertex);
    for (const auto& [u, v] : edges) {
        mate[u] = v;
        mate[v] = u;
    }
    return mate;
}

VertexSet Matching::covered(std::size_t n) const {
    VertexSet s(n);
    for (const auto& [u, v] : edges) {
        s.insert(u);
        s.insert(v);
    }
    return s;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    VertexSet used(g.order());
    for (const auto& [u, v] : m.edges) {
        if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
            return false;
        }
        if (used.contains(u) || used.contains(v)) {
            return false;
        }
        used.insert(u);
        used.insert(v);
    }
    return true;
}

namespace {

Matching from_mates(const std::vector<Vertex>& mate) {
    Matching m;
    for (Vertex v = 0; v < mate.size(); ++v) {
        if (mate[v] != kNoVertex && v < mate[v]) {
            m.edges.emplace_back(v, mate[v]);
        }
    }
    return m;
}

// Edmonds' algorithm, one BFS per exposed root with blossom shrinking through `base`.
class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g)
        : g_(g), n_(g.order()), mate_(n_, kNoVertex), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

    std::vector<Vertex> run() {
        for (Vertex root = 0; root < n_; ++root) {
            if (mate_[root] != kNoVertex) {
                continue;
            }
            const Vertex end = find_augmenting_path(root);
            for (Vertex v = end; v != kNoVertex;) {
                const Vertex pv = parent_[v];
                const Vertex ppv = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = ppv;
            }
        }
        return mate_;
    }

private:
    Vertex lca(Vertex a, Vertex b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == kNoVertex) {
                break;
            }
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) {
                return b;
            }
            b = parent_[mate_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    Vertex find_augmenting_path(Vertex root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNoVertex);
        for (Vertex i = 0; i < n_; ++i) {
            base_[i] = i;
        }
        used_[root] = 1;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex to = g_.neighbors(v).first(); to != kNoVertex; to = g_.neighbors(v).next(to)) {
                if (base_[v] == base_[to] || mate_[v] == to) {
                    continue;
                }
                if (to == root || (mate_[to] != kNoVertex && parent_[mate_[to]] != kNoVertex)) {
                    const Vertex cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == kNoVertex) {
                    parent_[to] = v;
                    if (mate_[to] == kNoVertex) {
                        return to;
                    }
                    used_[mate_[to]] = 1;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return kNoVertex;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> mate_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;
};

} // namespace

Matching maximum_matching(const Graph& g) { return from_mates(BlossomSearch(g).run()); }

BipartiteMatchingResult bipartite_matching_and_cover(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) {
        throw PreconditionError("bipartite matching: A and B overlap");
    }
    const std::size_t n = g.order();
    const std::vector<Vertex> left = a.to_vector();
    std::vector<Vertex> mate(n, kNoVertex);
    std::vector<std::size_t> dist(n);
    constexpr std::size_t inf = SIZE_MAX;

    auto cross = [&](Vertex u) { return g.neighbors(u) & b; };

    // Layered BFS from the exposed left vertices; true if some exposed right vertex is reachable.
    auto bfs = [&] {
        std::deque<Vertex> queue;
        for (Vertex u : left) {
            dist[u] = mate[u] == kNoVertex ? 0 : inf;
            if (dist[u] == 0) {
                queue.push_back(u);
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            cross(u).for_each([&](Vertex v) {
                const Vertex w = mate[v];
                if (w == kNoVertex) {
                    found = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            });
        }
        return found;
    };

    auto dfs = [&](auto&& self, Vertex u) -> bool {
        const VertexSet nbrs = cross(u);
        for (Vertex v = nbrs.first(); v != kNoVertex; v = nbrs.next(v)) {
            const Vertex w = mate[v];
            if (w == kNoVertex || (dist[w] == dist[u] + 1 && self(self, w))) {
                mate[u] = v;
                mate[v] = u;
                return true;
            }
        }
        dist[u] = inf;
        return false;
    };

    while (bfs()) {
        for (Vertex u : left) {
            if (mate[u] == kNoVertex) {
                dfs(dfs, u);
            }
        }
    }

    // Koenig: Z = vertices reachable from exposed left vertices by alternating paths.
    VertexSet reached(n);
    std::deque<Vertex> queue;
    for (Vertex u : left) {
        if (mate[u] == kNoVertex) {
            reached.insert(u);
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        cross(u).for_each([&](Vertex v) {
            if (reached.contains(v) || mate[v] == u) {
                return;
            }
            reached.insert(v);
            const Vertex w = mate[v];
            if (w != kNoVertex && !reached.contains(w)) {
                reached.insert(w);
                queue.push_back(w);
            }
        });
    }

    BipartiteMatchingResult out;
    out.matching = from_mates(mate);
    out.cover = (a - reached) | (b & reached);
    return out;
}

MatchingBoundCheck erdos_posa_check(const Graph& g) {
    const auto n = static_cast<std::int64_t>(g.order());
    const auto delta = static_cast<std::int64_t>(degree_profile(g).min);
    MatchingBoundCheck c;
    c.nu = maximum_matching(g).size();
    c.bound = std::min(Rational(delta), Rational(n > 0 ? n - 1 : 0, 2));
    c.holds = Rational(static_cast<std::int64_t>(c.nu)) >= c.bound;
    return c;
}

MatchingBoundCheck degree_ratio_check(const Graph& g) {
    const auto profile = degree_profile(g);
    MatchingBoundCheck c;
    c.nu = maximum_matching(g).size();
    if (profile.max == 0) {
        c.bound = Rational(0);
    } else {
        const auto delta = static_cast<std::int64_t>(profile.min);
        c.bound = Rational(delta * static_cast<std::int64_t>(g.order()),
                           2 * (delta + static_cast<std::int64_t>(profile.max)));
    }
    c.holds = Rational(static_cast<std::int64_t>(c.nu)) >= c.bound;
    return c;
}

} // namespace kord
