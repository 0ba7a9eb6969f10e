#include "kordered/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "kordered/errors.hpp"
#include "kordered/random.hpp"

namespace kord {

std::size_t ordered_degree_bound(std::size_t n, std::size_t k) { return (n + 1) / 2 + k / 2 - 1; }

VertexSet SharpnessGraph::cross_hubs() const {
    VertexSet hubs(n);
    for (std::size_t j = 1; j <= k / 2; ++j) {
        hubs.insert(w_vertex(j));
    }
    for (std::size_t i = 1; i + 1 <= k / 2; ++i) {
        hubs.insert(u_vertex(i));
    }
    return hubs;
}

SharpnessGraph build_sharpness_graph(std::size_t n, std::size_t k) {
    if (n < 4 || k < 2 || k > n / 2) {
        throw PreconditionError("sharpness graph needs n >= 4 and 2 <= k <= floor(n/2), got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    }
    SharpnessGraph s;
    s.n = n;
    s.k = k;
    s.u = VertexSet::range(n, 0, static_cast<Vertex>(n / 2));
    s.w = VertexSet::range(n, static_cast<Vertex>(n / 2), static_cast<Vertex>(n));

    const std::size_t half = k / 2;
    GraphBuilder b(n);
    b.add_clique(s.u);
    b.add_clique(s.w);
    for (std::size_t j = 1; j <= half; ++j) {
        s.u.for_each([&](Vertex u) { b.add_edge(u, s.w_vertex(j)); });
    }
    for (std::size_t i = 1; i + 1 <= half; ++i) {
        s.w.for_each([&](Vertex w) { b.add_edge(w, s.u_vertex(i)); });
    }
    s.graph = b.build();

    // u_h, w_{h+1}, u_{h+1}, ..., u_{2h-1}, w_{2h} (, u_{2h} for odd k)
    for (std::size_t i = half; i <= 2 * half - 1; ++i) {
        s.witness.vertices.push_back(s.u_vertex(i));
        s.witness.vertices.push_back(s.w_vertex(i + 1));
    }
    if (k % 2 == 1) {
        s.witness.vertices.push_back(s.u_vertex(2 * half));
    }
    return s;
}

namespace {

ClusterInstance finish(const GraphBuilder& b, VertexSet a, VertexSet bside) {
    ClusterInstance out;
    out.graph = b.build();
    out.a = std::move(a);
    out.b = std::move(bside);
    out.min_degree = degree_profile(out.graph).min;
    out.cross_density = density(out.graph, out.a, out.b);
    return out;
}

// Adds edges from v into `pool` (non-neighbours only), least-loaded partners first, until
// deg(v) >= bound. `load` ranks partners; ties go to the earlier entry of `order`.
template <class Load>
bool lift_degree(GraphBuilder& b, Vertex v, std::size_t bound, const std::vector<Vertex>& order, Load&& load) {
    while (b.degree(v) < bound) {
        Vertex best = kNoVertex;
        std::size_t best_load = SIZE_MAX;
        for (Vertex u : order) {
            if (u == v || b.adjacent(u, v)) {
                continue;
            }
            const std::size_t l = load(u);
            if (l < best_load) {
                best_load = l;
                best = u;
            }
        }
        if (best == kNoVertex) {
            return false;
        }
        b.add_edge(v, best);
    }
    return true;
}

} // namespace

ClusterInstance build_sparse_cut_instance(std::size_t n, std::size_t k, std::size_t cut_degree, std::uint64_t seed) {
    if (n < 4 || k < 2) {
        throw ConstructionError("sparse cut instance needs n >= 4 and k >= 2");
    }
    const std::size_t size_a = (n + 1) / 2;
    const std::size_t size_b = n / 2;
    const std::size_t bound = ordered_degree_bound(n, k);
    const std::size_t needed = bound > size_a - 1 ? bound - (size_a - 1) : 0;
    if (cut_degree < needed) {
        throw ConstructionError("cut_degree " + std::to_string(cut_degree) + " below the " + std::to_string(needed) +
                                " cross edges each vertex needs");
    }
    if (cut_degree > size_b) {
        throw ConstructionError("cut_degree exceeds |B|");
    }
    std::mt19937_64 rng(seed);
    const VertexSet a = VertexSet::range(n, 0, static_cast<Vertex>(size_a));
    const VertexSet bside = VertexSet::range(n, static_cast<Vertex>(size_a), static_cast<Vertex>(n));
    std::vector<Vertex> a_order = a.to_vector();
    std::vector<Vertex> b_order = bside.to_vector();
    shuffle_in_place(a_order, rng);
    shuffle_in_place(b_order, rng);

    GraphBuilder g(n);
    g.add_clique(a);
    g.add_clique(bside);
    for (std::size_t t = 0; t < cut_degree; ++t) {
        for (std::size_t i = 0; i < size_a; ++i) {
            g.add_edge(a_order[i], b_order[(i + t) % size_b]);
        }
    }
    auto cross_load = [&](const VertexSet& other) {
        return [&g, &other](Vertex u) { return g.degree_into(u, other); };
    };
    for (Vertex v : a_order) {
        if (!lift_degree(g, v, bound, b_order, cross_load(a))) {
            throw ConstructionError("cannot lift vertex " + std::to_string(v) + " to the degree bound");
        }
    }
    for (Vertex v : b_order) {
        if (!lift_degree(g, v, bound, a_order, cross_load(bside))) {
            throw ConstructionError("cannot lift vertex " + std::to_string(v) + " to the degree bound");
        }
    }
    return finish(g, a, bside);
}

ClusterInstance build_dense_bipartite_instance(std::size_t n, std::size_t k, std::size_t imbalance,
                                               std::uint64_t seed) {
    if (n < 8 || k < 2) {
        throw ConstructionError("dense instance needs n >= 8 and k >= 2");
    }
    if ((n - imbalance) % 2 != 0 || imbalance * 10 > n) {
        throw ConstructionError("imbalance " + std::to_string(imbalance) + " infeasible for n=" + std::to_string(n));
    }
    const std::size_t size_b = (n - imbalance) / 2;
    const std::size_t size_a = size_b + imbalance;
    const std::size_t bound = ordered_degree_bound(n, k);
    std::mt19937_64 rng(seed);
    const VertexSet a = VertexSet::range(n, 0, static_cast<Vertex>(size_a));
    const VertexSet bside = VertexSet::range(n, static_cast<Vertex>(size_a), static_cast<Vertex>(n));

    GraphBuilder g(n);
    std::vector<Edge> cross;
    a.for_each([&](Vertex u) {
        bside.for_each([&](Vertex v) {
            g.add_edge(u, v);
            cross.emplace_back(u, v);
        });
    });

    // Delete ~5% of the cross edges, at most `cap` at any vertex.
    shuffle_in_place(cross, rng);
    const std::size_t budget = cross.size() / 20;
    const std::size_t cap = std::max<std::size_t>(1, (size_b + 9) / 10);
    std::vector<std::size_t> removed(n, 0);
    std::size_t deleted = 0;
    for (const auto& [u, v] : cross) {
        if (deleted == budget) {
            break;
        }
        if (removed[u] < cap && removed[v] < cap) {
            g.remove_edge(u, v);
            ++removed[u];
            ++removed[v];
            ++deleted;
        }
    }

    // Disjoint A-internal edges so G|_A always carries an imbalance-sized matching.
    std::vector<Vertex> a_order = a.to_vector();
    std::vector<Vertex> b_order = bside.to_vector();
    shuffle_in_place(a_order, rng);
    shuffle_in_place(b_order, rng);
    for (std::size_t i = 0; i < imbalance; ++i) {
        g.add_edge(a_order[2 * i], a_order[2 * i + 1]);
    }

    auto inner_load = [&](const VertexSet& side) {
        return [&g, &side](Vertex u) { return g.degree_into(u, side); };
    };
    for (Vertex v : a_order) {
        if (!lift_degree(g, v, bound, a_order, inner_load(a))) {
            throw ConstructionError("cannot lift vertex " + std::to_string(v) + " to the degree bound");
        }
    }
    for (Vertex v : b_order) {
        if (!lift_degree(g, v, bound, b_order, inner_load(bside))) {
            throw ConstructionError("cannot lift vertex " + std::to_string(v) + " to the degree bound");
        }
    }
    return finish(g, a, bside);
}

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng, num, den)) {
                b.add_edge(u, v);
            }
        }
    }
    return b.build();
}

Graph random_graph_min_degree(std::size_t n, std::size_t target_min_degree, std::uint64_t seed) {
    if (target_min_degree >= n) {
        throw PreconditionError("target minimum degree must be below n");
    }
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    if (n >= 2) {
        const std::uint64_t den = 1000;
        const std::uint64_t num = 800 * target_min_degree / (n - 1);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin(rng, num, den)) {
                    b.add_edge(u, v);
                }
            }
        }
    }
    while (true) {
        Vertex low = kNoVertex;
        for (Vertex v = 0; v < n; ++v) {
            if (b.degree(v) < target_min_degree && (low == kNoVertex || b.degree(v) < b.degree(low))) {
                low = v;
            }
        }
        if (low == kNoVertex) {
            break;
        }
        std::vector<Vertex> partners;
        std::size_t best = SIZE_MAX;
        for (Vertex u = 0; u < n; ++u) {
            if (u == low || b.adjacent(u, low)) {
                continue;
            }
            if (b.degree(u) < best) {
                best = b.degree(u);
                partners.assign(1, u);
            } else if (b.degree(u) == best) {
                partners.push_back(u);
            }
        }
        b.add_edge(low, partners[uniform_below(rng, partners.size())]);
    }
    return b.build();
}

OrderedSequence random_sequence(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) {
        throw PreconditionError("sequence longer than the vertex count");
    }
    std::mt19937_64 rng(seed);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    shuffle_in_place(all, rng);
    all.resize(k);
    return OrderedSequence{std::move(all)};
}

} // namespace kord
