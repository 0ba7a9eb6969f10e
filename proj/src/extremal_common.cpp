#include <algorithm>
#include <deque>
#include <string>

#include "extremal_detail.hpp"
#include "kordered/constructions.hpp"
#include "kordered/errors.hpp"

namespace kord {

void ExtremalParams::validate() const {
    const Rational zero(0);
    const Rational one(1);
    if (!(zero < kappa && kappa < epsilon && epsilon < d && d < beta && beta < alpha && alpha < one)) {
        throw PreconditionError("extremal parameters must satisfy 0 < kappa < epsilon < d < beta < alpha < 1");
    }
}

std::string_view to_string(ExtremalCase c) {
    switch (c) {
    case ExtremalCase::Dense:
        return "dense";
    case ExtremalCase::Impossible:
        return "impossible";
    case ExtremalCase::Sparse:
        return "sparse";
    }
    return "unknown";
}

Classification classify_extremal(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const ExtremalParams& params) {
    params.validate();
    const auto n = static_cast<std::int64_t>(g.order());
    const Rational half(n, 2);
    const Rational lower = (Rational(1) - params.beta) * half;
    for (const VertexSet* side : {&a, &b}) {
        const Rational size(static_cast<std::int64_t>(side->count()));
        if (size < lower || size > half) {
            throw HypothesisError("cluster size " + size.to_string() + " outside [(1-beta)n/2, n/2]");
        }
    }
    const Rational d(static_cast<std::int64_t>(adjacent_pairs(g, a, b)),
                     static_cast<std::int64_t>(a.count() * b.count()));
    if (!(d < params.beta)) {
        throw HypothesisError("d(A,B) = " + d.to_string() + " is not below beta");
    }

    Classification out;
    const VertexSet common = a & b;
    out.overlap = common.count();
    const Rational overlap(static_cast<std::int64_t>(out.overlap));
    // Case 1: |A n B| >= (1 - sqrt(beta)) n/2  <=>  n/2 - |A n B| <= sqrt(beta) n/2
    const Rational gap = half - overlap;
    const bool dense = gap <= Rational(0) || compare_with_root(gap, params.beta, 2, half) <= 0;
    // Case 3: |A n B| < sqrt(beta) n/2
    const bool sparse = compare_with_root(overlap, params.beta, 2, half) < 0;
    if (dense) {
        out.label = ExtremalCase::Dense;
        out.a = common;
        out.b = common.complement();
    } else if (sparse) {
        out.label = ExtremalCase::Sparse;
        out.a = a - b;
        out.b = b - a;
    } else {
        out.label = ExtremalCase::Impossible;
    }
    return out;
}

namespace {

// deg < (1 - alpha^(1/4)) * half  <=>  half - deg > alpha^(1/4) * half
bool below_quarter_root_floor(std::size_t deg, const Rational& half, const Rational& alpha) {
    const Rational slack = half - Rational(static_cast<std::int64_t>(deg));
    return slack > Rational(0) && compare_with_root(slack, alpha, 4, half) > 0;
}

ClusterPair reassign(const Graph& g, const VertexSet& a, const VertexSet& b, VertexSet exc_a, VertexSet exc_b,
                     bool to_majority, const ExtremalParams& params) {
    ClusterPair out;
    const std::size_t n = g.order();
    out.a = a - exc_a;
    out.b = b - exc_b;
    out.leftovers = (a | b).complement();
    const VertexSet pending = exc_a | exc_b | out.leftovers;
    const VertexSet base_a = out.a;
    const VertexSet base_b = out.b;
    pending.for_each([&](Vertex z) {
        const std::size_t da = g.degree_into(z, base_a);
        const std::size_t db = g.degree_into(z, base_b);
        const bool goes_to_a = to_majority ? da >= db : da < db;
        (goes_to_a ? out.a : out.b).insert(z);
    });
    out.exc_a = std::move(exc_a);
    out.exc_b = std::move(exc_b);

    const Rational half(static_cast<std::int64_t>(n), 2);
    auto count_low = [&](const VertexSet& side, const VertexSet& measure) {
        side.for_each([&](Vertex v) {
            if (below_quarter_root_floor(g.degree_into(v, measure), half, params.alpha)) {
                ++out.low_degree;
            }
        });
    };
    if (to_majority) {
        count_low(out.a, out.a);
        count_low(out.b, out.b);
    } else {
        count_low(out.a, out.b);
        count_low(out.b, out.a);
    }
    return out;
}

} // namespace

ClusterPair cleanup_sparse(const Graph& g, const VertexSet& a, const VertexSet& b, const ExtremalParams& params) {
    if (a.intersects(b)) {
        throw PreconditionError("cleanup_sparse: A and B overlap");
    }
    auto exceptional = [&](const VertexSet& side, const VertexSet& other) {
        VertexSet exc(g.order());
        const Rational size(static_cast<std::int64_t>(other.count()));
        side.for_each([&](Vertex x) {
            const Rational deg(static_cast<std::int64_t>(g.degree_into(x, other)));
            if (compare_with_root(deg, params.alpha, 2, size) >= 0) {
                exc.insert(x);
            }
        });
        return exc;
    };
    return reassign(g, a, b, exceptional(a, b), exceptional(b, a), true, params);
}

ClusterPair cleanup_dense(const Graph& g, const VertexSet& a, const VertexSet& b, const ExtremalParams& params) {
    if (a.intersects(b)) {
        throw PreconditionError("cleanup_dense: A and B overlap");
    }
    // deg(x, B) < (1 - sqrt(alpha))|B|  <=>  |B| - deg(x, B) > sqrt(alpha)|B|
    auto exceptional = [&](const VertexSet& side, const VertexSet& other) {
        VertexSet exc(g.order());
        const Rational size(static_cast<std::int64_t>(other.count()));
        side.for_each([&](Vertex x) {
            const Rational missing = size - Rational(static_cast<std::int64_t>(g.degree_into(x, other)));
            if (compare_with_root(missing, params.alpha, 2, size) > 0) {
                exc.insert(x);
            }
        });
        return exc;
    };
    return reassign(g, a, b, exceptional(a, b), exceptional(b, a), false, params);
}

bool PathSystem::internally_disjoint() const {
    if (paths.empty()) {
        return true;
    }
    const std::size_t n = used.universe();
    VertexSet endpoints(n);
    VertexSet interior(n);
    for (const auto& p : paths) {
        endpoints.insert(p.front());
        endpoints.insert(p.back());
    }
    for (const auto& p : paths) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (interior.contains(p[i]) || endpoints.contains(p[i])) {
                return false;
            }
            interior.insert(p[i]);
        }
    }
    return true;
}

PathSystem connecting_paths(const Graph& g, const VertexSet& host, std::span<const Edge> pairs, std::size_t max_len,
                            std::size_t pair_budget, const VertexSet& forbidden) {
    if (pairs.size() > pair_budget) {
        throw PreconditionError("connecting_paths: " + std::to_string(pairs.size()) + " pairs exceed the budget of " +
                                std::to_string(pair_budget));
    }
    const std::size_t n = g.order();
    VertexSet blocked = forbidden;
    for (const auto& [u, w] : pairs) {
        if (!host.contains(u) || !host.contains(w)) {
            throw PreconditionError("connecting_paths: endpoint outside host");
        }
        blocked.insert(u);
        blocked.insert(w);
    }

    PathSystem out;
    out.used = VertexSet(n);
    std::vector<Vertex> parent(n);
    std::vector<std::size_t> dist(n);
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [src, dst] = pairs[idx];
        std::vector<Vertex> path;
        if (src == dst) {
            path.push_back(src);
        } else {
            std::fill(parent.begin(), parent.end(), kNoVertex);
            std::deque<Vertex> queue{src};
            dist[src] = 0;
            parent[src] = src;
            bool found = false;
            while (!queue.empty() && !found) {
                const Vertex v = queue.front();
                queue.pop_front();
                if (dist[v] + 1 > max_len) {
                    continue;
                }
                const VertexSet& nbrs = g.neighbors(v);
                for (Vertex u = nbrs.first(); u != kNoVertex; u = nbrs.next(u)) {
                    if (!host.contains(u) || parent[u] != kNoVertex) {
                        continue;
                    }
                    if (u == dst) {
                        parent[u] = v;
                        found = true;
                        break;
                    }
                    // interior vertices must leave room for the final hop
                    if (blocked.contains(u) || dist[v] + 2 > max_len) {
                        continue;
                    }
                    parent[u] = v;
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
            if (!found) {
                throw RoutingError(idx, pairs[idx]);
            }
            for (Vertex v = dst; v != src; v = parent[v]) {
                path.push_back(v);
            }
            path.push_back(src);
            std::reverse(path.begin(), path.end());
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            blocked.insert(path[i]);
        }
        for (Vertex v : path) {
            out.used.insert(v);
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

nlohmann::json to_json(const SolveTrace& t, bool with_timings) {
    nlohmann::json j;
    j["kind"] = t.kind;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : t.stages) {
        nlohmann::json rec{{"stage", s.name}};
        if (with_timings) {
            rec["ms"] = s.millis;
        }
        stages.push_back(rec);
    }
    j["stages"] = stages;
    j["exceptional"] = t.exceptional;
    j["low_degree"] = t.low_degree;
    if (t.kind == "sparse") {
        j["transitions"] = t.transitions;
        j["bridge_matching_size"] = t.bridge_matching_size;
        j["bridges_used"] = t.bridges_used;
    } else {
        j["imbalance"] = t.imbalance;
        j["balancing_moves"] = t.balancing_moves;
        nlohmann::json m = nlohmann::json::array();
        for (const auto& [u, w] : t.balancing_matching) {
            m.push_back({u, w});
        }
        j["balancing_matching"] = m;
        j["low_inner_degree"] = t.low_inner_degree;
        j["parity_vertex_added"] = t.parity_vertex_added;
    }
    j["path_lengths"] = t.path_lengths;
    j["retries"] = t.retries;
    j["certificate"] = t.certified ? "verified" : "unverified";
    return j;
}

ExtremalSolution solve_extremal(const Graph& g, const VertexSet& a, const VertexSet& b, const OrderedSequence& s,
                                const ExtremalOptions& opts) {
    const Classification c = classify_extremal(g, a, b, opts.params);
    switch (c.label) {
    case ExtremalCase::Dense:
        return solve_extremal_dense(g, c.a, c.b, s, opts);
    case ExtremalCase::Sparse:
        return solve_extremal_sparse(g, c.a, c.b, s, opts);
    case ExtremalCase::Impossible:
        break;
    }
    throw HypothesisError("overlap |A n B| = " + std::to_string(c.overlap) +
                          " falls in the middle band that the degree bound rules out");
}

namespace detail {

std::string common_hypothesis_failure(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t k,
                                      const ExtremalParams& params) {
    if (a.intersects(b)) {
        return "A and B overlap";
    }
    const auto n = static_cast<std::int64_t>(g.order());
    const Rational lower = (Rational(1) - params.alpha) * Rational(n, 2);
    if (Rational(static_cast<std::int64_t>(a.count())) < lower ||
        Rational(static_cast<std::int64_t>(b.count())) < lower) {
        return "a cluster is smaller than (1-alpha) n/2";
    }
    if (degree_profile(g).min < ordered_degree_bound(g.order(), k)) {
        return "minimum degree below ceil(n/2) + floor(k/2) - 1";
    }
    return {};
}

nlohmann::json sets_snapshot(const VertexSet& a, const VertexSet& b, std::span<const Vertex> partial) {
    return nlohmann::json{{"A", a.to_vector()},
                          {"B", b.to_vector()},
                          {"partial", std::vector<Vertex>(partial.begin(), partial.end())}};
}

namespace {

void splice(std::vector<Vertex>& cycle, std::size_t after, std::span<const Vertex> inner) {
    cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(after) + 1, inner.begin(), inner.end());
}

std::optional<std::vector<Vertex>> host_path(const Graph& g, const VertexSet& members, Vertex from, Vertex to,
                                             std::uint64_t seed) {
    const InducedSubgraph sub = induced_subgraph(g, members);
    PathSearchOptions opts;
    opts.seed = seed;
    const auto found = find_hamiltonian_path(sub.graph, sub.from_host[from], sub.from_host[to], opts);
    if (!found.path) {
        return std::nullopt;
    }
    std::vector<Vertex> out;
    for (Vertex v : found.path->order) {
        out.push_back(sub.to_host[v]);
    }
    return out;
}

} // namespace

bool absorb_side(const Graph& g, const VertexSet& side, std::vector<Vertex>& cycle, const Graph& routing_graph,
                 std::size_t retries, std::uint64_t seed, SolveTrace& trace) {
    const std::size_t n = g.order();
    VertexSet on_cycle(n, std::span<const Vertex>(cycle));
    const VertexSet rest = side - on_cycle;
    if (rest.empty()) {
        return true;
    }
    const std::size_t len = cycle.size();
    std::size_t attempts = 0;

    // Consecutive cycle vertices p, q of this side: Hamiltonian p-q path through rest + {p, q}.
    for (std::size_t i = 0; i < len && attempts < retries; ++i) {
        const Vertex p = cycle[i];
        const Vertex q = cycle[(i + 1) % len];
        if (!side.contains(p) || !side.contains(q)) {
            continue;
        }
        VertexSet members = rest;
        members.insert(p);
        members.insert(q);
        ++attempts;
        if (auto path = host_path(routing_graph, members, p, q, seed + attempts)) {
            splice(cycle, i, std::span<const Vertex>(*path).subspan(1, path->size() - 2));
            trace.retries += attempts - 1;
            return true;
        }
    }

    // Otherwise hang the rest off two distinct neighbours y_i ~ x_i and y_j ~ x_j of a consecutive pair.
    for (std::size_t i = 0; i < len && attempts < 2 * retries; ++i) {
        const Vertex xi = cycle[i];
        const Vertex xj = cycle[(i + 1) % len];
        const VertexSet ni = routing_graph.neighbors(xi) & rest;
        const VertexSet nj = routing_graph.neighbors(xj) & rest;
        if (rest.count() == 1) {
            if (!ni.empty() && !nj.empty()) {
                const Vertex y = rest.first();
                splice(cycle, i, std::span<const Vertex>(&y, 1));
                return true;
            }
            continue;
        }
        for (Vertex yi = ni.first(); yi != kNoVertex && attempts < 2 * retries; yi = ni.next(yi)) {
            const Vertex yj = nj.first() == yi ? nj.next(yi) : nj.first();
            if (yj == kNoVertex) {
                continue;
            }
            ++attempts;
            if (auto path = host_path(routing_graph, rest, yi, yj, seed + attempts)) {
                splice(cycle, i, *path);
                trace.retries += attempts - 1;
                return true;
            }
            break;
        }
    }
    trace.retries += attempts;
    return false;
}

} // namespace detail
} // namespace kord
