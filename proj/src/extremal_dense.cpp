#include <algorithm>

#include "extremal_detail.hpp"
#include "kordered/errors.hpp"
#include "kordered/matching.hpp"

namespace kord {

namespace {

bool inner_degree_high(std::size_t deg, std::size_t side, const Rational& alpha) {
    return compare_with_root(Rational(static_cast<std::int64_t>(deg)), alpha, 4,
                             Rational(static_cast<std::int64_t>(side))) >= 0;
}

// Moves vertices x of A with deg(x, A) >= alpha^(1/4)|A| to B, largest deg(x, A) first,
// while |A| - |B| >= 2.
void balance(const Graph& g, VertexSet& a, VertexSet& b, const Rational& alpha, SolveTrace& trace) {
    while (a.count() >= b.count() + 2) {
        const std::size_t side = a.count();
        Vertex best = kNoVertex;
        std::size_t best_deg = 0;
        a.for_each([&](Vertex x) {
            const std::size_t deg = g.degree_into(x, a);
            if (inner_degree_high(deg, side, alpha) && (best == kNoVertex || deg > best_deg)) {
                best = x;
                best_deg = deg;
            }
        });
        if (best == kNoVertex) {
            return;
        }
        a.erase(best);
        b.insert(best);
        ++trace.balancing_moves;
    }
}

} // namespace

ExtremalSolution solve_extremal_dense(const Graph& g, const VertexSet& a_in, const VertexSet& b_in,
                                      const OrderedSequence& s, const ExtremalOptions& opts) {
    opts.params.validate();
    validate_sequence(g, s);
    if (a_in.intersects(b_in)) {
        throw PreconditionError("solve_extremal_dense: A and B overlap");
    }
    if (opts.check_hypotheses) {
        std::string failure = detail::common_hypothesis_failure(g, a_in, b_in, s.size(), opts.params);
        if (failure.empty() && !(density(g, a_in, b_in) > Rational(1) - opts.params.alpha)) {
            failure = "d(A,B) is not above 1 - alpha";
        }
        if (!failure.empty()) {
            throw HypothesisError("dense extremal case: " + failure);
        }
    }

    ExtremalSolution out;
    SolveTrace& trace = out.trace;
    trace.kind = "dense";
    const std::size_t n = g.order();

    VertexSet a(n);
    VertexSet b(n);
    {
        detail::StageTimer t(trace, "cleanup");
        ClusterPair pair = cleanup_dense(g, a_in, b_in, opts.params);
        trace.exceptional = pair.exc_a.count() + pair.exc_b.count();
        trace.low_degree = pair.low_degree;
        a = std::move(pair.a);
        b = std::move(pair.b);
    }

    {
        detail::StageTimer t(trace, "balance");
        if (a.count() < b.count()) {
            std::swap(a, b);
        }
        balance(g, a, b, opts.params.alpha, trace);
        trace.imbalance = a.count() - b.count();
        std::size_t max_inner = 0;
        a.for_each([&](Vertex x) { max_inner = std::max(max_inner, g.degree_into(x, a)); });
        trace.low_inner_degree = !inner_degree_high(max_inner, a.count(), opts.params.alpha);
    }

    const VertexSet in_s(n, std::span<const Vertex>(s.vertices));
    const std::size_t r = trace.imbalance;
    std::vector<Edge> m;
    {
        detail::StageTimer t(trace, "matching");
        if (r > 0) {
            const VertexSet pool = a - in_s;
            if (pool.empty()) {
                throw SolverError("matching", "no free A-vertices for the matching", detail::sets_snapshot(a, b, {}));
            }
            const auto sub = induced_subgraph(g, pool);
            const Matching found = maximum_matching(sub.graph);
            if (found.size() < r) {
                throw SolverError("matching",
                                  "G|_A has a maximum matching of size " + std::to_string(found.size()) +
                                      ", need " + std::to_string(r),
                                  detail::sets_snapshot(a, b, {}));
            }
            for (std::size_t i = 0; i < r; ++i) {
                m.emplace_back(sub.to_host[found.edges[i].first], sub.to_host[found.edges[i].second]);
            }
        }
        trace.balancing_matching = m;
    }

    const Graph bip = bipartite_restriction(g, a, b);
    std::vector<Vertex> path;
    {
        detail::StageTimer t(trace, "s-path");
        // u_1, P(w_1, u_2), ..., P(w_r, v_1), P(v_1, v_2), ..., P(v_{k-1}, v_k)
        std::vector<Edge> pairs;
        VertexSet forbidden = in_s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            forbidden.insert(m[i].first);
            forbidden.insert(m[i].second);
            const Vertex next = i + 1 < m.size() ? m[i + 1].first : s.vertices.front();
            pairs.emplace_back(m[i].second, next);
        }
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            pairs.emplace_back(s.vertices[i], s.vertices[i + 1]);
        }
        PathSystem ps;
        try {
            ps = connecting_paths(bip, VertexSet::full(n), pairs, 5, r + s.size() - 1, forbidden);
        } catch (const RoutingError& e) {
            throw SolverError("s-path", e.what(), detail::sets_snapshot(a, b, {}));
        }
        path.push_back(m.empty() ? s.vertices.front() : m.front().first);
        for (const auto& p : ps.paths) {
            // Matching pairs start at w_i after u_i; S pairs start where the path already ends.
            const std::size_t skip = p.front() == path.back() ? 1 : 0;
            path.insert(path.end(), p.begin() + static_cast<std::ptrdiff_t>(skip), p.end());
            trace.path_lengths.push_back(p.size() - 1);
        }
    }

    {
        detail::StageTimer t(trace, "parity");
        const Vertex first = path.front();
        const Vertex last = path.back();
        if (a.contains(first) == a.contains(last)) {
            VertexSet on_path(n, std::span<const Vertex>(path));
            const VertexSet other = (a.contains(last) ? b : a) - on_path;
            const VertexSet cand = bip.neighbors(last) & other;
            if (cand.empty()) {
                throw SolverError("parity", "no free neighbour on the other side of the path end",
                                  detail::sets_snapshot(a, b, path));
            }
            path.push_back(cand.first());
            trace.parity_vertex_added = true;
        }
    }

    {
        detail::StageTimer t(trace, "closure");
        const VertexSet on_path(n, std::span<const Vertex>(path));
        VertexSet rest = on_path.complement();
        rest.insert(path.front());
        rest.insert(path.back());
        if ((rest & a).count() != (rest & b).count()) {
            throw SolverError("closure",
                              "remainder is unbalanced: " + std::to_string((rest & a).count()) + " vs " +
                                  std::to_string((rest & b).count()),
                              detail::sets_snapshot(a, b, path));
        }
        const auto sub = induced_subgraph(bip, rest);
        const Vertex x = sub.from_host[path.back()];
        const Vertex y = sub.from_host[path.front()];
        std::optional<HamPath> closing;
        for (std::size_t attempt = 0; attempt <= opts.patch_retries && !closing; ++attempt) {
            PathSearchOptions po;
            po.seed = opts.seed + attempt * 0x9e3779b97f4a7c15ull;
            po.exact_fallback = attempt == opts.patch_retries;
            auto res = find_hamiltonian_path(sub.graph, x, y, po);
            if (res.path) {
                closing = std::move(res.path);
            } else if (res.authoritative) {
                break;
            } else {
                ++trace.retries;
            }
        }
        if (!closing) {
            throw SolverError("closure", "no Hamiltonian path through the bipartite remainder",
                              detail::sets_snapshot(a, b, path));
        }
        for (std::size_t i = 1; i + 1 < closing->order.size(); ++i) {
            path.push_back(sub.to_host[closing->order[i]]);
        }
    }

    out.cycle.order = std::move(path);
    {
        detail::StageTimer t(trace, "certify");
        const auto check = verify_s_cycle(g, s, out.cycle);
        if (!check) {
            throw SolverError("certify", std::string(to_string(check.defect)),
                              detail::sets_snapshot(a, b, out.cycle.order));
        }
        trace.certified = true;
    }
    return out;
}

} // namespace kord
