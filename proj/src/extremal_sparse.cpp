#include <algorithm>
#include <optional>

#include "extremal_detail.hpp"
#include "kordered/errors.hpp"
#include "kordered/matching.hpp"

namespace kord {

namespace {

struct Bridge {
    Vertex a;
    Vertex b;
    bool used = false;
};

class SparseAssembly {
public:
    SparseAssembly(const Graph& g, const ClusterPair& pair, const OrderedSequence& s, SolveTrace& trace)
        : g_(g), a_(pair.a), b_(pair.b), s_(s), trace_(trace), in_s_(g.order(), std::span<const Vertex>(s.vertices)),
          used_(g.order()) {}

    std::size_t transitions() const {
        std::size_t t = 0;
        for (std::size_t i = 0; i < s_.size(); ++i) {
            t += side_a(s_.vertices[i]) != side_a(s_.vertices[(i + 1) % s_.size()]);
        }
        return t;
    }

    // Bridges for the S-vertices that sit at a transition, plus `spare` bridges avoiding S.
    void choose_bridges(const Matching& m, std::size_t spare) {
        const std::size_t k = s_.size();
        VertexSet transit(g_.order());
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex v = s_.vertices[i];
            if (side_a(v) != side_a(s_.vertices[(i + 1) % k]) || side_a(v) != side_a(s_.vertices[(i + k - 1) % k])) {
                transit.insert(v);
            }
        }
        for (const auto& [u, w] : m.edges) {
            const Vertex in_a = a_.contains(u) ? u : w;
            const Vertex in_b = in_a == u ? w : u;
            if (transit.contains(in_a) || transit.contains(in_b)) {
                bridges_.push_back({in_a, in_b});
            } else if (!in_s_.contains(in_a) && !in_s_.contains(in_b) && spare > 0) {
                bridges_.push_back({in_a, in_b});
                --spare;
            }
        }
    }

    std::vector<Vertex> assemble() {
        const std::size_t k = s_.size();
        cycle_.assign(1, s_.vertices.front());
        used_.insert(s_.vertices.front());
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex cur = s_.vertices[i];
            const Vertex nxt = s_.vertices[(i + 1) % k];
            const bool closing = i + 1 == k;
            if (side_a(cur) == side_a(nxt)) {
                route(cur, nxt, closing);
                continue;
            }
            if (Bridge* br = bridge_at(cur)) {
                use(*br);
                const Vertex far = other_end(*br, cur);
                append(far);
                route(far, nxt, closing);
            } else if (Bridge* bn = bridge_at(nxt)) {
                use(*bn);
                const Vertex near = other_end(*bn, nxt);
                route(cur, near, false);
                if (!closing) {
                    append(nxt);
                }
            } else if (Bridge* free = free_bridge()) {
                use(*free);
                const Vertex near = side_a(cur) ? free->a : free->b;
                const Vertex far = side_a(cur) ? free->b : free->a;
                route(cur, near, false);
                append(far);
                route(far, nxt, closing);
            } else {
                throw SolverError("assembly", "ran out of bridges at S-position " + std::to_string(i + 1),
                                  detail::sets_snapshot(a_, b_, cycle_));
            }
        }
        return cycle_;
    }

private:
    bool side_a(Vertex v) const { return a_.contains(v); }

    Bridge* bridge_at(Vertex v) {
        for (auto& br : bridges_) {
            if (!br.used && (br.a == v || br.b == v)) {
                return &br;
            }
        }
        return nullptr;
    }

    Bridge* free_bridge() {
        for (auto& br : bridges_) {
            if (!br.used && !in_s_.contains(br.a) && !in_s_.contains(br.b)) {
                return &br;
            }
        }
        return nullptr;
    }

    static Vertex other_end(const Bridge& br, Vertex v) { return br.a == v ? br.b : br.a; }

    void use(Bridge& br) {
        br.used = true;
        ++trace_.bridges_used;
    }

    void append(Vertex v) {
        cycle_.push_back(v);
        used_.insert(v);
    }

    // Short path inside the common side of p and q; appends everything after p
    // (the final q is left out when it closes the cycle back to v_1).
    void route(Vertex p, Vertex q, bool closing) {
        const VertexSet& side = side_a(p) ? a_ : b_;
        VertexSet forbidden = used_ | in_s_;
        for (const auto& br : bridges_) {
            if (!br.used) {
                forbidden.insert(br.a);
                forbidden.insert(br.b);
            }
        }
        const Edge pair{p, q};
        PathSystem ps;
        try {
            ps = connecting_paths(g_, side, std::span<const Edge>(&pair, 1), 4, 1, forbidden);
        } catch (const RoutingError& e) {
            throw SolverError("assembly", e.what(), detail::sets_snapshot(a_, b_, cycle_));
        }
        const auto& path = ps.paths.front();
        trace_.path_lengths.push_back(path.size() - 1);
        const std::size_t stop = closing ? path.size() - 1 : path.size();
        for (std::size_t j = 1; j < stop; ++j) {
            append(path[j]);
        }
    }

    const Graph& g_;
    const VertexSet& a_;
    const VertexSet& b_;
    const OrderedSequence& s_;
    SolveTrace& trace_;
    VertexSet in_s_;
    VertexSet used_;
    std::vector<Bridge> bridges_;
    std::vector<Vertex> cycle_;
};

} // namespace

ExtremalSolution solve_extremal_sparse(const Graph& g, const VertexSet& a, const VertexSet& b,
                                       const OrderedSequence& s, const ExtremalOptions& opts) {
    opts.params.validate();
    validate_sequence(g, s);
    if (a.intersects(b)) {
        throw PreconditionError("solve_extremal_sparse: A and B overlap");
    }
    if (opts.check_hypotheses) {
        std::string failure = detail::common_hypothesis_failure(g, a, b, s.size(), opts.params);
        if (failure.empty() && !(density(g, a, b) < opts.params.alpha)) {
            failure = "d(A,B) is not below alpha";
        }
        if (!failure.empty()) {
            throw HypothesisError("sparse extremal case: " + failure);
        }
    }

    ExtremalSolution out;
    SolveTrace& trace = out.trace;
    trace.kind = "sparse";

    ClusterPair pair;
    {
        detail::StageTimer t(trace, "cleanup");
        pair = cleanup_sparse(g, a, b, opts.params);
        trace.exceptional = pair.exc_a.count() + pair.exc_b.count();
        trace.low_degree = pair.low_degree;
    }

    SparseAssembly assembly(g, pair, s, trace);
    {
        detail::StageTimer t(trace, "bridges");
        // H keeps the A-B edges that do not join two S-vertices.
        const VertexSet in_s(g.order(), std::span<const Vertex>(s.vertices));
        GraphBuilder h(g.order());
        pair.a.for_each([&](Vertex u) {
            (g.neighbors(u) & pair.b).for_each([&](Vertex v) {
                if (!(in_s.contains(u) && in_s.contains(v))) {
                    h.add_edge(u, v);
                }
            });
        });
        const auto bm = bipartite_matching_and_cover(h.build(), pair.a, pair.b);
        trace.bridge_matching_size = bm.matching.size();
        trace.transitions = assembly.transitions();
        if (bm.matching.size() < trace.transitions) {
            throw SolverError("bridges",
                              "bridge matching of size " + std::to_string(bm.matching.size()) + " below " +
                                  std::to_string(trace.transitions) + " transitions",
                              detail::sets_snapshot(pair.a, pair.b, {}));
        }
        assembly.choose_bridges(bm.matching, trace.transitions);
    }

    std::vector<Vertex> cycle;
    {
        detail::StageTimer t(trace, "assembly");
        cycle = assembly.assemble();
    }

    {
        detail::StageTimer t(trace, "absorb");
        for (const VertexSet* side : {&pair.a, &pair.b}) {
            if (!detail::absorb_side(g, *side, cycle, g, opts.patch_retries, opts.seed, trace)) {
                throw SolverError("absorb", "could not absorb the remaining vertices of a side",
                                  detail::sets_snapshot(pair.a, pair.b, cycle));
            }
        }
    }

    out.cycle.order = std::move(cycle);
    {
        detail::StageTimer t(trace, "certify");
        const auto check = verify_s_cycle(g, s, out.cycle);
        if (!check) {
            throw SolverError("certify", std::string(to_string(check.defect)),
                              detail::sets_snapshot(pair.a, pair.b, out.cycle.order));
        }
        trace.certified = true;
    }
    return out;
}

} // namespace kord
