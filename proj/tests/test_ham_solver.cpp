#include <doctest.h>

#include <set>

#include "kordered/constructions.hpp"
#include "kordered/errors.hpp"
#include "kordered/ham_solver.hpp"
#include "kordered/scycle_dp.hpp"
#include "oracles.hpp"

using namespace kord;

namespace {

Graph complete_bipartite(std::size_t m) {
    GraphBuilder b(2 * m);
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = 0; v < m; ++v) {
            b.add_edge(u, static_cast<Vertex>(m + v));
        }
    }
    return b.build();
}

OrderedSequence seq(std::initializer_list<Vertex> vs) { return OrderedSequence{std::vector<Vertex>(vs)}; }

} // namespace

TEST_CASE("S-cycles on C6") {
    const Graph c6 = Graph::cycle(6);
    const auto found = find_s_cycle(c6, seq({0, 2, 4}));
    REQUIRE(found);
    CHECK(verify_s_cycle(c6, seq({0, 2, 4}), *found).ok());
    CHECK_FALSE(find_s_cycle(c6, seq({0, 2, 1, 3})));
    CHECK_FALSE(oracle::s_cycle_exists(c6, {0, 2, 1, 3}));
    CHECK(find_s_cycle(c6, seq({0, 4, 2}))); // reverse direction is accepted
}

TEST_CASE("find_s_cycle rejects invalid sequences") {
    const Graph c6 = Graph::cycle(6);
    CHECK_THROWS_AS(find_s_cycle(c6, seq({0, 0})), PreconditionError);
    CHECK_THROWS_AS(find_s_cycle(c6, seq({0, 9})), PreconditionError);
    CHECK_THROWS_AS(find_s_cycle(c6, seq({0})), PreconditionError);
    CHECK_THROWS_AS(find_s_cycle(Graph::complete(10), seq({0, 1}), ExactOptions{8, DpKernel::Auto}),
                    PreconditionError);
}

TEST_CASE("cycle certificates report their defect") {
    const Graph c6 = Graph::cycle(6);
    const HamCycle c{{0, 1, 2, 3, 4, 5}};
    CHECK(verify_hamiltonian_cycle(c6, c).ok());
    CHECK(verify_s_cycle(c6, seq({0, 2, 1, 3}), c).defect == CycleDefect::OrderViolated);
    CHECK(verify_s_cycle(c6, seq({3, 1}), c).ok());
    CHECK(verify_hamiltonian_cycle(c6, HamCycle{{0, 1, 2, 4, 3, 5}}).defect == CycleDefect::NonEdge);
    CHECK(verify_hamiltonian_cycle(c6, HamCycle{{0, 1, 2, 3, 4}}).defect == CycleDefect::WrongLength);
    CHECK(verify_hamiltonian_cycle(c6, HamCycle{{0, 1, 2, 3, 4, 4}}).defect == CycleDefect::MissingVertex);
    CHECK(to_string(CycleDefect::NonEdge) == "non-edge");
}

TEST_CASE("find_s_cycle agrees with cycle enumeration") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 3 + seed % 7;
        const std::size_t k = 2 + seed % std::min<std::size_t>(4, n - 1);
        const Graph g = random_graph(n, 5 + seed % 4, 10, seed);
        const OrderedSequence s = random_sequence(n, k, seed + 99);
        const auto c = find_s_cycle(g, s);
        CHECK(c.has_value() == oracle::s_cycle_exists(g, s.vertices));
        if (c) {
            CHECK(verify_s_cycle(g, s, *c).ok());
        }
    }
}

TEST_CASE("dihedral invariance of S-cycle existence") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 6 + seed % 4;
        const Graph g = random_graph(n, 6, 10, seed + 500);
        auto v = random_sequence(n, 4, seed).vertices;
        const bool base = find_s_cycle(g, OrderedSequence{v}).has_value();
        for (std::size_t r = 1; r < v.size(); ++r) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
            CHECK(find_s_cycle(g, OrderedSequence{v}).has_value() == base);
        }
        std::reverse(v.begin(), v.end());
        CHECK(find_s_cycle(g, OrderedSequence{v}).has_value() == base);
    }
}

TEST_CASE("serial and layered DP kernels build identical tables") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const std::size_t n = 12 + seed % 8;
        const Graph g = random_graph(n, 4, 10, seed + 7);
        const OrderedSequence s = random_sequence(n, 2 + seed % 5, seed);
        const dp::Problem p = dp::cycle_problem(g, s.vertices);
        std::vector<std::uint32_t> serial;
        std::vector<std::uint32_t> layered;
        dp::solve_serial(p, serial);
        dp::solve_layered(p, layered);
        CHECK(serial == layered);
        const dp::Problem q = dp::path_problem(g, 0, static_cast<Vertex>(n - 1));
        dp::solve_serial(q, serial);
        dp::solve_layered(q, layered);
        CHECK(serial == layered);
    }
    const Graph g = random_graph(16, 5, 10, 3);
    const OrderedSequence s{{0, 5, 9, 12}};
    const auto a = find_s_cycle(g, s, ExactOptions{24, DpKernel::Serial});
    const auto b = find_s_cycle(g, s, ExactOptions{24, DpKernel::Layered});
    CHECK(a.has_value() == b.has_value());
    if (a && b) {
        CHECK(a->order == b->order);
    }
}

TEST_CASE("Hamiltonian cycle search") {
    CHECK(find_hamiltonian_cycle(Graph::cycle(7)));
    CHECK_FALSE(find_hamiltonian_cycle(Graph::path(7)));
    CHECK_FALSE(find_hamiltonian_cycle(Graph::complete(2)));
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Graph g = random_graph(4 + seed % 7, 1, 2, seed);
        const auto c = find_hamiltonian_cycle(g);
        CHECK(c.has_value() == oracle::is_hamiltonian(g));
        if (c) {
            CHECK(verify_hamiltonian_cycle(g, *c).ok());
        }
    }
}

TEST_CASE("canonical sequence enumeration covers each dihedral class once") {
    for (std::size_t n : {4u, 5u, 6u}) {
        for (std::size_t k = 2; k <= n; ++k) {
            std::set<std::vector<Vertex>> classes;
            std::size_t visited = 0;
            for_each_canonical_sequence(n, k, [&](const std::vector<Vertex>& s) {
                ++visited;
                // Orbit representative: minimum over rotations and reversals.
                std::vector<Vertex> best = s;
                std::vector<Vertex> t = s;
                for (int flip = 0; flip < 2; ++flip) {
                    for (std::size_t r = 0; r < k; ++r) {
                        std::rotate(t.begin(), t.begin() + 1, t.end());
                        best = std::min(best, t);
                    }
                    std::reverse(t.begin(), t.end());
                }
                CHECK(best == s);
                classes.insert(best);
                return true;
            });
            std::size_t perms = 1;
            for (std::size_t i = 0; i < k; ++i) {
                perms *= n - i;
            }
            const std::size_t orbit = k >= 3 ? 2 * k : k;
            CHECK(visited == classes.size());
            CHECK(visited == perms / orbit);
        }
    }
}

TEST_CASE("k-orderedness") {
    const Graph c6 = Graph::cycle(6);
    CHECK(is_k_ordered(c6, 3).ordered);
    const auto r = is_k_ordered(c6, 4);
    CHECK_FALSE(r.ordered);
    REQUIRE(r.witness);
    CHECK_FALSE(find_s_cycle(c6, *r.witness));
    CHECK_FALSE(oracle::s_cycle_exists(c6, r.witness->vertices));
    CHECK(r.witness->vertices == std::vector<Vertex>{0, 1, 3, 2});
    for (std::size_t n = 3; n <= 8; ++n) {
        CHECK(is_k_ordered(Graph::complete(n), n).ordered);
    }
    CHECK_THROWS_AS(is_k_ordered(Graph::path(5), 3), NotHamiltonianError);
    CHECK_THROWS_AS(is_k_ordered(c6, 7), PreconditionError);
    CHECK_THROWS_AS(is_k_ordered(c6, 1), PreconditionError);
}

TEST_CASE("parallel and serial k-orderedness agree, including the witness") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 6 + seed % 4;
        const Graph g = random_graph_min_degree(n, n / 2 + seed % 3, seed);
        if (!oracle::is_hamiltonian(g)) {
            continue;
        }
        for (std::size_t k = 2; k <= std::min<std::size_t>(n, 6); ++k) {
            const auto par = is_k_ordered(g, k, KOrderedOptions{24, true, 7});
            const auto ser = reference::is_k_ordered_serial(g, k);
            CHECK(par.ordered == ser.ordered);
            CHECK(par.witness == ser.witness);
            if (par.witness) {
                CHECK_FALSE(oracle::s_cycle_exists(g, par.witness->vertices));
            }
        }
    }
}

TEST_CASE("K_n minus an edge is not n-ordered") {
    GraphBuilder b(Graph::complete(6));
    b.remove_edge(0, 1);
    const auto r = is_k_ordered(b.build(), 6);
    CHECK_FALSE(r.ordered);
}

TEST_CASE("Posa conditions") {
    CHECK(posa_condition(Graph::complete(5)));
    CHECK_FALSE(posa_condition(Graph::cycle(6)));
    CHECK_FALSE(posa_condition(complete_bipartite(4)));
    CHECK_THROWS_AS(posa_condition(Graph::complete(2)), PreconditionError);

    const VertexSet a4 = VertexSet::range(8, 0, 4);
    const VertexSet b4 = VertexSet::range(8, 4, 8);
    CHECK(bipartite_posa_condition(complete_bipartite(4), a4, b4));
    GraphBuilder pm(8);
    for (Vertex i = 0; i < 4; ++i) {
        pm.add_edge(i, i + 4);
    }
    CHECK_FALSE(bipartite_posa_condition(pm.build(), a4, b4));
    GraphBuilder km(complete_bipartite(6));
    for (Vertex i = 0; i < 6; ++i) {
        km.remove_edge(i, i + 6);
    }
    CHECK(bipartite_posa_condition(km.build(), VertexSet::range(12, 0, 6), VertexSet::range(12, 6, 12)));
    CHECK_THROWS_AS(bipartite_posa_condition(complete_bipartite(4), VertexSet::range(8, 0, 3), b4),
                    PreconditionError);
}

TEST_CASE("Hamiltonian paths between fixed endpoints") {
    const Graph k6 = Graph::complete(6);
    for (Vertex x = 0; x < 6; ++x) {
        for (Vertex y = 0; y < 6; ++y) {
            if (x != y) {
                const auto r = find_hamiltonian_path(k6, x, y);
                REQUIRE(r.path);
                CHECK(is_hamiltonian_path(k6, *r.path));
                CHECK(r.path->front() == x);
                CHECK(r.path->back() == y);
            }
        }
    }
    const Graph p4 = Graph::path(4);
    CHECK(find_hamiltonian_path(p4, 0, 3).path);
    const auto none = find_hamiltonian_path(p4, 1, 2);
    CHECK_FALSE(none.path);
    CHECK(none.authoritative);
    CHECK_THROWS_AS(find_hamiltonian_path(p4, 1, 1), PreconditionError);

    PathSearchOptions no_exact;
    no_exact.exact_fallback = false;
    no_exact.restarts = 3;
    const auto inconclusive = find_hamiltonian_path(p4, 1, 2, no_exact);
    CHECK_FALSE(inconclusive.path);
    CHECK_FALSE(inconclusive.authoritative);
}

TEST_CASE("path search agrees with exhaustive search on small graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 4 + seed % 7;
        const Graph g = random_graph(n, 1, 2, seed + 40);
        const Vertex x = static_cast<Vertex>(seed % n);
        const Vertex y = static_cast<Vertex>((seed / 3 + 1 + x) % n);
        if (x == y) {
            continue;
        }
        const auto r = find_hamiltonian_path(g, x, y);
        CHECK(r.authoritative);
        CHECK(r.path.has_value() == oracle::hamiltonian_path_exists(g, x, y));
        if (r.path) {
            CHECK(is_hamiltonian_path(g, *r.path));
        }
    }
}

TEST_CASE("rotation-extension alone finds paths in dense graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph_min_degree(60, 36, seed);
        PathSearchOptions opts;
        opts.exact_fallback = false;
        opts.seed = seed;
        const auto r = find_hamiltonian_path(g, 0, 59, opts);
        REQUIRE(r.path);
        CHECK(r.stage == PathStage::RotationExtension);
        CHECK(is_hamiltonian_path(g, *r.path));
    }
}

TEST_CASE("Posa-condition graphs are Hamiltonian-connected") {
    std::size_t tested = 0;
    for (std::uint64_t seed = 0; seed < 400 && tested < 30; ++seed) {
        const std::size_t n = 5 + seed % 6;
        const Graph g = random_graph_min_degree(n, n / 2 + 1, seed);
        if (!posa_condition(g)) {
            continue;
        }
        ++tested;
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = x + 1; y < n; ++y) {
                CHECK(oracle::hamiltonian_path_exists(g, x, y));
                CHECK(find_hamiltonian_path(g, x, y).path);
            }
        }
    }
    CHECK(tested > 0);
}
