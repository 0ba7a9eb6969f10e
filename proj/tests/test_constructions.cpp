#include <doctest.h>

#include "kordered/constructions.hpp"
#include "kordered/errors.hpp"
#include "kordered/ham_solver.hpp"
#include "oracles.hpp"

using namespace kord;

TEST_CASE("sharpness graph (10, 4)") {
    const SharpnessGraph sg = build_sharpness_graph(10, 4);
    CHECK(degree_profile(sg.graph).min == 5);
    CHECK(sg.u.count() == 5);
    CHECK(sg.w.count() == 5);
    CHECK(sg.witness.vertices ==
          std::vector<Vertex>{sg.u_vertex(2), sg.w_vertex(3), sg.u_vertex(3), sg.w_vertex(4)});
    CHECK(sg.witness.vertices == std::vector<Vertex>{1, 7, 2, 8});
    CHECK_FALSE(find_s_cycle(sg.graph, sg.witness));
    CHECK_FALSE(oracle::s_cycle_exists(sg.graph, sg.witness.vertices));
}

TEST_CASE("sharpness graph (9, 3)") {
    const SharpnessGraph sg = build_sharpness_graph(9, 3);
    CHECK(degree_profile(sg.graph).min == 4);
    CHECK(sg.u.count() == 4);
    CHECK(sg.w.count() == 5);
    CHECK(sg.witness.vertices == std::vector<Vertex>{sg.u_vertex(1), sg.w_vertex(2), sg.u_vertex(2)});
    CHECK_FALSE(find_s_cycle(sg.graph, sg.witness));
}

TEST_CASE("sharpness graph structure for every small (n, k)") {
    for (std::size_t n = 4; n <= 14; ++n) {
        for (std::size_t k = 2; k <= n / 2; ++k) {
            const SharpnessGraph sg = build_sharpness_graph(n, k);
            const std::size_t h = k / 2;
            CHECK(sg.u.count() == n / 2);
            CHECK(sg.w.count() == (n + 1) / 2);
            CHECK(degree_profile(sg.graph).min == (n + 1) / 2 + h - 2);
            CHECK(degree_profile(sg.graph).min + 1 == ordered_degree_bound(n, k));
            for (Vertex x = 0; x < n; ++x) {
                for (Vertex y = x + 1; y < n; ++y) {
                    const bool xu = sg.u.contains(x);
                    const bool yu = sg.u.contains(y);
                    bool expected = xu == yu;
                    if (xu != yu) {
                        const Vertex uu = xu ? x : y;
                        const Vertex ww = xu ? y : x;
                        const std::size_t i = uu + 1;
                        const std::size_t j = ww - n / 2 + 1;
                        expected = j <= h || i + 1 <= h;
                    }
                    CHECK(sg.graph.adjacent(x, y) == expected);
                }
            }
            CHECK(sg.witness.size() == k);
        }
    }
    CHECK_THROWS_AS(build_sharpness_graph(10, 6), PreconditionError);
    CHECK_THROWS_AS(build_sharpness_graph(10, 1), PreconditionError);
    CHECK_THROWS_AS(build_sharpness_graph(3, 2), PreconditionError);
}

TEST_CASE("every U-W transition of a Hamiltonian cycle meets the hub set") {
    for (std::size_t n = 6; n <= 10; ++n) {
        for (std::size_t k = 2; k <= n / 2; ++k) {
            const SharpnessGraph sg = build_sharpness_graph(n, k);
            const VertexSet hubs = sg.cross_hubs();
            bool ok = true;
            oracle::for_each_hamiltonian_cycle(sg.graph, [&](const std::vector<Vertex>& c) {
                for (std::size_t i = 0; i < c.size(); ++i) {
                    const Vertex a = c[i];
                    const Vertex b = c[(i + 1) % c.size()];
                    if (sg.u.contains(a) != sg.u.contains(b)) {
                        ok = ok && (hubs.contains(a) || hubs.contains(b));
                    }
                }
                return !ok;
            });
            CHECK(ok);
        }
    }
}

TEST_CASE("sparse cut instances") {
    const auto i1 = build_sparse_cut_instance(60, 2, 1, 5);
    CHECK(i1.min_degree == 30);
    CHECK(degree_profile(i1.graph).min == 30);
    CHECK(i1.cross_density == Rational(30, 900));
    CHECK(density(i1.graph, i1.a, i1.b) == i1.cross_density);
    const auto i2 = build_sparse_cut_instance(60, 4, 2, 5);
    CHECK(i2.min_degree == 31);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (std::size_t cut : {1u, 2u}) {
            // Even n and k = 2 cut need no lift: every vertex has exactly `cut` cross edges.
            const std::size_t n = 60 + 2 * seed;
            const auto inst = build_sparse_cut_instance(n, 2 * cut, cut, seed);
            const auto av = inst.a.to_vector();
            const auto bv = inst.b.to_vector();
            CHECK(oracle::edges_between(inst.graph, av, bv) == cut * n / 2);
            CHECK(inst.cross_density == Rational(static_cast<std::int64_t>(2 * cut), static_cast<std::int64_t>(n)));
            if (cut == 1) {
                CHECK(inst.cross_density < Rational(5, 100));
            }
            CHECK(inst.min_degree >= ordered_degree_bound(n, 2 * cut));
        }
    }
    CHECK_THROWS_AS(build_sparse_cut_instance(60, 6, 1, 1), ConstructionError);
    CHECK_THROWS_AS(build_sparse_cut_instance(60, 2, 31, 1), ConstructionError);
    const auto odd = build_sparse_cut_instance(61, 4, 2, 3);
    CHECK(odd.a.count() == 31);
    CHECK(odd.min_degree >= ordered_degree_bound(61, 4));
}

TEST_CASE("dense bipartite instances") {
    const auto d0 = build_dense_bipartite_instance(60, 2, 0, 1);
    CHECK(d0.a.count() == 30);
    CHECK(d0.b.count() == 30);
    CHECK(d0.min_degree >= 30);
    const std::size_t cross = edges_between(d0.graph, d0.a, d0.b);
    CHECK(cross >= 900 - 45);
    CHECK(cross < 900);
    const auto d1 = build_dense_bipartite_instance(61, 3, 1, 1);
    CHECK(d1.a.count() == 31);
    CHECK(d1.b.count() == 30);
    const auto inner = induced_subgraph(d1.graph, d1.a);
    CHECK(inner.graph.size() >= 1);
    CHECK(d1.min_degree >= ordered_degree_bound(61, 3));
    CHECK(d1.cross_density > Rational(9, 10));
    CHECK_THROWS_AS(build_dense_bipartite_instance(61, 3, 0, 1), ConstructionError);
    CHECK_THROWS_AS(build_dense_bipartite_instance(40, 3, 6, 1), ConstructionError);
}

TEST_CASE("random generators are deterministic and meet their targets") {
    const Graph a = random_graph_min_degree(10, 5, 42);
    CHECK(degree_profile(a).min >= 5);
    CHECK(a == random_graph_min_degree(10, 5, 42));
    CHECK(random_graph_min_degree(12, 11, 3) == Graph::complete(12));
    CHECK_THROWS_AS(random_graph_min_degree(5, 5, 1), PreconditionError);
    CHECK(random_graph(20, 1, 3, 9) == random_graph(20, 1, 3, 9));
    CHECK(random_graph(20, 0, 1, 9).size() == 0);
    CHECK(random_graph(20, 1, 1, 9) == Graph::complete(20));
    const auto s = random_sequence(10, 4, 8);
    CHECK(s == random_sequence(10, 4, 8));
    CHECK_NOTHROW(validate_sequence(Graph::complete(10), s));
}
