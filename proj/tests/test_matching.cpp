#include <doctest.h>

#include "kordered/constructions.hpp"
#include "kordered/errors.hpp"
#include "kordered/matching.hpp"
#include "oracles.hpp"

using namespace kord;

namespace {

Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, e);
}

Graph complete_bipartite(std::size_t p, std::size_t q) {
    GraphBuilder b(p + q);
    for (Vertex u = 0; u < p; ++u) {
        for (Vertex v = 0; v < q; ++v) {
            b.add_edge(u, static_cast<Vertex>(p + v));
        }
    }
    return b.build();
}

bool covers_all_cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& cover) {
    bool ok = true;
    a.for_each([&](Vertex u) {
        (g.neighbors(u) & b).for_each([&](Vertex v) { ok = ok && (cover.contains(u) || cover.contains(v)); });
    });
    return ok;
}

} // namespace

TEST_CASE("maximum matching on named graphs") {
    CHECK(maximum_matching(Graph::cycle(6)).size() == 3);
    CHECK(maximum_matching(Graph::empty(7)).size() == 0);
    const Graph p = petersen();
    CHECK(oracle::matching_number(p) == 5);
    const Matching m = maximum_matching(p);
    CHECK(m.size() == 5);
    CHECK(is_valid_matching(p, m));
    CHECK(maximum_matching(Graph::complete(7)).size() == 3);
}

TEST_CASE("maximum matching agrees with brute force for n <= 12") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 12;
        const Graph g = random_graph(n, 1 + seed % 7, 10, seed);
        const Matching m = maximum_matching(g);
        REQUIRE(is_valid_matching(g, m));
        CHECK(m.size() == oracle::matching_number(g));
        CHECK(m.edges == maximum_matching(g).edges); // deterministic
    }
}

TEST_CASE("blossom search handles odd cycles with pendant paths") {
    // A 5-cycle 0..4 with pendants 5-0 and 6-2 and a tail 7-6: an augmenting path must pass through a blossom.
    const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {6, 2}, {7, 6}};
    const Graph g = Graph::from_edges(8, e);
    CHECK(maximum_matching(g).size() == oracle::matching_number(g));
    CHECK(maximum_matching(g).size() == 4);
}

TEST_CASE("bipartite matching and Koenig cover") {
    const Graph k35 = complete_bipartite(3, 5);
    const VertexSet a = VertexSet::range(8, 0, 3);
    const VertexSet b = VertexSet::range(8, 3, 8);
    auto r = bipartite_matching_and_cover(k35, a, b);
    CHECK(r.matching.size() == 3);
    CHECK(r.cover == a);

    GraphBuilder pm(8);
    for (Vertex i = 0; i < 4; ++i) {
        pm.add_edge(i, i + 4);
    }
    auto r2 = bipartite_matching_and_cover(pm.build(), VertexSet::range(8, 0, 4), VertexSet::range(8, 4, 8));
    CHECK(r2.matching.size() == 4);

    CHECK_THROWS_AS(bipartite_matching_and_cover(k35, VertexSet(8, {0, 1}), VertexSet(8, {1, 5})), PreconditionError);
}

TEST_CASE("Koenig equality on random bipartite pairs, same-side edges ignored") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 4 + seed % 14;
        const Graph g = random_graph(n, 1 + seed % 5, 8, seed * 3 + 1);
        const auto perm = random_sequence(n, n, seed).vertices;
        const std::size_t cut = 1 + seed % (n - 1);
        const VertexSet a(n, std::span<const Vertex>(perm.data(), cut));
        const VertexSet b = a.complement();
        const auto r = bipartite_matching_and_cover(g, a, b);
        CHECK(r.cover.count() == r.matching.size());
        CHECK(covers_all_cross_edges(g, a, b, r.cover));
        CHECK(is_valid_matching(g, r.matching));
        for (const auto& [u, v] : r.matching.edges) {
            CHECK(a.contains(u) != a.contains(v));
        }
        // Oracle: nu of the bipartite restriction.
        CHECK(r.matching.size() == oracle::matching_number(bipartite_restriction(g, a, b)));
    }
}

TEST_CASE("matching lower bounds on named graphs") {
    const auto c5 = erdos_posa_check(Graph::cycle(5));
    CHECK(c5.nu == 2);
    CHECK(c5.bound == Rational(2));
    CHECK(c5.holds);
    const auto k4 = erdos_posa_check(Graph::complete(4));
    CHECK(k4.nu == 2);
    CHECK(k4.bound == Rational(3, 2));
    CHECK(k4.holds);
    const auto c6 = degree_ratio_check(Graph::cycle(6));
    CHECK(c6.bound == Rational(3, 2));
    CHECK(c6.nu == 3);
    CHECK(c6.holds);
    const auto k5 = degree_ratio_check(Graph::complete(5));
    CHECK(k5.bound == Rational(5, 4));
    CHECK(k5.nu == 2);
    const auto empty = degree_ratio_check(Graph::empty(5));
    CHECK(empty.bound == Rational(0));
    CHECK(empty.holds);
}

TEST_CASE("matching lower bounds hold on random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 2 + seed % 40;
        const Graph g = random_graph(n, 1 + seed % 9, 10, seed + 17);
        const auto a = erdos_posa_check(g);
        const auto b = degree_ratio_check(g);
        CHECK(a.holds);
        CHECK(b.holds);
        const auto prof = degree_profile(g);
        const Rational ep = std::min(Rational(static_cast<std::int64_t>(prof.min)),
                                     Rational(static_cast<std::int64_t>(n) - 1, 2));
        CHECK(a.bound == ep);
        if (prof.max > 0) {
            CHECK(b.bound == Rational(static_cast<std::int64_t>(prof.min * n),
                                      static_cast<std::int64_t>(2 * (prof.min + prof.max))));
        }
    }
}
