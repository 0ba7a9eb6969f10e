#include <doctest.h>

#include <sstream>

#include "kordered/constructions.hpp"
#include "kordered/errors.hpp"
#include "kordered/graph.hpp"
#include "kordered/graph6.hpp"
#include "kordered/rational.hpp"
#include "oracles.hpp"

using namespace kord;

namespace {

void check_simple(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        CHECK(g.neighbors(u).universe() == g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
}

std::vector<Vertex> members(const VertexSet& s) { return s.to_vector(); }

} // namespace

TEST_CASE("vertex set operations") {
    VertexSet s(130, {0, 5, 64, 129});
    CHECK(s.count() == 4);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK(s.first() == 0);
    CHECK(s.next(5) == 64);
    CHECK(s.next(129) == kNoVertex);
    const VertexSet t = VertexSet::range(130, 60, 70);
    CHECK((s & t).to_vector() == std::vector<Vertex>{64});
    CHECK((s - t).count() == 3);
    CHECK((s | t).count() == 13);
    CHECK(s.complement().count() == 126);
    CHECK_FALSE(s.complement().contains(129));
    CHECK(VertexSet(130, {5, 64}).is_subset_of(s));
    CHECK_THROWS_AS(s.insert(130), PreconditionError);
    s.erase(5);
    CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
    CHECK(VertexSet(10).first() == kNoVertex);
}

TEST_CASE("degree profile") {
    auto k5 = degree_profile(Graph::complete(5));
    CHECK(k5.min == 4);
    CHECK(k5.max == 4);
    CHECK(std::all_of(k5.degrees.begin(), k5.degrees.end(), [](std::size_t d) { return d == 4; }));
    auto c6 = degree_profile(Graph::cycle(6));
    CHECK(c6.min == 2);
    CHECK(c6.max == 2);
    CHECK(degree_profile(build_sharpness_graph(10, 4).graph).min == 5);
}

TEST_CASE("edges between two sets") {
    const Graph k5 = Graph::complete(5);
    CHECK(edges_between(k5, VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})) == 6);
    CHECK(edges_between(Graph::empty(6), VertexSet(6, {0, 1}), VertexSet(6, {2, 3})) == 0);
    CHECK(edges_between(Graph::cycle(6), VertexSet(6, {0, 1}), VertexSet(6, {2, 3})) == 1);
    CHECK_THROWS_AS(edges_between(k5, VertexSet(5, {0, 1}), VertexSet(5, {1, 2})), PreconditionError);
}

TEST_CASE("edges between matches a double loop on small random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 11;
        const Graph g = random_graph(n, 1 + seed % 4, 5, seed);
        const auto order = random_sequence(n, n, seed + 1000).vertices;
        const std::size_t cut = 1 + seed % (n - 1);
        const std::vector<Vertex> a(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut));
        const std::vector<Vertex> b(order.begin() + static_cast<std::ptrdiff_t>(cut), order.end());
        const VertexSet sa(n, std::span<const Vertex>(a));
        const VertexSet sb(n, std::span<const Vertex>(b));
        CHECK(edges_between(g, sa, sb) == oracle::edges_between(g, a, b));
        CHECK(edges_between(g, sb, sa) == edges_between(g, sa, sb));
        const Rational d = density(g, sa, sb);
        CHECK(d == density(g, sb, sa));
        CHECK(d >= Rational(0));
        CHECK(d <= Rational(1));
    }
}

TEST_CASE("density") {
    GraphBuilder kb(12);
    GraphBuilder pm(12);
    for (Vertex u = 0; u < 6; ++u) {
        for (Vertex v = 6; v < 12; ++v) {
            kb.add_edge(u, v);
        }
        pm.add_edge(u, u + 6);
    }
    const VertexSet a = VertexSet::range(12, 0, 6);
    const VertexSet b = VertexSet::range(12, 6, 12);
    CHECK(density(kb.build(), a, b) == Rational(1));
    CHECK(density(pm.build(), a, b) == Rational(1, 6));
    CHECK_THROWS_AS(density(kb.build(), VertexSet(12), b), DomainError);

    const SharpnessGraph sg = build_sharpness_graph(10, 4);
    const std::size_t cross = oracle::edges_between(sg.graph, members(sg.u), members(sg.w));
    CHECK(cross == 13);
    CHECK(density(sg.graph, sg.u, sg.w) == Rational(13, 25));
}

TEST_CASE("induced subgraph") {
    const auto k3 = induced_subgraph(Graph::complete(5), VertexSet(5, {1, 3, 4}));
    CHECK(k3.graph == Graph::complete(3));
    CHECK(k3.to_host == std::vector<Vertex>{1, 3, 4});
    CHECK(k3.from_host[3] == 1);
    CHECK(k3.from_host[0] == kNoVertex);
    CHECK(induced_subgraph(Graph::cycle(6), VertexSet(6, {0, 1, 2})).graph == Graph::path(3));
    const Graph g = random_graph(9, 1, 2, 7);
    CHECK(induced_subgraph(g, g.vertices()).graph == g);
    CHECK_THROWS_AS(induced_subgraph(g, VertexSet(9)), DomainError);
}

TEST_CASE("graph6 known strings") {
    CHECK(decode_graph6("D~{") == Graph::complete(5));
    CHECK(encode_graph6(Graph::complete(5)) == "D~{");
    // n = 5 with edges 0-2, 0-4, 1-3, 3-4: upper triangle column-wise is 0100101001 -> "DQc".
    const std::vector<Edge> e{{0, 2}, {0, 4}, {1, 3}, {3, 4}};
    const Graph g = Graph::from_edges(5, e);
    CHECK(encode_graph6(g) == "DQc");
    CHECK(decode_graph6(">>graph6<<DQc\n") == g);
    CHECK(encode_graph6(Graph::empty(0)) == "?");
    CHECK(decode_graph6("?").order() == 0);
}

TEST_CASE("graph6 round trip") {
    for (std::size_t n : {1u, 2u, 6u, 13u, 62u, 63u, 64u, 100u}) {
        const Graph g = random_graph(n, 1, 3, n);
        const std::string s = encode_graph6(g);
        const Graph back = decode_graph6(s);
        CHECK(back == g);
        CHECK(encode_graph6(back) == s);
        check_simple(back);
        CHECK((n >= 63) == (s[0] == '~'));
    }
}

TEST_CASE("graph6 errors carry byte offsets") {
    try {
        decode_graph6("D~");
        FAIL("truncated input accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        decode_graph6("D~ {");
        FAIL("invalid byte accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(decode_graph6("D~{?"), ParseError);
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    // Last byte of K5 is 111100; setting a padding bit must be rejected.
    CHECK_THROWS_AS(decode_graph6("D~|"), ParseError);
}

TEST_CASE("edge list round trip") {
    const Graph g = random_graph(15, 1, 4, 3);
    std::istringstream in(write_edge_list(g));
    CHECK(read_edge_list(in) == g);
    std::istringstream isolated("# n 4\n0 1\n");
    CHECK(read_edge_list(isolated).order() == 4);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational::parse("0.3") == Rational(3, 10));
    CHECK(Rational::parse("3/10") == Rational(3, 10));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("abc"));
    // sqrt(1/4) * 10 = 5, (1/16)^(1/4) * 8 = 4.
    CHECK(compare_with_root(Rational(5), Rational(1, 4), 2, Rational(10)) == std::strong_ordering::equal);
    CHECK(compare_with_root(Rational(4), Rational(1, 16), 4, Rational(8)) == std::strong_ordering::equal);
    CHECK(compare_with_root(Rational(3), Rational(1, 10), 2, Rational(10)) == std::strong_ordering::less);
    CHECK(compare_with_root(Rational(4), Rational(1, 10), 2, Rational(10)) == std::strong_ordering::greater);
}

TEST_CASE("graph constructors are simple graphs") {
    check_simple(Graph::complete(7));
    check_simple(Graph::cycle(9));
    check_simple(Graph::path(4));
    check_simple(build_sharpness_graph(12, 5).graph);
    CHECK(Graph::cycle(6).size() == 6);
    CHECK(Graph::path(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(GraphBuilder(3).add_edge(1, 1), PreconditionError);
}
