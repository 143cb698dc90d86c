#include <doctest.h>

#include <random>

#include "isolab/graph.hpp"
#include "isolab/graph6.hpp"
#include "isolab/named_graphs.hpp"
#include "oracles.hpp"

using namespace isolab;

TEST_CASE("closed neighborhood of a set in P4") {
    const Graph p4 = graphs::path(4);
    CHECK(closed_neighborhood(p4, VertexSet::of({1})) == VertexSet::of({0, 1, 2}));
    CHECK(closed_neighborhood(p4, VertexSet::of({0, 3})) == VertexSet::of({0, 1, 2, 3}));
    CHECK(closed_neighborhood(p4, VertexSet{}).empty());
}

TEST_CASE("deleting N[0] from C6 leaves a path on the far vertices") {
    const Graph c6 = graphs::cycle(6);
    const Deletion d = delete_vertices(c6, closed_neighborhood(c6, VertexSet::of({0})));
    REQUIRE(d.graph.n() == 3);
    CHECK(d.graph.m() == 2);
    CHECK(d.new_to_old == std::vector<int>{2, 3, 4});
    CHECK(d.old_to_new[0] == -1);
    CHECK(d.old_to_new[3] == 1);
    CHECK(d.graph.degree(1) == 2);
}

TEST_CASE("rows must be symmetric and loop free") {
    CHECK_THROWS_AS(Graph::from_rows({VertexSet::of({1}), VertexSet{}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_rows({VertexSet::of({0})}), std::invalid_argument);
    CHECK_NOTHROW(Graph::from_rows({VertexSet::of({1}), VertexSet::of({0})}));
    CHECK_THROWS_AS(Graph(65), CapacityError);
}

TEST_CASE("components and forests") {
    const Graph g = graphs::cycle(3).disjoint_union(graphs::path(3));
    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of({0, 1, 2}));
    CHECK(comps[1] == VertexSet::of({3, 4, 5}));
    CHECK_FALSE(is_connected(g));
    CHECK_FALSE(is_forest(g, g.vertices()));
    CHECK(is_forest(g, VertexSet::of({1, 2, 3, 4, 5})));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("complement and relabel") {
    const Graph p4 = graphs::path(4);
    CHECK(p4.complement().m() == 3);
    CHECK(p4.complement().complement() == p4);
    const Graph r = p4.relabel(std::vector<int>{3, 2, 1, 0});
    CHECK(r.has_edge(3, 2));
    CHECK(r.has_edge(1, 0));
    CHECK_FALSE(r.has_edge(0, 3));
}

TEST_CASE("graph6 decodes the star example") {
    const Graph g = parse_graph6("D?{");
    REQUIRE(g.n() == 5);
    CHECK(g.m() == 4);
    CHECK(g.degree(4) == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.has_edge(v, 4));
}

TEST_CASE("graph6 of K1 and K0") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph(0)) == "?");
    CHECK(parse_graph6("@").n() == 1);
}

TEST_CASE("graph6 errors name their kind") {
    auto kind_of = [](std::string_view text) {
        try {
            parse_graph6(text);
        } catch (const Graph6Error& e) {
            return e.kind();
        }
        FAIL("no error for " << text);
        return Graph6Error::Kind::EmptyLine;
    };
    CHECK(kind_of("") == Graph6Error::Kind::EmptyLine);
    CHECK(kind_of("~??") == Graph6Error::Kind::BadLength);
    CHECK(kind_of("D?") == Graph6Error::Kind::WrongByteCount);
    CHECK(kind_of("D?{?") == Graph6Error::Kind::WrongByteCount);
    CHECK(kind_of("D? ") == Graph6Error::Kind::CharOutOfRange);
    CHECK(kind_of("AW") == Graph6Error::Kind::NonzeroPadding);
    CHECK(parse_graph6("A_").m() == 1);
}

TEST_CASE("emitting too many vertices is a capacity error") {
    CHECK_THROWS_AS(emit_graph6(Graph(63)), CapacityError);
}

TEST_CASE("graph6 agrees with the reference decoder and round-trips") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 10000; ++trial) {
        const Graph g = testing::random_graph(rng, 0, 20, 0.4);
        const std::string text = emit_graph6(g);
        int order = -1;
        const auto edges = testing::reference_graph6_edges(text, &order);
        REQUIRE(order == g.n());
        REQUIRE(edges == g.edges());
        REQUIRE(parse_graph6(text) == g);
    }
}
