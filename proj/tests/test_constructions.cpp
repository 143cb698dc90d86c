#include <doctest.h>

#include <random>
#include <set>

#include "isolab/canonical.hpp"
#include "isolab/constructions.hpp"
#include "isolab/enumeration.hpp"
#include "isolab/graph6.hpp"
#include "isolab/named_graphs.hpp"
#include "isolab/solver.hpp"
#include "oracles.hpp"

using namespace isolab;

namespace {

SpecialSpec path_spec(const Pattern& p, int q, int attach) {
    std::vector<Edge> tree;
    for (int i = 0; i + 1 < q; ++i) tree.emplace_back(i, i + 1);
    return SpecialSpec{p, q, 0, tree, Graph(1), 0, std::vector<int>(q, attach)};
}

// Checks the shape promised by a layout against the host graph directly.
void check_layout(const Graph& g, const SpecialLayout& lay, const Pattern& p) {
    REQUIRE(static_cast<int>(lay.connections.size()) == lay.q);
    REQUIRE(static_cast<int>(lay.constituents.size()) == lay.q);
    VertexSet seen;
    for (int i = 0; i < lay.q; ++i) {
        const VertexSet part = lay.constituents[i];
        REQUIRE(part.size() == p.ell());
        REQUIRE_FALSE(seen.intersects(part));
        seen |= part;
        REQUIRE(is_isomorphic(induced_subgraph(g, part).graph, p.graph()));
        REQUIRE(part.contains(lay.attach[i]));
        REQUIRE(g.has_edge(lay.connections[i], lay.attach[i]));
        // a constituent touches the rest of the graph only through w_i v_i
        for (int v : part) {
            const VertexSet outside = g.neighbors(v) - part;
            if (v == lay.attach[i]) {
                REQUIRE(outside == VertexSet::single(lay.connections[i]));
            } else {
                REQUIRE(outside.empty());
            }
        }
    }
    const VertexSet quotient = lay.quotient();
    REQUIRE(g.edges_within(quotient) == lay.q - 1);
    REQUIRE(components(g, quotient).size() == 1);
}

}  // namespace

TEST_CASE("edge counts of pure special graphs") {
    const BuiltSpecial k5 = build_special(path_spec(pattern_from_name("k5"), 6, 0));
    CHECK(k5.graph.m() == 71);
    CHECK(k5.layout.m == 71);
    CHECK(k5.graph.n() == 36);

    const BuiltSpecial one = build_special(path_spec(pattern_from_name("k1_3"), 1, 0));
    CHECK(one.graph.m() == 4);
    CHECK(one.graph.n() == 5);
    CHECK(build_special(path_spec(pattern_from_name("k1_3"), 2, 1)).graph.m() == 9);
}

TEST_CASE("pure special enumeration") {
    const auto stars = enumerate_pure_special(pattern_from_name("k1_3"), 4);
    REQUIRE(stars.size() == 2);
    std::set<std::string> forms;
    for (const auto& b : stars) forms.insert(canonical_form(b.graph));
    CHECK(forms.count(canonical_form(graphs::star(4))) == 1);
    // the spider: K1,3 with one leaf extended
    CHECK(forms.count(canonical_form(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}))) == 1);

    const auto triangles = enumerate_pure_special(pattern_from_name("k3"), 4);
    REQUIRE(triangles.size() == 1);
    CHECK(is_isomorphic(triangles[0].graph, graphs::paw()));

    CHECK_THROWS_AS(enumerate_pure_special(pattern_from_name("k1_3"), 3), ConstructionError);
}

TEST_CASE("pure special graphs of K1,3 with two constituents") {
    // Trees on 2 vertices: one. Attach choices: center or leaf for each constituent,
    // unordered since the quotient edge is symmetric: {cc, cl, ll}.
    CHECK(enumerate_pure_special(pattern_from_name("k1_3"), 9).size() == 3);
    // Three constituents: path tree (middle distinguished) gives 2*3 = 6, star on 3 is the path.
    CHECK(enumerate_pure_special(pattern_from_name("k1_3"), 14).size() == 6);
}

TEST_CASE("every generated special graph has its promised layout and iota") {
    for (const char* name : {"k1_3", "k3", "paw", "p3"}) {
        const Pattern p = pattern_from_name(name);
        for (int q = 1; q <= 3; ++q) {
            const int m = q * (p.k() + 2) - 1;
            for (const auto& b : enumerate_pure_special(p, m)) {
                check_layout(b.graph, b.layout, p);
                REQUIRE(b.graph.m() == m);
                REQUIRE(solve(b.graph, Family::single(p)).iota == q);
            }
        }
        for (int m = 0; m <= 2 * p.k() + 4; ++m) {
            for (const auto& b : enumerate_special(p, m)) {
                REQUIRE(b.graph.m() == m);
                REQUIRE(is_connected(b.graph));
                if (b.layout.q > 0) check_layout(b.graph, b.layout, p);
            }
        }
    }
}

TEST_CASE("F+e graphs") {
    CHECK(enumerate_f_plus_e(pattern_from_name("k3")).empty());
    const auto stars = enumerate_f_plus_e(pattern_from_name("k1_3"));
    REQUIRE(stars.size() == 1);
    CHECK(is_isomorphic(stars[0], graphs::paw()));
    const auto p3 = enumerate_f_plus_e(pattern_from_name("p3"));
    REQUIRE(p3.size() == 1);
    CHECK(is_isomorphic(p3[0], graphs::complete(3)));
    // P4 + e is either C4 or the paw
    CHECK(enumerate_f_plus_e(pattern_from_name("p4")).size() == 2);
    for (const Graph& g : enumerate_f_plus_e(pattern_from_name("paw")))
        CHECK(solve(g, Family::single(pattern_from_name("paw"))).iota == 1);
}

TEST_CASE("build_special rejects bad recipes") {
    const Pattern star = pattern_from_name("k1_3");
    CHECK_THROWS_AS(build_special(SpecialSpec{star, 2, 0, {}, Graph(1), 0, {0, 0}}), ConstructionError);
    CHECK_THROWS_AS(build_special(SpecialSpec{star, 1, 0, {}, Graph(1), 0, {}}), ConstructionError);
    CHECK_THROWS_AS(build_special(SpecialSpec{star, 1, 0, {}, Graph(1), 0, {4}}), ConstructionError);
    CHECK_THROWS_AS(build_special(SpecialSpec{star, 1, 6, {}, Graph(1), 0, {0}}), ConstructionError);
    CHECK_THROWS_AS(build_special(SpecialSpec{star, 1, 1, {}, Graph(2), 0, {0}}), ConstructionError);
    CHECK_THROWS_AS(build_special(SpecialSpec{pattern_from_name("D?_"), 1, 0, {}, Graph(1), 0, {0}}),
                    ConstructionError);
    const BuiltSpecial ok = build_special(SpecialSpec{star, 1, 2, {}, graphs::path(3), 1, {0}});
    CHECK(ok.graph.m() == 6);
    CHECK(ok.graph.n() == 7);
    CHECK(ok.layout.remainder.size() == 3);
}

TEST_CASE("recognizer verdicts") {
    const Pattern star = pattern_from_name("k1_3");
    const Pattern tri = pattern_from_name("k3");
    CHECK(recognize_extremal(graphs::paw(), tri) == ExtremalClass::PureSpecial);
    CHECK(recognize_extremal(graphs::paw(), star) == ExtremalClass::FPlusE);
    CHECK(recognize_extremal(graphs::cycle(6), star) == ExtremalClass::NonExtremal);
    CHECK(recognize_extremal(graphs::star(3), star) == ExtremalClass::SpecialPairException);
    CHECK(recognize_extremal(parse_graph6("D?{"), star) == ExtremalClass::PureSpecial);
    CHECK_THROWS(recognize_extremal(Graph(2), star));
    CHECK_THROWS(ExtremalRecognizer(pattern_from_name("p3")));
    CHECK_THROWS(ExtremalRecognizer(pattern_from_name("p4")));
    CHECK(to_string(ExtremalClass::FPlusE) == "F-plus-e");
}

TEST_CASE("special pairs") {
    CHECK(is_special_pair(graphs::cycle(6), pattern_from_name("p3")));
    CHECK(is_special_pair(graphs::star(3), pattern_from_name("k1_3")));
    CHECK_FALSE(is_special_pair(graphs::cycle(6), pattern_from_name("k1_3")));
    CHECK_FALSE(is_special_pair(graphs::cycle(5), pattern_from_name("p3")));
}

TEST_CASE("generated classes agree with the structural decomposition search") {
    for (const char* name : {"k1_3", "k3", "paw"}) {
        const Pattern p = pattern_from_name(name);
        const ExtremalRecognizer rec(p);
        const EnumSpec universe{1, 8, 0, -1, true};
        for_each_graph(universe, [&](const Graph& g) {
            const auto decomps = pure_special_decompositions(g, p);
            REQUIRE(rec.is_pure_special(g) == !decomps.empty());
            for (const auto& lay : decomps) check_layout(g, lay, p);
        });
    }
}

TEST_CASE("the recognizer is label invariant") {
    std::mt19937_64 rng(12);
    const Pattern star = pattern_from_name("k1_3");
    const ExtremalRecognizer rec(star);
    for (const auto& b : enumerate_pure_special(star, 14)) {
        for (int t = 0; t < 5; ++t) REQUIRE(rec.classify(testing::shuffled(b.graph, rng)) == ExtremalClass::PureSpecial);
    }
}
