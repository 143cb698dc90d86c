#include <doctest.h>

#include <json.hpp>

#include "isolab/canonical.hpp"
#include "isolab/enumeration.hpp"
#include "isolab/graph6.hpp"
#include "isolab/named_graphs.hpp"
#include "isolab/verifier.hpp"

using namespace isolab;

namespace {

std::vector<Graph> connected_up_to(int n, int m_min = 0, int m_max = -1) {
    return enumerate_graphs({1, n, m_min, m_max, true});
}

const ReportRecord* find_record(const TheoremReport& r, const Graph& g) {
    const std::string g6 = emit_graph6(g);
    for (const auto& rec : r.records)
        if (rec.g6 == g6) return &rec;
    return nullptr;
}

}  // namespace

TEST_CASE("P3 bound with the C6 exception") {
    const auto universe = connected_up_to(7);
    const TheoremReport r = verify_bound(pattern_from_name("p3"), universe);
    CHECK(r.ok());
    CHECK(r.bound_violations == 0);
    CHECK(r.checked == universe.size());
    // P3 itself and C6
    CHECK(r.special_pairs == 2);
    const Graph c6 = enumerate_graphs({6, 6, 6, 6, true}).back();
    REQUIRE(is_connected(c6));
    bool found_c6 = false;
    for (const auto& rec : r.records) {
        if (rec.cls == "special-pair-exception" && rec.m == 6) {
            found_c6 = true;
            CHECK(rec.iota == 2);
        }
    }
    CHECK(found_c6);
}

TEST_CASE("disconnected graphs are skipped") {
    const std::vector<Graph> universe{Graph(3), graphs::star(3), graphs::cycle(3).disjoint_union(Graph(1))};
    const TheoremReport r = verify_bound(pattern_from_name("k1_3"), universe);
    CHECK(r.checked == 1);
    CHECK(r.records.size() == 1);
}

TEST_CASE("K3 equality cases are all pure special") {
    const TheoremReport r = verify_extremal(pattern_from_name("k3"), connected_up_to(7));
    CHECK(r.ok());
    CHECK(r.equality_cases > 0);
    for (const auto& rec : r.records) {
        if (rec.iota * rec.bound_den == rec.bound_num && rec.cls != "special-pair-exception") {
            CHECK(rec.cls == "pure-special");
        }
        CHECK(rec.cls != "F-plus-e");
    }
}

TEST_CASE("star extremal cases") {
    const TheoremReport r = verify_extremal(pattern_from_name("k1_3"), connected_up_to(7));
    CHECK(r.ok());
    // K1,4, the spider, and the paw
    CHECK(r.equality_cases == 3);
    const ReportRecord* paw = find_record(r, canonicalize(graphs::paw()).graph);
    REQUIRE(paw != nullptr);
    CHECK(paw->cls == "F-plus-e");
}

TEST_CASE("two vertex-disjoint copies") {
    const auto universe = enumerate_graphs({8, 8, 9, 9, true});
    const TheoremReport r = verify_two_copies(pattern_from_name("k1_3"), universe);
    CHECK(r.ok());
    CHECK(r.checked > 0);
    // the three pure (9, K1,3)-special graphs live on 10 vertices, so n <= 8 sees only iota = 1
    for (const auto& rec : r.records) CHECK(rec.cls == "iota-one");
}

TEST_CASE("special corpus suites") {
    const Pattern star = pattern_from_name("k1_3");
    CHECK(verify_equality_clause(star, 2).ok());
    CHECK(verify_min_isolating_sets(star, 2).ok());
    const TheoremReport two = verify_two_constituents(star, 2);
    CHECK(two.ok());
    CHECK(two.checked == 3 * 25);
    CHECK(verify_equality_clause(pattern_from_name("p3"), 2).ok());
    CHECK_THROWS(verify_min_isolating_sets(pattern_from_name("p3"), 2));
    CHECK_THROWS(verify_bound(pattern_from_name("p4"), connected_up_to(3)));
}

TEST_CASE("lemma suites pass and are reproducible") {
    VerifyOptions opt;
    opt.trials = 60;
    opt.seed = 5;
    opt.random_n_max = 7;
    opt.workers = 1;
    const TheoremReport one = verify_lemma_suites(opt);
    CHECK(one.ok());
    CHECK(one.checked == 240);
    opt.workers = 3;
    CHECK(to_summary_json(verify_lemma_suites(opt)) == to_summary_json(one));
}

TEST_CASE("gluing suite") {
    VerifyOptions opt;
    opt.trials = 40;
    opt.seed = 9;
    const TheoremReport r = verify_gluing(pattern_from_name("k1_3"), opt);
    CHECK(r.ok());
}

TEST_CASE("reports are byte identical across worker counts") {
    const auto universe = connected_up_to(7);
    const Pattern paw = pattern_from_name("paw");
    VerifyOptions one;
    one.workers = 1;
    VerifyOptions four;
    four.workers = 4;
    const TheoremReport a = verify_extremal(paw, universe, one);
    const TheoremReport b = verify_extremal(paw, universe, four);
    CHECK(to_jsonl(a) == to_jsonl(b));
    CHECK(to_summary_json(a) == to_summary_json(b));
}

TEST_CASE("report serialization") {
    const std::vector<Graph> universe{graphs::star(4)};
    const TheoremReport r = verify_bound(pattern_from_name("k1_3"), universe, {}, "one star");
    CHECK(to_jsonl(r) == "{\"g6\":\"Ds_\",\"m\":4,\"iota\":1,\"bound\":\"5/5\",\"class\":\"attains\"}\n");
    const auto summary = nlohmann::json::parse(to_summary_json(r));
    CHECK(summary["suite"] == "bound");
    CHECK(summary["universe"] == "one star");
    CHECK(summary["checked"] == 1);
    CHECK(summary["equality_cases"] == 1);
    CHECK(summary["ok"] == true);
    CHECK(summary["offenders"].empty());
}
