#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isolab/constructions.hpp"
#include "isolab/graph.hpp"
#include "isolab/pattern.hpp"

namespace isolab {

/// One per-graph line of a report.
struct ReportRecord {
    std::string g6;
    int m = 0;
    int iota = 0;
    int bound_num = 0;
    int bound_den = 0;
    std::string cls;
};

/// Outcome of one verification suite. Violations are data: a suite never
/// throws on a counterexample, it lists it in `offenders`.
struct TheoremReport {
    std::string suite;
    std::string pattern;
    std::string universe;
    std::uint64_t checked = 0;
    std::uint64_t bound_violations = 0;
    std::uint64_t equality_cases = 0;
    std::uint64_t equality_misclassified = 0;
    std::uint64_t special_pairs = 0;
    /// Sorted; graph6 strings, optionally followed by a note.
    std::vector<std::string> offenders;
    /// Sorted by graph6.
    std::vector<ReportRecord> records;

    bool ok() const { return bound_violations == 0 && equality_misclassified == 0; }
};

struct VerifyOptions {
    /// 0 selects std::thread::hardware_concurrency().
    int workers = 0;
    std::uint64_t seed = 0;
    int trials = 1000;
    /// Largest order of random graphs in the lemma suites.
    int random_n_max = 9;
};

/// (k+2) iota(G,F) <= m+1 for every connected, non-special G.
TheoremReport verify_bound(const Pattern& p, std::span<const Graph> universe, const VerifyOptions& opt = {},
                           std::string universe_desc = {});

/// Equality holds exactly for pure special graphs and F+e copies. Needs k >= 3.
TheoremReport verify_extremal(const Pattern& p, std::span<const Graph> universe,
                              const VerifyOptions& opt = {}, std::string universe_desc = {});

/// Connected (2k+3)-edge graphs holding two vertex-disjoint F-copies have
/// iota = 1 or are (2k+3,F)-special. Needs k >= 3.
TheoremReport verify_two_copies(const Pattern& p, std::span<const Graph> universe,
                                const VerifyOptions& opt = {}, std::string universe_desc = {});

/// Randomized checks of the deletion, component-additivity and partition
/// inequalities and of isolating-set monotonicity, seeded by opt.seed.
TheoremReport verify_lemma_suites(const VerifyOptions& opt = {});

/// iota = q = (m+1)/(k+2) for every pure special graph with q <= q_max.
TheoremReport verify_equality_clause(const Pattern& p, int q_max, const VerifyOptions& opt = {});

/// On pure special graphs with q <= q_max: every vertex lies in some minimum
/// isolating set, and deleting any vertex outside every quotient tree lowers
/// iota by one.
TheoremReport verify_min_isolating_sets(const Pattern& p, int q_max, const VerifyOptions& opt = {});

/// For q >= 2: any two vertices from distinct constituents extend to a
/// minimum isolating set.
TheoremReport verify_two_constituents(const Pattern& p, int q_max, const VerifyOptions& opt = {});

/// Random single-edge gluings of pure special graphs and F+e copies that
/// attain the bound must be recognized as extremal.
TheoremReport verify_gluing(const Pattern& p, const VerifyOptions& opt = {});

/// One JSON object per record, newline terminated.
std::string to_jsonl(const TheoremReport& report);
std::string to_summary_json(const TheoremReport& report);

}  // namespace isolab
