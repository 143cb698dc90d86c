#include "isolab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include <json.hpp>

#include "isolab/canonical.hpp"
#include "isolab/graph6.hpp"
#include "isolab/named_graphs.hpp"
#include "isolab/solver.hpp"

namespace isolab {

namespace {

int resolve_workers(int workers, std::size_t count) {
    if (workers <= 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    return static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
}

// Runs fn(i) for i in [0, count) on a pool of workers. Results must be
// written to per-index slots; merging happens afterwards in index order.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    workers = resolve_workers(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

// What one unit of work contributes to a report.
struct Outcome {
    bool counted = false;
    bool special_pair = false;
    bool violation = false;
    bool equality = false;
    bool misclassified = false;
    std::uint64_t extra_checks = 0;
    std::vector<std::string> notes;
    std::optional<ReportRecord> record;
};

void merge(TheoremReport& report, std::vector<Outcome>& outcomes) {
    for (auto& o : outcomes) {
        if (o.counted) ++report.checked;
        report.checked += o.extra_checks;
        if (o.special_pair) ++report.special_pairs;
        if (o.violation) ++report.bound_violations;
        if (o.equality) ++report.equality_cases;
        if (o.misclassified) ++report.equality_misclassified;
        for (auto& note : o.notes) report.offenders.push_back(std::move(note));
        if (o.record) report.records.push_back(std::move(*o.record));
    }
    std::sort(report.offenders.begin(), report.offenders.end());
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const ReportRecord& a, const ReportRecord& b) { return a.g6 < b.g6; });
}

ReportRecord make_record(const Graph& g, int iota, const Pattern& p, std::string cls) {
    return ReportRecord{emit_graph6(g), g.m(), iota, g.m() + 1, p.k() + 2, std::move(cls)};
}

void require_dominating(const Pattern& p) {
    if (p.gamma() != 1) throw std::invalid_argument("pattern " + p.name() + " has no dominating vertex");
}

void require_extremal_pattern(const Pattern& p) {
    require_dominating(p);
    if (p.k() < 3) throw std::invalid_argument("pattern " + p.name() + " needs at least 3 edges");
}

TheoremReport new_report(std::string suite, const Pattern* p, std::string universe) {
    TheoremReport r;
    r.suite = std::move(suite);
    r.pattern = p ? p->name() : std::string("*");
    r.universe = std::move(universe);
    return r;
}

// Platform-stable draws (the std distributions are implementation defined).
int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t suite, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Graph random_graph(std::mt19937_64& rng, int n_min, int n_max) {
    const int n = draw(rng, n_min, n_max);
    const double density = 0.15 + 0.6 * static_cast<double>(draw(rng, 0, 100)) / 100.0;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, density)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

VertexSet random_subset(std::mt19937_64& rng, VertexSet from, double p) {
    VertexSet out;
    for (int v : from)
        if (coin(rng, p)) out.insert(v);
    return out;
}

const std::vector<Family>& lemma_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> f;
        for (const char* name : {"k1", "k2", "k3", "p3", "k1_3", "paw"}) {
            f.push_back(Family::single(pattern_from_name(name)));
        }
        f.push_back(Family::of({pattern_from_name("k3"), pattern_from_name("k1_3")}));
        f.push_back(Family::all_cycles());
        return f;
    }();
    return families;
}

std::string describe_trial(const char* lemma, std::uint64_t trial, const Graph& g, const Family& fam) {
    return emit_graph6(g) + " " + lemma + " trial=" + std::to_string(trial) + " family=" + fam.name();
}

// iota(G) <= |X| + iota(G - Y) for Y within N[X].
std::optional<std::string> deletion_trial(std::mt19937_64& rng, std::uint64_t trial, int n_max) {
    const Graph g = random_graph(rng, 1, n_max);
    const Family& fam = lemma_families()[draw(rng, 0, static_cast<int>(lemma_families().size()) - 1)];
    const VertexSet x = trial % 10 == 0 ? VertexSet{} : random_subset(rng, g.vertices(), 0.2);
    const VertexSet y = random_subset(rng, closed_neighborhood(g, x), 0.6);
    const int lhs = solve(g, fam).iota;
    const int rhs = x.size() + solve(delete_vertices(g, y).graph, fam).iota;
    if (lhs <= rhs) return std::nullopt;
    return describe_trial("deletion", trial, g, fam) + " X=" + x.to_string() + " Y=" + y.to_string();
}

// iota(G) = sum over components when every family member is connected.
std::optional<std::string> additivity_trial(std::mt19937_64& rng, std::uint64_t trial, int n_max) {
    const int parts = draw(rng, 2, 3);
    const int part_max = std::max(2, std::min(6, n_max / 2 + 1));
    Graph g(0);
    for (int i = 0; i < parts; ++i) g = g.disjoint_union(random_graph(rng, 1, part_max));
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[draw(rng, 0, i)]);
    g = g.relabel(perm);
    const Family& fam = lemma_families()[draw(rng, 0, static_cast<int>(lemma_families().size()) - 1)];
    int sum = 0;
    for (VertexSet comp : components(g)) sum += solve(induced_subgraph(g, comp).graph, fam).iota;
    if (solve(g, fam).iota == sum) return std::nullopt;
    return describe_trial("additivity", trial, g, fam);
}

// iota(G) <= iota(A) + iota(B) when every extra edge touches N[D_A] or N[D_B].
std::optional<std::string> partition_trial(std::mt19937_64& rng, std::uint64_t trial, int n_max) {
    const int part_max = std::max(2, std::min(7, n_max - 2));
    const Graph a = random_graph(rng, 1, part_max);
    const Graph b = random_graph(rng, 1, part_max);
    const auto& families = lemma_families();
    // Single connected patterns only (skip the multi-pattern and cycle entries).
    const Family& fam = families[draw(rng, 0, 5)];
    const SolveResult ra = solve(a, fam);
    const SolveResult rb = solve(b, fam);
    Graph g = a.disjoint_union(b);
    const VertexSet covered =
        closed_neighborhood(a, ra.witness) | VertexSet(closed_neighborhood(b, rb.witness).bits() << a.n());
    const double extra = static_cast<double>(draw(rng, 5, 50)) / 100.0;
    for (auto [u, v] : g.complement().edges()) {
        if ((covered.contains(u) || covered.contains(v)) && coin(rng, extra)) g = g.with_edge(u, v);
    }
    if (solve(g, fam).iota <= ra.iota + rb.iota) return std::nullopt;
    return describe_trial("partition", trial, g, fam) + " |A|=" + std::to_string(a.n());
}

// Supersets of isolating sets isolate; witnesses isolate.
std::optional<std::string> monotone_trial(std::mt19937_64& rng, std::uint64_t trial, int n_max) {
    const Graph g = random_graph(rng, 1, n_max);
    const Family& fam = lemma_families()[draw(rng, 0, static_cast<int>(lemma_families().size()) - 1)];
    const SolveResult r = solve(g, fam);
    VertexSet d = r.witness;
    if (!is_isolating(g, fam, d)) return describe_trial("witness", trial, g, fam);
    d.insert(draw(rng, 0, g.n() - 1));
    if (is_isolating(g, fam, d)) return std::nullopt;
    return describe_trial("monotone", trial, g, fam) + " D=" + d.to_string();
}

std::vector<BuiltSpecial> special_corpus(const Pattern& p, int q_max) {
    std::vector<BuiltSpecial> corpus;
    for (int q = 1; q <= q_max; ++q) {
        auto level = enumerate_pure_special(p, q * (p.k() + 2) - 1);
        corpus.insert(corpus.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return corpus;
}

std::string corpus_desc(int q_max) { return "pure special q=1.." + std::to_string(q_max); }

}  // namespace

TheoremReport verify_bound(const Pattern& p, std::span<const Graph> universe, const VerifyOptions& opt,
                           std::string universe_desc) {
    require_dominating(p);
    const Family fam = Family::single(p);
    const int den = p.k() + 2;
    std::vector<Outcome> outcomes(universe.size());
    parallel_for(universe.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = universe[i];
        if (!is_connected(g)) return;
        Outcome& o = outcomes[i];
        o.counted = true;
        const int iota = solve(g, fam).iota;
        std::string cls;
        if (is_special_pair(g, p)) {
            o.special_pair = true;
            cls = "special-pair-exception";
        } else if (iota * den > g.m() + 1) {
            o.violation = true;
            o.notes.push_back(emit_graph6(g));
            cls = "violation";
        } else if (iota * den == g.m() + 1) {
            o.equality = true;
            cls = "attains";
        } else {
            cls = "below";
        }
        o.record = make_record(g, iota, p, std::move(cls));
    });
    TheoremReport report = new_report("bound", &p, std::move(universe_desc));
    merge(report, outcomes);
    return report;
}

TheoremReport verify_extremal(const Pattern& p, std::span<const Graph> universe, const VerifyOptions& opt,
                              std::string universe_desc) {
    require_extremal_pattern(p);
    const ExtremalRecognizer recognizer(p);
    std::vector<Outcome> outcomes(universe.size());
    parallel_for(universe.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = universe[i];
        if (!is_connected(g)) return;
        Outcome& o = outcomes[i];
        o.counted = true;
        const Verdict v = recognizer.verdict(g);
        std::string cls(to_string(v.cls));
        if (is_special_pair(g, p)) {
            o.special_pair = true;
            o.record = make_record(g, v.iota, p, "special-pair-exception");
            return;
        }
        const bool extremal = v.cls == ExtremalClass::PureSpecial || v.cls == ExtremalClass::FPlusE;
        if (v.iota * v.bound_den > v.bound_num) {
            o.violation = true;
            o.notes.push_back(emit_graph6(g) + " bound");
        }
        if (v.attains) o.equality = true;
        if (v.attains != extremal) {
            o.misclassified = true;
            o.notes.push_back(emit_graph6(g) + (v.attains ? " attains-but-" : " extremal-but-below-") + cls);
        }
        if (v.cls == ExtremalClass::PureSpecial && v.bound_num % v.bound_den != 0) {
            o.misclassified = true;
            o.notes.push_back(emit_graph6(g) + " pure-special-with-non-divisible-m");
        }
        o.record = make_record(g, v.iota, p, std::move(cls));
    });
    TheoremReport report = new_report("extremal", &p, std::move(universe_desc));
    merge(report, outcomes);
    return report;
}

TheoremReport verify_two_copies(const Pattern& p, std::span<const Graph> universe, const VerifyOptions& opt,
                                std::string universe_desc) {
    require_extremal_pattern(p);
    const ExtremalRecognizer recognizer(p);
    const Family fam = Family::single(p);
    const int target_m = 2 * p.k() + 3;
    std::vector<Outcome> outcomes(universe.size());
    parallel_for(universe.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = universe[i];
        if (g.m() != target_m || !is_connected(g)) return;
        const auto copies = enumerate_copies(g, p, std::numeric_limits<std::size_t>::max());
        bool disjoint_pair = false;
        for (std::size_t a = 0; a < copies.size() && !disjoint_pair; ++a)
            for (std::size_t b = a + 1; b < copies.size() && !disjoint_pair; ++b)
                disjoint_pair = !copies[a].intersects(copies[b]);
        if (!disjoint_pair) return;
        Outcome& o = outcomes[i];
        o.counted = true;
        const int iota = solve(g, fam).iota;
        std::string cls;
        if (iota == 1) {
            cls = "iota-one";
        } else if (recognizer.is_special(g)) {
            o.equality = true;
            cls = "special";
        } else {
            o.violation = true;
            o.notes.push_back(emit_graph6(g));
            cls = "counterexample";
        }
        o.record = make_record(g, iota, p, std::move(cls));
    });
    TheoremReport report = new_report("two-copies", &p, std::move(universe_desc));
    merge(report, outcomes);
    return report;
}

TheoremReport verify_lemma_suites(const VerifyOptions& opt) {
    using Trial = std::optional<std::string> (*)(std::mt19937_64&, std::uint64_t, int);
    static constexpr Trial kTrials[] = {deletion_trial, additivity_trial, partition_trial, monotone_trial};
    constexpr std::size_t kSuites = std::size(kTrials);
    const std::size_t trials = static_cast<std::size_t>(std::max(0, opt.trials));
    const int n_max = std::max(2, opt.random_n_max);
    std::vector<Outcome> outcomes(kSuites * trials);
    parallel_for(outcomes.size(), opt.workers, [&](std::size_t i) {
        const std::size_t suite = i / trials;
        const std::size_t trial = i % trials;
        auto rng = trial_rng(opt.seed, suite, trial);
        Outcome& o = outcomes[i];
        o.counted = true;
        if (auto failure = kTrials[suite](rng, trial, n_max)) {
            o.violation = true;
            o.notes.push_back(std::move(*failure));
        }
    });
    TheoremReport report = new_report("lemmas", nullptr,
                                      "seed=" + std::to_string(opt.seed) + " trials=" + std::to_string(trials) +
                                          " n<=" + std::to_string(n_max));
    merge(report, outcomes);
    return report;
}

TheoremReport verify_equality_clause(const Pattern& p, int q_max, const VerifyOptions& opt) {
    require_dominating(p);
    const auto corpus = special_corpus(p, q_max);
    const Family fam = Family::single(p);
    std::vector<Outcome> outcomes(corpus.size());
    parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = corpus[i].graph;
        Outcome& o = outcomes[i];
        o.counted = true;
        const int iota = solve(g, fam).iota;
        if (iota * (p.k() + 2) == g.m() + 1) {
            o.equality = true;
        } else {
            o.violation = true;
            o.notes.push_back(emit_graph6(g) + " iota=" + std::to_string(iota));
        }
        o.record = make_record(g, iota, p, "pure-special");
    });
    TheoremReport report = new_report("equality-clause", &p, corpus_desc(q_max));
    merge(report, outcomes);
    return report;
}

TheoremReport verify_min_isolating_sets(const Pattern& p, int q_max, const VerifyOptions& opt) {
    require_extremal_pattern(p);
    const auto corpus = special_corpus(p, q_max);
    const Family fam = Family::single(p);
    std::vector<Outcome> outcomes(corpus.size());
    parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
        const BuiltSpecial& built = corpus[i];
        const Graph& g = built.graph;
        const std::string g6 = emit_graph6(g);
        Outcome& o = outcomes[i];
        const int iota = solve(g, fam).iota;
        auto fail = [&](std::string note) {
            o.violation = true;
            o.notes.push_back(g6 + " " + std::move(note));
        };
        for (int x = 0; x < g.n(); ++x) {
            ++o.extra_checks;
            if (solve(g, fam, VertexSet::single(x)).iota != iota) fail("forced x=" + std::to_string(x));
        }
        // A vertex counts as a quotient vertex if some reading of g as a
        // pure special graph puts it in the quotient tree.
        VertexSet quotient_any;
        bool layout_seen = false;
        for (const auto& lay : pure_special_decompositions(g, p)) {
            quotient_any |= lay.quotient();
            layout_seen = layout_seen || lay.quotient() == built.layout.quotient();
        }
        if (!layout_seen) fail("built layout not found by decomposition");
        for (int x : g.vertices() - quotient_any) {
            ++o.extra_checks;
            const int reduced = solve(delete_vertices(g, VertexSet::single(x)).graph, fam).iota;
            if (reduced != iota - 1) fail("delete x=" + std::to_string(x));
        }
        o.record = make_record(g, iota, p, "pure-special");
    });
    TheoremReport report = new_report("min-isolating-sets", &p, corpus_desc(q_max));
    merge(report, outcomes);
    return report;
}

TheoremReport verify_two_constituents(const Pattern& p, int q_max, const VerifyOptions& opt) {
    require_extremal_pattern(p);
    const auto corpus = special_corpus(p, q_max);
    const Family fam = Family::single(p);
    std::vector<Outcome> outcomes(corpus.size());
    parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
        const BuiltSpecial& built = corpus[i];
        const SpecialLayout& lay = built.layout;
        if (lay.q < 2) return;
        const Graph& g = built.graph;
        Outcome& o = outcomes[i];
        const int iota = solve(g, fam).iota;
        for (int a = 0; a < lay.q; ++a) {
            for (int b = a + 1; b < lay.q; ++b) {
                const VertexSet ga = lay.constituents[a] | VertexSet::single(lay.connections[a]);
                const VertexSet gb = lay.constituents[b] | VertexSet::single(lay.connections[b]);
                for (int x : ga) {
                    for (int y : gb) {
                        ++o.extra_checks;
                        const VertexSet forced = VertexSet::single(x) | VertexSet::single(y);
                        if (solve(g, fam, forced).iota != iota) {
                            o.violation = true;
                            o.notes.push_back(emit_graph6(g) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
                        }
                    }
                }
            }
        }
        o.record = make_record(g, iota, p, "pure-special");
    });
    TheoremReport report = new_report("two-constituents", &p, corpus_desc(q_max));
    merge(report, outcomes);
    return report;
}

TheoremReport verify_gluing(const Pattern& p, const VerifyOptions& opt) {
    require_extremal_pattern(p);
    const ExtremalRecognizer recognizer(p);
    const Family fam = Family::single(p);
    std::vector<Graph> pool;
    for (int q = 1; q <= 2; ++q)
        for (auto& built : enumerate_pure_special(p, q * (p.k() + 2) - 1)) pool.push_back(std::move(built.graph));
    for (auto& g : enumerate_f_plus_e(p)) pool.push_back(std::move(g));
    const std::size_t trials = static_cast<std::size_t>(std::max(0, opt.trials));
    std::vector<Outcome> outcomes(trials);
    parallel_for(trials, opt.workers, [&](std::size_t t) {
        auto rng = trial_rng(opt.seed, 100, t);
        const int parts = draw(rng, 2, 3);
        Graph hub = pool[draw(rng, 0, static_cast<int>(pool.size()) - 1)];
        const int hub_n = hub.n();
        Graph g = hub;
        std::vector<Edge> links;
        for (int j = 1; j < parts; ++j) {
            const Graph& member = pool[draw(rng, 0, static_cast<int>(pool.size()) - 1)];
            if (g.n() + member.n() > kMaxVertices) break;
            const int offset = g.n();
            g = g.disjoint_union(member);
            links.emplace_back(draw(rng, 0, hub_n - 1), offset + draw(rng, 0, member.n() - 1));
        }
        for (auto [u, v] : links) g = g.with_edge(u, v);
        const int iota = solve(g, fam).iota;
        const int den = p.k() + 2;
        Outcome& o = outcomes[t];
        if (iota * den > g.m() + 1) {
            o.counted = true;
            o.violation = true;
            o.notes.push_back(emit_graph6(g) + " bound");
        }
        if (iota * den != g.m() + 1) return;
        o.counted = true;
        o.equality = true;
        const ExtremalClass cls = recognizer.classify(g);
        if (cls != ExtremalClass::PureSpecial && cls != ExtremalClass::FPlusE) {
            o.misclassified = true;
            o.notes.push_back(emit_graph6(g) + " glued-" + std::string(to_string(cls)));
        }
        o.record = make_record(g, iota, p, std::string(to_string(cls)));
    });
    TheoremReport report = new_report("gluing", &p, "seed=" + std::to_string(opt.seed) + " trials=" + std::to_string(trials));
    merge(report, outcomes);
    return report;
}

std::string to_jsonl(const TheoremReport& report) {
    std::string out;
    for (const auto& r : report.records) {
        nlohmann::ordered_json line;
        line["g6"] = r.g6;
        line["m"] = r.m;
        line["iota"] = r.iota;
        line["bound"] = std::to_string(r.bound_num) + "/" + std::to_string(r.bound_den);
        line["class"] = r.cls;
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::string to_summary_json(const TheoremReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["pattern"] = report.pattern;
    j["universe"] = report.universe;
    j["checked"] = report.checked;
    j["bound_violations"] = report.bound_violations;
    j["equality_cases"] = report.equality_cases;
    j["equality_misclassified"] = report.equality_misclassified;
    j["special_pairs"] = report.special_pairs;
    j["offenders"] = report.offenders;
    j["ok"] = report.ok();
    return j.dump(2) + "\n";
}

}  // namespace isolab
