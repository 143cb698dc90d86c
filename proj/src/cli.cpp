#include "isolab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "isolab/constructions.hpp"
#include "isolab/enumeration.hpp"
#include "isolab/graph6.hpp"
#include "isolab/solver.hpp"
#include "isolab/verifier.hpp"

namespace isolab::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> patterns;
    std::string input = "-";
    bool oracle = false;

    int m = -1;
    bool pure = false;
    std::string layout_path;

    int n_min = 1;
    int n_max = -1;
    int m_min = 0;
    int m_max = -1;
    bool connected = false;

    std::string verify_input;
    std::string jsonl_path;
    std::string summary_path;
    int workers = 0;
    std::uint64_t seed = 0;
    int trials = 1000;
    int q_max = 3;
};

Pattern single_pattern(const Options& o) {
    if (o.patterns.size() != 1) throw UsageError("exactly one -F pattern is required");
    if (o.patterns.front() == "cycles") throw UsageError("'cycles' is only accepted by solve");
    return pattern_from_name(o.patterns.front());
}

Family family_from(const Options& o) {
    if (o.patterns.empty()) throw UsageError("at least one -F pattern is required");
    if (o.patterns.size() == 1 && o.patterns.front() == "cycles") return Family::all_cycles();
    std::vector<Pattern> ps;
    for (const auto& name : o.patterns) {
        if (name == "cycles") throw UsageError("'cycles' cannot be combined with other patterns");
        ps.push_back(pattern_from_name(name));
    }
    return Family::of(std::move(ps));
}

std::vector<Graph> read_graphs(const std::string& source, std::istream& in) {
    if (source == "-") return ingest_graph6(in);
    std::ifstream file(source);
    if (!file) throw UsageError("cannot open " + source);
    return ingest_graph6(file);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

nlohmann::ordered_json layout_json(const BuiltSpecial& built) {
    const SpecialLayout& lay = built.layout;
    nlohmann::ordered_json j;
    j["g6"] = emit_graph6(built.graph);
    j["q"] = lay.q;
    j["r"] = lay.r;
    j["m"] = lay.m;
    j["connections"] = lay.connections;
    auto constituents = nlohmann::ordered_json::array();
    for (VertexSet c : lay.constituents) constituents.push_back(c.to_vector());
    j["constituents"] = constituents;
    j["attach"] = lay.attach;
    j["remainder"] = lay.remainder.to_vector();
    auto edges = nlohmann::ordered_json::array();
    for (auto [a, b] : lay.quotient_edges) edges.push_back({a, b});
    j["quotient_edges"] = edges;
    auto roles = nlohmann::ordered_json::array();
    for (VertexRole r : lay.roles) {
        roles.push_back(r == VertexRole::Connection ? "connection"
                        : r == VertexRole::Constituent ? "constituent"
                                                        : "remainder");
    }
    j["roles"] = roles;
    return j;
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
    const Family fam = family_from(o);
    std::vector<Graph> graphs;
    if (o.input == "-") {
        graphs = ingest_graph6(in);
    } else {
        graphs.push_back(parse_graph6(o.input));
    }
    for (const Graph& g : graphs) {
        const SolveResult r = o.oracle ? solve_oracle(g, fam) : solve(g, fam);
        out << "iota=" << r.iota << " witness=" << r.witness.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_gen_special(const Options& o, std::ostream& out) {
    const Pattern p = single_pattern(o);
    if (o.m < 0) throw UsageError("-m is required");
    const auto built = o.pure ? enumerate_pure_special(p, o.m) : enumerate_special(p, o.m);
    auto layouts = nlohmann::ordered_json::array();
    for (const auto& b : built) {
        out << emit_graph6(b.graph) << '\n';
        if (!o.layout_path.empty()) layouts.push_back(layout_json(b));
    }
    if (!o.layout_path.empty()) write_file(o.layout_path, layouts.dump(2) + "\n");
    return kExitOk;
}

int cmd_gen_fplus(const Options& o, std::ostream& out) {
    for (const Graph& g : enumerate_f_plus_e(single_pattern(o))) out << emit_graph6(g) << '\n';
    return kExitOk;
}

int cmd_recognize(const Options& o, std::istream& in, std::ostream& out) {
    const ExtremalRecognizer recognizer(single_pattern(o));
    for (const Graph& g : read_graphs(o.input, in)) {
        out << emit_graph6(g) << ' ' << to_string(recognizer.classify(g)) << '\n';
    }
    return kExitOk;
}

int cmd_enum(const Options& o, std::ostream& out) {
    if (o.n_max < 0) throw UsageError("--n-max is required");
    EnumSpec spec{o.n_min, o.n_max, o.m_min, o.m_max, o.connected};
    for_each_graph(spec, [&](const Graph& g) { out << emit_graph6(g) << '\n'; });
    return kExitOk;
}

int emit_reports(const Options& o, const std::vector<TheoremReport>& reports, std::ostream& out) {
    std::string summaries, lines;
    bool ok = true;
    for (const auto& r : reports) {
        summaries += to_summary_json(r);
        lines += to_jsonl(r);
        ok = ok && r.ok();
    }
    out << summaries;
    if (!o.summary_path.empty()) write_file(o.summary_path, summaries);
    if (!o.jsonl_path.empty()) write_file(o.jsonl_path, lines);
    return ok ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& suite, const Options& o, std::istream& in, std::ostream& out) {
    VerifyOptions vo;
    vo.workers = o.workers;
    vo.seed = o.seed;
    vo.trials = o.trials;
    if (suite == "lemmas") return emit_reports(o, {verify_lemma_suites(vo)}, out);

    const Pattern p = single_pattern(o);
    if (suite == "special") {
        return emit_reports(o,
                            {verify_equality_clause(p, o.q_max, vo), verify_min_isolating_sets(p, o.q_max, vo),
                             verify_two_constituents(p, o.q_max, vo)},
                            out);
    }
    if (suite == "gluing") return emit_reports(o, {verify_gluing(p, vo)}, out);

    std::vector<Graph> universe;
    std::string desc;
    if (!o.verify_input.empty()) {
        universe = read_graphs(o.verify_input, in);
        desc = "input:" + o.verify_input;
    } else {
        const int n_max = o.n_max > 0 ? o.n_max : (p.k() <= 3 ? 8 : 7);
        EnumSpec spec{1, n_max, 0, -1, true};
        universe = enumerate_graphs(spec);
        desc = spec.describe();
    }
    if (suite == "bound") return emit_reports(o, {verify_bound(p, universe, vo, desc)}, out);
    if (suite == "extremal") return emit_reports(o, {verify_extremal(p, universe, vo, desc)}, out);
    return emit_reports(o, {verify_two_copies(p, universe, vo, desc)}, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact F-isolation numbers, extremal constructions and verification suites",
                 args.empty() ? "isolation-lab" : args.front()};
    app.require_subcommand(1);
    Options o;

    // One value per -F occurrence, so a positional argument after -F is not
    // swallowed. Single-pattern commands reject a second -F in single_pattern().
    auto add_pattern = [&](CLI::App* sub) {
        sub->add_option("-F,--pattern", o.patterns,
                        "pattern name (k1, k2, p3, k3, k1_3, k1_<k>, paw, k<n>, p<n>, c<n>) or graph6")
            ->allow_extra_args(false)
            ->required();
    };

    auto* solve_cmd = app.add_subcommand("solve", "print iota and a minimum witness for each graph");
    add_pattern(solve_cmd);
    solve_cmd->add_option("graph", o.input, "graph6 string, or - for stdin");
    solve_cmd->add_flag("--oracle", o.oracle, "use the exhaustive reference solver");

    auto* gen = app.add_subcommand("gen", "generate extremal families");
    gen->require_subcommand(1);
    auto* gen_special = gen->add_subcommand("special", "(m,F)-special graphs up to isomorphism");
    add_pattern(gen_special);
    gen_special->add_option("-m", o.m, "edge count")->required();
    gen_special->add_flag("--pure", o.pure, "only pure special graphs");
    gen_special->add_option("--layout", o.layout_path, "write a JSON layout sidecar");
    auto* gen_fplus = gen->add_subcommand("fplus", "F+e graphs up to isomorphism");
    add_pattern(gen_fplus);

    auto* recognize = app.add_subcommand("recognize", "classify connected graphs against the extremal families");
    add_pattern(recognize);
    recognize->add_option("input", o.input, "graph6 file, or - for stdin");

    auto* enum_cmd = app.add_subcommand("enum", "enumerate graphs up to isomorphism");
    enum_cmd->add_option("--n-max", o.n_max, "largest order")->required();
    enum_cmd->add_option("--n-min", o.n_min, "smallest order");
    enum_cmd->add_option("--m-min", o.m_min, "fewest edges");
    enum_cmd->add_option("--m-max", o.m_max, "most edges");
    enum_cmd->add_flag("--connected", o.connected, "connected graphs only");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    std::string verify_suite;
    for (const char* name : {"bound", "extremal", "two-copies", "lemmas", "special", "gluing"}) {
        auto* sub = verify->add_subcommand(name);
        if (std::string(name) != "lemmas") add_pattern(sub);
        sub->add_option("--n-max", o.n_max, "largest order of the built-in universe");
        sub->add_option("--input", o.verify_input, "graph6 universe file, or - for stdin");
        sub->add_option("--jsonl", o.jsonl_path, "per-graph JSONL report");
        sub->add_option("--summary", o.summary_path, "summary JSON");
        sub->add_option("--workers", o.workers, "worker threads (0 = all cores)");
        sub->add_option("--seed", o.seed, "random seed (ISOLATION_LAB_SEED overrides)");
        sub->add_option("--trials", o.trials, "trials per randomized suite");
        sub->add_option("--q-max", o.q_max, "largest constituent count of the special corpus");
        sub->callback([&verify_suite, name] { verify_suite = name; });
    }

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (const char* env = std::getenv("ISOLATION_LAB_SEED")) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "ISOLATION_LAB_SEED is not an unsigned integer\n";
            return kExitUsage;
        }
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(o, in, out);
        if (gen_special->parsed()) return cmd_gen_special(o, out);
        if (gen_fplus->parsed()) return cmd_gen_fplus(o, out);
        if (recognize->parsed()) return cmd_recognize(o, in, out);
        if (enum_cmd->parsed()) return cmd_enum(o, out);
        if (verify->parsed()) return cmd_verify(verify_suite, o, in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace isolab::cli
