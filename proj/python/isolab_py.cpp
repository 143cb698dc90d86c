#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "isolab/canonical.hpp"
#include "isolab/constructions.hpp"
#include "isolab/enumeration.hpp"
#include "isolab/graph.hpp"
#include "isolab/graph6.hpp"
#include "isolab/pattern.hpp"
#include "isolab/solver.hpp"
#include "isolab/verifier.hpp"

namespace py = pybind11;
using namespace isolab;

namespace {

VertexSet to_set(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices) throw py::index_error("vertex out of range");
        s.insert(v);
    }
    return s;
}

using PatternLike = std::variant<Pattern, std::string>;
using FamilyLike = std::variant<Family, Pattern, std::string>;

Pattern as_pattern(const PatternLike& p) {
    if (const auto* name = std::get_if<std::string>(&p)) return pattern_from_name(*name);
    return std::get<Pattern>(p);
}

Family as_family(const FamilyLike& f) {
    if (const auto* fam = std::get_if<Family>(&f)) return *fam;
    if (const auto* p = std::get_if<Pattern>(&f)) return Family::single(*p);
    const auto& name = std::get<std::string>(f);
    return name == "cycles" ? Family::all_cycles() : Family::single(pattern_from_name(name));
}

py::dict layout_dict(const BuiltSpecial& b) {
    const SpecialLayout& lay = b.layout;
    py::dict d;
    d["graph"] = b.graph;
    d["q"] = lay.q;
    d["r"] = lay.r;
    d["m"] = lay.m;
    d["connections"] = lay.connections;
    py::list constituents;
    for (VertexSet c : lay.constituents) constituents.append(c.to_vector());
    d["constituents"] = constituents;
    d["attach"] = lay.attach;
    d["remainder"] = lay.remainder.to_vector();
    d["quotient_edges"] = lay.quotient_edges;
    return d;
}

py::object specials(const std::vector<BuiltSpecial>& built, bool with_layout) {
    py::list out;
    for (const auto& b : built) {
        if (with_layout) {
            out.append(layout_dict(b));
        } else {
            out.append(b.graph);
        }
    }
    return out;
}

py::dict report_dict(const TheoremReport& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["pattern"] = r.pattern;
    d["universe"] = r.universe;
    d["checked"] = r.checked;
    d["bound_violations"] = r.bound_violations;
    d["equality_cases"] = r.equality_cases;
    d["equality_misclassified"] = r.equality_misclassified;
    d["special_pairs"] = r.special_pairs;
    d["offenders"] = r.offenders;
    d["ok"] = r.ok();
    py::list records;
    for (const auto& rec : r.records) {
        py::dict line;
        line["g6"] = rec.g6;
        line["m"] = rec.m;
        line["iota"] = rec.iota;
        line["bound"] = std::to_string(rec.bound_num) + "/" + std::to_string(rec.bound_den);
        line["class"] = rec.cls;
        records.append(line);
    }
    d["records"] = records;
    return d;
}

py::list verify(const std::string& suite, const std::optional<PatternLike>& pat, int n_max,
                const std::optional<std::vector<Graph>>& universe, int workers, std::uint64_t seed, int trials,
                int q_max) {
    VerifyOptions opt;
    opt.workers = workers;
    opt.seed = seed;
    opt.trials = trials;
    std::vector<TheoremReport> reports;
    {
        py::gil_scoped_release release;
        if (suite == "lemmas") {
            reports.push_back(verify_lemma_suites(opt));
        } else {
            if (!pat) throw std::invalid_argument("suite " + suite + " needs a pattern");
            const Pattern p = as_pattern(*pat);
            if (suite == "special") {
                reports.push_back(verify_equality_clause(p, q_max, opt));
                reports.push_back(verify_min_isolating_sets(p, q_max, opt));
                reports.push_back(verify_two_constituents(p, q_max, opt));
            } else if (suite == "gluing") {
                reports.push_back(verify_gluing(p, opt));
            } else {
                std::vector<Graph> graphs;
                std::string desc;
                if (universe) {
                    graphs = *universe;
                    desc = "given";
                } else {
                    const EnumSpec spec{1, n_max > 0 ? n_max : (p.k() <= 3 ? 8 : 7), 0, -1, true};
                    graphs = enumerate_graphs(spec);
                    desc = spec.describe();
                }
                if (suite == "bound") {
                    reports.push_back(verify_bound(p, graphs, opt, desc));
                } else if (suite == "extremal") {
                    reports.push_back(verify_extremal(p, graphs, opt, desc));
                } else if (suite == "two-copies") {
                    reports.push_back(verify_two_copies(p, graphs, opt, desc));
                } else {
                    throw std::invalid_argument("unknown suite " + suite);
                }
            }
        }
    }
    py::list out;
    for (const auto& r : reports) out.append(report_dict(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_isolab, m) {
    m.doc() = "Exact F-isolation numbers for small graphs";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_static("from_graph6", &parse_graph6, py::arg("text"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("complement", &Graph::complement)
        .def("relabel", [](const Graph& g, const std::vector<int>& perm) { return g.relabel(perm); })
        .def("graph6", [](const Graph& g) { return emit_graph6(g); })
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("graph"));

    py::class_<Pattern>(m, "Pattern")
        .def_property_readonly("name", &Pattern::name)
        .def_property_readonly("graph", &Pattern::graph)
        .def_property_readonly("k", &Pattern::k)
        .def_property_readonly("ell", &Pattern::ell)
        .def_property_readonly("gamma", &Pattern::gamma)
        .def_property_readonly("dominating", [](const Pattern& p) { return p.dominating().to_vector(); })
        .def("__repr__", [](const Pattern& p) { return "Pattern('" + p.name() + "')"; });

    m.def("pattern", [](const std::variant<std::string, Graph>& what, const std::string& name) {
        if (const auto* text = std::get_if<std::string>(&what)) return pattern_from_name(*text);
        return make_pattern(std::get<Graph>(what), name);
    }, py::arg("what"), py::arg("name") = "");

    py::class_<Family>(m, "Family")
        .def_static("of", [](const std::vector<PatternLike>& ps) {
            std::vector<Pattern> out;
            for (const auto& p : ps) out.push_back(as_pattern(p));
            return Family::of(std::move(out));
        })
        .def_static("cycles", &Family::all_cycles)
        .def_property_readonly("name", &Family::name)
        .def("__repr__", [](const Family& f) { return "Family('" + f.name() + "')"; });

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("iota", &SolveResult::iota)
        .def_property_readonly("witness", [](const SolveResult& r) { return r.witness.to_vector(); })
        .def_property_readonly("nodes_expanded", [](const SolveResult& r) { return r.stats.nodes_expanded; })
        .def("__repr__", [](const SolveResult& r) {
            return "SolveResult(iota=" + std::to_string(r.iota) + ", witness=" + r.witness.to_string() + ")";
        });

    m.def("solve", [](const Graph& g, const FamilyLike& f, const std::vector<int>& forced) {
        return solve(g, as_family(f), to_set(forced));
    }, py::arg("graph"), py::arg("family"), py::arg("forced") = std::vector<int>{});
    m.def("solve_oracle", [](const Graph& g, const FamilyLike& f) { return solve_oracle(g, as_family(f)); },
          py::arg("graph"), py::arg("family"));
    m.def("is_isolating", [](const Graph& g, const FamilyLike& f, const std::vector<int>& d) {
        return is_isolating(g, as_family(f), to_set(d));
    }, py::arg("graph"), py::arg("family"), py::arg("d"));
    m.def("domination_number", &domination_number, py::arg("graph"));

    m.def("canonical_form", &canonical_form, py::arg("graph"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));
    m.def("automorphism_orbits", &automorphism_orbits, py::arg("graph"));

    m.def("enumerate_graphs", [](int n_max, int n_min, int m_min, int m_max, bool connected) {
        return enumerate_graphs(EnumSpec{n_min, n_max, m_min, m_max, connected});
    }, py::arg("n_max"), py::arg("n_min") = 1, py::arg("m_min") = 0, py::arg("m_max") = -1,
          py::arg("connected") = true);

    m.def("enumerate_pure_special", [](const PatternLike& p, int edges, bool layout) {
        return specials(enumerate_pure_special(as_pattern(p), edges), layout);
    }, py::arg("pattern"), py::arg("m"), py::arg("layout") = false);
    m.def("enumerate_special", [](const PatternLike& p, int edges, bool layout) {
        return specials(enumerate_special(as_pattern(p), edges), layout);
    }, py::arg("pattern"), py::arg("m"), py::arg("layout") = false);
    m.def("enumerate_f_plus_e", [](const PatternLike& p) { return enumerate_f_plus_e(as_pattern(p)); },
          py::arg("pattern"));
    m.def("is_special_pair", [](const Graph& g, const PatternLike& p) { return is_special_pair(g, as_pattern(p)); },
          py::arg("graph"), py::arg("pattern"));

    py::enum_<ExtremalClass>(m, "ExtremalClass")
        .value("PureSpecial", ExtremalClass::PureSpecial)
        .value("FPlusE", ExtremalClass::FPlusE)
        .value("NonExtremal", ExtremalClass::NonExtremal)
        .value("SpecialPairException", ExtremalClass::SpecialPairException);
    m.def("recognize_extremal", [](const Graph& g, const PatternLike& p) {
        return recognize_extremal(g, as_pattern(p));
    }, py::arg("graph"), py::arg("pattern"));

    m.def("verify", &verify, py::arg("suite"), py::arg("pattern") = py::none(), py::arg("n_max") = 0,
          py::arg("universe") = py::none(), py::arg("workers") = 0, py::arg("seed") = 0, py::arg("trials") = 1000,
          py::arg("q_max") = 3,
          "Run a verification suite and return its reports as dicts.");
}
