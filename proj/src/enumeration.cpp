#include "isolab/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "isolab/canonical.hpp"
#include "isolab/graph6.hpp"

namespace isolab {

std::string EnumSpec::describe() const {
    std::string out = "n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
    out += " m=" + std::to_string(m_min) + ".." + (m_max < 0 ? std::string("*") : std::to_string(m_max));
    out += connected_only ? " connected" : " all";
    return out;
}

namespace {

// Canonical representatives on n vertices, sorted by graph6, built by adding
// one vertex with every neighborhood to each (n-1)-vertex representative.
// Connected graphs always have a non-cut vertex, so the connected-only
// levels only extend connected representatives by non-empty neighborhoods.
std::vector<std::pair<std::string, Graph>> extend_level(
    const std::vector<std::pair<std::string, Graph>>& prev, int n, bool connected_only) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> out;
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (const auto& [form, base] : prev) {
        std::vector<VertexSet> rows(base.rows().begin(), base.rows().end());
        rows.emplace_back();
        for (std::uint64_t nb = connected_only ? 1 : 0; nb < subsets; ++nb) {
            std::vector<VertexSet> grown = rows;
            grown[n - 1] = VertexSet(nb);
            for (int u : VertexSet(nb)) grown[u].insert(n - 1);
            const Canonical c = canonicalize(Graph::from_rows(std::move(grown)));
            std::string key = emit_graph6(c.graph);
            if (seen.insert(key).second) out.emplace_back(std::move(key), c.graph);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

void for_each_graph(const EnumSpec& spec, const std::function<void(const Graph&)>& visit) {
    if (spec.n_max > kEnumMaxOrder) {
        throw CapacityError("built-in enumeration supports n <= " + std::to_string(kEnumMaxOrder));
    }
    if (spec.n_min < 0 || spec.n_max < spec.n_min) return;
    auto in_window = [&](const Graph& g) {
        return g.m() >= spec.m_min && (spec.m_max < 0 || g.m() <= spec.m_max);
    };

    if (spec.n_min == 0 && spec.m_min == 0) visit(Graph(0));
    std::vector<std::pair<std::string, Graph>> level{{emit_graph6(Graph(1)), Graph(1)}};
    for (int n = 1; n <= spec.n_max; ++n) {
        if (n > 1) level = extend_level(level, n, spec.connected_only);
        if (n < spec.n_min) continue;
        for (const auto& [form, g] : level)
            if (in_window(g)) visit(g);
    }
}

std::vector<Graph> enumerate_graphs(const EnumSpec& spec) {
    std::vector<Graph> out;
    for_each_graph(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

void ingest_graph6(std::istream& in, const std::function<void(const Graph&, std::size_t line)>& visit) {
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (line == 1 && text.rfind(">>graph6<<", 0) == 0) {
            text.erase(0, 10);
            if (text.empty()) continue;
        }
        Graph g;
        try {
            g = parse_graph6(text);
        } catch (const Graph6Error& e) {
            throw IngestError(line, e.what());
        }
        visit(g, line);
    }
}

std::vector<Graph> ingest_graph6(std::istream& in) {
    std::vector<Graph> out;
    ingest_graph6(in, [&](const Graph& g, std::size_t) { out.push_back(g); });
    return out;
}

}  // namespace isolab
