#include "isolab/graph.hpp"

#include <algorithm>

namespace isolab {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_item = true;
    for (int v : *this) {
        if (!first_item) out += ',';
        out += std::to_string(v);
        first_item = false;
    }
    out += '}';
    return out;
}

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(kMaxVertices));
    }
}

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    adj_.assign(n, VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop in simple graph");
        if (adj_[u].contains(v)) continue;
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const VertexSet all = VertexSet::range(n);
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        if (!rows[v].subset_of(all)) throw std::invalid_argument("adjacency row out of range");
        if (rows[v].contains(v)) throw std::invalid_argument("self-loop in simple graph");
        for (int u : rows[v]) {
            if (!rows[u].contains(v)) throw std::invalid_argument("adjacency not symmetric");
        }
        degree_sum += rows[v].size();
    }
    Graph g;
    g.adj_ = std::move(rows);
    g.m_ = degree_sum / 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u) {
        for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
    }
    return out;
}

int Graph::edges_within(VertexSet s) const {
    int twice = 0;
    for (int v : s) twice += (adj_[v] & s).size();
    return twice / 2;
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    Graph g = *this;
    if (!g.adj_[u].contains(v)) {
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    if (g.adj_[u].contains(v)) {
        g.adj_[u].erase(v);
        g.adj_[v].erase(u);
        --g.m_;
    }
    return g;
}

Graph Graph::complement() const {
    std::vector<VertexSet> rows(adj_.size());
    const VertexSet all = vertices();
    for (int v = 0; v < n(); ++v) rows[v] = all - adj_[v] - VertexSet::single(v);
    return from_rows(std::move(rows));
}

Graph Graph::disjoint_union(const Graph& other) const {
    check_order(n() + other.n());
    Graph g = *this;
    const int shift = n();
    for (const VertexSet row : other.adj_) g.adj_.push_back(VertexSet(row.bits() << shift));
    g.m_ += other.m_;
    return g;
}

Graph Graph::relabel(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<VertexSet> rows(adj_.size());
    for (int v = 0; v < n(); ++v) {
        VertexSet row;
        for (int u : adj_[v]) row.insert(perm[u]);
        rows[perm[v]] = row;
    }
    return from_rows(std::move(rows));
}

VertexSet closed_neighborhood(const Graph& g, VertexSet x) {
    VertexSet out = x;
    for (int v : x) out |= g.neighbors(v);
    return out;
}

Deletion induced_subgraph(const Graph& g, VertexSet s) {
    Deletion d;
    d.old_to_new.assign(g.n(), -1);
    for (int v : s) {
        d.old_to_new[v] = static_cast<int>(d.new_to_old.size());
        d.new_to_old.push_back(v);
    }
    std::vector<VertexSet> rows(d.new_to_old.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int u : g.neighbors(d.new_to_old[i]) & s) rows[i].insert(d.old_to_new[u]);
    }
    d.graph = Graph::from_rows(std::move(rows));
    return d;
}

Deletion delete_vertices(const Graph& g, VertexSet x) {
    return induced_subgraph(g, g.vertices() - x);
}

std::vector<VertexSet> components(const Graph& g, VertexSet alive) {
    std::vector<VertexSet> out;
    VertexSet left = alive & g.vertices();
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            next = (next & left) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_forest(const Graph& g, VertexSet alive) {
    const int vertex_count = alive.size();
    const int edge_count = g.edges_within(alive);
    return edge_count == vertex_count - static_cast<int>(components(g, alive).size());
}

}  // namespace isolab
