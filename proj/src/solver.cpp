#include "isolab/solver.hpp"

#include <array>

#include "isolab/named_graphs.hpp"

namespace isolab {

Family Family::of(std::vector<Pattern> patterns) {
    if (patterns.empty()) throw std::invalid_argument("family needs at least one pattern");
    Family f;
    f.patterns_ = std::move(patterns);
    return f;
}

Family Family::all_cycles() {
    Family f;
    f.all_cycles_ = true;
    return f;
}

bool Family::connected() const {
    if (all_cycles_) return true;
    for (const auto& p : patterns_)
        if (!p.connected()) return false;
    return true;
}

std::string Family::name() const {
    if (all_cycles_) return "cycles";
    std::string out;
    for (const auto& p : patterns_) {
        if (!out.empty()) out += '+';
        out += p.name();
    }
    return out;
}

namespace {

// Shortest cycle of G[alive] via BFS from every root; returns its vertex set.
std::optional<VertexSet> shortest_cycle(const Graph& g, VertexSet alive) {
    if (is_forest(g, alive)) return std::nullopt;
    std::array<int, kMaxVertices> parent{}, dist{};
    int best_len = kMaxVertices + 1;
    VertexSet best;
    for (int root : alive) {
        parent.fill(-1);
        dist.fill(-1);
        dist[root] = 0;
        std::array<int, kMaxVertices> queue{};
        int head = 0, tail = 0;
        queue[tail++] = root;
        bool closed = false;
        while (head < tail && !closed) {
            const int u = queue[head++];
            if (2 * dist[u] + 1 >= best_len) break;
            for (int w : g.neighbors(u) & alive) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    const int len = dist[u] + dist[w] + 1;
                    if (len < best_len) {
                        // Walk both endpoints up to their meeting point.
                        VertexSet cyc;
                        int a = u, b = w;
                        while (a != b) {
                            if (dist[a] >= dist[b]) {
                                cyc.insert(a);
                                a = parent[a];
                            } else {
                                cyc.insert(b);
                                b = parent[b];
                            }
                        }
                        cyc.insert(a);
                        if (cyc.size() < best_len) {
                            best_len = cyc.size();
                            best = cyc;
                        }
                    }
                    closed = true;
                    break;
                }
            }
        }
    }
    return best;
}

std::vector<VertexSet> residual_copies(const Graph& g, const Family& fam, VertexSet alive,
                                       std::size_t limit) {
    if (fam.is_all_cycles()) {
        auto c = shortest_cycle(g, alive);
        if (!c) return {};
        return {*c};
    }
    std::vector<VertexSet> out;
    for (const auto& p : fam.patterns()) {
        if (out.size() >= limit) break;
        auto more = sample_copies(g, p, alive, limit - out.size());
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

class IsolationSearch {
public:
    IsolationSearch(const Graph& g, const Family& fam) : g_(g), fam_(fam) {}

    bool run(VertexSet alive, int budget) {
        chosen_ = VertexSet{};
        return dfs(alive, budget, VertexSet{});
    }

    VertexSet chosen() const { return chosen_; }
    const SolveStats& stats() const { return stats_; }

private:
    static constexpr std::size_t kSampleLimit = 8;

    bool dfs(VertexSet alive, int budget, VertexSet forbidden) {
        ++stats_.nodes_expanded;
        auto copies = residual_copies(g_, fam_, alive, kSampleLimit);
        stats_.copies_found += copies.size();
        if (copies.empty()) return true;
        if (budget == 0) return false;
        if (budget >= 1 && packing_exceeds(alive, budget)) return false;

        // Branch on the copy whose closed neighborhood has the fewest
        // admissible vertices.
        VertexSet cand;
        int best = kMaxVertices + 1;
        for (VertexSet c : copies) {
            VertexSet here = closed_neighborhood(g_, c) - forbidden;
            if (here.size() < best) {
                best = here.size();
                cand = here;
            }
        }
        // Branch i excludes the candidates of branches 1..i-1.
        VertexSet excluded = forbidden;
        for (int v : cand) {
            chosen_.insert(v);
            if (dfs(alive - g_.closed_neighbors(v), budget - 1, excluded)) return true;
            chosen_.erase(v);
            excluded.insert(v);
        }
        return false;
    }

    // Copies at pairwise distance >= 3 need distinct vertices of D.
    bool packing_exceeds(VertexSet alive, int budget) {
        VertexSet region = alive;
        int count = 0;
        while (count <= budget) {
            auto copies = residual_copies(g_, fam_, region, 1);
            if (copies.empty()) return false;
            ++count;
            region -= closed_neighborhood(g_, closed_neighborhood(g_, copies.front()));
        }
        return true;
    }

    const Graph& g_;
    const Family& fam_;
    VertexSet chosen_;
    SolveStats stats_;
};

}  // namespace

bool is_family_free(const Graph& g, const Family& fam, VertexSet alive) {
    alive &= g.vertices();
    if (fam.is_all_cycles()) return is_forest(g, alive);
    for (const auto& p : fam.patterns())
        if (contains_copy(g, p, alive)) return false;
    return true;
}

bool is_family_free(const Graph& g, const Family& fam) { return is_family_free(g, fam, g.vertices()); }

std::optional<VertexSet> find_family_copy(const Graph& g, const Family& fam, VertexSet alive) {
    auto copies = residual_copies(g, fam, alive & g.vertices(), 1);
    if (copies.empty()) return std::nullopt;
    return copies.front();
}

bool is_isolating(const Graph& g, const Family& fam, VertexSet d) {
    return is_family_free(delete_vertices(g, closed_neighborhood(g, d)).graph, fam);
}

SolveResult solve(const Graph& g, const Family& fam, VertexSet forced) {
    if (!forced.subset_of(g.vertices())) throw std::invalid_argument("forced vertices out of range");
    IsolationSearch search(g, fam);
    const VertexSet alive = g.vertices() - closed_neighborhood(g, forced);
    for (int depth = 0;; ++depth) {
        if (search.run(alive, depth)) {
            SolveResult r;
            r.witness = forced | search.chosen();
            r.iota = r.witness.size();
            r.stats = search.stats();
            return r;
        }
    }
}

SolveResult solve_oracle(const Graph& g, const Family& fam) {
    const int n = g.n();
    if (n > kOracleMaxVertices) {
        throw CapacityError("solve_oracle supports at most " + std::to_string(kOracleMaxVertices) +
                            " vertices");
    }
    SolveResult r;
    for (int size = 0; size <= n; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            VertexSet d;
            for (int v : idx) d.insert(v);
            ++r.stats.nodes_expanded;
            if (is_family_free(delete_vertices(g, closed_neighborhood(g, d)).graph, fam)) {
                r.iota = size;
                r.witness = d;
                return r;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // N[V(G)] = V(G), so the full set always isolates.
    throw std::logic_error("solve_oracle: unreachable");
}

int domination_number(const Graph& g) {
    static const Family k1 = Family::single(make_pattern(graphs::complete(1), "k1"));
    return solve(g, k1).iota;
}

}  // namespace isolab
