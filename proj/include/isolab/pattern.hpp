#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/graph.hpp"

namespace isolab {

/// A target graph F with the metadata the solver and constructions need.
class Pattern {
public:
    const Graph& graph() const { return f_; }
    const std::string& name() const { return name_; }
    /// |E(F)|
    int k() const { return f_.m(); }
    /// |V(F)|
    int ell() const { return f_.n(); }
    /// Vertices v with N_F[v] = V(F).
    VertexSet dominating() const { return dominating_; }
    /// Domination number of F.
    int gamma() const { return gamma_; }
    bool connected() const { return connected_; }

    /// Matching order over V(F); starts at a dominating vertex when gamma() == 1.
    const std::vector<int>& match_order() const { return order_; }
    /// For position i, the positions j < i adjacent to order[i] in F.
    const std::vector<std::vector<int>>& back_links() const { return back_; }

private:
    friend Pattern make_pattern(Graph f, std::string name);

    Graph f_;
    std::string name_;
    VertexSet dominating_;
    int gamma_ = 0;
    bool connected_ = false;
    std::vector<int> order_;
    std::vector<std::vector<int>> back_;
};

/// Requires |V(f)| >= 1. An empty name defaults to the graph6 string of f.
Pattern make_pattern(Graph f, std::string name = {});

/// k1, k2, p3, k3, k1_3, k1_<k>, paw, k<n>, p<n>, c<n>, or a graph6 string.
Pattern pattern_from_name(std::string_view name);

/// Vertex set of some F-copy in g, or nullopt if g is F-free.
std::optional<VertexSet> contains_copy(const Graph& g, const Pattern& p);
/// Same, restricted to the subgraph induced by `alive`.
std::optional<VertexSet> contains_copy(const Graph& g, const Pattern& p, VertexSet alive);

/// Distinct vertex sets of F-copies, in lexicographic order of their sorted
/// vertex lists, truncated to `limit`.
std::vector<VertexSet> enumerate_copies(const Graph& g, const Pattern& p, std::size_t limit);

/// Up to `limit` copies inside G[alive], in search order (possibly repeating a
/// vertex set). Used by the solver to pick a copy with few branch candidates.
std::vector<VertexSet> sample_copies(const Graph& g, const Pattern& p, VertexSet alive,
                                     std::size_t limit);

}  // namespace isolab
