#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isolab {

/// Maximum vertex count of the bitmask backend.
inline constexpr int kMaxVertices = 64;

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subset of {0..63} stored as one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t b) : b_(b) {}
        constexpr int operator*() const { return std::countr_zero(b_); }
        constexpr iterator& operator++() { b_ &= b_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t b_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    /// "{0,3,5}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
    /// Validates symmetry and irreflexivity.
    static Graph from_rows(std::vector<VertexSet> rows);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    VertexSet vertices() const { return VertexSet::range(n()); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | VertexSet::single(v); }
    int degree(int v) const { return adj_[v].size(); }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    std::span<const VertexSet> rows() const { return adj_; }
    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    /// Edge count of the subgraph induced by s.
    int edges_within(VertexSet s) const;

    /// New graph with edge uv added (no-op copy if present).
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Complement on the same vertex set.
    Graph complement() const;
    /// Disjoint union; other's vertices are shifted by n().
    Graph disjoint_union(const Graph& other) const;
    /// Graph with vertex perm[v] in place of v.
    Graph relabel(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adj_;
    int m_ = 0;
};

/// N[X]: x together with all neighbors of its members.
VertexSet closed_neighborhood(const Graph& g, VertexSet x);

struct Deletion {
    Graph graph;
    /// old id -> new id, -1 for deleted vertices.
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

/// G - X, relabeled densely preserving vertex order.
Deletion delete_vertices(const Graph& g, VertexSet x);
/// G[S]; same relabeling convention as delete_vertices.
Deletion induced_subgraph(const Graph& g, VertexSet s);

/// Components ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g);
/// Components of G[alive].
std::vector<VertexSet> components(const Graph& g, VertexSet alive);
bool is_connected(const Graph& g);
/// True iff G[alive] has no cycle.
bool is_forest(const Graph& g, VertexSet alive);

}  // namespace isolab
