#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "isolab/graph.hpp"
#include "isolab/pattern.hpp"

namespace isolab {

class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Recipe for an (m,F)-special graph: q pendant F-constituents hung off a
/// quotient tree of connection vertices, plus a connected remainder glued at
/// the last connection vertex. m + 1 = q(k+2) + r with 0 <= r <= k+1.
struct SpecialSpec {
    Pattern pattern;
    int q = 0;
    int r = 0;
    /// Tree on constituent indices 0..q-1 (q-1 edges).
    std::vector<Edge> quotient_tree;
    /// Connected graph with r edges when q >= 1. When q == 0 it is the whole
    /// graph and has m = r - 1 edges.
    Graph remainder = Graph(1);
    /// Vertex of `remainder` identified with the last connection vertex.
    int remainder_root = 0;
    /// attach[i] = vertex of F joined to connection vertex i.
    std::vector<int> attach;

    int m() const { return q * (pattern.k() + 2) + r - 1; }
};

enum class VertexRole { Connection, Constituent, Remainder };

/// Where each part of a special graph lives in the host graph.
struct SpecialLayout {
    int q = 0;
    int r = 0;
    int m = 0;
    /// Host ids of the connection vertices v_1..v_q.
    std::vector<int> connections;
    /// Host vertex set of each F-copy F_i.
    std::vector<VertexSet> constituents;
    /// Host id of each w_i.
    std::vector<int> attach;
    /// Host ids of the remainder graph, including v_q.
    VertexSet remainder;
    std::vector<Edge> quotient_edges;
    std::vector<VertexRole> roles;

    /// Vertex set of the quotient tree.
    VertexSet quotient() const;
};

struct BuiltSpecial {
    Graph graph;
    SpecialLayout layout;
};

/// Throws ConstructionError when the spec violates its invariants.
BuiltSpecial build_special(const SpecialSpec& spec);

/// All pure (m,F)-special graphs up to isomorphism, ordered by canonical
/// form. Throws ConstructionError unless (k+2) divides (m+1).
std::vector<BuiltSpecial> enumerate_pure_special(const Pattern& p, int m);

/// All (m,F)-special graphs (pure or not) up to isomorphism, for the unique
/// (q, r) given by division with remainder.
std::vector<BuiltSpecial> enumerate_special(const Pattern& p, int m);

/// {F+e : e a non-edge of F} up to isomorphism; empty for complete F.
std::vector<Graph> enumerate_f_plus_e(const Pattern& p);

/// Every way to read g as a pure (m,F)-special graph, found directly from the
/// definition by searching for the quotient tree's vertex set.
std::vector<SpecialLayout> pure_special_decompositions(const Graph& g, const Pattern& p);

/// Pairs exempt from the (m+1)/(k+2) bound: G ~ F, or F ~ P3 and G ~ C6.
bool is_special_pair(const Graph& g, const Pattern& p);

enum class ExtremalClass { PureSpecial, FPlusE, NonExtremal, SpecialPairException };
std::string_view to_string(ExtremalClass c);

/// Per-graph classification record.
struct Verdict {
    int m = 0;
    int iota = 0;
    int bound_num = 0;
    int bound_den = 0;
    bool attains = false;
    ExtremalClass cls = ExtremalClass::NonExtremal;
};

/// Generate-and-match recognizer with per-m caches of canonical forms.
/// Safe to share between threads.
class ExtremalRecognizer {
public:
    /// Requires gamma(p) == 1 and k >= 3.
    explicit ExtremalRecognizer(Pattern p);

    const Pattern& pattern() const { return p_; }

    /// g must be connected.
    ExtremalClass classify(const Graph& g) const;
    bool is_pure_special(const Graph& g) const;
    bool is_f_plus_e(const Graph& g) const;
    /// Any (m,F)-special graph, pure or not.
    bool is_special(const Graph& g) const;

    Verdict verdict(const Graph& g) const;

private:
    const std::unordered_set<std::string>& forms(int m, bool pure_only) const;

    Pattern p_;
    std::string f_form_;
    std::unordered_set<std::string> f_plus_e_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, bool>, std::unordered_set<std::string>> cache_;
};

ExtremalClass recognize_extremal(const Graph& g, const Pattern& p);

}  // namespace isolab
