#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isolab/graph.hpp"
#include "isolab/pattern.hpp"

namespace isolab {

/// The set of forbidden graphs: a finite list of patterns, or all cycles.
class Family {
public:
    /// Throws std::invalid_argument on an empty list.
    static Family of(std::vector<Pattern> patterns);
    static Family single(Pattern p) { return of({std::move(p)}); }
    static Family all_cycles();

    bool is_all_cycles() const { return all_cycles_; }
    const std::vector<Pattern>& patterns() const { return patterns_; }
    /// True when every member graph is connected (cycles are).
    bool connected() const;
    /// "cycles" or the pattern names joined by '+'.
    std::string name() const;

private:
    std::vector<Pattern> patterns_;
    bool all_cycles_ = false;
};

struct SolveStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t copies_found = 0;
};

struct SolveResult {
    int iota = 0;
    VertexSet witness;
    SolveStats stats;
};

bool is_family_free(const Graph& g, const Family& fam);
/// Family-freeness of G[alive].
bool is_family_free(const Graph& g, const Family& fam, VertexSet alive);

/// Vertex set of one family graph in G[alive], if any. For cycles this is a
/// shortest cycle.
std::optional<VertexSet> find_family_copy(const Graph& g, const Family& fam, VertexSet alive);

/// G - N[d] is family-free.
bool is_isolating(const Graph& g, const Family& fam, VertexSet d);

/// Exact isolation number by iterative deepening over |D| with hitting-set
/// branching on N[V(F')] for one uncovered copy F'. With `forced` non-empty,
/// minimizes over isolating sets containing `forced` (iota counts them).
SolveResult solve(const Graph& g, const Family& fam, VertexSet forced = {});

/// Reference implementation: subsets in size-then-lexicographic order, each
/// checked on the explicitly deleted residual graph. Throws CapacityError
/// above kOracleMaxVertices.
SolveResult solve_oracle(const Graph& g, const Family& fam);
inline constexpr int kOracleMaxVertices = 30;

/// gamma(G) = iota(G, K1).
int domination_number(const Graph& g);

}  // namespace isolab
