#pragma once

#include <string>
#include <vector>

#include "isolab/graph.hpp"

namespace isolab {

/// Result of a canonical labeling search.
struct Canonical {
    /// labeling[v] = canonical position of vertex v.
    std::vector<int> labeling;
    /// g relabeled by `labeling`; equal for isomorphic inputs.
    Graph graph;
    /// Automorphism generators found during the search, as vertex maps.
    std::vector<std::vector<int>> generators;
    /// orbit[v] = smallest vertex in the automorphism orbit of v.
    std::vector<int> orbit;
};

/// Exact canonical labeling by equitable refinement plus individualization,
/// pruned with the automorphisms discovered along the way.
Canonical canonicalize(const Graph& g);

/// graph6 of the canonically relabeled graph. Requires n <= 62.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// orbit[v] = smallest vertex in v's automorphism orbit.
std::vector<int> automorphism_orbits(const Graph& g);

}  // namespace isolab
