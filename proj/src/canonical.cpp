#include "isolab/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "isolab/graph6.hpp"

namespace isolab {

namespace {

using Partition = std::vector<VertexSet>;
using Certificate = std::vector<std::uint64_t>;

// Splits cells by neighbor counts into each splitter cell until equitable.
// New cells are ordered by count, so the result is label-invariant.
void refine(const Graph& g, Partition& cells) {
    std::array<int, kMaxVertices> count{};
    bool split = true;
    while (split) {
        split = false;
        for (std::size_t s = 0; s < cells.size() && !split; ++s) {
            const VertexSet splitter = cells[s];
            Partition next;
            next.reserve(cells.size() + 4);
            for (const VertexSet cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                int lo = kMaxVertices, hi = -1;
                for (int v : cell) {
                    count[v] = (g.neighbors(v) & splitter).size();
                    lo = std::min(lo, count[v]);
                    hi = std::max(hi, count[v]);
                }
                if (lo == hi) {
                    next.push_back(cell);
                    continue;
                }
                for (int c = lo; c <= hi; ++c) {
                    VertexSet part;
                    for (int v : cell)
                        if (count[v] == c) part.insert(v);
                    if (!part.empty()) next.push_back(part);
                }
            }
            if (next.size() != cells.size()) {
                cells = std::move(next);
                split = true;
            }
        }
    }
}

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

class LabelingSearch {
public:
    explicit LabelingSearch(const Graph& g) : g_(g), n_(g.n()) {}

    void run() {
        Partition unit;
        if (n_ > 0) unit.push_back(g_.vertices());
        visit(std::move(unit), 0);
    }

    const std::vector<int>& best_perm() const { return best_perm_; }
    std::vector<std::vector<int>>& generators() { return generators_; }

private:
    // Returns the depth of the ancestor that should resume its child loop.
    int visit(Partition cells, int depth) {
        refine(g_, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        }
        if (target == cells.size()) return leaf(cells, depth);

        const VertexSet cell = cells[target];
        std::vector<int> tried;
        for (int v : cell) {
            if (pruned_by_orbit(v, tried, depth)) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(VertexSet::single(v));
            child.push_back(cell - VertexSet::single(v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            path_.push_back(v);
            const int resume = visit(std::move(child), depth + 1);
            path_.pop_back();
            if (resume < depth) return resume;
        }
        return depth - 1;
    }

    // Orbits of the group generated by known automorphisms fixing the
    // current prefix pointwise.
    bool pruned_by_orbit(int v, const std::vector<int>& tried, int depth) {
        if (tried.empty() || generators_.empty()) return false;
        DisjointSets sets(n_);
        bool any = false;
        for (const auto& gamma : generators_) {
            bool fixes = true;
            for (int d = 0; d < depth && fixes; ++d) fixes = gamma[path_[d]] == path_[d];
            if (!fixes) continue;
            any = true;
            for (int u = 0; u < n_; ++u) sets.unite(u, gamma[u]);
        }
        if (!any) return false;
        const int root = sets.find(v);
        return std::any_of(tried.begin(), tried.end(), [&](int u) { return sets.find(u) == root; });
    }

    int leaf(const Partition& cells, int depth) {
        std::vector<int> perm(n_);
        std::vector<int> label(n_);
        for (int i = 0; i < n_; ++i) {
            perm[i] = cells[i].first();
            label[perm[i]] = i;
        }
        Certificate cert(n_);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = 0;
            for (int u : g_.neighbors(perm[i])) row |= std::uint64_t{1} << label[u];
            cert[i] = row;
        }

        if (!have_first_) {
            have_first_ = true;
            first_cert_ = cert;
            first_perm_ = perm;
            first_path_ = path_;
            best_cert_ = std::move(cert);
            best_perm_ = perm;
            best_path_ = path_;
            return depth - 1;
        }
        if (cert == first_cert_) {
            record_automorphism(first_perm_, perm);
            return common_prefix(first_path_);
        }
        if (cert == best_cert_) {
            record_automorphism(best_perm_, perm);
            return common_prefix(best_path_);
        }
        if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_perm_ = std::move(perm);
            best_path_ = path_;
        }
        return depth - 1;
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> gamma(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gamma[from[i]] = to[i];
            identity = identity && from[i] == to[i];
        }
        if (!identity) generators_.push_back(std::move(gamma));
    }

    int common_prefix(const std::vector<int>& other) const {
        int j = 0;
        while (j < static_cast<int>(path_.size()) && j < static_cast<int>(other.size()) &&
               path_[j] == other[j])
            ++j;
        return j;
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    std::vector<int> path_;
    Certificate first_cert_, best_cert_;
    std::vector<int> first_perm_, best_perm_;
    std::vector<int> first_path_, best_path_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

Canonical canonicalize(const Graph& g) {
    LabelingSearch search(g);
    search.run();
    Canonical out;
    const int n = g.n();
    out.labeling.assign(n, 0);
    const auto& perm = search.best_perm();
    for (int i = 0; i < n; ++i) out.labeling[perm[i]] = i;
    out.graph = g.relabel(out.labeling);
    out.generators = std::move(search.generators());
    DisjointSets sets(n);
    for (const auto& gamma : out.generators)
        for (int v = 0; v < n; ++v) sets.unite(v, gamma[v]);
    out.orbit.resize(n);
    for (int v = 0; v < n; ++v) out.orbit[v] = sets.find(v);
    return out;
}

std::string canonical_form(const Graph& g) { return emit_graph6(canonicalize(g).graph); }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonicalize(a).graph == canonicalize(b).graph;
}

std::vector<int> automorphism_orbits(const Graph& g) { return canonicalize(g).orbit; }

}  // namespace isolab
