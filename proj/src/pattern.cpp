#include "isolab/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "isolab/graph6.hpp"
#include "isolab/named_graphs.hpp"

namespace isolab {

namespace {

bool has_dominating_subset(const Graph& f, int size, int from, VertexSet covered) {
    if (covered == f.vertices()) return true;
    if (size == 0) return false;
    for (int v = from; v < f.n(); ++v) {
        if (has_dominating_subset(f, size - 1, v + 1, covered | f.closed_neighbors(v))) return true;
    }
    return false;
}

int domination_number_small(const Graph& f) {
    for (int size = 0;; ++size) {
        if (has_dominating_subset(f, size, 0, VertexSet{})) return size;
    }
}

// Backtracking embedding of F into G[alive]. `visit` receives the image
// vertex set of each embedding and returns true to stop.
template <class Visit>
bool for_each_embedding(const Graph& g, const Pattern& p, VertexSet alive, Visit&& visit) {
    const int ell = p.ell();
    if (ell > alive.size()) return false;
    const auto& order = p.match_order();
    const auto& back = p.back_links();
    std::vector<int> need(ell);
    for (int i = 0; i < ell; ++i) need[i] = p.graph().degree(order[i]);
    std::vector<int> image(ell);

    auto extend = [&](auto& self, int pos, VertexSet used) -> bool {
        if (pos == ell) return visit(used);
        VertexSet cand = alive - used;
        for (int j : back[pos]) cand &= g.neighbors(image[j]);
        for (int c : cand) {
            if ((g.neighbors(c) & alive).size() < need[pos]) continue;
            image[pos] = c;
            if (self(self, pos + 1, used | VertexSet::single(c))) return true;
        }
        return false;
    };
    return extend(extend, 0, VertexSet{});
}

bool lex_less(VertexSet a, VertexSet b) {
    // Lexicographic comparison of the sorted member lists.
    while (!a.empty() && !b.empty()) {
        const int x = a.first(), y = b.first();
        if (x != y) return x < y;
        a.erase(x);
        b.erase(y);
    }
    return a.empty() && !b.empty();
}

int parse_int(std::string_view s) {
    int value = -1;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return -1;
    return value;
}

}  // namespace

Pattern make_pattern(Graph f, std::string name) {
    if (f.n() < 1) throw std::invalid_argument("pattern needs at least one vertex");
    Pattern p;
    p.name_ = name.empty() ? emit_graph6(f) : std::move(name);
    for (int v = 0; v < f.n(); ++v) {
        if (f.closed_neighbors(v) == f.vertices()) p.dominating_.insert(v);
    }
    p.gamma_ = p.dominating_.empty() ? domination_number_small(f) : 1;
    p.connected_ = is_connected(f);

    // Greedy order: each next vertex maximizes links to placed vertices,
    // then degree; ties go to the smaller id.
    const int ell = f.n();
    int start = 0;
    if (!p.dominating_.empty()) {
        start = p.dominating_.first();
    } else {
        for (int v = 1; v < ell; ++v)
            if (f.degree(v) > f.degree(start)) start = v;
    }
    VertexSet placed = VertexSet::single(start);
    p.order_.push_back(start);
    while (static_cast<int>(p.order_.size()) < ell) {
        int pick = -1, best_links = -1, best_deg = -1;
        for (int v : f.vertices() - placed) {
            const int links = (f.neighbors(v) & placed).size();
            if (links > best_links || (links == best_links && f.degree(v) > best_deg)) {
                pick = v;
                best_links = links;
                best_deg = f.degree(v);
            }
        }
        p.order_.push_back(pick);
        placed.insert(pick);
    }
    p.back_.resize(ell);
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < i; ++j)
            if (f.has_edge(p.order_[i], p.order_[j])) p.back_[i].push_back(j);
    p.f_ = std::move(f);
    return p;
}

Pattern pattern_from_name(std::string_view name) {
    if (name == "paw") return make_pattern(graphs::paw(), "paw");
    if (name.size() > 3 && name.substr(0, 3) == "k1_") {
        const int leaves = parse_int(name.substr(3));
        if (leaves >= 1) return make_pattern(graphs::star(leaves), std::string(name));
    }
    if (name.size() >= 2) {
        const int count = parse_int(name.substr(1));
        if (count >= 1) {
            switch (name[0]) {
                case 'k': return make_pattern(graphs::complete(count), std::string(name));
                case 'p': return make_pattern(graphs::path(count), std::string(name));
                case 'c':
                    if (count >= 3) return make_pattern(graphs::cycle(count), std::string(name));
                    break;
                default: break;
            }
        }
    }
    return make_pattern(parse_graph6(name), std::string(name));
}

std::optional<VertexSet> contains_copy(const Graph& g, const Pattern& p, VertexSet alive) {
    std::optional<VertexSet> found;
    for_each_embedding(g, p, alive & g.vertices(), [&](VertexSet s) {
        found = s;
        return true;
    });
    return found;
}

std::optional<VertexSet> contains_copy(const Graph& g, const Pattern& p) {
    return contains_copy(g, p, g.vertices());
}

std::vector<VertexSet> sample_copies(const Graph& g, const Pattern& p, VertexSet alive,
                                     std::size_t limit) {
    std::vector<VertexSet> out;
    if (limit == 0) return out;
    for_each_embedding(g, p, alive & g.vertices(), [&](VertexSet s) {
        out.push_back(s);
        return out.size() >= limit;
    });
    return out;
}

std::vector<VertexSet> enumerate_copies(const Graph& g, const Pattern& p, std::size_t limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_copies: limit must be at least 1");
    std::set<std::uint64_t> seen;
    for_each_embedding(g, p, g.vertices(), [&](VertexSet s) {
        seen.insert(s.bits());
        return false;
    });
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (auto bits : seen) out.emplace_back(bits);
    std::sort(out.begin(), out.end(), lex_less);
    if (out.size() > limit) out.resize(limit);
    return out;
}

}  // namespace isolab
