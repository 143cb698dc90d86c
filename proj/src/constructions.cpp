#include "isolab/constructions.hpp"

#include <algorithm>
#include <set>

#include "isolab/canonical.hpp"
#include "isolab/enumeration.hpp"
#include "isolab/graph6.hpp"
#include "isolab/named_graphs.hpp"
#include "isolab/solver.hpp"

namespace isolab {

VertexSet SpecialLayout::quotient() const {
    VertexSet s;
    for (int v : connections) s.insert(v);
    return s;
}

namespace {

bool is_tree(int q, const std::vector<Edge>& edges) {
    if (static_cast<int>(edges.size()) != q - 1) return false;
    for (auto [a, b] : edges)
        if (a < 0 || b < 0 || a >= q || b >= q || a == b) return false;
    Graph t(q, edges);
    return t.m() == q - 1 && is_connected(t);
}

// Labeled trees on q vertices, one per isomorphism class, via Pruefer codes.
std::vector<std::vector<Edge>> tree_shapes(int q) {
    if (q <= 1) return {{}};
    if (q == 2) return {{{0, 1}}};
    std::map<std::string, std::vector<Edge>> shapes;
    std::vector<int> code(q - 2, 0);
    while (true) {
        std::vector<int> degree(q, 1);
        for (int c : code) ++degree[c];
        std::vector<Edge> edges;
        for (int c : code) {
            int leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
            --degree[leaf];
            --degree[c];
        }
        int u = -1, w = -1;
        for (int v = 0; v < q; ++v) {
            if (degree[v] == 1) (u < 0 ? u : w) = v;
        }
        edges.emplace_back(u, w);
        shapes.emplace(canonical_form(Graph(q, edges)), std::move(edges));

        int i = q - 3;
        while (i >= 0 && code[i] == q - 1) code[i--] = 0;
        if (i < 0) break;
        ++code[i];
    }
    std::vector<std::vector<Edge>> out;
    for (auto& [form, edges] : shapes) out.push_back(std::move(edges));
    return out;
}

std::vector<int> orbit_representatives(const Graph& g) {
    const auto orbit = automorphism_orbits(g);
    std::vector<int> reps;
    for (int v = 0; v < g.n(); ++v)
        if (orbit[v] == v) reps.push_back(v);
    return reps;
}

// Calls visit(attach) for every tuple in reps^q.
template <class Visit>
void for_each_attach(int q, const std::vector<int>& reps, Visit&& visit) {
    std::vector<std::size_t> idx(q, 0);
    std::vector<int> attach(q);
    while (true) {
        for (int i = 0; i < q; ++i) attach[i] = reps[idx[i]];
        visit(attach);
        int i = q - 1;
        while (i >= 0 && idx[i] + 1 == reps.size()) idx[i--] = 0;
        if (i < 0) return;
        ++idx[i];
    }
}

void check_m(int m) {
    if (m < 0) throw ConstructionError("edge count must be non-negative");
}

std::vector<BuiltSpecial> sorted_unique(std::map<std::string, BuiltSpecial>& by_form) {
    std::vector<BuiltSpecial> out;
    out.reserve(by_form.size());
    for (auto& [form, built] : by_form) out.push_back(std::move(built));
    return out;
}

}  // namespace

BuiltSpecial build_special(const SpecialSpec& spec) {
    const Pattern& p = spec.pattern;
    const int k = p.k();
    const int ell = p.ell();
    const int q = spec.q;
    const int r = spec.r;
    if (ell < 1) throw ConstructionError("pattern graph is empty");
    if (!p.connected()) throw ConstructionError("pattern graph must be connected");
    if (q < 0) throw ConstructionError("q must be non-negative");
    if (r < 0 || r > k + 1) throw ConstructionError("r must lie in 0..k+1");
    if (!is_connected(spec.remainder) || spec.remainder.n() < 1) {
        throw ConstructionError("remainder graph must be connected and non-null");
    }

    BuiltSpecial out;
    SpecialLayout& lay = out.layout;
    lay.q = q;
    lay.r = r;
    lay.m = spec.m();

    if (q == 0) {
        if (r < 1) throw ConstructionError("q = 0 needs r >= 1 (m = r - 1 >= 0)");
        if (spec.remainder.m() != r - 1) {
            throw ConstructionError("with q = 0 the remainder is the whole graph and must have m = r - 1 edges");
        }
        out.graph = spec.remainder;
        lay.remainder = out.graph.vertices();
        lay.roles.assign(out.graph.n(), VertexRole::Remainder);
        return out;
    }

    if (!is_tree(q, spec.quotient_tree)) throw ConstructionError("quotient_tree is not a tree on q vertices");
    if (static_cast<int>(spec.attach.size()) != q) throw ConstructionError("attach needs one vertex per constituent");
    for (int w : spec.attach)
        if (w < 0 || w >= ell) throw ConstructionError("attach vertex outside V(F)");
    if (spec.remainder.m() != r) throw ConstructionError("remainder must have exactly r edges");
    if (spec.remainder_root < 0 || spec.remainder_root >= spec.remainder.n()) {
        throw ConstructionError("remainder_root out of range");
    }

    const int base = q + q * ell;
    const int n = base + spec.remainder.n() - 1;
    if (n > kMaxVertices) throw CapacityError("special graph exceeds vertex capacity");

    std::vector<Edge> edges;
    lay.roles.assign(n, VertexRole::Constituent);
    for (int i = 0; i < q; ++i) {
        lay.connections.push_back(i);
        lay.roles[i] = VertexRole::Connection;
    }
    for (auto [a, b] : spec.quotient_tree) {
        edges.emplace_back(a, b);
        lay.quotient_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (int i = 0; i < q; ++i) {
        const int offset = q + i * ell;
        for (auto [a, b] : p.graph().edges()) edges.emplace_back(offset + a, offset + b);
        edges.emplace_back(i, offset + spec.attach[i]);
        lay.constituents.push_back(VertexSet::range(offset + ell) - VertexSet::range(offset));
        lay.attach.push_back(offset + spec.attach[i]);
    }
    std::vector<int> host(spec.remainder.n());
    int next = base;
    for (int v = 0; v < spec.remainder.n(); ++v) {
        host[v] = v == spec.remainder_root ? q - 1 : next++;
        lay.remainder.insert(host[v]);
        if (v != spec.remainder_root) lay.roles[host[v]] = VertexRole::Remainder;
    }
    for (auto [a, b] : spec.remainder.edges()) edges.emplace_back(host[a], host[b]);

    out.graph = Graph(n, edges);
    return out;
}

std::vector<BuiltSpecial> enumerate_pure_special(const Pattern& p, int m) {
    check_m(m);
    const int den = p.k() + 2;
    if ((m + 1) % den != 0) {
        throw ConstructionError("m + 1 = " + std::to_string(m + 1) + " is not divisible by k + 2 = " +
                                std::to_string(den));
    }
    const int q = (m + 1) / den;
    const auto reps = orbit_representatives(p.graph());
    std::map<std::string, BuiltSpecial> by_form;
    for (const auto& tree : tree_shapes(q)) {
        for_each_attach(q, reps, [&](const std::vector<int>& attach) {
            SpecialSpec spec{p, q, 0, tree, Graph(1), 0, attach};
            BuiltSpecial built = build_special(spec);
            by_form.emplace(canonical_form(built.graph), std::move(built));
        });
    }
    return sorted_unique(by_form);
}

std::vector<BuiltSpecial> enumerate_special(const Pattern& p, int m) {
    check_m(m);
    const int den = p.k() + 2;
    const int q = (m + 1) / den;
    const int r = (m + 1) % den;
    if (r == 0) return enumerate_pure_special(p, m);

    std::map<std::string, BuiltSpecial> by_form;
    if (q == 0) {
        EnumSpec universe{1, std::min(m + 1, kEnumMaxOrder), m, m, true};
        for (const Graph& g : enumerate_graphs(universe)) {
            SpecialSpec spec{p, 0, r, {}, g, 0, {}};
            BuiltSpecial built = build_special(spec);
            by_form.emplace(canonical_form(built.graph), std::move(built));
        }
        return sorted_unique(by_form);
    }

    const auto reps = orbit_representatives(p.graph());
    const auto remainders = enumerate_graphs(EnumSpec{2, std::min(r + 1, kEnumMaxOrder), r, r, true});
    const auto trees = tree_shapes(q);
    for (const Graph& rem : remainders) {
        for (int root : orbit_representatives(rem)) {
            for (const auto& tree : trees) {
                for_each_attach(q, reps, [&](const std::vector<int>& attach) {
                    SpecialSpec spec{p, q, r, tree, rem, root, attach};
                    BuiltSpecial built = build_special(spec);
                    by_form.emplace(canonical_form(built.graph), std::move(built));
                });
            }
        }
    }
    return sorted_unique(by_form);
}

std::vector<Graph> enumerate_f_plus_e(const Pattern& p) {
    const Graph& f = p.graph();
    std::map<std::string, Graph> by_form;
    for (auto [u, v] : f.complement().edges()) {
        Graph plus = f.with_edge(u, v);
        by_form.emplace(canonical_form(plus), std::move(plus));
    }
    std::vector<Graph> out;
    for (auto& [form, g] : by_form) out.push_back(std::move(g));
    return out;
}

std::vector<SpecialLayout> pure_special_decompositions(const Graph& g, const Pattern& p) {
    std::vector<SpecialLayout> out;
    const int k = p.k();
    const int ell = p.ell();
    const int m = g.m();
    if ((m + 1) % (k + 2) != 0) return out;
    const int q = (m + 1) / (k + 2);
    const int n = g.n();
    if (q < 1 || n != q * (ell + 1) || !is_connected(g)) return out;
    const Graph f_canon = canonicalize(p.graph()).graph;

    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int v : idx) s.insert(v);
        bool ok = g.edges_within(s) == q - 1 && components(g, s).size() == 1;
        for (int v : s) {
            if (!ok) break;
            ok = (g.neighbors(v) - s).size() == 1;
        }
        std::vector<VertexSet> parts;
        if (ok) {
            parts = components(g, g.vertices() - s);
            ok = static_cast<int>(parts.size()) == q;
        }
        for (VertexSet part : parts) {
            if (!ok) break;
            int links = 0;
            for (int v : part) links += (g.neighbors(v) & s).size();
            ok = links == 1 && part.size() == ell && g.edges_within(part) == k &&
                 canonicalize(induced_subgraph(g, part).graph).graph == f_canon;
        }
        if (ok) {
            SpecialLayout lay;
            lay.q = q;
            lay.m = m;
            lay.roles.assign(n, VertexRole::Constituent);
            for (int v : s) {
                const int w = (g.neighbors(v) - s).first();
                lay.connections.push_back(v);
                lay.attach.push_back(w);
                lay.roles[v] = VertexRole::Connection;
                for (VertexSet part : parts)
                    if (part.contains(w)) lay.constituents.push_back(part);
                for (int u : g.neighbors(v) & s)
                    if (v < u) lay.quotient_edges.emplace_back(v, u);
            }
            lay.remainder = VertexSet::single(lay.connections.back());
            out.push_back(std::move(lay));
        }

        int i = q - 1;
        while (i >= 0 && idx[i] == n - q + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

bool is_special_pair(const Graph& g, const Pattern& p) {
    if (is_isomorphic(g, p.graph())) return true;
    return is_isomorphic(p.graph(), graphs::path(3)) && is_isomorphic(g, graphs::cycle(6));
}

std::string_view to_string(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::PureSpecial: return "pure-special";
        case ExtremalClass::FPlusE: return "F-plus-e";
        case ExtremalClass::NonExtremal: return "non-extremal";
        case ExtremalClass::SpecialPairException: return "special-pair-exception";
    }
    return "?";
}

ExtremalRecognizer::ExtremalRecognizer(Pattern p) : p_(std::move(p)) {
    if (p_.gamma() != 1) throw std::invalid_argument("recognizer needs a pattern with a dominating vertex");
    if (p_.k() < 3) throw std::invalid_argument("recognizer needs a pattern with at least 3 edges");
    f_form_ = canonical_form(p_.graph());
    for (const Graph& g : enumerate_f_plus_e(p_)) f_plus_e_.insert(canonical_form(g));
}

const std::unordered_set<std::string>& ExtremalRecognizer::forms(int m, bool pure_only) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(m, pure_only);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::unordered_set<std::string> set;
    for (const auto& built : pure_only ? enumerate_pure_special(p_, m) : enumerate_special(p_, m)) {
        set.insert(canonical_form(built.graph));
    }
    return cache_.emplace(key, std::move(set)).first->second;
}

bool ExtremalRecognizer::is_pure_special(const Graph& g) const {
    const int den = p_.k() + 2;
    const int m = g.m();
    if ((m + 1) % den != 0) return false;
    const int q = (m + 1) / den;
    if (q < 1 || g.n() != q * (p_.ell() + 1)) return false;
    return forms(m, true).count(canonical_form(g)) > 0;
}

bool ExtremalRecognizer::is_f_plus_e(const Graph& g) const {
    if (g.n() != p_.ell() || g.m() != p_.k() + 1) return false;
    return f_plus_e_.count(canonical_form(g)) > 0;
}

bool ExtremalRecognizer::is_special(const Graph& g) const {
    if (!is_connected(g)) return false;
    const int den = p_.k() + 2;
    const int m = g.m();
    const int q = (m + 1) / den;
    const int r = (m + 1) % den;
    // With q = 0 any connected graph is its own remainder.
    if (q == 0) return true;
    const int core = q * (p_.ell() + 1);
    if (g.n() < core || g.n() > core + r) return false;
    return forms(m, r == 0).count(canonical_form(g)) > 0;
}

ExtremalClass ExtremalRecognizer::classify(const Graph& g) const {
    if (!is_connected(g)) throw std::invalid_argument("recognize_extremal needs a connected graph");
    if (is_pure_special(g)) return ExtremalClass::PureSpecial;
    if (is_f_plus_e(g)) return ExtremalClass::FPlusE;
    if (g.n() == p_.ell() && g.m() == p_.k() && canonical_form(g) == f_form_) {
        return ExtremalClass::SpecialPairException;
    }
    return ExtremalClass::NonExtremal;
}

Verdict ExtremalRecognizer::verdict(const Graph& g) const {
    Verdict v;
    v.m = g.m();
    v.iota = solve(g, Family::single(p_)).iota;
    v.bound_num = v.m + 1;
    v.bound_den = p_.k() + 2;
    v.attains = v.iota * v.bound_den == v.bound_num;
    v.cls = classify(g);
    return v;
}

ExtremalClass recognize_extremal(const Graph& g, const Pattern& p) {
    return ExtremalRecognizer(p).classify(g);
}

}  // namespace isolab
