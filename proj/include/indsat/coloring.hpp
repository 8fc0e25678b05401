#pragma once

#include "errors.hpp"
#include "graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace indsat {

inline constexpr long kDefaultPathBudget = 1000000;

// palette colors are 1..palette
struct EdgeColoring {
    int palette = 0;
    std::map<Edge, int> color;

    int get(Edge e) const {
        auto it = color.find(e);
        return it == color.end() ? 0 : it->second;
    }
    void set(Edge e, int c) { color[e] = c; }
};

// every induced u-v path, each one a list of indices into edges(g); the
// budget counts dfs states, not finished paths, so dead prefixes are charged
inline std::vector<std::vector<int>> induced_paths(const Graph& g, int u, int v,
                                                   long budget = kDefaultPathBudget) {
    assert(u != v && !g.has_edge(u, v));
    std::vector<std::vector<int>> eidx(g.n, std::vector<int>(g.n, -1));
    {
        int i = 0;
        for (auto e : g.edges()) {
            eidx[e.a][e.b] = eidx[e.b][e.a] = i;
            ++i;
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> path_edges;
    long nodes = 0;

    // tip = last vertex, forbidden = closed neighborhoods of everything before
    std::function<void(int, const BitRow&)> dfs = [&](int tip, const BitRow& forbidden) {
        if (++nodes > budget) throw resource_error("induced path budget exhausted");
        BitRow cand = g.adj[tip];
        cand.andnot(forbidden);
        if (cand.test(v)) {
            path_edges.push_back(eidx[tip][v]);
            out.push_back(path_edges);
            path_edges.pop_back();
            return; // v neighbours the tip, nothing longer stays induced
        }
        BitRow next = forbidden;
        next |= g.adj[tip];
        next.set(tip);
        if (next.test(v)) return;
        INDSAT_FOR_BITS(w, cand) {
            path_edges.push_back(eidx[tip][w]);
            dfs(w, next);
            path_edges.pop_back();
        }
    };
    BitRow start(g.n);
    start.set(u);
    dfs(u, start);
    return out;
}

struct NiceFailure {
    enum Kind { UncoloredEdge, ColorOutOfRange, PolychromaticTriangle, PairLacksTwoColors };
    Kind kind;
    std::vector<int> verts;
    std::vector<int> colors; // common colors for pair failures
};

struct NiceReport {
    bool nice = false;
    std::optional<NiceFailure> failure;
};

// a coloring is accepted when triangles are monochromatic and each
// non-adjacent pair has two colors met by every induced path between them;
// a pair with no induced path needs nothing beyond palette >= 2
inline NiceReport verify_nice(const Graph& g, const EdgeColoring& col,
                              long budget = kDefaultPathBudget) {
    if (col.palette < 0 || col.palette > 64)
        throw std::invalid_argument("palette must lie in 0..64");
    auto edges = g.edges();
    for (auto e : edges) {
        int c = col.get(e);
        if (c == 0) return {false, NiceFailure{NiceFailure::UncoloredEdge, {e.a, e.b}, {}}};
        if (c < 1 || c > col.palette)
            return {false, NiceFailure{NiceFailure::ColorOutOfRange, {e.a, e.b}, {c}}};
    }
    for (auto e : edges) {
        BitRow common = g.adj[e.a] & g.adj[e.b];
        INDSAT_FOR_BITS(w, common) {
            if (w < e.b) continue; // each triangle once, e = its least edge
            int c1 = col.get(e), c2 = col.get({e.a, w}), c3 = col.get({e.b, w});
            if (c1 != c2 || c1 != c3)
                return {false,
                        NiceFailure{NiceFailure::PolychromaticTriangle, {e.a, e.b, w}, {c1, c2, c3}}};
        }
    }
    uint64_t full = col.palette == 64 ? ~uint64_t{0} : (uint64_t{1} << col.palette) - 1;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            uint64_t commonColors = full;
            for (auto& p : induced_paths(g, u, v, budget)) {
                uint64_t mask = 0;
                for (int ei : p) mask |= uint64_t{1} << (col.get(edges[ei]) - 1);
                commonColors &= mask;
            }
            if (__builtin_popcountll(commonColors) < 2) {
                std::vector<int> cs;
                for (int c = 1; c <= col.palette; ++c)
                    if ((commonColors >> (c - 1)) & 1) cs.push_back(c);
                return {false, NiceFailure{NiceFailure::PairLacksTwoColors, {u, v}, cs}};
            }
        }
    return {true, std::nullopt};
}

namespace detail {

struct EdgeDSU {
    std::vector<int> parent;
    explicit EdgeDSU(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// triangle-forced classes, numbered by least member edge
inline std::vector<int> edge_classes(const Graph& g, const std::vector<Edge>& edges, int& count) {
    std::vector<std::vector<int>> eidx(g.n, std::vector<int>(g.n, -1));
    for (int i = 0; i < (int)edges.size(); ++i)
        eidx[edges[i].a][edges[i].b] = eidx[edges[i].b][edges[i].a] = i;
    EdgeDSU dsu((int)edges.size());
    for (auto e : edges) {
        BitRow common = g.adj[e.a] & g.adj[e.b];
        INDSAT_FOR_BITS(w, common) {
            dsu.unite(eidx[e.a][e.b], eidx[e.a][w]);
            dsu.unite(eidx[e.a][e.b], eidx[e.b][w]);
        }
    }
    std::vector<int> rootOrder((int)edges.size(), -1);
    count = 0;
    std::vector<int> cls(edges.size());
    for (int i = 0; i < (int)edges.size(); ++i) {
        int r = dsu.find(i);
        if (rootOrder[r] < 0) rootOrder[r] = count++;
        cls[i] = rootOrder[r];
    }
    return cls;
}

struct NiceSearch {
    const Graph& g;
    int n;
    std::vector<Edge> edges;
    std::vector<int> cls;
    int C = 0;

    struct Path {
        std::vector<int> classes;
    };
    struct Pair {
        std::vector<Path> paths;
    };
    std::vector<Pair> pairs;
    std::vector<std::vector<int>> touched; // class -> pair indices
    std::vector<int> color;                // class -> 0 or 1..n
    std::vector<int> fixed;                // class -> 0 or pinned color
    bool anyPins = false;
    uint64_t full;

    NiceSearch(const Graph& g_, int n_, long budget, const std::map<Edge, int>& pins)
        : g(g_), n(n_), edges(g_.edges()) {
        cls = edge_classes(g, edges, C);
        full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        color.assign(C, 0);
        fixed.assign(C, 0);
        for (auto& [e, c] : pins) {
            if (c < 1 || c > n) throw std::invalid_argument("pinned color outside palette");
            auto it = std::lower_bound(edges.begin(), edges.end(), e);
            if (it == edges.end() || !(*it == e))
                throw std::invalid_argument("pinned edge not in graph");
            int id = cls[it - edges.begin()];
            if (fixed[id] && fixed[id] != c) throw std::invalid_argument("conflicting pins");
            fixed[id] = c;
            anyPins = true;
        }
        std::vector<std::vector<int>> touchSets(C);
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) {
                if (g.has_edge(u, v)) continue;
                Pair pr;
                for (auto& pe : induced_paths(g, u, v, budget)) {
                    Path p;
                    for (int ei : pe) p.classes.push_back(cls[ei]);
                    std::sort(p.classes.begin(), p.classes.end());
                    p.classes.erase(std::unique(p.classes.begin(), p.classes.end()),
                                    p.classes.end());
                    pr.paths.push_back(std::move(p));
                }
                int id = (int)pairs.size();
                pairs.push_back(std::move(pr));
                for (auto& p : pairs.back().paths)
                    for (int c : p.classes) touchSets[c].push_back(id);
            }
        touched.resize(C);
        for (int c = 0; c < C; ++c) {
            auto& t = touchSets[c];
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            touched[c] = std::move(t);
        }
    }

    // colors common to every fully coloured path must stay at two or more
    bool pair_alive(const Pair& pr) const {
        uint64_t common = full;
        for (auto& p : pr.paths) {
            uint64_t mask = 0;
            bool complete = true;
            for (int cid : p.classes) {
                if (color[cid] == 0) {
                    complete = false;
                    break;
                }
                mask |= uint64_t{1} << (color[cid] - 1);
            }
            if (complete) {
                common &= mask;
                if (__builtin_popcountll(common) < 2) return false;
            }
        }
        return true;
    }

    bool assign(int t, int maxUsed, std::optional<EdgeColoring>& out) {
        if (t == C) {
            EdgeColoring col;
            col.palette = n;
            for (int i = 0; i < (int)edges.size(); ++i) col.set(edges[i], color[cls[i]]);
            out = col;
            return true;
        }
        int lo = 1, hi = n;
        if (fixed[t]) lo = hi = fixed[t];
        else if (!anyPins)
            hi = std::min(n, maxUsed + 1); // fresh colors are interchangeable
        for (int c = lo; c <= hi; ++c) {
            color[t] = c;
            bool ok = true;
            for (int pid : touched[t])
                if (!pair_alive(pairs[pid])) {
                    ok = false;
                    break;
                }
            if (ok && assign(t + 1, std::max(maxUsed, c), out)) return true;
        }
        color[t] = 0;
        return false;
    }
};

} // namespace detail

// least palette-n coloring in class order if one exists; pins force specific
// edges (hence their whole triangle classes) to given colors
inline std::optional<EdgeColoring> search_nice(const Graph& g, int n,
                                               long budget = kDefaultPathBudget,
                                               const std::map<Edge, int>& pins = {}) {
    if (n < 0 || n > 64) throw std::invalid_argument("palette must lie in 0..64");
    // any non-adjacent pair needs two palette colors even without paths
    bool havePair = false;
    for (int u = 0; u < g.n && !havePair; ++u)
        for (int v = u + 1; v < g.n && !havePair; ++v)
            if (!g.has_edge(u, v)) havePair = true;
    if (havePair && n < 2) return std::nullopt;
    if (g.edge_count() > 0 && n < 1) return std::nullopt;
    detail::NiceSearch s(g, n, budget, pins);
    std::optional<EdgeColoring> out;
    if (!s.assign(0, 0, out)) return std::nullopt;
    return out;
}

// palette needed never exceeds the class count (merge-insensitive relabeling),
// and 2 covers the pair floor, so failing every level up to the bound is a
// certificate that no palette works at all
inline int dimension_search_bound(const Graph& g) {
    auto edges = g.edges();
    int C = 0;
    if (!edges.empty()) detail::edge_classes(g, edges, C);
    return std::max(C, 2);
}

// least palette admitting an accepted coloring; empty result means certified
// impossible at every palette
inline std::optional<int> dimension(const Graph& g, std::optional<int> max_n = std::nullopt,
                                    long budget = kDefaultPathBudget) {
    int bound = dimension_search_bound(g);
    int cap = max_n ? *max_n : bound;
    for (int n = 0; n <= std::min(cap, bound); ++n)
        if (search_nice(g, n, budget)) return n;
    if (cap < bound)
        throw resource_error("palette cap below the decision bound; raise max-n");
    return std::nullopt;
}

} // namespace indsat
