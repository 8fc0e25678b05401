#pragma once

#include "bits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace indsat {

struct Edge {
    int a = 0, b = 0; // normalized a < b
    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return a != o.a ? a < o.a : b < o.b; }
};

struct Graph {
    int n = 0;
    std::vector<BitRow> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, BitRow(n_)) {}

    bool has_edge(int u, int v) const { return u != v && adj[u].test(v); }
    void add_edge(int u, int v) {
        assert(u != v);
        adj[u].set(v);
        adj[v].set(u);
    }
    void delete_edge(int u, int v) {
        adj[u].reset(v);
        adj[v].reset(u);
    }

    int degree(int v) const { return adj[v].count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n; ++v) m += degree(v);
        return m / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].next(u + 1); v >= 0; v = adj[u].next(v + 1))
                out.push_back({u, v});
        return out;
    }

    std::vector<Edge> non_edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!adj[u].test(v)) out.push_back({u, v});
        return out;
    }

    Graph complement() const {
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!adj[u].test(v)) h.add_edge(u, v);
        return h;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// components as ascending vertex lists, ordered by least vertex
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)out.size();
        out.push_back({});
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            INDSAT_FOR_BITS(u, g.adj[v]) {
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.n <= 1 || components(g).size() == 1;
}

namespace detail {
// dfs lowpoints shared by cut vertex and bridge detection
struct LowpointDFS {
    const Graph& g;
    std::vector<int> tin, low;
    int timer = 0;
    std::vector<int> cuts;
    std::vector<Edge> bridges;

    explicit LowpointDFS(const Graph& g_) : g(g_), tin(g_.n, -1), low(g_.n, 0) {}

    void dfs(int v, int parent) {
        tin[v] = low[v] = timer++;
        int children = 0;
        bool cut = false;
        INDSAT_FOR_BITS(u, g.adj[v]) {
            if (u == parent) {
                parent = -2; // skip the tree edge once, keep parallel visits
                continue;
            }
            if (tin[u] >= 0) {
                low[v] = std::min(low[v], tin[u]);
            } else {
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] > tin[v]) bridges.push_back({v, u});
                if (low[u] >= tin[v] && parent != -1) cut = true;
                ++children;
            }
        }
        if (parent == -1 && children > 1) cut = true;
        if (cut) cuts.push_back(v);
    }

    void run() {
        for (int v = 0; v < g.n; ++v)
            if (tin[v] < 0) dfs(v, -1);
        std::sort(cuts.begin(), cuts.end());
        std::sort(bridges.begin(), bridges.end());
    }
};
} // namespace detail

inline std::vector<int> cut_vertices(const Graph& g) {
    detail::LowpointDFS d(g);
    d.run();
    return d.cuts;
}

inline std::vector<Edge> bridges(const Graph& g) {
    detail::LowpointDFS d(g);
    d.run();
    return d.bridges;
}

// verts need not be sorted; vertex i of the result is verts[i]
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph h((int)verts.size());
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(i, j);
    return h;
}

// vertices of b are shifted by a.n
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n + b.n);
    for (auto e : a.edges()) h.add_edge(e.a, e.b);
    for (auto e : b.edges()) h.add_edge(a.n + e.a, a.n + e.b);
    return h;
}

// each edge replaced by a path with t internal vertices; edges taken in lex
// order, internals for each edge appended consecutively after the originals
inline Graph subdivide(const Graph& g, int t) {
    assert(t >= 0);
    auto es = g.edges();
    Graph h(g.n + t * (int)es.size());
    int next = g.n;
    for (auto e : es) {
        if (t == 0) {
            h.add_edge(e.a, e.b);
            continue;
        }
        int prev = e.a;
        for (int i = 0; i < t; ++i) {
            h.add_edge(prev, next);
            prev = next++;
        }
        h.add_edge(prev, e.b);
    }
    return h;
}

inline Graph make_empty(int n) { return Graph(n); }

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph make_cycle(int n) {
    assert(n >= 3);
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

// parts {0..a-1} and {a..a+b-1}
inline Graph make_complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline Graph make_star(int leaves) { return make_complete_bipartite(1, leaves); }

inline Graph make_matching(int m) {
    Graph g(2 * m);
    for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

// head 0; leg i occupies the next leg_lengths[i] vertices walking outward
inline Graph make_spider(const std::vector<int>& leg_lengths) {
    int total = 1;
    for (int L : leg_lengths) total += L;
    Graph g(total);
    int next = 1;
    for (int L : leg_lengths) {
        int prev = 0;
        for (int i = 0; i < L; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

// cycle 0..n-1 with a pendant vertex n attached at 0
inline Graph make_cycle_pendant(int n) {
    Graph g(n + 1);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    g.add_edge(0, n);
    return g;
}

// cycle 0..n-1 plus the chord 0-2
inline Graph make_cycle_chord(int n) {
    assert(n >= 4);
    Graph g = make_cycle(n);
    g.add_edge(0, 2);
    return g;
}

// hub is vertex n
inline Graph make_wheel(int n) {
    Graph g(n + 1);
    for (int v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
        g.add_edge(v, n);
    }
    return g;
}

} // namespace indsat
