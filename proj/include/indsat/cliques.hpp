#pragma once

#include "graph.hpp"

#include <algorithm>
#include <vector>

namespace indsat {

namespace detail {

inline void bron_kerbosch(const Graph& g, std::vector<int>& r, BitRow p, BitRow x,
                          std::vector<std::vector<int>>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    // pivot: lowest vertex of p|x maximizing |p & N(pivot)|
    int pivot = -1, best = -1;
    BitRow px = p | x;
    INDSAT_FOR_BITS(u, px) {
        int c = (p & g.adj[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    BitRow cand = p;
    cand.andnot(g.adj[pivot]);
    INDSAT_FOR_BITS(v, cand) {
        r.push_back(v);
        bron_kerbosch(g, r, p & g.adj[v], x & g.adj[v], out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

} // namespace detail

// maximal cliques as ascending vertex lists, lex sorted; isolated vertices
// count as maximal cliques of size 1
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    if (g.n == 0) return out;
    BitRow p(g.n), x(g.n);
    for (int v = 0; v < g.n; ++v) p.set(v);
    std::vector<int> r;
    detail::bron_kerbosch(g, r, p, x, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

} // namespace indsat
