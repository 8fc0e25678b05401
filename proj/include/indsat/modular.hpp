#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "saturation.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace indsat {

namespace detail {

// grow {u,v} by every outside vertex adjacent to part of the set; the
// fixpoint is the unique smallest homogeneous set containing the pair,
// possibly all of V
inline BitRow pair_closure(const Graph& g, int u, int v) {
    BitRow x(g.n);
    x.set(u);
    x.set(v);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int y = 0; y < g.n; ++y) {
            if (x.test(y)) continue;
            BitRow t = g.adj[y] & x;
            if (t.any() && !(t == x)) {
                x.set(y);
                grew = true;
            }
        }
    }
    return x;
}

inline std::vector<int> row_vertices(const BitRow& r, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (r.test(v)) out.push_back(v);
    return out;
}

}  // namespace detail

// all sets X, 2 <= |X| <= n-1 (singletons on request), whose outside
// vertices are each complete or anticomplete to X; size then lexicographic
inline std::vector<std::vector<int>> homogeneous_sets(const Graph& g,
                                                      bool include_singletons = false) {
    if (g.n > 20) throw resource_error("homogeneous_sets: order above 20 unsupported");
    std::vector<std::vector<int>> out;
    if (g.n < 2) return out;
    const int lo = include_singletons ? 1 : 2;
    for (uint32_t mask = 1; mask + 1 < (1u << g.n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < lo || size > g.n - 1) continue;
        bool ok = true;
        for (int y = 0; y < g.n && ok; ++y) {
            if (mask >> y & 1) continue;
            uint32_t t = (uint32_t)g.adj[y].w[0] & mask;
            if (t != 0 && t != mask) ok = false;
        }
        if (!ok) continue;
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// no homogeneous set with 2 <= |X| <= n-1; degenerate orders never count
inline bool is_prime(const Graph& g) {
    if (g.n < 3) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (detail::pair_closure(g, u, v).count() <= g.n - 1) return false;
    return true;
}

// least homogeneous set by (size, vertex list); inclusion-minimal since
// anything smaller inside it would win the ordering
inline std::optional<std::vector<int>> minimal_homogeneous_set(const Graph& g) {
    std::optional<std::vector<int>> best;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            BitRow x = detail::pair_closure(g, u, v);
            if (x.count() > g.n - 1) continue;
            auto verts = detail::row_vertices(x, g.n);
            if (!best || verts.size() < best->size() ||
                (verts.size() == best->size() && verts < *best))
                best = std::move(verts);
        }
    return best;
}

inline std::vector<int> full_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) out.push_back(v);
    return out;
}

// (i,j) adjacent to (i',j') iff ii' is an edge of g1, or i = i' and jj'
// is an edge of g2; vertex (i,j) lands at flat index i*|g2|+j
inline Graph blowup(const Graph& g1, const Graph& g2) {
    Graph out(g1.n * g2.n);
    for (int i1 = 0; i1 < g1.n; ++i1)
        for (int j1 = 0; j1 < g2.n; ++j1)
            for (int i2 = 0; i2 < g1.n; ++i2)
                for (int j2 = 0; j2 < g2.n; ++j2) {
                    int a = i1 * g2.n + j1, b = i2 * g2.n + j2;
                    if (a >= b) continue;
                    if (g1.has_edge(i1, i2) || (i1 == i2 && g2.has_edge(j1, j2)))
                        out.add_edge(a, b);
                }
    return out;
}

struct Theorem20Report {
    bool applicable = false;  // pattern prime and host saturates it
    std::string reason;       // set when not applicable
    bool blowup_holds = false;
    bool reduced_needed = false;  // host itself is not prime
    std::optional<std::vector<int>> reduced_set;
    bool reduced_prime = false;
    bool reduced_holds = false;
    bool ok = false;
};

// replay both conclusions: the blowup of the host by itself still
// saturates, and a non-prime host shrinks to a prime one via its least
// homogeneous set
inline Theorem20Report theorem20_check(const Graph& g, const Graph& h) {
    Theorem20Report rep;
    if (!is_prime(h)) {
        rep.reason = "pattern has a homogeneous set";
        return rep;
    }
    if (!verify(g, h).holds) {
        rep.reason = "host does not saturate the pattern";
        return rep;
    }
    rep.applicable = true;
    rep.blowup_holds = verify(blowup(g, g), h).holds;
    rep.ok = rep.blowup_holds;
    if (!is_prime(g)) {
        rep.reduced_needed = true;
        rep.reduced_set = minimal_homogeneous_set(g);
        if (rep.reduced_set) {
            Graph gp = induced_subgraph(g, *rep.reduced_set);
            rep.reduced_prime = is_prime(gp);
            rep.reduced_holds = verify(gp, h).holds;
        }
        rep.ok = rep.ok && rep.reduced_prime && rep.reduced_holds;
    }
    return rep;
}

}  // namespace indsat
