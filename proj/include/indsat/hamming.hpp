#pragma once

#include "errors.hpp"
#include "graph.hpp"

#include <utility>
#include <vector>

namespace indsat {

// the n-fold box power of K_k: vertices are tuples in {0..k-1}^n, adjacent
// when they differ in exactly one coordinate; coordinate 1 is the most
// significant digit of the flat index
struct HammingGraph {
    int n = 0, k = 0;
    Graph g;

    std::vector<int> tuple_of(long flat) const {
        std::vector<int> t(n);
        for (int i = n - 1; i >= 0; --i) {
            t[i] = flat % k;
            flat /= k;
        }
        return t;
    }

    int flat_of(const std::vector<int>& t) const {
        long f = 0;
        for (int i = 0; i < n; ++i) f = f * k + t[i];
        return (int)f;
    }
};

inline constexpr long kDefaultVertexBudget = 10000;

inline HammingGraph make_hamming(int n, int k, long vertex_budget = kDefaultVertexBudget) {
    assert(n >= 1 && k >= 1);
    long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
        if (total > vertex_budget)
            throw resource_error("hamming graph exceeds the vertex budget");
    }
    HammingGraph h{n, k, Graph((int)total)};
    std::vector<int> t(n, 0);
    for (long flat = 0; flat < total; ++flat) {
        long stride = 1;
        for (int i = n - 1; i >= 0; --i) {
            for (int val = t[i] + 1; val < k; ++val)
                h.g.add_edge((int)flat, (int)(flat + (val - t[i]) * stride));
            stride *= k;
        }
        for (int i = n - 1; i >= 0; --i) { // increment mixed radix counter
            if (++t[i] < k) break;
            t[i] = 0;
        }
    }
    return h;
}

inline int hamming_distance(const HammingGraph& h, int u, int v) {
    auto a = h.tuple_of(u), b = h.tuple_of(v);
    int d = 0;
    for (int i = 0; i < h.n; ++i) d += a[i] != b[i];
    return d;
}

inline bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.n) return false;
    std::vector<bool> hit(g.n, false);
    for (int v : perm) {
        if (v < 0 || v >= g.n || hit[v]) return false;
        hit[v] = true;
    }
    for (auto e : g.edges())
        if (!g.has_edge(perm[e.a], perm[e.b])) return false;
    return true; // bijective and edge count is finite, so non-edges follow
}

// image coordinate i reads source coordinate coord_src[i] through the value
// bijection value_perm[i]
inline std::vector<int> hamming_automorphism(const HammingGraph& h,
                                             const std::vector<int>& coord_src,
                                             const std::vector<std::vector<int>>& value_perm) {
    std::vector<int> perm(h.g.n);
    std::vector<int> img(h.n);
    for (int flat = 0; flat < h.g.n; ++flat) {
        auto t = h.tuple_of(flat);
        for (int i = 0; i < h.n; ++i) img[i] = value_perm[i][t[coord_src[i]]];
        perm[flat] = h.flat_of(img);
    }
    return perm;
}

// mu(x) = x - w + v per coordinate
inline std::vector<int> translate_automorphism(const HammingGraph& h, int w, int v) {
    auto tw = h.tuple_of(w), tv = h.tuple_of(v);
    std::vector<int> coord_src(h.n);
    std::vector<std::vector<int>> vp(h.n, std::vector<int>(h.k));
    for (int i = 0; i < h.n; ++i) {
        coord_src[i] = i;
        for (int val = 0; val < h.k; ++val)
            vp[i][val] = ((val - tw[i] + tv[i]) % h.k + h.k) % h.k;
    }
    return hamming_automorphism(h, coord_src, vp);
}

inline std::vector<int> inverse_permutation(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = (int)i;
    return inv;
}

// (a after b)(x) = a[b[x]]
inline std::vector<int> compose_permutations(const std::vector<int>& a,
                                             const std::vector<int>& b) {
    std::vector<int> c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

// 0 and the first unit tuple
inline Edge edge_representative(const HammingGraph& h) {
    std::vector<int> e1(h.n, 0);
    e1[0] = 1;
    return {0, h.flat_of(e1)};
}

// 0 and the tuple with ones in the first dist coordinates
inline std::pair<int, int> pair_representative(const HammingGraph& h, int dist) {
    assert(dist >= 1 && dist <= h.n);
    std::vector<int> t(h.n, 0);
    for (int i = 0; i < dist; ++i) t[i] = 1;
    return {0, h.flat_of(t)};
}

// automorphism carrying {u, v} onto the distance representative, u onto 0
inline std::vector<int> transport_to_pair_rep(const HammingGraph& h, int u, int v) {
    auto tu = h.tuple_of(u), tv = h.tuple_of(v);
    std::vector<int> moved, fixed;
    for (int i = 0; i < h.n; ++i) (tu[i] != tv[i] ? moved : fixed).push_back(i);
    std::vector<int> coord_src = moved;
    coord_src.insert(coord_src.end(), fixed.begin(), fixed.end());
    std::vector<std::vector<int>> vp(h.n);
    for (int i = 0; i < h.n; ++i) {
        int src = coord_src[i];
        std::vector<int> p(h.k);
        for (int val = 0; val < h.k; ++val) p[val] = ((val - tu[src]) % h.k + h.k) % h.k;
        // after translation u reads 0; send v's differing value to 1
        if (tu[src] != tv[src]) std::swap(p[tv[src]], p[(tu[src] + 1) % h.k]);
        vp[i] = p;
    }
    return hamming_automorphism(h, coord_src, vp);
}

inline std::vector<int> transport_to_edge_rep(const HammingGraph& h, Edge e) {
    assert(h.g.has_edge(e.a, e.b));
    return transport_to_pair_rep(h, e.a, e.b);
}

// automorphism with e.a -> f.a and e.b -> f.b
inline std::vector<int> transport_edge(const HammingGraph& h, Edge e, Edge f) {
    return compose_permutations(inverse_permutation(transport_to_edge_rep(h, f)),
                                transport_to_edge_rep(h, e));
}

// automorphism with u1 -> u2 and v1 -> v2; distances must agree
inline std::vector<int> transport_pair(const HammingGraph& h, int u1, int v1, int u2, int v2) {
    assert(hamming_distance(h, u1, v1) == hamming_distance(h, u2, v2));
    return compose_permutations(inverse_permutation(transport_to_pair_rep(h, u2, v2)),
                                transport_to_pair_rep(h, u1, v1));
}

// one non-adjacent pair per achievable distance
inline std::vector<std::pair<int, int>> nonedge_representatives(const HammingGraph& h) {
    std::vector<std::pair<int, int>> out;
    for (int d = 2; d <= h.n; ++d) out.push_back(pair_representative(h, d));
    return out;
}

} // namespace indsat
