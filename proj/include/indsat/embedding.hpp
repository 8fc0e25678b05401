#pragma once

#include "graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace indsat {

// phi maps pattern vertices injectively onto host vertices preserving both
// edges and non-edges
inline bool is_induced_embedding(const Graph& pattern, const Graph& host,
                                 const std::vector<int>& phi) {
    if ((int)phi.size() != pattern.n) return false;
    for (int v : phi)
        if (v < 0 || v >= host.n) return false;
    for (int u = 0; u < pattern.n; ++u)
        for (int v = u + 1; v < pattern.n; ++v) {
            if (phi[u] == phi[v]) return false;
            if (pattern.has_edge(u, v) != host.has_edge(phi[u], phi[v])) return false;
        }
    return true;
}

namespace detail {

// pattern vertices ordered by adjacency to already placed ones, pinned first
inline std::vector<int> placement_order(const Graph& p, std::optional<int> pinned) {
    std::vector<int> order;
    std::vector<bool> placed(p.n, false);
    if (pinned) {
        order.push_back(*pinned);
        placed[*pinned] = true;
    }
    while ((int)order.size() < p.n) {
        int best = -1, bestdeg = -1;
        for (int u = 0; u < p.n; ++u) {
            if (placed[u]) continue;
            int d = 0;
            for (int w : order) d += p.has_edge(u, w);
            if (d > bestdeg) {
                bestdeg = d;
                best = u;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

struct EmbedSearch {
    const Graph& p;
    const Graph& h;
    std::vector<int> order;
    std::vector<int> phi;       // pattern -> host, -1 unplaced
    std::vector<int> hdeg;
    BitRow used;
    long count = 0;
    long cap = 1;               // stop once count > cap
    std::vector<int> first;     // first full embedding found

    EmbedSearch(const Graph& p_, const Graph& h_, std::optional<int> pinned)
        : p(p_), h(h_), order(placement_order(p_, pinned)), phi(p_.n, -1), used(h_.n) {
        hdeg.reserve(h.n);
        for (int x = 0; x < h.n; ++x) hdeg.push_back(h.degree(x));
    }

    bool place(size_t t) {
        if (t == order.size()) {
            if (first.empty()) first = phi;
            return ++count > cap;
        }
        int u = order[t];
        BitRow cand(h.n);
        for (auto& w : cand.w) w = ~uint64_t{0};
        for (int b = h.n; b < (int)cand.w.size() * 64; ++b) cand.reset(b);
        for (size_t s = 0; s < t; ++s) {
            int q = order[s];
            if (p.has_edge(u, q))
                cand &= h.adj[phi[q]];
            else
                cand.andnot(h.adj[phi[q]]);
        }
        cand.andnot(used);
        int du = p.degree(u);
        INDSAT_FOR_BITS(x, cand) {
            if (hdeg[x] < du) continue;
            phi[u] = x;
            used.set(x);
            bool stop = place(t + 1);
            used.reset(x);
            phi[u] = -1;
            if (stop) return true;
        }
        return false;
    }
};

} // namespace detail

// least embedding under the internal placement order, host candidates ascending
inline std::optional<std::vector<int>> find_induced_embedding(
    const Graph& pattern, const Graph& host,
    std::optional<std::pair<int, int>> pin = std::nullopt) {
    if (pattern.n > host.n) return std::nullopt;
    if (pattern.n == 0) return std::vector<int>{};
    detail::EmbedSearch s(pattern, host, pin ? std::optional<int>(pin->first) : std::nullopt);
    s.cap = 0; // stop at the first one
    if (pin) {
        int u = pin->first, x = pin->second;
        if (host.degree(x) < pattern.degree(u)) return std::nullopt;
        s.phi[u] = x;
        s.used.set(x);
        s.place(1);
    } else {
        s.place(0);
    }
    if (s.first.empty()) return std::nullopt;
    return s.first;
}

inline bool contains_induced(const Graph& pattern, const Graph& host) {
    return find_induced_embedding(pattern, host).has_value();
}

// number of injective induced maps (all labelings counted); returns cap+1 once
// more than cap exist
inline long count_induced_embeddings(const Graph& pattern, const Graph& host, long cap) {
    if (pattern.n > host.n) return 0;
    if (pattern.n == 0) return 1;
    detail::EmbedSearch s(pattern, host, std::nullopt);
    s.cap = cap;
    s.place(0);
    return s.count;
}

} // namespace indsat
