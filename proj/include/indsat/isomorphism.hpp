#pragma once

#include "graph.hpp"
#include "graph6.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace indsat {

// canonical labeling by refinement + individualization, exact for n <= 12;
// larger inputs are refused rather than answered heuristically
inline constexpr int kCanonicalMaxN = 12;

namespace detail {

using Partition = std::vector<std::vector<int>>;

// split every cell by neighbour counts into every other cell until stable;
// subcell order (by count) is what makes the outcome labeling-independent
inline void refine(const Graph& g, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t s = 0; s < part.size() && !changed; ++s) {
            BitRow splitter(g.n);
            for (int v : part[s]) splitter.set(v);
            for (size_t d = 0; d < part.size(); ++d) {
                if (part[d].size() <= 1) continue;
                std::vector<std::pair<int, int>> keyed;
                for (int v : part[d]) keyed.push_back({(g.adj[v] & splitter).count(), v});
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](auto& a, auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first) continue;
                Partition sub;
                for (auto [k, v] : keyed) {
                    if (sub.empty() || (g.adj[sub.back().front()] & splitter).count() != k)
                        sub.push_back({});
                    sub.back().push_back(v);
                }
                part.erase(part.begin() + d);
                part.insert(part.begin() + d, sub.begin(), sub.end());
                changed = true;
                break;
            }
        }
    }
}

// adjacency upper triangle under the ordering, packed row-major
inline std::vector<uint64_t> label_code(const Graph& g, const std::vector<int>& order) {
    std::vector<uint64_t> code((g.n * (g.n - 1) / 2 + 63) / 64, 0);
    int bi = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++bi)
            if (g.has_edge(order[i], order[j])) code[bi >> 6] |= uint64_t{1} << (63 - (bi & 63));
    return code;
}

inline void canon_search(const Graph& g, Partition part, std::vector<uint64_t>& best,
                         std::vector<int>& best_order, bool& have) {
    refine(g, part);
    size_t cell = 0;
    while (cell < part.size() && part[cell].size() == 1) ++cell;
    if (cell == part.size()) {
        std::vector<int> order;
        for (auto& c : part) order.push_back(c[0]);
        auto code = label_code(g, order);
        if (!have || code > best) {
            best = code;
            best_order = order;
            have = true;
        }
        return;
    }
    for (int v : part[cell]) {
        Partition next(part.begin(), part.begin() + cell);
        next.push_back({v});
        std::vector<int> rest;
        for (int u : part[cell])
            if (u != v) rest.push_back(u);
        next.push_back(rest);
        next.insert(next.end(), part.begin() + cell + 1, part.end());
        canon_search(g, std::move(next), best, best_order, have);
    }
}

} // namespace detail

// relabeling order[i] -> i maximizing the adjacency code; order[i] is the old
// name of new vertex i
inline std::vector<int> canonical_order(const Graph& g) {
    if (g.n > kCanonicalMaxN)
        throw std::invalid_argument("canonical labeling limited to 12 vertices");
    std::vector<int> ident(g.n);
    for (int i = 0; i < g.n; ++i) ident[i] = i;
    int m = g.edge_count();
    if (m == 0 || m == g.n * (g.n - 1) / 2) return ident; // any order works
    detail::Partition part{ident};
    std::vector<uint64_t> best;
    std::vector<int> best_order;
    bool have = false;
    detail::canon_search(g, std::move(part), best, best_order, have);
    return best_order;
}

inline Graph canonical_relabel(const Graph& g) {
    auto order = canonical_order(g);
    Graph h(g.n);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    for (auto e : g.edges()) h.add_edge(pos[e.a], pos[e.b]);
    return h;
}

inline std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_relabel(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_graph6(a) == canonical_graph6(b);
}

} // namespace indsat
