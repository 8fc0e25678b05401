#pragma once

#include "graph.hpp"
#include "isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace indsat {

// all non-isomorphic graphs on exactly n vertices (canonical representatives),
// grown one vertex at a time; n <= 8 stays comfortably in memory
inline std::vector<Graph> all_graphs(int n) {
    assert(n >= 0);
    if (n == 0) return {Graph(0)};
    std::vector<Graph> level{Graph(1)};
    for (int t = 1; t < n; ++t) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& g : level) {
            for (uint32_t mask = 0; mask < (uint32_t{1} << t); ++mask) {
                Graph h(t + 1);
                for (auto e : g.edges()) h.add_edge(e.a, e.b);
                for (int v = 0; v < t; ++v)
                    if ((mask >> v) & 1) h.add_edge(v, t);
                std::string key = canonical_graph6(h);
                if (seen.insert(key).second) next.push_back(parse_graph6(key));
            }
        }
        level = std::move(next);
    }
    return level;
}

inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

// trees on exactly n vertices via leaf addition
inline std::vector<Graph> all_trees(int n) {
    assert(n >= 1);
    std::vector<Graph> level{Graph(1)};
    for (int t = 1; t < n; ++t) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& g : level) {
            for (int v = 0; v < t; ++v) {
                Graph h(t + 1);
                for (auto e : g.edges()) h.add_edge(e.a, e.b);
                h.add_edge(v, t);
                std::string key = canonical_graph6(h);
                if (seen.insert(key).second) next.push_back(parse_graph6(key));
            }
        }
        level = std::move(next);
    }
    return level;
}

// forests on exactly n vertices: multisets of trees, deduplicated canonically
inline std::vector<Graph> all_forests(int n) {
    assert(n >= 0);
    std::vector<std::vector<Graph>> trees(n + 1);
    for (int t = 1; t <= n; ++t) trees[t] = all_trees(t);

    std::set<std::string> seen;
    std::vector<Graph> out;
    // pieces in non-increasing size; within a size, tree index non-decreasing
    std::function<void(int, int, int, const Graph&)> grow =
        [&](int left, int maxsize, int minidx, const Graph& acc) {
            if (left == 0) {
                std::string key = canonical_graph6(acc);
                if (seen.insert(key).second) out.push_back(parse_graph6(key));
                return;
            }
            for (int s = std::min(left, maxsize); s >= 1; --s) {
                int start = (s == maxsize) ? minidx : 0;
                for (int i = start; i < (int)trees[s].size(); ++i)
                    grow(left - s, s, i, disjoint_union(acc, trees[s][i]));
            }
        };
    grow(n, n, 0, Graph(0));
    return out;
}

} // namespace indsat
