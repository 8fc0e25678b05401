#pragma once

#include "cliques.hpp"
#include "errors.hpp"
#include "graph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace indsat {

// edge partition into two families of cliques, the two axis directions of a
// k x k box host; cliques listed ascending, families lex sorted
struct TwoHammingDecomposition {
    std::vector<std::vector<int>> f1, f2;
};

struct DecomposeFailure {
    enum Kind { EdgeInTwoCliques, VertexInThreeCliques, OddCliqueCycle } kind;
    std::vector<int> verts;                   // K4 minus an edge, or the busy vertex
    std::vector<std::vector<int>> cliques;    // odd closed walk of cliques
};

struct DecomposeResult {
    std::optional<TwoHammingDecomposition> dec;
    std::optional<DecomposeFailure> fail;
};

namespace detail {

struct CliqueStructure {
    std::vector<std::vector<int>> cliques;  // maximal, size >= 2
    std::vector<std::vector<int>> at;       // vertex -> clique indices
    std::vector<int> side;                  // clique -> 0/1 within its component
    std::vector<std::vector<int>> compCliques; // component -> cliques, by least vertex
    std::optional<DecomposeFailure> fail;
};

inline CliqueStructure analyze_cliques(const Graph& g) {
    CliqueStructure s;
    for (auto& c : maximal_cliques(g))
        if (c.size() >= 2) s.cliques.push_back(c);
    s.at.assign(g.n, {});
    for (int i = 0; i < (int)s.cliques.size(); ++i)
        for (int v : s.cliques[i]) s.at[v].push_back(i);

    // an edge inside two maximal cliques yields K4 minus an edge
    for (auto e : g.edges()) {
        std::vector<int> both;
        for (int ci : s.at[e.a])
            if (std::binary_search(s.cliques[ci].begin(), s.cliques[ci].end(), e.b))
                both.push_back(ci);
        if (both.size() < 2) continue;
        const auto& c1 = s.cliques[both[0]];
        const auto& c2 = s.cliques[both[1]];
        for (int x : c1) {
            if (std::binary_search(c2.begin(), c2.end(), x)) continue;
            for (int y : c2)
                if (!g.has_edge(x, y) && x != y) {
                    s.fail = DecomposeFailure{DecomposeFailure::EdgeInTwoCliques,
                                              {e.a, e.b, x, y}, {}};
                    return s;
                }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (s.at[v].size() >= 3) {
            s.fail = DecomposeFailure{DecomposeFailure::VertexInThreeCliques, {v}, {}};
            return s;
        }

    // cliques sharing a vertex must take opposite sides; bfs two-coloring
    int C = (int)s.cliques.size();
    s.side.assign(C, -1);
    std::vector<int> parent(C, -1);
    for (int start = 0; start < C; ++start) {
        if (s.side[start] >= 0) continue;
        s.side[start] = 0;
        std::vector<int> queue{start};
        std::vector<int> comp;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int ci = queue[qi];
            comp.push_back(ci);
            for (int v : s.cliques[ci])
                for (int cj : s.at[v]) {
                    if (cj == ci) continue;
                    if (s.side[cj] < 0) {
                        s.side[cj] = 1 - s.side[ci];
                        parent[cj] = ci;
                        queue.push_back(cj);
                    } else if (s.side[cj] == s.side[ci]) {
                        // odd cycle: both tree paths to the first shared ancestor
                        std::vector<int> up;
                        for (int w = ci; w >= 0; w = parent[w]) up.push_back(w);
                        std::vector<int> down;
                        int meet = -1;
                        for (int w = cj; w >= 0 && meet < 0; w = parent[w]) {
                            down.push_back(w);
                            for (size_t ui = 0; ui < up.size(); ++ui)
                                if (up[ui] == w) {
                                    meet = (int)ui;
                                    break;
                                }
                        }
                        DecomposeFailure f{DecomposeFailure::OddCliqueCycle, {}, {}};
                        for (int ui = meet; ui >= 0; --ui) f.cliques.push_back(s.cliques[up[ui]]);
                        for (size_t di = 0; di + 1 < down.size(); ++di)
                            f.cliques.push_back(s.cliques[down[di]]);
                        s.fail = f;
                        return s;
                    }
                }
        }
        // canonical side: the clique holding the least edge of the component
        int leader = *std::min_element(comp.begin(), comp.end(), [&](int a, int b) {
            return s.cliques[a] < s.cliques[b];
        });
        if (s.side[leader] == 1)
            for (int ci : comp) s.side[ci] = 1 - s.side[ci];
        s.compCliques.push_back(comp);
    }
    std::sort(s.compCliques.begin(), s.compCliques.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  int va = s.cliques[*std::min_element(a.begin(), a.end(), [&](int x, int y) {
                      return s.cliques[x] < s.cliques[y];
                  })][0];
                  int vb = s.cliques[*std::min_element(b.begin(), b.end(), [&](int x, int y) {
                      return s.cliques[x] < s.cliques[y];
                  })][0];
                  return va < vb;
              });
    return s;
}

inline TwoHammingDecomposition collect(const CliqueStructure& s, const std::vector<bool>& flip) {
    TwoHammingDecomposition d;
    for (int i = 0; i < (int)s.compCliques.size(); ++i)
        for (int ci : s.compCliques[i])
            ((s.side[ci] ^ (flip[i] ? 1 : 0)) == 0 ? d.f1 : d.f2).push_back(s.cliques[ci]);
    std::sort(d.f1.begin(), d.f1.end());
    std::sort(d.f2.begin(), d.f2.end());
    return d;
}

} // namespace detail

inline DecomposeResult decompose(const Graph& g) {
    auto s = detail::analyze_cliques(g);
    if (s.fail) return {std::nullopt, s.fail};
    return {detail::collect(s, std::vector<bool>(s.compCliques.size(), false)), std::nullopt};
}

inline bool is_two_hamming(const Graph& g) { return decompose(g).dec.has_value(); }

// every family assignment, one per flip vector in lex order; refuses to
// enumerate past 2^20 variants
inline std::vector<TwoHammingDecomposition> decompose_all(const Graph& g) {
    auto s = detail::analyze_cliques(g);
    if (s.fail) return {};
    int c = (int)s.compCliques.size();
    if (c > 20) throw resource_error("too many independent components to enumerate");
    std::vector<TwoHammingDecomposition> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << c); ++mask) {
        std::vector<bool> flip(c);
        for (int i = 0; i < c; ++i) flip[i] = (mask >> (c - 1 - i)) & 1;
        out.push_back(detail::collect(s, flip));
    }
    return out;
}

// cliques of one family plus a private line for every vertex the family misses
inline int family_count(const Graph& g, const std::vector<std::vector<int>>& family) {
    std::vector<bool> covered(g.n, false);
    for (auto& c : family)
        for (int v : c) covered[v] = true;
    int count = (int)family.size();
    for (int v = 0; v < g.n; ++v) count += !covered[v];
    return count;
}

struct MinKResult {
    int k = 0;
    bool balanced = false;          // some optimal assignment splits evenly
    std::vector<int> flips;         // lex least optimal flip vector
    TwoHammingDecomposition dec;    // the assignment behind k
};

// least k fitting the graph in a k x k box: line counts of the two families,
// optimized over the per-component family swaps
inline std::optional<MinKResult> min_k(const Graph& g) {
    auto s = detail::analyze_cliques(g);
    if (s.fail) return std::nullopt;
    int c = (int)s.compCliques.size();

    std::vector<bool> coveredSomewhere(g.n, false);
    for (auto& cl : s.cliques)
        for (int v : cl) coveredSomewhere[v] = true;
    int iso = 0;
    for (int v = 0; v < g.n; ++v) iso += !coveredSomewhere[v];

    // component contribution to family 1 count: own side-0 cliques plus own
    // vertices missed by side 0; flipping swaps the pair
    std::vector<int> p(c), q(c);
    for (int i = 0; i < c; ++i) {
        std::vector<bool> inComp(g.n, false), onSide0(g.n, false);
        int a = 0, b = 0;
        for (int ci : s.compCliques[i]) {
            (s.side[ci] == 0 ? a : b)++;
            for (int v : s.cliques[ci]) {
                inComp[v] = true;
                if (s.side[ci] == 0) onSide0[v] = true;
            }
        }
        int u0 = 0, u1 = 0;
        for (int v = 0; v < g.n; ++v)
            if (inComp[v]) {
                u0 += !onSide0[v];
                u1 += onSide0[v] && [&] {
                    for (int ci : s.at[v])
                        if (s.side[ci] == 1) return false;
                    return true;
                }();
            }
        p[i] = a + u0;
        q[i] = b + u1;
    }

    int S = 2 * iso;
    for (int i = 0; i < c; ++i) S += p[i] + q[i];

    // reachable[i][t]: suffix i..c-1 can add exactly t to family 1
    std::vector<std::vector<bool>> reach(c + 1, std::vector<bool>(S + 1, false));
    reach[c][0] = true;
    for (int i = c - 1; i >= 0; --i)
        for (int t = 0; t <= S; ++t)
            if (reach[i + 1][t]) {
                if (t + p[i] <= S) reach[i][t + p[i]] = true;
                if (t + q[i] <= S) reach[i][t + q[i]] = true;
            }

    int bestK = -1;
    for (int t = 0; t <= S; ++t)
        if (reach[0][t]) {
            int t1 = iso + t, t2 = S - iso - t;
            int m = std::max(t1, t2);
            if (bestK < 0 || m < bestK) bestK = m;
        }

    MinKResult r;
    r.k = bestK;
    r.balanced = S % 2 == 0 && S / 2 >= iso && reach[0][S / 2 - iso];

    // lex least flips achieving bestK, preferring the canonical orientation
    std::vector<bool> flip(c, false);
    int acc = 0;
    for (int i = 0; i < c; ++i) {
        auto completes = [&](int after) {
            for (int t = 0; t <= S - after; ++t)
                if (reach[i + 1][t]) {
                    int t1 = iso + after + t, t2 = S - iso - after - t;
                    if (std::max(t1, t2) == bestK) return true;
                }
            return false;
        };
        if (completes(acc + p[i])) {
            flip[i] = false;
            acc += p[i];
        } else {
            flip[i] = true;
            acc += q[i];
        }
    }
    for (int i = 0; i < c; ++i) r.flips.push_back(flip[i] ? 1 : 0);
    r.dec = detail::collect(s, flip);
    return r;
}

} // namespace indsat
