#pragma once

#include "indsat/decomposition.hpp"
#include "indsat/graph.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indsat {

// One missing edge away from a box-embeddable graph. The completion h+uv is
// 2-Hamming and the clique of the completion holding uv has one of three
// local shapes; each shape pins an edge whose removal is again 2-Hamming.
struct ChippedWitness {
    int kind = 0;        // 1: third clique vertex has degree >= 3 in the completion
                         // 2: stripping the clique isolates exactly the third vertex
                         // 3: 4-clique, one endpoint owns a private branch
    int u = -1, v = -1;  // endpoints of the missing edge
    int w = -1;          // third clique vertex
    int x = -1;          // fourth clique vertex, kind 3 only
    Edge added;          // uv
    Edge removable;      // uw for kinds 1 and 2, ux for kind 3
};

// Pair whose single-edge change lets the two clique families trade places on
// part of the graph, dropping the larger family's component count.
struct SwapWitness {
    int rule = 0;        // 1 or 2
    int u = -1, v = -1;
    int w = -1;          // shared neighbour of u and v, rule 2 only
    int family = 0;      // deletions under rule 1: 1 if uv sits in the larger
                         // family, else 2; doubles as the count margin
};

struct GoodnessVerdict {
    enum class Kind { Chipped, ClassAB, NotGood };
    Kind kind = Kind::NotGood;
    std::optional<ChippedWitness> chipped;
    std::optional<SwapWitness> addition;  // nonedge to add back
    std::optional<SwapWitness> deletion;  // edge to delete
    int k = -1;                           // ClassAB: saturating box side
    std::string reason;                   // NotGood only
};

namespace detail {

// components of the family lying entirely inside the marked vertex set;
// vertices outside every clique of the family count as singleton components
inline int family_count_within(int n, const std::vector<std::vector<int>>& family,
                               const std::vector<char>& inside) {
    std::vector<char> covered(n, 0);
    int count = 0;
    for (auto& cl : family) {
        bool all = true;
        for (int v : cl) {
            covered[v] = 1;
            if (!inside[v]) all = false;
        }
        count += all;
    }
    for (int v = 0; v < n; ++v)
        if (inside[v] && !covered[v]) ++count;
    return count;
}

struct MajorMinor {
    std::vector<std::vector<int>> major, minor;  // major has more components
    int cMajor = 0, cMinor = 0;
};

// shared preamble of the two swap classes: connected, 2-Hamming, family
// counts unequal. A connected graph has a unique decomposition, so that
// decomposition is the optimal one.
inline std::optional<MajorMinor> major_minor(const Graph& h) {
    if (h.n == 0 || !is_connected(h)) return std::nullopt;
    auto dr = decompose(h);
    if (!dr.dec) return std::nullopt;
    MajorMinor mm;
    int c1 = family_count(h, dr.dec->f1);
    int c2 = family_count(h, dr.dec->f2);
    if (c1 == c2) return std::nullopt;
    if (c1 > c2) {
        mm.major = dr.dec->f1;
        mm.minor = dr.dec->f2;
        mm.cMajor = c1;
        mm.cMinor = c2;
    } else {
        mm.major = dr.dec->f2;
        mm.minor = dr.dec->f1;
        mm.cMajor = c2;
        mm.cMinor = c1;
    }
    return mm;
}

// the clique shape tests shared by the finder and the witness replay;
// hp = h + uv, k = the clique of hp holding uv
inline std::optional<ChippedWitness> match_chip(const Graph& hp, const std::vector<int>& k,
                                                int u, int v) {
    ChippedWitness cw;
    cw.u = u;
    cw.v = v;
    cw.added = Edge(u, v);
    if (k.size() == 3) {
        int w = -1;
        for (int t : k)
            if (t != u && t != v) w = t;
        cw.w = w;
        cw.removable = Edge(u, w);
        if (hp.degree(w) >= 3) {
            cw.kind = 1;
            return cw;
        }
        Graph hk = hp;
        hk.delete_edge(u, v);
        hk.delete_edge(u, w);
        hk.delete_edge(v, w);
        auto comps = components(hk);
        if (comps.size() == 2)
            for (auto& c : comps)
                if (c.size() == 1 && c[0] == w) {
                    cw.kind = 2;
                    return cw;
                }
        return std::nullopt;
    }
    if (k.size() == 4) {
        std::vector<int> others;
        for (int t : k)
            if (t != u && t != v) others.push_back(t);
        Graph hk = hp;
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j) hk.delete_edge(k[i], k[j]);
        auto comps = components(hk);
        std::vector<int> compOf(hp.n, -1);
        for (size_t i = 0; i < comps.size(); ++i)
            for (int t : comps[i]) compOf[t] = (int)i;
        for (int uu : {u, v}) {
            auto& branch = comps[compOf[uu]];
            int meets = 0;
            for (int t : branch) meets += std::count(k.begin(), k.end(), t) > 0;
            if (meets != 1) continue;
            for (int ww : others)
                if (hp.degree(ww) == 3) {
                    cw.kind = 3;
                    cw.u = uu;
                    cw.v = uu == u ? v : u;
                    cw.w = ww;
                    cw.x = others[0] == ww ? others[1] : others[0];
                    cw.removable = Edge(uu, cw.x);
                    return cw;
                }
        }
    }
    return std::nullopt;
}

}  // namespace detail

// scan nonedges uv in lex order; h+uv must be connected and 2-Hamming, and
// the clique of the completion through uv must have 3 or 4 vertices in one
// of the recognized shapes
inline std::optional<ChippedWitness> find_chipped(const Graph& h) {
    for (auto [u, v] : h.non_edges()) {
        Graph hp = h;
        hp.add_edge(u, v);
        if (!is_connected(hp)) continue;
        auto dr = decompose(hp);
        if (!dr.dec) continue;
        const std::vector<int>* k = nullptr;
        for (auto fam : {&dr.dec->f1, &dr.dec->f2})
            for (auto& cl : *fam)
                if (std::count(cl.begin(), cl.end(), u) && std::count(cl.begin(), cl.end(), v))
                    k = &cl;
        if (!k) continue;
        if (auto cw = detail::match_chip(hp, *k, u, v)) return cw;
    }
    return std::nullopt;
}

// nonadjacent pair whose joining edge merges two singleton components of the
// larger family (rule 1), or whose shared degree-2 neighbour splits the graph
// into sides that each favour the larger family (rule 2)
inline std::optional<SwapWitness> in_class_a(const Graph& h) {
    auto mm = detail::major_minor(h);
    if (!mm) return std::nullopt;
    std::vector<char> inMajor(h.n, 0);
    for (auto& cl : mm->major)
        for (int t : cl) inMajor[t] = 1;
    for (int u = 0; u < h.n; ++u) {
        if (inMajor[u]) continue;
        for (int v = u + 1; v < h.n; ++v)
            if (!inMajor[v] && !h.has_edge(u, v)) return SwapWitness{1, u, v, -1, 0};
    }
    for (int w = 0; w < h.n; ++w) {
        if (h.degree(w) != 2) continue;
        auto nb = h.adj[w].to_vector();
        int u = nb[0], v = nb[1];
        if (h.has_edge(u, v)) continue;
        Graph hd = h;
        hd.delete_edge(u, w);
        hd.delete_edge(w, v);
        auto comps = components(hd);
        if (comps.size() != 3) continue;
        bool ok = true;
        for (auto& comp : comps) {
            if (comp.size() == 1 && comp[0] == w) continue;
            std::vector<char> inside(h.n, 0);
            for (int t : comp) inside[t] = 1;
            if (detail::family_count_within(h.n, mm->major, inside) <=
                detail::family_count_within(h.n, mm->minor, inside)) {
                ok = false;
                break;
            }
        }
        if (ok) return SwapWitness{2, u, v, w, 0};
    }
    return std::nullopt;
}

// bridge whose two sides favour the larger family by a margin matching the
// bridge's own family (rule 1), or a triangle with a degree-2 apex whose
// removal splits the graph into sides favouring the larger family (rule 2)
inline std::optional<SwapWitness> in_class_b(const Graph& h) {
    auto mm = detail::major_minor(h);
    if (!mm) return std::nullopt;
    for (Edge e : bridges(h)) {
        int fam = 2;
        for (auto& cl : mm->major)
            if (std::count(cl.begin(), cl.end(), e.a) && std::count(cl.begin(), cl.end(), e.b))
                fam = 1;
        Graph hd = h;
        hd.delete_edge(e.a, e.b);
        auto comps = components(hd);
        bool ok = comps.size() == 2;
        for (auto& comp : comps) {
            if (!ok) break;
            std::vector<char> inside(h.n, 0);
            for (int t : comp) inside[t] = 1;
            ok = detail::family_count_within(h.n, mm->major, inside) >=
                 detail::family_count_within(h.n, mm->minor, inside) + fam;
        }
        if (ok) return SwapWitness{1, e.a, e.b, -1, fam};
    }
    for (int w = 0; w < h.n; ++w) {
        if (h.degree(w) != 2) continue;
        auto nb = h.adj[w].to_vector();
        int u = nb[0], v = nb[1];
        if (!h.has_edge(u, v)) continue;
        Graph hd = h;
        hd.delete_edge(u, v);
        hd.delete_edge(u, w);
        hd.delete_edge(w, v);
        auto comps = components(hd);
        if (comps.size() != 3) continue;
        bool ok = true;
        for (auto& comp : comps) {
            if (comp.size() == 1 && comp[0] == w) continue;
            std::vector<char> inside(h.n, 0);
            for (int t : comp) inside[t] = 1;
            if (detail::family_count_within(h.n, mm->major, inside) <=
                detail::family_count_within(h.n, mm->minor, inside)) {
                ok = false;
                break;
            }
        }
        if (ok) return SwapWitness{2, u, v, w, 0};
    }
    return std::nullopt;
}

// decision split: dimension above 2 needs a chip witness, dimension at most 2
// needs both swap witnesses on an unbalanced decomposition
inline GoodnessVerdict classify(const Graph& h) {
    if (h.n == 0 || !is_connected(h))
        throw std::invalid_argument("classify: connected nonempty graph required");
    GoodnessVerdict out;
    if (!is_two_hamming(h)) {
        if (auto cw = find_chipped(h)) {
            out.kind = GoodnessVerdict::Kind::Chipped;
            out.chipped = cw;
            return out;
        }
        out.reason = "no single-edge completion is 2-Hamming around a small clique";
        return out;
    }
    auto a = in_class_a(h);
    auto b = in_class_b(h);
    if (a && b) {
        out.kind = GoodnessVerdict::Kind::ClassAB;
        out.addition = a;
        out.deletion = b;
        out.k = min_k(h)->k - 1;
        return out;
    }
    if (!detail::major_minor(h))
        out.reason = "decomposition is balanced";
    else if (!a && !b)
        out.reason = "no rebalancing pair for addition or deletion";
    else if (!a)
        out.reason = "no rebalancing pair for addition";
    else
        out.reason = "no rebalancing edge for deletion";
    return out;
}

// box side the verdict vouches for: both one-edge variants named by the
// witness fit in this box while h itself does not
inline std::optional<int> certified_k(const Graph& h, const GoodnessVerdict& v) {
    if (v.kind == GoodnessVerdict::Kind::Chipped) {
        Graph minus = h, plus = h;
        minus.delete_edge(v.chipped->removable.a, v.chipped->removable.b);
        plus.add_edge(v.chipped->added.a, v.chipped->added.b);
        auto l = min_k(minus), m = min_k(plus);
        if (!l || !m) return std::nullopt;
        return std::max(l->k, m->k);
    }
    if (v.kind == GoodnessVerdict::Kind::ClassAB) return v.k;
    return std::nullopt;
}

// re-verify a chip witness clause by clause from the raw graph
inline bool replay_chipped(const Graph& h, const ChippedWitness& cw) {
    if (cw.u < 0 || cw.v < 0 || cw.u >= h.n || cw.v >= h.n || cw.u == cw.v) return false;
    if (h.has_edge(cw.u, cw.v)) return false;
    Graph hp = h;
    hp.add_edge(cw.u, cw.v);
    if (!is_connected(hp)) return false;
    auto dr = decompose(hp);
    if (!dr.dec) return false;
    const std::vector<int>* k = nullptr;
    for (auto fam : {&dr.dec->f1, &dr.dec->f2})
        for (auto& cl : *fam)
            if (std::count(cl.begin(), cl.end(), cw.u) && std::count(cl.begin(), cl.end(), cw.v))
                k = &cl;
    if (!k) return false;
    auto again = detail::match_chip(hp, *k, cw.u, cw.v);
    if (!again || again->kind != cw.kind) return false;
    if (cw.kind == 3 && (again->w != cw.w || again->x != cw.x || again->u != cw.u)) return false;
    if (cw.kind != 3 && again->w != cw.w) return false;
    return again->added == cw.added && again->removable == cw.removable;
}

}  // namespace indsat
