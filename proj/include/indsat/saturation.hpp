#pragma once

#include "indsat/embedding.hpp"
#include "indsat/enumerate.hpp"
#include "indsat/errors.hpp"
#include "indsat/graph.hpp"
#include "indsat/hamming.hpp"
#include "indsat/isomorphism.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indsat {

struct SaturationReport {
    enum class Fail { ContainsPattern, DeletionMiss, AdditionMiss };
    bool holds = false;
    std::optional<Fail> failKind;
    std::optional<Edge> edge;                   // modification that failed to create a copy
    std::optional<std::vector<int>> embedding;  // induced copy behind ContainsPattern
};

// host avoids the pattern, yet deleting any host edge or adding any host
// nonedge creates an induced copy; quantifiers checked literally
inline SaturationReport verify(const Graph& g, const Graph& h) {
    SaturationReport r;
    if (auto emb = find_induced_embedding(h, g)) {
        r.failKind = SaturationReport::Fail::ContainsPattern;
        r.embedding = emb;
        return r;
    }
    for (Edge e : g.edges()) {
        Graph gd = g;
        gd.delete_edge(e.a, e.b);
        if (!contains_induced(h, gd)) {
            r.failKind = SaturationReport::Fail::DeletionMiss;
            r.edge = e;
            return r;
        }
    }
    for (Edge f : g.non_edges()) {
        Graph ga = g;
        ga.add_edge(f.a, f.b);
        if (!contains_induced(h, ga)) {
            r.failKind = SaturationReport::Fail::AdditionMiss;
            r.edge = f;
            return r;
        }
    }
    r.holds = true;
    return r;
}

// exhaustive variant: one report per failing check instead of the first;
// empty result iff verify holds
inline std::vector<SaturationReport> verify_all_failures(const Graph& g, const Graph& h) {
    std::vector<SaturationReport> out;
    if (auto emb = find_induced_embedding(h, g)) {
        SaturationReport r;
        r.failKind = SaturationReport::Fail::ContainsPattern;
        r.embedding = emb;
        out.push_back(r);
    }
    for (Edge e : g.edges()) {
        Graph gd = g;
        gd.delete_edge(e.a, e.b);
        if (!contains_induced(h, gd)) {
            SaturationReport r;
            r.failKind = SaturationReport::Fail::DeletionMiss;
            r.edge = e;
            out.push_back(r);
        }
    }
    for (Edge f : g.non_edges()) {
        Graph ga = g;
        ga.add_edge(f.a, f.b);
        if (!contains_induced(h, ga)) {
            SaturationReport r;
            r.failKind = SaturationReport::Fail::AdditionMiss;
            r.edge = f;
            out.push_back(r);
        }
    }
    return out;
}

// same verdict for a box host, but host modifications are collapsed by
// symmetry: all edge deletions are equivalent to one pattern-side edge
// addition, and edge additions only need one representative per distance
// class; two-coordinate hosts use the pattern-side deletion form instead
inline SaturationReport verify_hamming(const HammingGraph& hg, const Graph& h) {
    const Graph& g = hg.g;
    SaturationReport r;
    if (auto emb = find_induced_embedding(h, g)) {
        r.failKind = SaturationReport::Fail::ContainsPattern;
        r.embedding = emb;
        return r;
    }
    if (g.edge_count() > 0) {
        bool hit = false;
        for (Edge f : h.non_edges()) {
            Graph hp = h;
            hp.add_edge(f.a, f.b);
            if (contains_induced(hp, g)) {
                hit = true;
                break;
            }
        }
        if (!hit && h.non_edges().empty()) {
            // complete pattern: no pattern nonedge can absorb the deletion,
            // so run one host deletion literally (they are all alike)
            Edge e = edge_representative(hg);
            Graph gd = g;
            gd.delete_edge(e.a, e.b);
            hit = contains_induced(h, gd);
        }
        if (!hit) {
            r.failKind = SaturationReport::Fail::DeletionMiss;
            r.edge = edge_representative(hg);
            return r;
        }
    }
    if ((long)g.n * (g.n - 1) / 2 > g.edge_count()) {
        if (hg.n == 2) {
            bool hit = false;
            for (Edge e : h.edges()) {
                Graph hd = h;
                hd.delete_edge(e.a, e.b);
                if (contains_induced(hd, g)) {
                    hit = true;
                    break;
                }
            }
            if (!hit && h.edges().empty()) {
                auto [u, v] = pair_representative(hg, 2);
                Graph ga = g;
                ga.add_edge(u, v);
                hit = contains_induced(h, ga);
            }
            if (!hit) {
                auto [u, v] = pair_representative(hg, 2);
                r.failKind = SaturationReport::Fail::AdditionMiss;
                r.edge = Edge(u, v);
                return r;
            }
        } else {
            for (auto [u, v] : nonedge_representatives(hg)) {
                Graph ga = g;
                ga.add_edge(u, v);
                if (!contains_induced(h, ga)) {
                    r.failKind = SaturationReport::Fail::AdditionMiss;
                    r.edge = Edge(u, v);
                    return r;
                }
            }
        }
    }
    r.holds = true;
    return r;
}

// family version: the host avoids every member, and each single-edge change
// creates an induced copy of some member
inline SaturationReport verify_family(const Graph& g, const std::vector<Graph>& hs) {
    if (hs.empty()) throw std::invalid_argument("verify_family: empty family");
    SaturationReport r;
    for (const Graph& h : hs)
        if (auto emb = find_induced_embedding(h, g)) {
            r.failKind = SaturationReport::Fail::ContainsPattern;
            r.embedding = emb;
            return r;
        }
    auto hitsAny = [&](const Graph& host) {
        for (const Graph& h : hs)
            if (contains_induced(h, host)) return true;
        return false;
    };
    for (Edge e : g.edges()) {
        Graph gd = g;
        gd.delete_edge(e.a, e.b);
        if (!hitsAny(gd)) {
            r.failKind = SaturationReport::Fail::DeletionMiss;
            r.edge = e;
            return r;
        }
    }
    for (Edge f : g.non_edges()) {
        Graph ga = g;
        ga.add_edge(f.a, f.b);
        if (!hitsAny(ga)) {
            r.failKind = SaturationReport::Fail::AdditionMiss;
            r.edge = f;
            return r;
        }
    }
    r.holds = true;
    return r;
}

// all saturating hosts up to max_n vertices, canonical forms, smallest first.
// Hosts admitting no single-edge change (one vertex or fewer) are excluded:
// nothing can be created in them, so they satisfy the quantifiers only
// emptily. With a corpus the sweep runs over its graphs instead.
inline std::vector<Graph> search_saturating(const Graph& h, int max_n,
                                            const std::vector<Graph>* corpus = nullptr,
                                            bool force = false) {
    if (max_n > 8 && !force)
        throw resource_error("search_saturating: max-n above 8 needs an explicit override");
    std::vector<Graph> out;
    auto consider = [&](const Graph& g) {
        if (g.n <= 1 || g.n > max_n) return;
        if (verify(g, h).holds) out.push_back(g);
    };
    if (corpus) {
        std::set<std::string> seen;
        std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
        for (const Graph& g : *corpus) {
            if (g.n <= 1 || g.n > max_n || g.n > kCanonicalMaxN) continue;
            std::string canon = canonical_graph6(g);
            if (!seen.insert(canon).second) continue;
            keyed.push_back({{g.n, canon}, canonical_relabel(g)});
        }
        std::sort(keyed.begin(), keyed.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        for (auto& [key, g] : keyed) consider(g);
    } else {
        for (int n = 2; n <= max_n; ++n)
            for (const Graph& g : all_graphs(n)) consider(g);
    }
    return out;
}

// complement-reducible test: every induced piece with at least two vertices
// falls apart in the graph or in its complement
inline bool is_cograph(const Graph& g) {
    if (g.n <= 1) return true;
    auto comps = components(g);
    if (comps.size() > 1) {
        for (auto& c : comps)
            if (!is_cograph(induced_subgraph(g, c))) return false;
        return true;
    }
    Graph co = g.complement();
    auto cc = components(co);
    if (cc.size() == 1) return false;
    for (auto& c : cc)
        if (!is_cograph(induced_subgraph(co, c))) return false;
    return true;
}

}  // namespace indsat
