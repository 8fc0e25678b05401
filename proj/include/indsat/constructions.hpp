#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "indsat/classifier.hpp"
#include "indsat/coloring.hpp"
#include "indsat/embedding.hpp"
#include "indsat/errors.hpp"
#include "indsat/graph.hpp"
#include "indsat/hamming.hpp"

namespace indsat {

// family of hosts with a cut vertex r of degree n+1 whose removal leaves
// n+1 components, each embeddable in an (n-1)-box
struct ClassHWitness {
    Graph h;
    int n = 0;
    int r = -1;
    std::vector<std::vector<int>> comps;  // sorted vertex lists, one per branch
    std::vector<int> attach;              // the unique neighbour of r per branch
    int ell = 2;                          // shared alphabet size, >= 2
};

namespace detail {

inline int least_box_alphabet(const std::vector<Graph>& parts, int dims, int cap = 8) {
    for (int ell = 1; ell <= cap; ++ell) {
        auto bx = make_hamming(dims, ell);
        bool all = true;
        for (const auto& p : parts)
            if (!contains_induced(p, bx.g)) { all = false; break; }
        if (all) return ell;
    }
    throw resource_error("least_box_alphabet: alphabet cap exceeded");
}

}  // namespace detail

inline std::optional<ClassHWitness> recognize_class_h(const Graph& h, int n) {
    if (n < 3) throw std::invalid_argument("recognize_class_h: n must be at least 3");
    if (h.n < 1 || !is_connected(h)) return std::nullopt;
    for (int r = 0; r < h.n; ++r) {
        if (h.degree(r) != n + 1) continue;
        std::vector<int> rest;
        for (int v = 0; v < h.n; ++v)
            if (v != r) rest.push_back(v);
        Graph g2 = induced_subgraph(h, rest);
        auto parts = components(g2);
        if ((int)parts.size() != n + 1) continue;

        ClassHWitness w;
        w.h = h;
        w.n = n;
        w.r = r;
        bool ok = true;
        std::vector<Graph> branch_graphs;
        for (auto& p : parts) {
            std::vector<int> orig;
            for (int lv : p) orig.push_back(rest[lv]);
            std::sort(orig.begin(), orig.end());
            // degree n+1 split over n+1 components forces one neighbour each
            int att = -1;
            for (int v : orig)
                if (h.has_edge(r, v)) {
                    if (att != -1) { ok = false; break; }
                    att = v;
                }
            if (!ok || att == -1) { ok = false; break; }
            Graph bg = induced_subgraph(h, orig);
            if (!search_nice(bg, n - 1)) { ok = false; break; }
            w.comps.push_back(orig);
            w.attach.push_back(att);
            branch_graphs.push_back(bg);
        }
        if (!ok) continue;
        w.ell = std::max(2, detail::least_box_alphabet(branch_graphs, n - 1));
        return w;
    }
    return std::nullopt;
}

// trees with a unique maximum-degree vertex of degree n+1 whose removal
// leaves components of maximum degree at most n-1
inline bool recognize_class_t(const Graph& t, int n) {
    if (n < 3) throw std::invalid_argument("recognize_class_t: n must be at least 3");
    if (t.n < 2 || !is_connected(t) || t.edge_count() != t.n - 1) return false;
    int hub = -1;
    int dmax = t.max_degree();
    if (dmax != n + 1) return false;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) == dmax) {
            if (hub != -1) return false;
            hub = v;
        }
    std::vector<int> rest;
    for (int v = 0; v < t.n; ++v)
        if (v != hub) rest.push_back(v);
    Graph g2 = induced_subgraph(t, rest);
    return g2.max_degree() <= n - 1;
}

// spider with head r plus a residual graph on the leaf level; legs[i] lists
// the i-th path r = p_0, p_1, ..., p_{n+2} by vertex
struct ClassFWitness {
    int r = -1;
    std::vector<std::vector<int>> legs;
};

namespace detail {

inline std::vector<int> class_f_internal(const ClassFWitness& fw) {
    std::vector<int> in;
    for (auto& leg : fw.legs)
        for (size_t j = 1; j + 1 < leg.size(); ++j) in.push_back(leg[j]);
    return in;
}

inline std::vector<int> class_f_fverts(const Graph& h, const ClassFWitness& fw) {
    auto internal = class_f_internal(fw);
    std::set<int> cut(internal.begin(), internal.end());
    cut.insert(fw.r);
    std::vector<int> out;
    for (int v = 0; v < h.n; ++v)
        if (!cut.count(v)) out.push_back(v);
    return out;
}

}  // namespace detail

inline bool validate_class_f(const Graph& h, const ClassFWitness& fw, int n) {
    if (n < 3) throw std::invalid_argument("validate_class_f: n must be at least 3");
    if (fw.r < 0 || fw.r >= h.n) return false;
    if ((int)fw.legs.size() != n + 1) return false;
    std::set<int> seen{fw.r};
    for (auto& leg : fw.legs) {
        if ((int)leg.size() != n + 3) return false;
        if (leg.front() != fw.r) return false;
        for (size_t j = 1; j < leg.size(); ++j) {
            if (leg[j] < 0 || leg[j] >= h.n) return false;
            if (!seen.insert(leg[j]).second) return false;  // legs meet only at r
            if (!h.has_edge(leg[j - 1], leg[j])) return false;
        }
    }
    if (h.degree(fw.r) != n + 1) return false;
    for (auto& leg : fw.legs)
        for (size_t j = 1; j + 1 < leg.size(); ++j)
            if (h.degree(leg[j]) != 2) return false;  // interior of a leg carries no extra edge
    auto fverts = detail::class_f_fverts(h, fw);
    std::set<int> fset(fverts.begin(), fverts.end());
    for (auto& leg : fw.legs)
        if (!fset.count(leg.back())) return false;
    Graph f = induced_subgraph(h, fverts);
    if (!search_nice(f, n - 1)) return false;
    return true;
}

// value sets steering the coordinate assembly around the cut vertex
struct EmbeddingPlan {
    int n = 0;
    int k = 0;
    int q = 2;
    std::vector<std::vector<int>> W;  // n+1 sets, each sorted with 0 first
    std::vector<int> X;               // sorted, min element 2
};

inline void check_plan(const EmbeddingPlan& p, int ell) {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("embedding plan: " + what);
    };
    if (p.n < 3) fail("n must be at least 3");
    if (ell < 2) fail("alphabet size must be at least 2");
    if ((int)p.W.size() != p.n + 1) fail("needs n+1 value sets");
    if (p.q < 2 || p.q > p.n) fail("q must lie in [2, n]");
    if (p.k < (ell - 1) * (p.n + 1) + 3) fail("k below (ell-1)(n+1)+3");
    auto sorted_ok = [&](const std::vector<int>& s) {
        if ((int)s.size() != ell) return false;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= p.k || s[i] == 1) return false;
            if (i && s[i] <= s[i - 1]) return false;
        }
        return true;
    };
    for (auto& w : p.W)
        if (!sorted_ok(w)) fail("value sets must be sorted, sized ell, inside [0,k) and avoid 1");
    if (!sorted_ok(p.X)) fail("X must be sorted, sized ell, inside [0,k) and avoid 1");
    for (int i = 0; i <= p.n; ++i) {
        if (p.W[i][0] != 0) fail("every value set contains 0 as its minimum");
        for (int j = i + 1; j <= p.n; ++j) {
            std::vector<int> inter;
            std::set_intersection(p.W[i].begin(), p.W[i].end(), p.W[j].begin(), p.W[j].end(),
                                  std::back_inserter(inter));
            if (inter != std::vector<int>{0}) fail("value sets may share only 0");
        }
    }
    if (std::binary_search(p.X.begin(), p.X.end(), 0)) fail("X avoids 0");
    for (int i = 0; i < p.n; ++i) {
        std::vector<int> inter;
        std::set_intersection(p.X.begin(), p.X.end(), p.W[i].begin(), p.W[i].end(),
                              std::back_inserter(inter));
        if (!inter.empty()) fail("X meets no value set of the first n branches");
    }
    if (!std::binary_search(p.X.begin(), p.X.end(), 2)) fail("2 must lie in X");
    if (!std::binary_search(p.W[p.n].begin(), p.W[p.n].end(), 2)) fail("2 must lie in the last value set");
}

inline EmbeddingPlan make_embedding_plan(const ClassHWitness& hw, int q, int k = -1) {
    EmbeddingPlan p;
    p.n = hw.n;
    p.q = q;
    int ell = hw.ell;
    p.k = (k > 0) ? k : (ell - 1) * (p.n + 1) + 3;
    int next = 3;  // 0 anchors every set, 1 stays a free marker, 2 ties X to the last set
    for (int i = 0; i < p.n; ++i) {
        std::vector<int> w{0};
        for (int t = 1; t < ell; ++t) w.push_back(next++);
        p.W.push_back(w);
    }
    std::vector<int> wlast{0, 2};
    for (int t = 2; t < ell; ++t) wlast.push_back(next++);
    p.W.push_back(wlast);
    p.X.assign(wlast.begin() + 1, wlast.end());
    p.X.push_back(next++);
    std::sort(p.X.begin(), p.X.end());
    check_plan(p, ell);
    return p;
}

struct TheoremAResult {
    EmbeddingPlan plan;
    std::vector<int> sigma;  // host vertex per pattern vertex
    Edge added{0, 1};        // the host non-edge whose addition pulls the pattern in
};

namespace detail {

inline HammingGraph host_box(int n, int k) {
    long cells = 1;
    for (int i = 0; i < n; ++i) {
        cells *= k;
        if (cells > 200000) throw resource_error("host box above 200000 vertices");
    }
    return make_hamming(n, k, cells);
}

inline void check_induced_map(const Graph& pattern, const Graph& host,
                              const std::vector<int>& sigma, const char* who) {
    std::set<int> img(sigma.begin(), sigma.end());
    if ((int)img.size() != pattern.n)
        throw std::logic_error(std::string(who) + ": image collision");
    for (int u = 0; u < pattern.n; ++u)
        for (int v = u + 1; v < pattern.n; ++v)
            if (pattern.has_edge(u, v) != host.has_edge(sigma[u], sigma[v]))
                throw std::logic_error(std::string(who) + ": adjacency mismatch");
}

}  // namespace detail

inline TheoremAResult theorem_a_embedding(const ClassHWitness& hw, const EmbeddingPlan& plan) {
    if (hw.n != plan.n) throw std::invalid_argument("theorem_a_embedding: plan built for a different n");
    check_plan(plan, hw.ell);
    const int n = hw.n, k = plan.k, q = plan.q;
    auto hg = detail::host_box(n, k);

    std::vector<int> vvec(n, 0);
    for (int t = 0; t < q; ++t) vvec[t] = 2;
    int vflat = hg.flat_of(vvec);
    Graph gplus = hg.g;
    gplus.add_edge(0, vflat);

    std::vector<int> sigma(hw.h.n, -1);
    sigma[hw.r] = 0;  // the all-zero corner

    auto bx = make_hamming(n - 1, hw.ell);
    for (int i = 1; i <= n + 1; ++i) {
        const auto& verts = hw.comps[i - 1];
        Graph ci = induced_subgraph(hw.h, verts);
        int local_attach = (int)(std::lower_bound(verts.begin(), verts.end(), hw.attach[i - 1]) - verts.begin());

        // per-coordinate alphabets for this branch
        std::vector<std::vector<int>> alpha(n - 1, plan.W[i - 1]);
        if (i == n + 1) alpha[0] = plan.X;

        // pin the attachment so the assembled image lands next to r resp. on v
        std::vector<int> pin_digits(n - 1, 0);
        if (i == n + 1) {
            // coordinate 1 carries 2 via X's minimum, coords 2..q-1 carry 2 from the set
            int two_at = (int)(std::lower_bound(plan.W[n].begin(), plan.W[n].end(), 2) - plan.W[n].begin());
            for (int t = 1; t < q - 1; ++t) pin_digits[t] = two_at;
        }
        auto emb = find_induced_embedding(ci, bx.g, std::make_pair(local_attach, bx.flat_of(pin_digits)));
        if (!emb) throw std::logic_error("theorem_a_embedding: branch refuses the pinned box embedding");

        for (int lv = 0; lv < ci.n; ++lv) {
            auto digits = bx.tuple_of((*emb)[lv]);
            std::vector<int> val(n - 1);
            for (int t = 0; t < n - 1; ++t) val[t] = alpha[t][digits[t]];
            std::vector<int> gc(n, 0);
            if (i <= n) {
                gc[i - 1] = 1;
                for (int t = 0; t < i - 1; ++t) gc[t] = val[t];
                for (int t = i; t < n; ++t) gc[t] = val[t - 1];
            } else {
                gc[0] = 2;
                for (int t = 1; t < n; ++t) gc[t] = val[t - 1];
            }
            sigma[verts[lv]] = hg.flat_of(gc);
        }
    }
    detail::check_induced_map(hw.h, gplus, sigma, "theorem_a_embedding");
    for (int i = 0; i < n; ++i) {
        std::vector<int> ei(n, 0);
        ei[i] = 1;
        if (sigma[hw.attach[i]] != hg.flat_of(ei))
            throw std::logic_error("theorem_a_embedding: attachment missed its unit-vector slot");
    }
    if (sigma[hw.attach[n]] != vflat)
        throw std::logic_error("theorem_a_embedding: last attachment missed v");

    TheoremAResult res;
    res.plan = plan;
    res.sigma = sigma;
    res.added = Edge{0, vflat};
    return res;
}

inline TheoremAResult theorem_a_embedding(const ClassHWitness& hw, int q) {
    return theorem_a_embedding(hw, make_embedding_plan(hw, q));
}

struct ColoredGraph {
    Graph g;
    EdgeColoring col;
    Edge added{0, 1};  // the pattern edge whose removal the coloring certifies
};

inline ColoredGraph theorem_a_s3_coloring(const ClassHWitness& hw) {
    const int n = hw.n;
    ColoredGraph out;
    out.g = hw.h;
    out.added = Edge{hw.attach[n - 1], hw.attach[n]};
    out.g.add_edge(out.added.a, out.added.b);
    out.col.palette = n;

    for (int i = 1; i <= n + 1; ++i) {
        const auto& verts = hw.comps[i - 1];
        Graph ci = induced_subgraph(hw.h, verts);
        auto sub = search_nice(ci, n - 1);
        if (!sub) throw resource_error("theorem_a_s3_coloring: branch coloring search failed");
        // branch i <= n paints with every colour except i; the last branch keeps 1..n-1
        std::vector<int> palette;
        for (int c = 1; c <= n; ++c)
            if (i > n ? (c <= n - 1) : (c != i)) palette.push_back(c);
        for (auto& [e, c] : sub->color)
            out.col.set(Edge{verts[e.a], verts[e.b]}, palette[c - 1]);
    }
    for (int i = 1; i <= n; ++i) out.col.set(Edge{hw.r, hw.attach[i - 1]}, i);
    out.col.set(Edge{hw.r, hw.attach[n]}, n);
    out.col.set(out.added, n);

    auto rep = verify_nice(out.g, out.col);
    if (!rep.nice) throw std::logic_error("theorem_a_s3_coloring: assembled coloring is not nice");
    return out;
}

struct TheoremBResult {
    int n = 0, k = 0, q = 2;
    std::vector<int> sigma;
    Edge added{0, 1};
};

inline TheoremBResult theorem_b_embedding(const Graph& h, const ClassFWitness& fw, int q, int k) {
    const int n = (int)fw.legs.size() - 1;
    if (!validate_class_f(h, fw, n)) throw std::invalid_argument("theorem_b_embedding: witness fails validation");
    if (q < 2 || q > n) throw std::invalid_argument("theorem_b_embedding: q must lie in [2, n]");

    auto fverts = detail::class_f_fverts(h, fw);
    Graph f = induced_subgraph(h, fverts);
    int ellf = detail::least_box_alphabet({f}, n - 1);
    int kmin = n + 4 + ellf;
    if (k < kmin)
        throw std::invalid_argument("theorem_b_embedding: k too small, minimal feasible k is " +
                                    std::to_string(kmin));

    auto hg = detail::host_box(n, k);
    std::vector<int> vvec(n, 0);
    for (int t = 0; t < q; ++t) vvec[t] = 2;
    int vflat = hg.flat_of(vvec);
    Graph gplus = hg.g;
    gplus.add_edge(0, vflat);

    // residual graph sits on the top level: digits shifted past every marker, last coordinate k-1
    auto bx = make_hamming(n - 1, ellf);
    auto femb = find_induced_embedding(f, bx.g);
    if (!femb) throw std::logic_error("theorem_b_embedding: residual box embedding vanished");
    std::vector<int> sigma(h.n, -1);
    std::vector<std::vector<int>> ys(h.n);
    for (int lv = 0; lv < f.n; ++lv) {
        auto digits = bx.tuple_of((*femb)[lv]);
        std::vector<int> gc(n);
        for (int t = 0; t < n - 1; ++t) gc[t] = n + 4 + digits[t];
        gc[n - 1] = k - 1;
        sigma[fverts[lv]] = hg.flat_of(gc);
        ys[fverts[lv]] = gc;
    }
    sigma[fw.r] = 0;

    for (int i = 1; i <= n + 1; ++i) {
        const auto& leg = fw.legs[i - 1];
        const auto& y = ys[leg.back()];
        std::vector<int> cur(n, 0);
        if (i <= n) {
            cur[i - 1] = 1;
        } else {
            cur = vvec;
        }
        sigma[leg[1]] = hg.flat_of(cur);
        for (int j = 2; j <= n + 2; ++j) {
            if (i <= n - 1) {
                if (j <= i) cur[j - 2] = y[j - 2];
                else if (j <= n - 1) cur[j - 1] = y[j - 1];
                else if (j == n) cur[n - 1] = i + 2;
                else if (j == n + 1) cur[i - 1] = y[i - 1];
                else cur[n - 1] = k - 1;
            } else if (i == n) {
                if (j <= n - 1) cur[j - 2] = y[j - 2];
                else if (j == n) cur[n - 1] = n + 2;
                else if (j == n + 1) cur[n - 2] = y[n - 2];
                else cur[n - 1] = k - 1;
            } else {
                if (j == 2) cur[n - 1] = n + 3;
                else if (j <= n) cur[n - j + 1] = y[n - j + 1];
                else if (j == n + 1) cur[0] = y[0];
                else cur[n - 1] = k - 1;
            }
            int flat = hg.flat_of(cur);
            if (j == n + 2) {
                if (flat != sigma[leg.back()])
                    throw std::logic_error("theorem_b_embedding: leg fails to land on its leaf image");
            } else {
                sigma[leg[j]] = flat;
            }
        }
    }
    detail::check_induced_map(h, gplus, sigma, "theorem_b_embedding");

    TheoremBResult res;
    res.n = n;
    res.k = k;
    res.q = q;
    res.sigma = sigma;
    res.added = Edge{0, vflat};
    return res;
}

inline ColoredGraph theorem_b_s3_coloring(const Graph& h, const ClassFWitness& fw, int n) {
    if (!validate_class_f(h, fw, n)) throw std::invalid_argument("theorem_b_s3_coloring: witness fails validation");
    ColoredGraph out;
    out.g = h;
    out.added = Edge{fw.legs[n - 1][1], fw.legs[n][1]};
    out.g.add_edge(out.added.a, out.added.b);
    out.col.palette = n;

    auto fverts = detail::class_f_fverts(h, fw);
    Graph f = induced_subgraph(h, fverts);
    auto sub = search_nice(f, n - 1);
    if (!sub) throw resource_error("theorem_b_s3_coloring: residual coloring search failed");
    std::map<Edge, int> fcols;
    for (auto& [e, c] : sub->color) fcols[Edge{fverts[e.a], fverts[e.b]}] = c;

    if (n == 3) {
        std::map<Edge, int> pins = fcols;
        pins[Edge{fw.r, fw.legs[n - 1][1]}] = n;
        pins[Edge{fw.r, fw.legs[n][1]}] = n;
        pins[out.added] = n;
        auto found = search_nice(out.g, n, kDefaultPathBudget, pins);
        if (!found) throw resource_error("theorem_b_s3_coloring: pinned search found nothing");
        out.col = *found;
        return out;
    }

    for (auto& [e, c] : fcols) out.col.set(e, c);
    for (int i = 1; i <= n + 1; ++i) {
        const auto& leg = fw.legs[i - 1];
        for (int j = 1; j <= n + 2; ++j) {
            int c;
            if (j == n + 2) c = n;
            else if (j == n + 1) c = (i <= n - 1) ? i : (i == n ? n - 1 : 1);
            else if (i == n && j == n) c = n;
            else if (i <= n - 1) c = (i + j - 2) % n + 1;
            else c = (n + j - 2) % n + 1;
            out.col.set(Edge{leg[j - 1], leg[j]}, c);
        }
    }
    out.col.set(out.added, n);

    auto rep = verify_nice(out.g, out.col);
    if (!rep.nice) throw std::logic_error("theorem_b_s3_coloring: assembled coloring is not nice");
    return out;
}

struct SubdivisionColoring {
    Graph fprime;
    EdgeColoring col;
    int n = 0;
    std::vector<int> originals;  // vertices of fprime inherited from the residual graph
};

// colors the (n+1)-subdivision of h minus its unique maximum-degree vertex
inline SubdivisionColoring corollary3_coloring(const Graph& h, int v) {
    int deg = h.degree(v);
    const int n = deg - 1;
    if (n < 4) throw std::invalid_argument("corollary3_coloring: hub degree must be at least 5");
    if (deg != h.max_degree()) throw std::invalid_argument("corollary3_coloring: v must have maximum degree");
    for (int u = 0; u < h.n; ++u)
        if (u != v && h.degree(u) == deg)
            throw std::invalid_argument("corollary3_coloring: maximum degree vertex must be unique");
    std::vector<int> rest;
    for (int u = 0; u < h.n; ++u)
        if (u != v) rest.push_back(u);
    Graph f = induced_subgraph(h, rest);
    if (f.max_degree() > n - 1)
        throw std::invalid_argument("corollary3_coloring: residual degree exceeds n-1");

    const int t = n + 1;
    SubdivisionColoring out;
    out.n = n;
    out.fprime = subdivide(f, t);
    out.col.palette = n - 1;
    for (int u = 0; u < f.n; ++u) out.originals.push_back(u);

    auto es = f.edges();
    // pick distinct end-edge colours around every original vertex
    std::map<std::pair<int, int>, int> endcol;  // (vertex, edge index) -> colour
    std::vector<int> used(f.n, 0);
    for (int u = 0; u < f.n; ++u)
        for (size_t idx = 0; idx < es.size(); ++idx)
            if (es[idx].a == u || es[idx].b == u) endcol[{u, (int)idx}] = ++used[u];

    for (size_t idx = 0; idx < es.size(); ++idx) {
        Edge e = es[idx];
        int first = f.n + (int)idx * t;
        std::vector<int> path{e.a};
        for (int s = 0; s < t; ++s) path.push_back(first + s);
        path.push_back(e.b);
        int ca = endcol[{e.a, (int)idx}];
        int cb = endcol[{e.b, (int)idx}];
        if (ca < cb) {
            std::reverse(path.begin(), path.end());
            std::swap(ca, cb);
        }
        std::vector<int> list;
        if (ca != cb) {
            int x = 1;
            while (x == cb || x == n - 1) ++x;
            list.push_back(ca);
            for (int c = 1; c <= n - 1; ++c) list.push_back(c);
            list.push_back(x);
            list.push_back(cb);
        } else if (ca != 1) {
            list.push_back(ca);
            for (int c = 1; c <= n - 1; ++c) list.push_back(c);
            list.push_back(1);
            list.push_back(ca);
        } else {
            list = {1, 2, 1};
            for (int c = 3; c <= n - 1; ++c) list.push_back(c);
            list.push_back(2);
            list.push_back(1);
        }
        for (int j = 0; j + 1 < (int)path.size(); ++j)
            out.col.set(Edge{path[j], path[j + 1]}, list[j]);
    }
    auto rep = verify_nice(out.fprime, out.col);
    if (!rep.nice) throw std::logic_error("corollary3_coloring: assembled coloring is not nice");
    return out;
}

// spider with n+1 legs of height n+2 whose leaves span a clique; the smallest
// shape the leg-table embedding accepts
inline std::pair<Graph, ClassFWitness> clique_footed_spider(int n) {
    if (n < 3) throw std::invalid_argument("clique_footed_spider: n must be at least 3");
    const int legs = n + 1, internals = n + 1;
    Graph h(legs + 1 + legs * internals);
    for (int a = 0; a < legs; ++a)
        for (int b = a + 1; b < legs; ++b) h.add_edge(a, b);
    ClassFWitness fw;
    fw.r = legs;
    for (int i = 0; i < legs; ++i) {
        std::vector<int> leg{fw.r};
        for (int j = 0; j < internals; ++j) leg.push_back(legs + 1 + internals * i + j);
        leg.push_back(i);
        fw.legs.push_back(leg);
        for (size_t j = 0; j + 1 < leg.size(); ++j) h.add_edge(leg[j], leg[j + 1]);
    }
    return {h, fw};
}

// same spider with an edgeless leaf level, keeping the host box small
inline std::pair<Graph, ClassFWitness> bare_footed_spider(int n) {
    if (n < 3) throw std::invalid_argument("bare_footed_spider: n must be at least 3");
    const int legs = n + 1, height = n + 2;
    Graph h = make_spider(std::vector<int>(legs, height));
    ClassFWitness fw;
    fw.r = 0;
    for (int i = 0; i < legs; ++i) {
        std::vector<int> leg{0};
        for (int j = 0; j < height; ++j) leg.push_back(1 + height * i + j);
        fw.legs.push_back(leg);
    }
    return {h, fw};
}

struct Prop4Entry {
    Graph h;
    std::string family;
    std::string params;
    std::string route;    // "tree", "chipped ch1/2/3", "swap", "none"
    bool verified = false;
};

namespace detail {

inline Graph cycle_plus_path(int m, int t) {
    Graph g(m + t);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    for (int s = 0; s < t; ++s) g.add_edge(s == 0 ? 0 : m + s - 1, m + s);
    return g;
}

inline Prop4Entry classify_route(Graph h, std::string family, std::string params) {
    Prop4Entry e;
    e.h = h;
    e.family = std::move(family);
    e.params = std::move(params);
    if (is_connected(h) && h.edge_count() == h.n - 1 && h.max_degree() >= 4) {
        int n = h.max_degree() - 1;
        if (recognize_class_t(h, n)) {
            e.route = "tree";
            e.verified = recognize_class_h(h, n).has_value();
            return e;
        }
    }
    auto verdict = classify(h);
    switch (verdict.kind) {
        case GoodnessVerdict::Kind::Chipped:
            e.route = "chipped ch" + std::to_string(verdict.chipped->kind);
            e.verified = replay_chipped(h, *verdict.chipped);
            break;
        case GoodnessVerdict::Kind::ClassAB:
            e.route = "swap";
            e.verified = in_class_a(h).has_value() && in_class_b(h).has_value();
            break;
        default:
            e.route = "none";
            e.verified = true;
            break;
    }
    return e;
}

}  // namespace detail

inline std::vector<Prop4Entry> proposition4_suite() {
    std::vector<Prop4Entry> out;
    auto spider = [&](std::vector<int> legs) {
        std::string p = "legs";
        for (size_t i = 0; i < legs.size(); ++i) p += (i ? "," : " ") + std::to_string(legs[i]);
        out.push_back(detail::classify_route(make_spider(legs), "spider", p));
    };
    spider({1, 1, 1});
    spider({2, 2, 2});
    spider({3, 3, 3});
    spider({1, 1, 1, 1});
    spider({2, 2, 2, 2});
    spider({1, 1, 1, 1, 1});
    for (int m = 5; m <= 8; ++m)
        out.push_back(detail::classify_route(make_cycle_chord(m), "chorded cycle", "m " + std::to_string(m)));
    for (auto [m, t] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {6, 1}})
        out.push_back(detail::classify_route(detail::cycle_plus_path(m, t), "cycle plus path",
                                             "m " + std::to_string(m) + " t " + std::to_string(t)));
    return out;
}

}  // namespace indsat
