#include <catch2/catch_amalgamated.hpp>

#include "indsat/cliques.hpp"
#include "indsat/embedding.hpp"
#include "indsat/enumerate.hpp"
#include "indsat/isomorphism.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace indsat;
using testutil::graph_from_edges;
using testutil::random_graph;

namespace {

// independent reference: all injective maps, adjacency checked directly
long brute_count_embeddings(const Graph& p, const Graph& h) {
    std::vector<int> phi(p.n, -1);
    std::vector<bool> used(h.n, false);
    long count = 0;
    std::function<void(int)> go = [&](int u) {
        if (u == p.n) {
            ++count;
            return;
        }
        for (int x = 0; x < h.n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int q = 0; q < u && ok; ++q)
                ok = p.has_edge(u, q) == h.has_edge(x, phi[q]);
            if (!ok) continue;
            phi[u] = x;
            used[x] = true;
            go(u + 1);
            used[x] = false;
        }
    };
    go(0);
    return count;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u)
            for (int v = u + 1; v < a.n && ok; ++v)
                ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph shuffle_labels(std::mt19937& rng, const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.n);
    for (auto e : g.edges()) h.add_edge(perm[e.a], perm[e.b]);
    return h;
}

} // namespace

TEST_CASE("maximal cliques pinned cases", "[embedding]") {
    using VV = std::vector<std::vector<int>>;
    REQUIRE(maximal_cliques(make_cycle(4)) == VV{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    REQUIRE(maximal_cliques(make_complete(4)) == VV{{0, 1, 2, 3}});
    REQUIRE(maximal_cliques(make_empty(3)) == VV{{0}, {1}, {2}});

    Graph bow = graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    REQUIRE(maximal_cliques(bow) == VV{{0, 1, 2}, {2, 3, 4}});

    Graph k4e = make_complete(4);
    k4e.delete_edge(0, 1);
    REQUIRE(maximal_cliques(k4e) == VV{{0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("maximal cliques match subset brute force", "[embedding]") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 250; ++iter) {
        int n = 1 + iter % 8;
        Graph g = random_graph(rng, n, 0.5);
        std::vector<std::vector<int>> expect;
        for (uint32_t s = 1; s < (uint32_t{1} << n); ++s) {
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1) verts.push_back(v);
            if (!is_clique(g, verts)) continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v) {
                if ((s >> v) & 1) continue;
                std::vector<int> bigger = verts;
                bigger.push_back(v);
                maximal = !is_clique(g, bigger);
            }
            if (maximal) expect.push_back(verts);
        }
        std::sort(expect.begin(), expect.end());
        REQUIRE(maximal_cliques(g) == expect);
    }
}

TEST_CASE("canonical labeling invariant under relabeling", "[embedding]") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 400; ++iter) {
        int n = 1 + iter % 9;
        Graph g = random_graph(rng, n, 0.5);
        Graph h = shuffle_labels(rng, g);
        REQUIRE(canonical_graph6(g) == canonical_graph6(h));
        REQUIRE(are_isomorphic(g, h));
    }
}

TEST_CASE("isomorphism matches permutation brute force", "[embedding]") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + iter % 5;
        Graph a = random_graph(rng, n, 0.5);
        Graph b = random_graph(rng, n, 0.5);
        REQUIRE(are_isomorphic(a, b) == brute_isomorphic(a, b));
    }
}

TEST_CASE("isomorphism cases", "[embedding]") {
    REQUIRE_FALSE(are_isomorphic(make_cycle(5), make_path(5)));
    REQUIRE(are_isomorphic(make_cycle(5), parse_graph6("Dhc")));
    std::mt19937 rng(3);
    Graph p = petersen();
    REQUIRE(are_isomorphic(p, shuffle_labels(rng, p)));
    REQUIRE(are_isomorphic(make_complete(12), make_complete(12)));
    REQUIRE_THROWS_AS(canonical_graph6(make_cycle(13)), std::invalid_argument);
    REQUIRE_THROWS_AS(are_isomorphic(make_cycle(13), make_cycle(13)), std::invalid_argument);
}

TEST_CASE("graph census counts", "[embedding]") {
    const int counts[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) REQUIRE((int)all_graphs(n).size() == counts[n]);
    const int conn[] = {1, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) REQUIRE((int)all_connected_graphs(n).size() == conn[n]);
}

TEST_CASE("tree and forest census", "[embedding]") {
    const int tcounts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        auto ts = all_trees(n);
        REQUIRE((int)ts.size() == tcounts[n]);
        for (auto& t : ts) {
            REQUIRE(t.edge_count() == n - 1);
            REQUIRE(is_connected(t));
        }
    }
    const int fcounts[] = {1, 1, 2, 3, 6, 10, 20, 37, 76};
    for (int n = 0; n <= 8; ++n) {
        auto fs = all_forests(n);
        REQUIRE((int)fs.size() == fcounts[n]);
        for (auto& f : fs)
            REQUIRE(f.edge_count() == f.n - (int)components(f).size());
    }
}

TEST_CASE("embedding counts match brute force", "[embedding]") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        int pn = 1 + iter % 4;
        int hn = 1 + iter % 6;
        Graph p = random_graph(rng, pn, 0.5);
        Graph h = random_graph(rng, hn, 0.5);
        long expect = brute_count_embeddings(p, h);
        REQUIRE(count_induced_embeddings(p, h, 1000000) == expect);
        REQUIRE(contains_induced(p, h) == (expect > 0));
    }
}

TEST_CASE("embedding pinned cases", "[embedding]") {
    REQUIRE(count_induced_embeddings(make_path(3), make_cycle(4), 100) == 8);
    REQUIRE(count_induced_embeddings(make_complete(2), make_complete(3), 100) == 6);
    REQUIRE(count_induced_embeddings(make_cycle(4), make_complete(4), 100) == 0);
    REQUIRE(count_induced_embeddings(make_complete(2), make_complete(6), 5) == 6); // cap hit

    Graph pet = petersen();
    REQUIRE(contains_induced(make_cycle(5), pet));
    REQUIRE_FALSE(contains_induced(make_cycle(4), pet));
    REQUIRE(contains_induced(make_path(4), pet));

    auto phi = find_induced_embedding(make_cycle(5), pet);
    REQUIRE(phi.has_value());
    REQUIRE(is_induced_embedding(make_cycle(5), pet, *phi));
}

TEST_CASE("embedding with a pinned vertex", "[embedding]") {
    // path 0-1-2 with its middle at cycle vertex 0
    auto phi = find_induced_embedding(make_path(3), make_cycle(5), {{1, 0}});
    REQUIRE(phi.has_value());
    REQUIRE((*phi)[1] == 0);
    REQUIRE(is_induced_embedding(make_path(3), make_cycle(5), *phi));

    REQUIRE_FALSE(find_induced_embedding(make_star(3), make_cycle(4), {{0, 2}}).has_value());
    REQUIRE_FALSE(find_induced_embedding(make_complete(3), make_cycle(5)).has_value());
}

TEST_CASE("embedding validator", "[embedding]") {
    Graph c4 = make_cycle(4);
    REQUIRE(is_induced_embedding(c4, c4, {0, 1, 2, 3}));
    REQUIRE(is_induced_embedding(c4, c4, {1, 2, 3, 0}));
    REQUIRE_FALSE(is_induced_embedding(c4, c4, {0, 1, 3, 2}));
    REQUIRE_FALSE(is_induced_embedding(c4, c4, {0, 1, 2, 2}));
    REQUIRE_FALSE(is_induced_embedding(c4, c4, {0, 1, 2}));
    REQUIRE_FALSE(is_induced_embedding(c4, c4, {0, 1, 2, 4}));
}
