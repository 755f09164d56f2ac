#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chordalkit/graph.hpp"
#include "chordalkit/oracles.hpp"

using namespace chordalkit;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

// star with every edge subdivided once: center 0, mids 1..k, leaves k+1..2k
Graph subdivided_star(int k) {
    Graph g(1 + 2 * k);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, k + i);
    }
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.num_vertices());
    for (auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("domination oracles on small fixtures") {
    CHECK(brute_ds(star_graph(4))->size == 1);
    CHECK(brute_cds(star_graph(4))->size == 1);
    CHECK(brute_cds(path_graph(5))->size == 3);

    // isolated blue vertex: no red neighbor
    Graph g(2);
    CHECK_FALSE(brute_rbds(g, {0}, {1}).has_value());

    // star, red center, blue leaves
    Graph s = star_graph(3);
    CHECK(brute_rbds(s, {0}, {1, 2, 3})->size == 1);
}

TEST_CASE("steiner oracle counts the whole tree") {
    Graph p3 = path_graph(3);
    auto ans = brute_steiner(p3, {0, 2});
    REQUIRE(ans.has_value());
    CHECK(ans->size == 3);
    CHECK(brute_steiner(p3, {1})->size == 1);
    CHECK(brute_steiner(p3, {})->size == 0);
}

TEST_CASE("multiway cut oracle fixtures") {
    CHECK(brute_mwc(path_graph(3), {0, 2})->size == 1);

    Graph adj = path_graph(2);
    CHECK_FALSE(brute_mwc(adj, {0, 1}).has_value());

    // deleting the center alone pairwise-separates the three leaves
    Graph s3 = subdivided_star(3);
    CHECK(brute_mwc(s3, {4, 5, 6})->size == 1);
}

TEST_CASE("multicut oracle fixtures") {
    CHECK(brute_mc(path_graph(3), {{0, 2}})->size == 1);
    CHECK_FALSE(brute_mc(path_graph(2), {{0, 1}}).has_value());

    // two crossing pairs on a path: one shared separator suffices
    Graph p5 = path_graph(5);
    CHECK(brute_mc(p5, {{0, 3}, {1, 4}})->size == 1);   // vertex 2 separates both windows
    CHECK(brute_mc(p5, {{0, 2}, {2, 4}})->size == 2);   // windows are disjoint singletons
}

TEST_CASE("oracles refuse oversized instances") {
    Graph big(20);
    CHECK_THROWS_AS(brute_ds(big), std::invalid_argument);
}

TEST_CASE("oracle answers are invariant under relabeling") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 6 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.35, rng());
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        CHECK(brute_ds(g)->size == brute_ds(h)->size);
        auto cg = brute_cds(g), ch = brute_cds(h);
        CHECK(cg.has_value() == ch.has_value());
        if (cg && ch) CHECK(cg->size == ch->size);
    }
}

TEST_CASE("metamorphic: adding an edge never hurts domination nor helps cuts") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 7;
        Graph g = random_graph(n, 0.3, rng());
        // pick a non-edge
        int a = -1, b = -1;
        for (int u = 0; u < n && a == -1; ++u)
            for (int v = u + 1; v < n && a == -1; ++v)
                if (!g.has_edge(u, v)) { a = u; b = v; }
        if (a == -1) continue;
        Graph g2 = g;
        g2.add_edge(a, b);

        CHECK(brute_ds(g2)->size <= brute_ds(g)->size);

        std::vector<int> terms{0, n - 1};
        auto before = brute_mwc(g, terms);
        auto after = brute_mwc(g2, terms);
        if (after.has_value() && before.has_value()) CHECK(after->size >= before->size);
        if (!before.has_value()) CHECK_FALSE(after.has_value());  // adjacent terminals stay adjacent
    }
}
