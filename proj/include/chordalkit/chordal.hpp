#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chordalkit/graph.hpp"
#include "chordalkit/tree_representation.hpp"

namespace chordalkit {

/// Order v1..vn such that the later neighbors of each vi form a clique.
using PerfectEliminationOrdering = std::vector<int>;

/// Lex-BFS visit order (partition refinement, O(n^2) which is plenty here).
inline std::vector<int> lex_bfs_order(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> label(n);
    std::vector<char> done(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            if (best == -1 || label[v] > label[best] ||
                (label[v] == label[best] && v < best))
                best = v;
        }
        done[best] = 1;
        order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!done[u] && g.has_edge(best, u)) label[u].push_back(n - step);
    }
    return order;
}

inline bool verify_peo(const Graph& g, const PerfectEliminationOrdering& peo) {
    int n = g.num_vertices();
    if (static_cast<int>(peo.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (peo[i] < 0 || peo[i] >= n || pos[peo[i]] != -1) return false;
        pos[peo[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        // earliest later neighbor u: the rest of the later neighbors must see u
        int u = -1;
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(v, peo[j])) { u = peo[j]; break; }
        if (u == -1) continue;
        for (int j = pos[u] + 1; j < n; ++j)
            if (g.has_edge(v, peo[j]) && !g.has_edge(u, peo[j])) return false;
    }
    return true;
}

/// Returns a perfect elimination ordering, or nullopt for non-chordal input.
inline std::optional<PerfectEliminationOrdering> is_chordal(const Graph& g) {
    if (g.num_vertices() == 0) return PerfectEliminationOrdering{};
    auto order = lex_bfs_order(g);
    std::reverse(order.begin(), order.end());  // reversed Lex-BFS order is a PEO iff chordal
    if (!verify_peo(g, order)) return std::nullopt;
    return order;
}

/// Maximal cliques of a chordal graph from a PEO: candidates {v} + later
/// neighbors, filtered down to the inclusion-maximal ones.
inline std::vector<std::vector<int>> maximal_cliques_chordal(const Graph& g,
                                                             const PerfectEliminationOrdering& peo) {
    int n = g.num_vertices();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    std::vector<std::vector<int>> cand;
    for (int i = 0; i < n; ++i) {
        std::vector<int> c{peo[i]};
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(peo[i], peo[j])) c.push_back(peo[j]);
        std::sort(c.begin(), c.end());
        cand.push_back(std::move(c));
    }
    std::sort(cand.begin(), cand.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> cliques;
    for (auto& c : cand) {
        bool contained = false;
        for (auto& k : cliques)
            if (std::includes(k.begin(), k.end(), c.begin(), c.end())) { contained = true; break; }
        if (!contained) cliques.push_back(c);
    }
    return cliques;
}

/// Clique tree of a chordal graph: nodes are the maximal cliques, joined by a
/// maximum-weight spanning tree under intersection size (junction property).
/// The leaf count is a leafage upper bound only. Throws on an invalid PEO.
inline TreeRepresentation build_tree_representation(const Graph& g,
                                                    const PerfectEliminationOrdering& peo) {
    if (!verify_peo(g, peo)) throw std::invalid_argument("build_tree_representation: invalid PEO");
    int n = g.num_vertices();
    TreeRepresentation tr;
    if (n == 0) {
        tr.tree.add_node(0);
        tr.tree.root = 0;
        tr.tree.next_id = 1;
        return tr;
    }
    auto cliques = maximal_cliques_chordal(g, peo);
    int k = static_cast<int>(cliques.size());
    for (int i = 0; i < k; ++i) tr.tree.add_node(i);
    tr.tree.root = 0;

    // Kruskal on intersection weights, heaviest first; zero-weight edges only
    // bridge distinct graph components, so models stay connected.
    struct E { int w, a, b; };
    std::vector<E> es;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            std::vector<int> inter;
            std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(),
                                  cliques[b].end(), std::back_inserter(inter));
            es.push_back({static_cast<int>(inter.size()), a, b});
        }
    std::stable_sort(es.begin(), es.end(), [](const E& x, const E& y) { return x.w > y.w; });
    std::vector<int> uf(k);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&uf](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (auto& e : es) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        uf[ra] = rb;
        tr.tree.add_edge(e.a, e.b);
    }

    tr.models.assign(n, {});
    for (int i = 0; i < k; ++i)
        for (int v : cliques[i]) tr.models[v].push_back(i);
    for (auto& m : tr.models) std::sort(m.begin(), m.end());
    return tr;
}

/// Convenience: Lex-BFS + clique tree, throwing on non-chordal input.
inline TreeRepresentation chordal_tree_representation(const Graph& g) {
    auto peo = is_chordal(g);
    if (!peo) throw std::invalid_argument("input graph is not chordal");
    return build_tree_representation(g, *peo);
}

}  // namespace chordalkit
