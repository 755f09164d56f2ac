#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chordalkit/graph.hpp"

namespace chordalkit {

/// An induced copy of H_ell: a clique and an independent set of equal size
/// whose cross edges form a perfect matching, index to index.
struct HOccurrence {
    std::vector<int> clique_vertices;
    std::vector<int> independent_vertices;
};

namespace detail {

inline bool extend_independent(const Graph& g, const std::vector<int>& clique,
                               std::vector<std::vector<int>>& cand, size_t idx,
                               std::vector<int>& picked) {
    if (idx == cand.size()) return true;
    for (int u : cand[idx]) {
        bool ok = true;
        for (int w : picked)
            if (w == u || g.has_edge(w, u)) { ok = false; break; }
        if (!ok) continue;
        picked.push_back(u);
        if (extend_independent(g, clique, cand, idx + 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

inline bool extend_clique(const Graph& g, int ell, std::vector<int>& clique, int start,
                          HOccurrence& out) {
    if (static_cast<int>(clique.size()) == ell) {
        // per clique vertex, private neighbors: adjacent to it and nothing else of the clique
        std::vector<std::vector<int>> cand(ell);
        for (int i = 0; i < ell; ++i) {
            for (int u = 0; u < g.num_vertices(); ++u) {
                if (std::find(clique.begin(), clique.end(), u) != clique.end()) continue;
                if (!g.has_edge(u, clique[i])) continue;
                bool priv = true;
                for (int j = 0; j < ell && priv; ++j)
                    if (j != i && g.has_edge(u, clique[j])) priv = false;
                if (priv) cand[i].push_back(u);
            }
            if (cand[i].empty()) return false;
        }
        std::vector<int> picked;
        if (extend_independent(g, clique, cand, 0, picked)) {
            out.clique_vertices = clique;
            out.independent_vertices = picked;
            return true;
        }
        return false;
    }
    for (int v = start; v < g.num_vertices(); ++v) {
        bool ok = true;
        for (int w : clique)
            if (!g.has_edge(w, v)) { ok = false; break; }
        if (!ok) continue;
        clique.push_back(v);
        if (extend_clique(g, ell, clique, v + 1, out)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace detail

/// Brute-force search for an induced H_ell (desk scale only). Returns a
/// witness occurrence or nullopt.
inline std::optional<HOccurrence> find_induced_h_ell(const Graph& g, int ell) {
    if (ell < 3) throw std::invalid_argument("find_induced_h_ell: ell must be >= 3");
    HOccurrence occ;
    std::vector<int> clique;
    if (detail::extend_clique(g, ell, clique, 0, occ)) return occ;
    return std::nullopt;
}

/// Builds H_ell itself: clique 0..ell-1, independent ell..2ell-1, matching i ~ ell+i.
inline Graph make_h_ell(int ell) {
    Graph g(2 * ell);
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) g.add_edge(i, j);
    for (int i = 0; i < ell; ++i) g.add_edge(i, ell + i);
    return g;
}

}  // namespace chordalkit
