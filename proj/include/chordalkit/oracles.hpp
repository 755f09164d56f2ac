#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chordalkit/graph.hpp"

namespace chordalkit {

/// Size/time guards for the brute-force solvers.
struct OracleBudget {
    int max_n = 16;
};

struct OracleAnswer {
    int size = 0;
    std::vector<int> witness;
};

namespace oracle_detail {

inline void check_budget(const Graph& g, const OracleBudget& budget) {
    if (g.num_vertices() > budget.max_n)
        throw std::invalid_argument("oracle: instance exceeds the vertex cap");
    if (g.num_vertices() > 30) throw std::invalid_argument("oracle: vertex cap above 30 unsupported");
}

inline std::vector<uint32_t> closed_neighborhood_masks(const Graph& g) {
    int n = g.num_vertices();
    std::vector<uint32_t> nb(n);
    for (int v = 0; v < n; ++v) {
        uint32_t m = uint32_t(1) << v;
        for (int u : g.neighbors(v)) m |= uint32_t(1) << u;
        nb[v] = m;
    }
    return nb;
}

inline std::vector<int> mask_to_set(uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

inline bool mask_connected(const Graph& g, uint32_t mask) {
    if (mask == 0) return true;
    int start = __builtin_ctz(mask);
    uint32_t seen = uint32_t(1) << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            uint32_t b = uint32_t(1) << u;
            if ((mask & b) && !(seen & b)) {
                seen |= b;
                stack.push_back(u);
            }
        }
    }
    return seen == mask;
}

/// Component id per vertex after deleting `removed`; removed vertices get -1.
inline std::vector<int> components_after_removal(const Graph& g, uint32_t removed) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int id = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1 || (removed >> s & 1)) continue;
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (comp[u] == -1 && !(removed >> u & 1)) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        ++id;
    }
    return comp;
}

}  // namespace oracle_detail

/// Minimum dominating set by subset enumeration.
inline std::optional<OracleAnswer> brute_ds(const Graph& g, OracleBudget budget = {}) {
    oracle_detail::check_budget(g, budget);
    int n = g.num_vertices();
    auto nb = oracle_detail::closed_neighborhood_masks(g);
    uint32_t all = n == 0 ? 0 : (uint32_t(1) << n) - 1;
    int best = n + 1;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask <= all; ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz >= best) continue;
        uint32_t covered = 0;
        for (uint32_t m = mask; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            covered |= nb[v];
        }
        if (covered == all) { best = sz; best_mask = mask; }
        if (n == 0) break;
    }
    if (best > n) return std::nullopt;  // only when some vertex is isolated-undominatable (impossible: v dominates itself)
    return OracleAnswer{best, oracle_detail::mask_to_set(best_mask)};
}

/// Minimum red-blue dominating set: X subseteq red with blue subseteq N(X).
inline std::optional<OracleAnswer> brute_rbds(const Graph& g, const std::vector<int>& red,
                                              const std::vector<int>& blue, OracleBudget budget = {}) {
    oracle_detail::check_budget(g, budget);
    uint32_t blue_mask = 0;
    for (int b : blue) blue_mask |= uint32_t(1) << b;
    std::vector<uint32_t> open_nb(red.size());
    for (size_t i = 0; i < red.size(); ++i) {
        uint32_t m = 0;
        for (int u : g.neighbors(red[i])) m |= uint32_t(1) << u;
        open_nb[i] = m & blue_mask;
    }
    int r = static_cast<int>(red.size());
    if (r > 30) throw std::invalid_argument("brute_rbds: too many red vertices");
    int best = r + 1;
    uint32_t best_sel = 0;
    for (uint32_t sel = 0; sel < (uint32_t(1) << r); ++sel) {
        int sz = __builtin_popcount(sel);
        if (sz >= best) continue;
        uint32_t covered = 0;
        for (uint32_t m = sel; m;) {
            int i = __builtin_ctz(m);
            m &= m - 1;
            covered |= open_nb[i];
        }
        if ((covered & blue_mask) == blue_mask) { best = sz; best_sel = sel; }
    }
    if (best > r) return std::nullopt;
    OracleAnswer ans;
    ans.size = best;
    for (int i = 0; i < r; ++i)
        if (best_sel >> i & 1) ans.witness.push_back(red[i]);
    return ans;
}

/// Minimum connected dominating set.
inline std::optional<OracleAnswer> brute_cds(const Graph& g, OracleBudget budget = {}) {
    oracle_detail::check_budget(g, budget);
    int n = g.num_vertices();
    if (n == 0) return OracleAnswer{0, {}};
    auto nb = oracle_detail::closed_neighborhood_masks(g);
    uint32_t all = (uint32_t(1) << n) - 1;
    int best = n + 1;
    uint32_t best_mask = 0;
    for (uint32_t mask = 1; mask <= all; ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz >= best) continue;
        uint32_t covered = 0;
        for (uint32_t m = mask; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            covered |= nb[v];
        }
        if (covered != all) continue;
        if (oracle_detail::mask_connected(g, mask)) { best = sz; best_mask = mask; }
    }
    if (best > n) return std::nullopt;
    return OracleAnswer{best, oracle_detail::mask_to_set(best_mask)};
}

/// Minimum Steiner tree measured in |V(S)| (terminals included). The witness
/// is the full vertex set of the tree.
inline std::optional<OracleAnswer> brute_steiner(const Graph& g, const std::vector<int>& terminals,
                                                 OracleBudget budget = {}) {
    oracle_detail::check_budget(g, budget);
    if (terminals.empty()) return OracleAnswer{0, {}};
    if (terminals.size() == 1) return OracleAnswer{1, {terminals[0]}};
    uint32_t tmask = 0;
    for (int t : terminals) tmask |= uint32_t(1) << t;
    int n = g.num_vertices();
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!(tmask >> v & 1)) rest.push_back(v);
    int r = static_cast<int>(rest.size());
    int best = -1;
    uint32_t best_mask = 0;
    for (uint32_t sel = 0; sel < (uint32_t(1) << r); ++sel) {
        int sz = __builtin_popcount(sel) + static_cast<int>(terminals.size());
        if (best != -1 && sz >= best) continue;
        uint32_t mask = tmask;
        for (uint32_t m = sel; m;) {
            int i = __builtin_ctz(m);
            m &= m - 1;
            mask |= uint32_t(1) << rest[i];
        }
        if (oracle_detail::mask_connected(g, mask)) { best = sz; best_mask = mask; }
    }
    if (best == -1) return std::nullopt;
    return OracleAnswer{best, oracle_detail::mask_to_set(best_mask)};
}

/// Minimum multiway cut with undeletable terminals.
inline std::optional<OracleAnswer> brute_mwc(const Graph& g, const std::vector<int>& terminals,
                                             OracleBudget budget = {}) {
    oracle_detail::check_budget(g, budget);
    for (size_t i = 0; i < terminals.size(); ++i)
        for (size_t j = i + 1; j < terminals.size(); ++j)
            if (g.has_edge(terminals[i], terminals[j])) return std::nullopt;
    int n = g.num_vertices();
    uint32_t tmask = 0;
    for (int t : terminals) tmask |= uint32_t(1) << t;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!(tmask >> v & 1)) rest.push_back(v);
    int r = static_cast<int>(rest.size());
    int best = -1;
    uint32_t best_sel = 0;
    for (uint32_t sel = 0; sel < (uint32_t(1) << r); ++sel) {
        int sz = __builtin_popcount(sel);
        if (best != -1 && sz >= best) continue;
        uint32_t removed = 0;
        for (uint32_t m = sel; m;) {
            int i = __builtin_ctz(m);
            m &= m - 1;
            removed |= uint32_t(1) << rest[i];
        }
        auto comp = oracle_detail::components_after_removal(g, removed);
        bool ok = true;
        for (size_t i = 0; i < terminals.size() && ok; ++i)
            for (size_t j = i + 1; j < terminals.size() && ok; ++j)
                if (comp[terminals[i]] == comp[terminals[j]]) ok = false;
        if (ok) { best = sz; best_sel = sel; }
    }
    if (best == -1) return std::nullopt;
    OracleAnswer ans;
    ans.size = best;
    for (int i = 0; i < r; ++i)
        if (best_sel >> i & 1) ans.witness.push_back(rest[i]);
    return ans;
}

/// Minimum multicut with undeletable terminals for a list of pairs.
inline std::optional<OracleAnswer> brute_mc(const Graph& g,
                                            const std::vector<std::pair<int, int>>& pairs,
                                            OracleBudget budget = {}) {
    oracle_detail::check_budget(g, budget);
    for (auto& [a, b] : pairs)
        if (g.has_edge(a, b)) return std::nullopt;
    int n = g.num_vertices();
    uint32_t tmask = 0;
    for (auto& [a, b] : pairs) {
        tmask |= uint32_t(1) << a;
        tmask |= uint32_t(1) << b;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!(tmask >> v & 1)) rest.push_back(v);
    int r = static_cast<int>(rest.size());
    int best = -1;
    uint32_t best_sel = 0;
    for (uint32_t sel = 0; sel < (uint32_t(1) << r); ++sel) {
        int sz = __builtin_popcount(sel);
        if (best != -1 && sz >= best) continue;
        uint32_t removed = 0;
        for (uint32_t m = sel; m;) {
            int i = __builtin_ctz(m);
            m &= m - 1;
            removed |= uint32_t(1) << rest[i];
        }
        auto comp = oracle_detail::components_after_removal(g, removed);
        bool ok = true;
        for (auto& [a, b] : pairs)
            if (comp[a] == comp[b]) { ok = false; break; }
        if (ok) { best = sz; best_sel = sel; }
    }
    if (best == -1) return std::nullopt;
    OracleAnswer ans;
    ans.size = best;
    for (int i = 0; i < r; ++i)
        if (best_sel >> i & 1) ans.witness.push_back(rest[i]);
    return ans;
}

/// Minimum vertex cover by subset enumeration; ground truth for the
/// VC-derived generators.
inline OracleAnswer brute_vertex_cover(const Graph& g, OracleBudget budget = {}) {
    oracle_detail::check_budget(g, budget);
    int n = g.num_vertices();
    auto es = g.edges();
    int best = n + 1;
    uint32_t best_mask = 0;
    uint32_t all = n == 0 ? 0 : (uint32_t(1) << n) - 1;
    for (uint32_t mask = 0; mask <= all; ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz >= best) continue;
        bool ok = true;
        for (auto& [u, v] : es)
            if (!(mask >> u & 1) && !(mask >> v & 1)) { ok = false; break; }
        if (ok) { best = sz; best_mask = mask; }
        if (n == 0) break;
    }
    return OracleAnswer{best, oracle_detail::mask_to_set(best_mask)};
}

}  // namespace chordalkit
