#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "chordalkit/exact_cover.hpp"
#include "chordalkit/graph.hpp"
#include "chordalkit/tree_representation.hpp"

namespace chordalkit {

enum class Color { Red, Blue };

/// Red-blue domination instance: graph + partition + representation. The
/// budget is compared by callers; solvers compute the optimum.
struct RbdsInstance {
    Graph g;
    TreeRepresentation rep;
    std::vector<Color> colors;  // per vertex of g
};

/// Working state of the branching solver. Vertices keep their original ids
/// across every transformation (gadget blues get fresh ids above them), so a
/// set of red picks is valid in every ancestor instance unchanged.
struct RbdsWork {
    HostTree tree;
    std::map<int, Model> models;
    std::map<int, Color> colors;
    int fresh_vertex = 0;

    bool adjacent(int u, int v) const { return models_intersect(models.at(u), models.at(v)); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (auto& [v, _] : models) out.push_back(v);
        return out;
    }
    std::vector<int> reds() const {
        std::vector<int> out;
        for (auto& [v, c] : colors)
            if (c == Color::Red) out.push_back(v);
        return out;
    }
    std::vector<int> blues() const {
        std::vector<int> out;
        for (auto& [v, c] : colors)
            if (c == Color::Blue) out.push_back(v);
        return out;
    }
    void erase_vertex(int v) {
        models.erase(v);
        colors.erase(v);
    }
    std::vector<int> ver(int node) const {
        std::vector<int> out;
        for (auto& [v, m] : models)
            if (model_contains(m, node)) out.push_back(v);
        return out;
    }
};

inline RbdsWork make_work(const TreeRepresentation& rep, const std::vector<Color>& colors) {
    RbdsWork w;
    w.tree = rep.tree;
    for (size_t v = 0; v < rep.models.size(); ++v) {
        w.models[static_cast<int>(v)] = rep.models[v];
        w.colors[static_cast<int>(v)] = colors[v];
    }
    w.fresh_vertex = static_cast<int>(rep.models.size());
    return w;
}

// ---------------------------------------------------------------------------
// Measure mu = leaf count + 2 (f_T + f_r + f_b).
// ---------------------------------------------------------------------------

struct MeasureParts {
    int leaves = 0, f_t = 0, f_r = 0, f_b = 0;
    int mu() const { return leaves + 2 * (f_t + f_r + f_b); }
};

/// Pairs of branching nodes joined by a path with no interior branching node.
inline std::vector<std::pair<int, int>> consecutive_branching_pairs(const HostTree& t) {
    std::set<std::pair<int, int>> pairs;
    for (int a : t.branching_nodes())
        for (int nb : t.adj.at(a)) {
            int prev = a, cur = nb;
            while (t.degree(cur) == 2) {
                int nxt = t.adj.at(cur)[0] == prev ? t.adj.at(cur)[1] : t.adj.at(cur)[0];
                prev = cur;
                cur = nxt;
            }
            if (t.degree(cur) >= 3) pairs.insert({std::min(a, cur), std::max(a, cur)});
        }
    return {pairs.begin(), pairs.end()};
}

inline MeasureParts measure_parts(const RbdsWork& w) {
    MeasureParts p;
    p.leaves = w.tree.leaf_count();
    for (int gamma : w.tree.branching_nodes()) {
        bool red = false, blue = false;
        for (auto& [v, m] : w.models)
            if (model_contains(m, gamma)) (w.colors.at(v) == Color::Red ? red : blue) = true;
        if (red && blue) ++p.f_t;
    }
    for (auto [a, b] : consecutive_branching_pairs(w.tree)) {
        bool red = false, blue = false;
        for (auto& [v, m] : w.models)
            if (model_contains(m, a) && model_contains(m, b))
                (w.colors.at(v) == Color::Red ? red : blue) = true;
        if (red) ++p.f_r;
        if (blue) ++p.f_b;
    }
    return p;
}

inline int measure(const RbdsWork& w) { return measure_parts(w).mu(); }

/// Restricted-instance invariants: every model meets at most one branching
/// node and every branching node is monochromatic.
inline bool is_restricted(const RbdsWork& w) {
    auto branching = w.tree.branching_nodes();
    for (auto& [v, m] : w.models) {
        int hits = 0;
        for (int b : branching)
            if (model_contains(m, b)) ++hits;
        if (hits > 1) return false;
    }
    for (int gamma : branching) {
        bool red = false, blue = false;
        for (auto& [v, m] : w.models)
            if (model_contains(m, gamma)) (w.colors.at(v) == Color::Red ? red : blue) = true;
        if (red && blue) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Branching into restricted instances (cases on f_T, f_r, f_b).
// ---------------------------------------------------------------------------

namespace rbds_detail {

inline bool model_touches(const Model& m, const std::vector<int>& nodes) {
    for (int a : nodes)
        if (model_contains(m, a)) return true;
    return false;
}

inline Model model_minus(const Model& m, const std::vector<int>& nodes) {
    Model out;
    for (int a : m)
        if (std::find(nodes.begin(), nodes.end(), a) == nodes.end()) out.push_back(a);
    return out;
}

inline void model_insert(Model& m, int node) {
    auto it = std::lower_bound(m.begin(), m.end(), node);
    if (it == m.end() || *it != node) m.insert(it, node);
}

/// Contracts the node path into a fresh node (tree surgery only; callers fix
/// the models). Returns the fresh node id.
inline int contract_path_nodes(HostTree& t, const std::vector<int>& path) {
    std::vector<int> outside;
    for (int a : path)
        for (int nb : t.adj.at(a))
            if (std::find(path.begin(), path.end(), nb) == path.end()) outside.push_back(nb);
    int merged = t.fresh_node();
    for (int a : path) t.remove_node(a);
    std::sort(outside.begin(), outside.end());
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
    for (int nb : outside) t.add_edge(merged, nb);
    if (std::find(path.begin(), path.end(), t.root) != path.end()) t.root = merged;
    return merged;
}

}  // namespace rbds_detail

/// Recursively applies the three branching cases until every produced
/// instance is restricted. Asserts that the measure strictly drops along
/// every branch. Branches that are trivially infeasible are dropped.
inline std::vector<RbdsWork> branch_to_restricted(const RbdsWork& inst) {
    using namespace rbds_detail;
    std::vector<RbdsWork> out;
    int initial_leaves = inst.tree.leaf_count();

    auto recurse = [&](auto&& self, const RbdsWork& w, int parent_mu) -> void {
        MeasureParts parts = measure_parts(w);
        if (parts.mu() >= parent_mu)
            throw std::logic_error("branch_to_restricted: measure failed to decrease");
        if (parts.f_t == 0 && parts.f_r == 0 && parts.f_b == 0) {
            if (!is_restricted(w))
                throw std::logic_error("branch_to_restricted: emitted instance not restricted");
            out.push_back(w);
            return;
        }
        if (parts.f_t > 0) {
            // Case I: a branching node gamma seen by both colors.
            int gamma = -1;
            for (int b : w.tree.branching_nodes()) {
                bool red = false, blue = false;
                for (auto& [v, m] : w.models)
                    if (model_contains(m, b)) (w.colors.at(v) == Color::Red ? red : blue) = true;
                if (red && blue) { gamma = b; break; }
            }
            {  // branch 1: some solution red contains gamma
                RbdsWork w1 = w;
                int delta = w1.tree.fresh_node();
                w1.tree.add_edge(gamma, delta);
                std::vector<int> to_delete;
                for (auto& [v, m] : w1.models) {
                    if (!model_contains(m, gamma)) continue;
                    if (w1.colors.at(v) == Color::Red) model_insert(m, delta);
                    else to_delete.push_back(v);
                }
                for (int v : to_delete) w1.erase_vertex(v);
                int x = w1.fresh_vertex++;
                w1.models[x] = {delta};
                w1.colors[x] = Color::Blue;
                self(self, w1, parts.mu());
            }
            {  // branch 2: no solution vertex contains gamma
                RbdsWork w2 = w;
                std::vector<int> to_delete;
                for (auto& [v, m] : w2.models)
                    if (w2.colors.at(v) == Color::Red && model_contains(m, gamma)) to_delete.push_back(v);
                for (int v : to_delete) w2.erase_vertex(v);
                self(self, w2, parts.mu());
            }
            return;
        }

        // pick the lexicographically first witnessed pair for cases II/III
        auto pick_pair = [&](Color c) -> std::vector<int> {
            for (auto [a, b] : consecutive_branching_pairs(w.tree)) {
                for (auto& [v, m] : w.models)
                    if (w.colors.at(v) == c && model_contains(m, a) && model_contains(m, b))
                        return w.tree.path(a, b);
            }
            return {};
        };

        if (parts.f_r > 0) {
            // Case II: a red model spans two consecutive branching nodes.
            std::vector<int> path = pick_pair(Color::Red);
            std::vector<int> spath = path;
            std::sort(spath.begin(), spath.end());
            {  // branch 1: some solution red contains the whole path
                RbdsWork w1 = w;
                int merged = contract_path_nodes(w1.tree, path);
                int delta = w1.tree.fresh_node();
                w1.tree.add_edge(merged, delta);
                std::vector<int> to_delete;
                for (auto& [v, m] : w1.models) {
                    if (!model_touches(m, path)) continue;
                    if (w1.colors.at(v) == Color::Red) {
                        bool full = std::includes(m.begin(), m.end(), spath.begin(), spath.end());
                        Model nm = model_minus(m, path);
                        model_insert(nm, merged);
                        if (full) model_insert(nm, delta);  // only whole-path reds may dominate x
                        m = std::move(nm);
                    } else {
                        to_delete.push_back(v);
                    }
                }
                for (int v : to_delete) w1.erase_vertex(v);
                int x = w1.fresh_vertex++;
                w1.models[x] = {delta};
                w1.colors[x] = Color::Blue;
                self(self, w1, parts.mu());
            }
            {  // branch 2: delete the whole-path reds
                RbdsWork w2 = w;
                std::vector<int> to_delete;
                for (auto& [v, m] : w2.models)
                    if (w2.colors.at(v) == Color::Red &&
                        std::includes(m.begin(), m.end(), spath.begin(), spath.end()))
                        to_delete.push_back(v);
                for (int v : to_delete) w2.erase_vertex(v);
                self(self, w2, parts.mu());
            }
            return;
        }

        // Case III: a blue model spans two consecutive branching nodes.
        std::vector<int> path = pick_pair(Color::Blue);
        std::vector<int> spath = path;
        std::sort(spath.begin(), spath.end());
        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        if (!interior.empty()) {
            // branch 1: some solution red lies strictly inside the path
            RbdsWork w1 = w;
            std::vector<int> to_delete;
            for (auto& [v, m] : w1.models)
                if (w1.colors.at(v) == Color::Blue &&
                    std::includes(m.begin(), m.end(), spath.begin(), spath.end()))
                    to_delete.push_back(v);
            for (int v : to_delete) w1.erase_vertex(v);
            int x = w1.fresh_vertex++;
            Model xm = interior;
            std::sort(xm.begin(), xm.end());
            w1.models[x] = std::move(xm);
            w1.colors[x] = Color::Blue;
            self(self, w1, parts.mu());
        }
        {
            // branch 2: no solution red inside the path. A blue confined to the
            // path is then undominatable: that subcase is a dead branch.
            bool dead = false;
            for (auto& [v, m] : w.models)
                if (w.colors.at(v) == Color::Blue &&
                    std::includes(spath.begin(), spath.end(), m.begin(), m.end()))
                    dead = true;
            if (!dead) {
                RbdsWork w2 = w;
                std::vector<int> red_delete;
                for (auto& [v, m] : w2.models) {
                    if (!model_touches(m, path)) continue;
                    if (w2.colors.at(v) == Color::Red) red_delete.push_back(v);  // interior-only models
                }
                int merged = contract_path_nodes(w2.tree, path);
                for (int v : red_delete) w2.erase_vertex(v);
                for (auto& [v, m] : w2.models) {
                    if (!model_touches(m, path)) continue;
                    Model nm = model_minus(m, path);
                    model_insert(nm, merged);
                    m = std::move(nm);
                }
                self(self, w2, parts.mu());
            }
        }
    };

    recurse(recurse, inst, measure(inst) + 1);
    if (6 * initial_leaves < 31 &&
        out.size() > (static_cast<size_t>(1) << (6 * initial_leaves)))
        throw std::logic_error("branch_to_restricted: branch bound exceeded");
    return out;
}

// ---------------------------------------------------------------------------
// Solving a restricted instance: reduction rules + greedy selections + the
// interval base case.
// ---------------------------------------------------------------------------

struct RestrictedOutcome {
    bool feasible = false;
    int spent = 0;
    std::vector<int> picks;
};

/// Observes rule firings (used by tests to oracle-check optimum preservation).
using RuleHook =
    std::function<void(const RbdsWork& before, const RbdsWork& after, int spent_delta, const char* rule)>;

namespace rbds_detail {

struct LegInfo {
    int child = -1;               // child node of alpha
    std::vector<int> leg_nodes;   // subtree below (and including) the child
};

inline std::vector<LegInfo> legs_of(const RbdsWork& w, const RootedTree& rt, int alpha) {
    std::vector<LegInfo> out;
    for (int nb : w.tree.adj.at(alpha)) {
        if (rt.parent.at(nb) != alpha) continue;  // only children
        LegInfo leg;
        leg.child = nb;
        leg.leg_nodes = rt.subtree(w.tree, nb);
        out.push_back(std::move(leg));
    }
    return out;
}

/// Topmost (closest to root) node of a model.
inline int top_node(const RootedTree& rt, const Model& m) {
    int best = m[0];
    for (int a : m)
        if (rt.depth.at(a) < rt.depth.at(best)) best = a;
    return best;
}

inline bool model_inside(const Model& m, const std::vector<int>& nodes) {
    for (int a : m)
        if (std::find(nodes.begin(), nodes.end(), a) == nodes.end()) return false;
    return true;
}

/// Exact left-to-right sweep for interval (path-tree) red-blue domination.
/// Returns nullopt when some blue has no red neighbor.
inline std::optional<std::vector<int>> interval_sweep(const RbdsWork& w,
                                                      const std::vector<int>& path_order,
                                                      const std::vector<int>& vertex_subset) {
    std::map<int, int> index;
    for (size_t i = 0; i < path_order.size(); ++i) index[path_order[i]] = static_cast<int>(i);
    struct IV { int v, l, r; };
    std::vector<IV> reds, blues;
    for (int v : vertex_subset) {
        int lo = static_cast<int>(path_order.size()), hi = -1;
        for (int a : w.models.at(v)) {
            auto it = index.find(a);
            if (it == index.end()) throw std::logic_error("interval_sweep: model leaves the path");
            lo = std::min(lo, it->second);
            hi = std::max(hi, it->second);
        }
        (w.colors.at(v) == Color::Red ? reds : blues).push_back({v, lo, hi});
    }
    std::sort(blues.begin(), blues.end(), [](const IV& a, const IV& b) {
        return a.r != b.r ? a.r < b.r : a.v < b.v;
    });
    std::vector<int> picks;
    std::vector<char> dominated(blues.size(), 0);
    for (size_t i = 0; i < blues.size(); ++i) {
        if (dominated[i]) continue;
        const IV* best = nullptr;
        for (auto& r : reds) {
            if (r.r < blues[i].l || r.l > blues[i].r) continue;  // disjoint
            if (!best || r.r > best->r || (r.r == best->r && r.v < best->v)) best = &r;
        }
        if (!best) return std::nullopt;
        picks.push_back(best->v);
        for (size_t j = 0; j < blues.size(); ++j)
            if (!dominated[j] && !(best->r < blues[j].l || best->l > blues[j].r)) dominated[j] = 1;
    }
    return picks;
}

}  // namespace rbds_detail

/// Applies RR1/RR2/RR3 and the plumbing rules exhaustively, restarting after
/// each change. Returns false when the instance is infeasible. Committed reds
/// from RR3 are appended to `picks`.
inline bool apply_reduction_rules(RbdsWork& w, std::vector<int>& picks, int& spent,
                                  const RuleHook& hook = nullptr) {
    using namespace rbds_detail;
    auto fire = [&](const RbdsWork& before, int delta, const char* rule) {
        if (hook) hook(before, w, delta, rule);
    };
    for (;;) {
        // RR1: a blue without red neighbors is undominatable.
        for (auto& [v, c] : w.colors) {
            if (c != Color::Blue) continue;
            bool has_red = false;
            for (auto& [u, cu] : w.colors)
                if (cu == Color::Red && w.adjacent(u, v)) { has_red = true; break; }
            if (!has_red) return false;
        }
        auto blues = w.blues();
        if (blues.empty()) return true;
        auto reds = w.reds();

        bool changed = false;
        // RR2 (blue): nested blue models, the superset is easier to dominate.
        for (size_t i = 0; i < blues.size() && !changed; ++i)
            for (size_t j = 0; j < blues.size() && !changed; ++j) {
                if (i == j) continue;
                if (model_subset(w.models.at(blues[i]), w.models.at(blues[j]))) {
                    RbdsWork before = w;
                    w.erase_vertex(blues[j]);
                    fire(before, 0, "rr2-blue");
                    changed = true;
                }
            }
        if (changed) continue;
        // RR2 (red): nested red models, the subset dominates fewer blues.
        for (size_t i = 0; i < reds.size() && !changed; ++i)
            for (size_t j = 0; j < reds.size() && !changed; ++j) {
                if (i == j) continue;
                if (model_subset(w.models.at(reds[i]), w.models.at(reds[j]))) {
                    RbdsWork before = w;
                    w.erase_vertex(reds[i]);
                    fire(before, 0, "rr2-red");
                    changed = true;
                }
            }
        if (changed) continue;
        // plumbing: a red with no blue neighbor never helps.
        for (int r : reds) {
            bool has_blue = false;
            for (int b : blues)
                if (w.adjacent(r, b)) { has_blue = true; break; }
            if (!has_blue) {
                RbdsWork before = w;
                w.erase_vertex(r);
                fire(before, 0, "drop-useless-red");
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // plumbing: drop empty tree nodes of degree <= 2 (no model is touched).
        if (w.tree.num_nodes() > 1) {
            for (int a : w.tree.node_ids()) {
                if (w.tree.degree(a) > 2 || !w.ver(a).empty()) continue;
                RbdsWork before = w;
                auto nbs = w.tree.adj.at(a);
                w.tree.remove_node(a);
                if (nbs.size() == 2) w.tree.add_edge(nbs[0], nbs[1]);
                if (w.tree.root == a) w.tree.root = nbs[0];
                fire(before, 0, "contract-empty-node");
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // plumbing: truncate a leaf whose occupants are monochromatic. Every
        // red-blue adjacency has a witness node inside the blue model, so the
        // adjacency relation between reds and blues is preserved exactly.
        if (w.tree.num_nodes() > 1) {
            for (int a : w.tree.node_ids()) {
                if (w.tree.degree(a) != 1) continue;
                auto occupants = w.ver(a);
                if (occupants.empty()) continue;  // handled above
                bool any_red = false, any_blue = false;
                for (int v : occupants)
                    (w.colors.at(v) == Color::Red ? any_red : any_blue) = true;
                if (any_red && any_blue) continue;
                RbdsWork before = w;
                std::vector<int> emptied;
                for (int v : occupants) {
                    auto& m = w.models.at(v);
                    m.erase(std::find(m.begin(), m.end(), a));
                    if (m.empty()) emptied.push_back(v);
                }
                for (int v : emptied) w.erase_vertex(v);  // reds whose model was only this leaf
                int nb = w.tree.adj.at(a)[0];
                w.tree.remove_node(a);
                if (w.tree.root == a) w.tree.root = nb;
                fire(before, 0, "truncate-monochromatic-leaf");
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // RR3: per child leg of the deepest branching node, the deepest blue
        // confined to the leg must be dominated from within the leg when it
        // has no red alpha-neighbor; committing its highest-reaching red
        // neighbor is optimal.
        auto branching = w.tree.branching_nodes();
        if (!branching.empty()) {
            RootedTree rt(w.tree);
            int alpha = branching[0];
            for (int b : branching)
                if (rt.depth.at(b) > rt.depth.at(alpha) ||
                    (rt.depth.at(b) == rt.depth.at(alpha) && b < alpha))
                    alpha = b;
            auto alpha_reds = [&] {
                std::vector<int> out;
                for (int r : w.reds())
                    if (model_contains(w.models.at(r), alpha)) out.push_back(r);
                return out;
            }();
            for (auto& leg : legs_of(w, rt, alpha)) {
                int deepest = -1;
                for (int b : w.blues())
                    if (model_inside(w.models.at(b), leg.leg_nodes)) {
                        if (deepest == -1) deepest = b;
                        else {
                            int db = rt.depth.at(top_node(rt, w.models.at(b)));
                            int dd = rt.depth.at(top_node(rt, w.models.at(deepest)));
                            if (db > dd || (db == dd && b < deepest)) deepest = b;
                        }
                    }
                if (deepest == -1) continue;
                bool touched_by_alpha_red = false;
                for (int r : alpha_reds)
                    if (w.adjacent(r, deepest)) { touched_by_alpha_red = true; break; }
                if (touched_by_alpha_red) continue;
                int vr = -1;
                for (int r : w.reds()) {
                    if (!w.adjacent(r, deepest)) continue;
                    if (vr == -1) { vr = r; continue; }
                    int dr = rt.depth.at(top_node(rt, w.models.at(r)));
                    int dv = rt.depth.at(top_node(rt, w.models.at(vr)));
                    if (dr < dv || (dr == dv && r < vr)) vr = r;
                }
                if (vr == -1) return false;  // RR1 would have fired; defensive
                RbdsWork before = w;
                std::vector<int> gone;
                for (int b : w.blues())
                    if (w.adjacent(vr, b)) gone.push_back(b);
                for (int b : gone) w.erase_vertex(b);
                w.erase_vertex(vr);
                picks.push_back(vr);
                spent += 1;
                fire(before, 1, "rr3-greedy-red");
                changed = true;
                break;
            }
        }
        if (changed) continue;
        return true;
    }
}

/// Solves a restricted instance exactly: rule fixpoint, then greedy selection
/// at the deepest branching node (set cover when its vertices are red,
/// hitting set when blue), bottoming out in the interval sweep.
inline RestrictedOutcome solve_restricted(RbdsWork w, const RuleHook& hook = nullptr) {
    using namespace rbds_detail;
    RestrictedOutcome res;
    int guard = static_cast<int>(w.models.size() + w.tree.num_nodes()) * 4 + 16;
    for (int rounds = 0;; ++rounds) {
        if (rounds > guard) throw std::logic_error("solve_restricted: no progress");
        if (!apply_reduction_rules(w, res.picks, res.spent, hook)) return res;  // infeasible
        if (w.blues().empty()) {
            res.feasible = true;
            return res;
        }
        auto branching = w.tree.branching_nodes();
        if (branching.empty()) {
            auto path_nodes = [&] {
                auto ids = w.tree.node_ids();
                if (ids.size() == 1) return ids;
                int start = -1;
                for (int a : ids)
                    if (w.tree.degree(a) <= 1 && (start == -1 || a < start)) start = a;
                std::vector<int> order{start};
                int prev = -1, cur = start;
                while (true) {
                    int nxt = -1;
                    for (int nb : w.tree.adj.at(cur))
                        if (nb != prev) { nxt = nb; break; }
                    if (nxt == -1) break;
                    order.push_back(nxt);
                    prev = cur;
                    cur = nxt;
                }
                return order;
            }();
            auto picks = interval_sweep(w, path_nodes, w.vertices());
            if (!picks) return res;  // defensive: RR1 should have caught it
            res.picks.insert(res.picks.end(), picks->begin(), picks->end());
            res.spent += static_cast<int>(picks->size());
            res.feasible = true;
            return res;
        }

        RootedTree rt(w.tree);
        int alpha = branching[0];
        for (int b : branching)
            if (rt.depth.at(b) > rt.depth.at(alpha) ||
                (rt.depth.at(b) == rt.depth.at(alpha) && b < alpha))
                alpha = b;
        auto alpha_vertices = w.ver(alpha);

        if (alpha_vertices.empty()) {
            // The legs below alpha carry mutually independent interval
            // instances (no model crosses an empty node): solve each directly.
            auto legs = legs_of(w, rt, alpha);
            for (auto& leg : legs) {
                std::vector<int> leg_vertices;
                for (auto& [v, m] : w.models)
                    if (model_touches(m, leg.leg_nodes)) {
                        if (!model_inside(m, leg.leg_nodes))
                            throw std::logic_error("empty-branching leg: model escapes the leg");
                        leg_vertices.push_back(v);
                    }
                if (leg_vertices.empty()) continue;
                std::vector<int> order;  // child downward; the leg is a path
                int prev = alpha, cur = leg.child;
                order.push_back(cur);
                while (true) {
                    int nxt = -1;
                    for (int nb : w.tree.adj.at(cur))
                        if (nb != prev) { nxt = nb; break; }
                    if (nxt == -1) break;
                    order.push_back(nxt);
                    prev = cur;
                    cur = nxt;
                }
                auto picks = interval_sweep(w, order, leg_vertices);
                if (!picks) return res;
                res.picks.insert(res.picks.end(), picks->begin(), picks->end());
                res.spent += static_cast<int>(picks->size());
                for (int v : leg_vertices) w.erase_vertex(v);
            }
            continue;
        }

        bool alpha_red = w.colors.at(alpha_vertices[0]) == Color::Red;
        for (int v : alpha_vertices)
            if ((w.colors.at(v) == Color::Red) != alpha_red)
                throw std::logic_error("restricted invariant broken: bichromatic branching node");

        // path from alpha to its nearest branching ancestor (or the root)
        std::vector<int> up_path{alpha};
        {
            int cur = alpha;
            while (rt.parent.at(cur) != cur) {
                cur = rt.parent.at(cur);
                up_path.push_back(cur);
                if (w.tree.degree(cur) >= 3) break;
            }
        }

        auto legs = legs_of(w, rt, alpha);
        if (alpha_red) {
            // Greedy Select 1 via set cover over red alpha-vertices.
            struct LegBlue { int leg_index, blue; };
            std::vector<LegBlue> leg_blues;
            for (size_t li = 0; li < legs.size(); ++li) {
                int deepest = -1;
                for (int b : w.blues())
                    if (model_inside(w.models.at(b), legs[li].leg_nodes)) {
                        if (deepest == -1) deepest = b;
                        else {
                            int db = rt.depth.at(top_node(rt, w.models.at(b)));
                            int dd = rt.depth.at(top_node(rt, w.models.at(deepest)));
                            if (db > dd || (db == dd && b < deepest)) deepest = b;
                        }
                    }
                if (deepest != -1) leg_blues.push_back({static_cast<int>(li), deepest});
            }
            // blues meeting the alpha-beta path, ordered with the deepest
            // path-endpoint first
            struct PathBlue { int v, bot_depth; };
            std::vector<PathBlue> path_blues;
            for (int b : w.blues()) {
                int bot = -1;
                for (int a : up_path)
                    if (model_contains(w.models.at(b), a))
                        if (bot == -1 || rt.depth.at(a) > rt.depth.at(bot)) bot = a;
                if (bot != -1) path_blues.push_back({b, rt.depth.at(bot)});
            }
            std::sort(path_blues.begin(), path_blues.end(), [](const PathBlue& a, const PathBlue& b) {
                return a.bot_depth != b.bot_depth ? a.bot_depth > b.bot_depth : a.v < b.v;
            });

            std::vector<int> alpha_reds;
            for (int r : w.reds())
                if (model_contains(w.models.at(r), alpha)) alpha_reds.push_back(r);
            int base_elems = static_cast<int>(leg_blues.size());
            if (base_elems + 1 > 30) throw std::logic_error("greedy select 1: universe too large");

            std::vector<uint32_t> base_family(alpha_reds.size(), 0);
            for (size_t ri = 0; ri < alpha_reds.size(); ++ri)
                for (int e = 0; e < base_elems; ++e)
                    if (w.adjacent(alpha_reds[ri], leg_blues[e].blue))
                        base_family[ri] |= uint32_t(1) << e;

            int d = static_cast<int>(path_blues.size());
            std::vector<std::optional<CoverResult>> opts(d + 1);
            opts[0] = set_cover_exact(base_elems, base_family);
            for (int i = 1; i <= d; ++i) {
                std::vector<uint32_t> fam = base_family;
                for (size_t ri = 0; ri < alpha_reds.size(); ++ri)
                    if (w.adjacent(alpha_reds[ri], path_blues[i - 1].v))
                        fam[ri] |= uint32_t(1) << base_elems;
                opts[i] = set_cover_exact(base_elems + 1, fam);
            }
            if (!opts[0]) return res;  // legs uncoverable: infeasible (defensive)
            int q = 0;
            for (int i = 1; i <= d; ++i)
                if (opts[i] && opts[i]->size == opts[0]->size) q = i;
            RbdsWork before = w;
            std::vector<int> chosen;
            for (int idx : opts[q]->chosen) chosen.push_back(alpha_reds[idx]);
            std::vector<int> gone;
            for (int b : w.blues())
                for (int r : chosen)
                    if (w.adjacent(r, b)) { gone.push_back(b); break; }
            for (int b : gone) w.erase_vertex(b);
            for (int r : chosen) w.erase_vertex(r);
            res.picks.insert(res.picks.end(), chosen.begin(), chosen.end());
            res.spent += static_cast<int>(chosen.size());
            if (hook) hook(before, w, static_cast<int>(chosen.size()), "greedy-select-red");
            if (chosen.empty() && leg_blues.empty())
                throw std::logic_error("greedy select 1: no progress");
        } else {
            // Greedy Select 2 via hitting set over per-leg critical reds.
            std::vector<int> inter_blue;  // all of them contain alpha here
            for (int b : w.blues())
                if (model_touches(w.models.at(b), rt.subtree(w.tree, alpha))) inter_blue.push_back(b);
            for (int b : inter_blue)
                if (!model_contains(w.models.at(b), alpha))
                    throw std::logic_error("greedy select 2: blue below alpha survived the rules");

            std::vector<int> below_reds;
            for (int r : w.reds()) {
                bool below = false;
                for (auto& leg : legs)
                    if (model_inside(w.models.at(r), leg.leg_nodes)) { below = true; break; }
                if (below) below_reds.push_back(r);
            }
            std::vector<int> critical;  // per leg, the red reaching closest to alpha
            for (auto& leg : legs) {
                int best = -1;
                for (int r : below_reds) {
                    if (!model_inside(w.models.at(r), leg.leg_nodes)) continue;
                    if (best == -1) { best = r; continue; }
                    int dr = rt.depth.at(top_node(rt, w.models.at(r)));
                    int db = rt.depth.at(top_node(rt, w.models.at(best)));
                    if (dr < db || (dr == db && r < best)) best = r;
                }
                if (best != -1) critical.push_back(best);
            }
            if (static_cast<int>(critical.size()) > 30)
                throw std::logic_error("greedy select 2: universe too large");

            // reds meeting the alpha-beta path, deepest path-endpoint first
            struct PathRed { int v, bot_depth; };
            std::vector<PathRed> path_reds;
            for (int r : w.reds()) {
                int bot = -1;
                for (int a : up_path)
                    if (model_contains(w.models.at(r), a))
                        if (bot == -1 || rt.depth.at(a) > rt.depth.at(bot)) bot = a;
                if (bot != -1) path_reds.push_back({r, rt.depth.at(bot)});
            }
            std::sort(path_reds.begin(), path_reds.end(), [](const PathRed& a, const PathRed& b) {
                return a.bot_depth != b.bot_depth ? a.bot_depth > b.bot_depth : a.v < b.v;
            });
            int d = static_cast<int>(path_reds.size());

            auto solve_inst = [&](const std::vector<int>& target_blues) -> std::optional<CoverResult> {
                std::vector<uint32_t> sets;
                for (int b : target_blues) {
                    uint32_t mask = 0;
                    for (size_t ci = 0; ci < critical.size(); ++ci)
                        if (w.adjacent(critical[ci], b)) mask |= uint32_t(1) << ci;
                    if (mask == 0) return std::nullopt;
                    sets.push_back(mask);
                }
                return hitting_set_exact(static_cast<int>(critical.size()), sets);
            };

            std::optional<CoverResult> opt_q;
            if (d == 0) {
                opt_q = solve_inst(inter_blue);
                if (!opt_q) return res;  // alpha-blues undominatable from below and no path reds
            } else {
                std::vector<std::optional<CoverResult>> opts(d + 2);
                for (int i = 1; i <= d; ++i) {
                    std::vector<int> target;
                    for (int b : inter_blue)
                        if (!w.adjacent(path_reds[i - 1].v, b)) target.push_back(b);
                    opts[i] = solve_inst(target);
                }
                opts[d + 1] = solve_inst(inter_blue);
                if (!opts[1]) return res;  // even the deepest-reaching path red cannot be completed
                int q = 1;
                for (int i = 2; i <= d + 1; ++i)
                    if (opts[i] && opts[i]->size == opts[1]->size) q = i;
                opt_q = opts[q];
            }
            RbdsWork before = w;
            std::vector<int> chosen;
            for (int idx : opt_q->chosen) chosen.push_back(critical[idx]);
            std::vector<int> gone;
            for (int b : w.blues())
                for (int r : chosen)
                    if (w.adjacent(r, b)) { gone.push_back(b); break; }
            for (int b : gone) w.erase_vertex(b);
            // the structural lemma pins the below-alpha part of some optimum
            // to exactly the chosen set, so the rest of it is deletable
            for (int r : below_reds) w.erase_vertex(r);
            res.picks.insert(res.picks.end(), chosen.begin(), chosen.end());
            res.spent += static_cast<int>(chosen.size());
            if (hook) hook(before, w, static_cast<int>(chosen.size()), "greedy-select-blue");
            if (below_reds.empty()) throw std::logic_error("greedy select 2: no progress");
        }
    }
}

// ---------------------------------------------------------------------------
// Full solver and the DomSet reduction.
// ---------------------------------------------------------------------------

struct RbdsSolution {
    int optimum = 0;
    std::vector<int> witness;
};

/// Exact optimum (any budget) with a verified witness, or nullopt when no red
/// set dominates the blues. Compare to a budget at the call site.
inline std::optional<RbdsSolution> solve_rbds(const RbdsInstance& inst, const RuleHook& hook = nullptr) {
    RbdsWork root = make_work(inst.rep, inst.colors);
    auto branches = branch_to_restricted(root);
    std::optional<RbdsSolution> best;
    for (auto& branch : branches) {
        auto out = solve_restricted(branch, hook);
        if (!out.feasible) continue;
        if (!best || out.spent < best->optimum) best = RbdsSolution{out.spent, out.picks};
    }
    if (!best) return std::nullopt;
    // verify against the original instance
    std::sort(best->witness.begin(), best->witness.end());
    if (static_cast<int>(best->witness.size()) != best->optimum)
        throw std::logic_error("solve_rbds: witness size mismatch");
    for (int r : best->witness)
        if (inst.colors[r] != Color::Red) throw std::logic_error("solve_rbds: witness not red");
    for (int v = 0; v < inst.g.num_vertices(); ++v) {
        if (inst.colors[v] != Color::Blue) continue;
        bool covered = false;
        for (int r : best->witness)
            if (inst.g.has_edge(r, v)) { covered = true; break; }
        if (!covered) throw std::logic_error("solve_rbds: witness leaves a blue undominated");
    }
    return best;
}

/// DomSet -> Red-Blue DomSet: two copies per vertex, blue copies keep the
/// original models, red copies duplicate them; the leaf count is unchanged.
inline RbdsInstance ds_to_rbds(const Graph& g, const TreeRepresentation& tr) {
    int n = g.num_vertices();
    RbdsInstance out;
    out.g = Graph(2 * n);
    for (int v = 0; v < n; ++v) out.g.add_edge(v, n + v);
    for (auto& [u, v] : g.edges()) {
        out.g.add_edge(u, v);
        out.g.add_edge(u, n + v);
        out.g.add_edge(n + u, v);
        out.g.add_edge(n + u, n + v);
    }
    out.rep.tree = tr.tree;
    out.rep.models.resize(2 * n);
    for (int v = 0; v < n; ++v) {
        out.rep.models[v] = tr.models[v];
        out.rep.models[n + v] = tr.models[v];
    }
    out.colors.assign(2 * n, Color::Blue);
    for (int v = n; v < 2 * n; ++v) out.colors[v] = Color::Red;
    return out;
}

/// Minimum dominating set through the red-blue pipeline.
inline std::optional<RbdsSolution> solve_ds(const Graph& g, const TreeRepresentation& tr) {
    auto inst = ds_to_rbds(g, tr);
    auto sol = solve_rbds(inst);
    if (!sol) return std::nullopt;
    for (int& v : sol->witness) v -= g.num_vertices();
    // re-verify as a dominating set
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool dom = false;
        for (int r : sol->witness)
            if (r == v || g.has_edge(r, v)) { dom = true; break; }
        if (!dom) throw std::logic_error("solve_ds: witness not dominating");
    }
    return sol;
}

}  // namespace chordalkit
