#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chordalkit/rbds.hpp"
#include "chordalkit/tree_representation.hpp"

namespace chordalkit {

constexpr long long kDpInf = LLONG_MAX / 4;

inline long long dp_add(long long a, long long b) {
    return (a >= kDpInf || b >= kDpInf) ? kDpInf : a + b;
}

/// Blue/red/all vertex classes of a tree node, as used by the table updates.
struct VertexClasses {
    std::vector<int> interB, interR, interV;
    std::vector<int> belowB, belowR, belowV;
    std::vector<int> underB, underR, underV;
    std::vector<int> containB, containR, containV;
};

/// The n^{O(ell)} dynamic program over tables T1/T2 for Red-Blue Dominating
/// Set on H_ell-induced-subgraph-free chordal graphs. Callers assert (or
/// check at desk scale) the H_ell-freeness; the tables are exposed so the
/// per-entry semantics can be tested directly.
class HfreeDp {
public:
    HfreeDp(const RbdsInstance& inst, int ell, int partition_cap = 16)
        : g_(inst.g), colors_(inst.colors), ell_(ell), cap_(partition_cap) {
        if (ell < 1) throw std::invalid_argument("HfreeDp: ell must be positive");
        tree_ = inst.rep.tree;
        models_ = inst.rep.models;
        root_ = tree_.fresh_node();  // added root, contained in no model
        tree_.add_edge(root_, inst.rep.tree.root);
        tree_.root = root_;
        rt_.emplace(tree_);
        for (int a : tree_.node_ids()) classes_[a] = classify(a);
        for (int a : rt_->bfs_order) {
            std::vector<int> kids;
            for (int nb : tree_.adj.at(a))
                if (rt_->parent.at(nb) == a && nb != a) kids.push_back(nb);
            children_[a] = std::move(kids);
        }
    }

    void run() {
        auto order = rt_->bfs_order;
        std::reverse(order.begin(), order.end());  // children before parents
        for (int a : order) {
            if (children_.at(a).empty()) fill_leaf(a);
            else fill_internal(a);
        }
    }

    long long answer() const { return t2_.at(root_).at({}); }

    long long t1(int node, const std::vector<int>& key) const {
        auto& tab = t1_.at(node);
        auto it = tab.find(key);
        return it == tab.end() ? kDpInf : it->second;
    }
    long long t2(int node, const std::vector<int>& key) const {
        auto& tab = t2_.at(node);
        auto it = tab.find(key);
        return it == tab.end() ? kDpInf : it->second;
    }

    const VertexClasses& classes(int node) const { return classes_.at(node); }
    int added_root() const { return root_; }
    std::vector<int> nodes() const { return tree_.node_ids(); }

    VertexClasses classify(int node) const {
        VertexClasses c;
        auto sub = rt_->subtree(tree_, node);
        std::vector<int> sorted_sub = sub;
        std::sort(sorted_sub.begin(), sorted_sub.end());
        for (int v = 0; v < static_cast<int>(models_.size()); ++v) {
            bool inter = false, below = true, contain = model_contains(models_[v], node);
            for (int a : models_[v]) {
                bool inside = std::binary_search(sorted_sub.begin(), sorted_sub.end(), a);
                inter |= inside;
                below &= inside;
            }
            if (!inter) continue;
            bool red = colors_[v] == Color::Red;
            c.interV.push_back(v);
            (red ? c.interR : c.interB).push_back(v);
            if (below) {
                c.belowV.push_back(v);
                (red ? c.belowR : c.belowB).push_back(v);
                if (!contain) {
                    c.underV.push_back(v);
                    (red ? c.underR : c.underB).push_back(v);
                }
            }
            if (contain) {
                c.containV.push_back(v);
                (red ? c.containR : c.containB).push_back(v);
            }
        }
        return c;
    }

private:
    template <typename Fn>
    void for_subsets(const std::vector<int>& pool, int lo, int hi, Fn&& fn) const {
        std::vector<int> cur;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (static_cast<int>(cur.size()) >= lo) fn(cur);
            if (static_cast<int>(cur.size()) == hi) return;
            for (size_t i = start; i < pool.size(); ++i) {
                cur.push_back(pool[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }

    static std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        for (int x : a)
            if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
        return out;
    }

    bool dominates(const std::vector<int>& zs, const std::vector<int>& targets) const {
        for (int b : targets) {
            bool hit = false;
            for (int z : zs)
                if (g_.has_edge(z, b)) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    }

    void fill_leaf(int a) {
        t2_[a][{}] = 0;
        auto& cls = classes_.at(a);
        for_subsets(cls.containR, 1, ell_, [&](const std::vector<int>& x) {
            t1_[a][x] = static_cast<long long>(x.size());
        });
        t1_[a];  // ensure presence
    }

    /// min over nonempty Z subseteq containR(beta) \ containR(alpha) of T1[beta, Z]
    /// and min over Z in Y_i (optionally with extra demanded blues) of T2[beta, Z].
    long long child_min1(int alpha, int beta) const {
        auto pool = set_minus(classes_.at(beta).containR, classes_.at(alpha).containR);
        long long best = kDpInf;
        for_subsets(pool, 1, ell_, [&](const std::vector<int>& z) {
            best = std::min(best, t1(beta, z));
        });
        return best;
    }
    long long child_min2(int alpha, int beta, const std::vector<int>& extra_demand) const {
        auto pinned = set_minus(classes_.at(beta).containB, classes_.at(alpha).containB);
        std::vector<int> demand = pinned;
        demand.insert(demand.end(), extra_demand.begin(), extra_demand.end());
        long long best = kDpInf;
        for_subsets(classes_.at(beta).underR, 0, ell_, [&](const std::vector<int>& z) {
            if (!dominates(z, demand)) return;
            best = std::min(best, t2(beta, z));
        });
        return best;
    }

    void fill_internal(int a) {
        auto& cls = classes_.at(a);
        auto& kids = children_.at(a);

        // per-child minima that do not depend on the key
        std::map<int, long long> base_min;
        for (int b : kids) base_min[b] = std::min(child_min1(a, b), child_min2(a, b, {}));

        // ------ T1 ------
        for_subsets(cls.containR, 1, ell_, [&](const std::vector<int>& x) {
            long long total = static_cast<long long>(x.size());
            for (int b : kids) {
                std::vector<int> xi;
                for (int v : x)
                    if (std::find(classes_.at(b).containR.begin(), classes_.at(b).containR.end(), v) !=
                        classes_.at(b).containR.end())
                        xi.push_back(v);
                if (!xi.empty()) {
                    auto pool = set_minus(classes_.at(b).containR, cls.containR);
                    long long mi = kDpInf;
                    for_subsets(pool, 0, ell_ - static_cast<int>(xi.size()),
                                [&](const std::vector<int>& z) {
                                    std::vector<int> key = xi;
                                    key.insert(key.end(), z.begin(), z.end());
                                    std::sort(key.begin(), key.end());
                                    mi = std::min(mi, t1(b, key));
                                });
                    total = dp_add(total, mi >= kDpInf ? kDpInf : mi - static_cast<long long>(xi.size()));
                } else {
                    total = dp_add(total, base_min.at(b));
                }
            }
            t1_[a][x] = total;
        });
        t1_[a];

        // ------ T2 ------
        // The demand (alpha-blues adjacent to Y) is split over the children:
        // a demanded blue may be served from any child subtree its own model
        // dips into, since the serving red lies strictly below alpha.
        for_subsets(cls.underR, 0, ell_, [&](const std::vector<int>& y) {
            std::vector<int> demand;
            for (int b : cls.containB) {
                bool adj = false;
                for (int v : y)
                    if (g_.has_edge(v, b)) { adj = true; break; }
                if (adj) demand.push_back(b);
            }
            if (static_cast<int>(demand.size()) > cap_)
                throw std::runtime_error("HfreeDp: partition enumeration above the configured cap");

            std::vector<std::vector<int>> allowed(demand.size());
            bool stuck = false;
            for (size_t di = 0; di < demand.size(); ++di) {
                for (size_t ki = 0; ki < kids.size(); ++ki) {
                    auto& cb = classes_.at(kids[ki]).containB;
                    if (std::find(cb.begin(), cb.end(), demand[di]) != cb.end())
                        allowed[di].push_back(static_cast<int>(ki));
                }
                if (allowed[di].empty()) stuck = true;
            }
            if (stuck) {
                t2_[a][y] = kDpInf;
                return;
            }
            std::map<std::pair<int, uint32_t>, long long> m2_memo;
            auto m2_for = [&](int ki, uint32_t mask) {
                auto key = std::make_pair(ki, mask);
                auto it = m2_memo.find(key);
                if (it != m2_memo.end()) return it->second;
                std::vector<int> extra;
                for (size_t di = 0; di < demand.size(); ++di)
                    if (mask >> di & 1) extra.push_back(demand[di]);
                long long v = child_min2(a, kids[ki], extra);
                m2_memo[key] = v;
                return v;
            };
            std::vector<uint32_t> masks(kids.size(), 0);
            long long best = kDpInf;
            auto assign = [&](auto&& self, size_t di) -> void {
                if (di == demand.size()) {
                    long long total = 0;
                    for (size_t ki = 0; ki < kids.size(); ++ki) {
                        long long contrib =
                            masks[ki] == 0
                                ? base_min.at(kids[ki])
                                : std::min(child_min1(a, kids[ki]),
                                           m2_for(static_cast<int>(ki), masks[ki]));
                        total = dp_add(total, contrib);
                    }
                    best = std::min(best, total);
                    return;
                }
                for (int ki : allowed[di]) {
                    masks[ki] |= uint32_t(1) << di;
                    self(self, di + 1);
                    masks[ki] &= ~(uint32_t(1) << di);
                }
            };
            assign(assign, 0);
            t2_[a][y] = best;
        });
        t2_[a];
    }

    Graph g_;
    std::vector<Color> colors_;
    int ell_;
    int cap_;
    HostTree tree_;
    std::vector<Model> models_;
    int root_ = -1;
    std::optional<RootedTree> rt_;
    std::map<int, VertexClasses> classes_;
    std::map<int, std::vector<int>> children_;
    std::map<int, std::map<std::vector<int>, long long>> t1_, t2_;
};

/// Optimum red-blue domination size on an H_ell-free chordal instance, or
/// nullopt when no red set dominates the blues.
inline std::optional<int> solve_rbds_hfree(const RbdsInstance& inst, int ell,
                                           int partition_cap = 16) {
    HfreeDp dp(inst, ell, partition_cap);
    dp.run();
    long long ans = dp.answer();
    if (ans >= kDpInf) return std::nullopt;
    return static_cast<int>(ans);
}

}  // namespace chordalkit
