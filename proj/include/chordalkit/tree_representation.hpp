#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordalkit/graph.hpp"

namespace chordalkit {

/// Host tree of a tree representation. Node identifiers are arbitrary
/// non-negative ints and stay stable under surgery; contraction and
/// subdivision mint fresh identifiers via `fresh_node`.
struct HostTree {
    std::map<int, std::vector<int>> adj;  // node -> sorted neighbor list
    int root = -1;
    int next_id = 0;

    bool has_node(int a) const { return adj.count(a) != 0; }

    int fresh_node() {
        int id = next_id++;
        adj[id];
        return id;
    }

    void add_node(int a) {
        adj[a];
        next_id = std::max(next_id, a + 1);
    }

    void add_edge(int a, int b) {
        if (!has_node(a) || !has_node(b)) throw std::invalid_argument("HostTree: unknown node");
        auto& na = adj[a];
        auto& nb = adj[b];
        na.insert(std::lower_bound(na.begin(), na.end(), b), b);
        nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    }

    void remove_edge(int a, int b) {
        auto& na = adj[a];
        auto& nb = adj[b];
        na.erase(std::find(na.begin(), na.end(), b));
        nb.erase(std::find(nb.begin(), nb.end(), a));
    }

    void remove_node(int a) {
        for (int b : adj[a]) {
            auto& nb = adj[b];
            nb.erase(std::find(nb.begin(), nb.end(), a));
        }
        adj.erase(a);
    }

    int degree(int a) const { return static_cast<int>(adj.at(a).size()); }
    size_t num_nodes() const { return adj.size(); }

    std::vector<int> node_ids() const {
        std::vector<int> out;
        out.reserve(adj.size());
        for (auto& [id, _] : adj) out.push_back(id);
        return out;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (auto& [a, ns] : adj)
            for (int b : ns)
                if (a < b) out.emplace_back(a, b);
        return out;
    }

    int leaf_count() const {
        int c = 0;
        for (auto& [a, ns] : adj)
            if (ns.size() <= 1) ++c;
        return c;
    }

    std::vector<int> branching_nodes() const {
        std::vector<int> out;
        for (auto& [a, ns] : adj)
            if (ns.size() >= 3) out.push_back(a);
        return out;
    }

    bool is_tree() const {
        if (adj.empty()) return false;
        size_t edge_count = 0;
        for (auto& [a, ns] : adj) edge_count += ns.size();
        edge_count /= 2;
        if (edge_count != adj.size() - 1) return false;
        // connectivity
        std::set<int> seen;
        std::vector<int> stack{adj.begin()->first};
        seen.insert(stack[0]);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj.at(v))
                if (seen.insert(u).second) stack.push_back(u);
        }
        return seen.size() == adj.size();
    }

    /// Unique path between two nodes, endpoints included.
    std::vector<int> path(int a, int b) const {
        std::map<int, int> par;
        std::vector<int> stack{a};
        par[a] = a;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == b) break;
            for (int u : adj.at(v))
                if (!par.count(u)) {
                    par[u] = v;
                    stack.push_back(u);
                }
        }
        std::vector<int> out;
        for (int v = b;; v = par.at(v)) {
            out.push_back(v);
            if (v == a) break;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

/// Rooted view: parents, depths and a bottom-up order, computed once per use.
struct RootedTree {
    std::map<int, int> parent;  // root maps to itself
    std::map<int, int> depth;
    std::vector<int> bfs_order;  // root first

    explicit RootedTree(const HostTree& t) : RootedTree(t, t.root) {}

    RootedTree(const HostTree& t, int root) {
        if (!t.has_node(root)) throw std::invalid_argument("RootedTree: bad root");
        parent[root] = root;
        depth[root] = 0;
        std::vector<int> queue{root};
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            bfs_order.push_back(v);
            for (int u : t.adj.at(v))
                if (!parent.count(u)) {
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                }
        }
    }

    /// Nodes of the subtree rooted at a, in BFS order.
    std::vector<int> subtree(const HostTree& t, int a) const {
        std::vector<int> out{a};
        for (size_t i = 0; i < out.size(); ++i)
            for (int u : t.adj.at(out[i]))
                if (parent.at(u) == out[i] && u != out[i]) out.push_back(u);
        return out;
    }
};

using Model = std::vector<int>;  // sorted node ids, nonempty, induces a subtree

inline bool models_intersect(const Model& a, const Model& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

inline bool model_contains(const Model& m, int node) {
    return std::binary_search(m.begin(), m.end(), node);
}

inline bool model_subset(const Model& a, const Model& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Tree representation of a graph: host tree plus one model per vertex.
/// Vertices are the dense ids of the accompanying Graph.
struct TreeRepresentation {
    HostTree tree;
    std::vector<Model> models;  // indexed by graph vertex

    /// ver(node): vertices whose model contains the node.
    std::vector<int> ver_node(int node) const {
        std::vector<int> out;
        for (size_t v = 0; v < models.size(); ++v)
            if (model_contains(models[v], node)) out.push_back(static_cast<int>(v));
        return out;
    }

    /// ver(edge ab): vertices whose model contains both endpoints.
    std::vector<int> ver_edge(int a, int b) const {
        std::vector<int> out;
        for (size_t v = 0; v < models.size(); ++v)
            if (model_contains(models[v], a) && model_contains(models[v], b))
                out.push_back(static_cast<int>(v));
        return out;
    }

    /// Number of leaves of the host tree; an upper bound on the leafage, not
    /// the exact leafage.
    int leafage_upper_bound() const { return tree.leaf_count(); }

    /// The intersection graph the representation defines.
    Graph intersection_graph() const {
        Graph g(static_cast<int>(models.size()));
        for (size_t u = 0; u < models.size(); ++u)
            for (size_t v = u + 1; v < models.size(); ++v)
                if (models_intersect(models[u], models[v]))
                    g.add_edge(static_cast<int>(u), static_cast<int>(v));
        return g;
    }
};

inline bool model_is_subtree(const HostTree& t, const Model& m) {
    if (m.empty()) return false;
    for (int a : m)
        if (!t.has_node(a)) return false;
    std::set<int> inside(m.begin(), m.end());
    std::set<int> seen;
    std::vector<int> stack{m[0]};
    seen.insert(m[0]);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : t.adj.at(v))
            if (inside.count(u) && seen.insert(u).second) stack.push_back(u);
    }
    return seen.size() == m.size();
}

struct ValidationIssue {
    std::string kind;     // e.g. "model-not-subtree", "phantom-adjacency"
    std::string message;  // human-readable, includes the witness
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<int> uncovered_nodes;  // nodes in no model: representation is non-minimal
    bool ok() const { return issues.empty(); }
};

/// Checks every TreeRepresentation invariant against g; each violation is
/// reported with a witness. Nodes covered by no model only flag the
/// representation as non-minimal.
inline ValidationReport validate_tree_representation(const Graph& g, const TreeRepresentation& tr) {
    ValidationReport rep;
    auto issue = [&rep](const std::string& kind, const std::string& msg) {
        rep.issues.push_back({kind, msg});
    };
    if (!tr.tree.is_tree()) {
        issue("host-not-a-tree", "host node/edge set is not a tree");
        return rep;
    }
    if (!tr.tree.has_node(tr.tree.root)) issue("bad-root", "root is not a node of the tree");
    if (static_cast<int>(tr.models.size()) != g.num_vertices())
        issue("model-count", "one model per vertex required");

    size_t nv = std::min(tr.models.size(), static_cast<size_t>(g.num_vertices()));
    for (size_t v = 0; v < nv; ++v) {
        if (tr.models[v].empty()) {
            issue("empty-model", "vertex " + std::to_string(v) + " has an empty model");
            continue;
        }
        if (!std::is_sorted(tr.models[v].begin(), tr.models[v].end()))
            issue("unsorted-model", "vertex " + std::to_string(v) + " model not sorted");
        if (!model_is_subtree(tr.tree, tr.models[v]))
            issue("model-not-subtree", "model of vertex " + std::to_string(v) +
                                           " does not induce a connected subtree");
    }
    if (!rep.issues.empty()) return rep;

    for (int u = 0; u < static_cast<int>(nv); ++u)
        for (int v = u + 1; v < static_cast<int>(nv); ++v) {
            bool meet = models_intersect(tr.models[u], tr.models[v]);
            bool edge = g.has_edge(u, v);
            if (meet && !edge)
                issue("phantom-adjacency", "models of non-adjacent " + std::to_string(u) + "," +
                                               std::to_string(v) + " intersect");
            if (!meet && edge)
                issue("missing-adjacency", "models of adjacent " + std::to_string(u) + "," +
                                               std::to_string(v) + " are disjoint");
        }

    for (int a : tr.tree.node_ids()) {
        bool covered = false;
        for (size_t v = 0; v < nv && !covered; ++v) covered = model_contains(tr.models[v], a);
        if (!covered) rep.uncovered_nodes.push_back(a);
    }
    return rep;
}

/// All maximal degree-2 paths of the host tree: chains whose interior nodes
/// have degree 2 and whose endpoints have degree != 2. Their edge sets
/// partition E(T); the count is at most 2*leaves - 2.
inline std::vector<std::vector<int>> maximal_degree2_paths(const HostTree& t) {
    if (t.edge_list().empty()) throw std::invalid_argument("maximal_degree2_paths: tree has no edge");
    std::vector<std::vector<int>> paths;
    std::set<std::pair<int, int>> used;
    auto mark = [&used](int a, int b) { used.insert({std::min(a, b), std::max(a, b)}); };
    auto is_used = [&used](int a, int b) { return used.count({std::min(a, b), std::max(a, b)}) != 0; };

    for (int s : t.node_ids()) {
        if (t.degree(s) == 2) continue;
        for (int nb : t.adj.at(s)) {
            if (is_used(s, nb)) continue;
            std::vector<int> path{s};
            int prev = s, cur = nb;
            mark(prev, cur);
            while (t.degree(cur) == 2) {
                path.push_back(cur);
                int nxt = t.adj.at(cur)[0] == prev ? t.adj.at(cur)[1] : t.adj.at(cur)[0];
                mark(cur, nxt);
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            paths.push_back(std::move(path));
        }
    }
    return paths;
}

/// Contracts host-tree edges whose endpoint ver-sets are inclusion-comparable
/// until none remain ("minimal" representation). The merged node gets a fresh
/// identifier; the graph is untouched.
inline void make_minimal(TreeRepresentation& tr) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : tr.tree.edge_list()) {
            std::vector<int> va = tr.ver_node(a), vb = tr.ver_node(b);
            bool ab = std::includes(vb.begin(), vb.end(), va.begin(), va.end());
            bool ba = std::includes(va.begin(), va.end(), vb.begin(), vb.end());
            if (!ab && !ba) continue;
            int merged = tr.tree.fresh_node();
            std::vector<int> nbrs;
            for (int x : tr.tree.adj.at(a))
                if (x != b) nbrs.push_back(x);
            for (int x : tr.tree.adj.at(b))
                if (x != a) nbrs.push_back(x);
            tr.tree.remove_node(a);
            tr.tree.remove_node(b);
            for (int x : nbrs) tr.tree.add_edge(merged, x);
            if (tr.tree.root == a || tr.tree.root == b) tr.tree.root = merged;
            for (auto& m : tr.models) {
                bool had = false;
                Model nm;
                for (int x : m) {
                    if (x == a || x == b) had = true;
                    else nm.push_back(x);
                }
                if (had) nm.insert(std::lower_bound(nm.begin(), nm.end(), merged), merged);
                m = std::move(nm);
            }
            changed = true;
            break;
        }
    }
}

}  // namespace chordalkit
