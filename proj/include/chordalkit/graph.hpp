#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordalkit {

/// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
/// edges. Adjacency is kept as packed bit rows so that dense gadget graphs
/// (cliques of a few thousand vertices) stay cheap to query.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int num_vertices() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        if (has_edge(u, v)) return;
        set_bit(u, v);
        set_bit(v, u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    int num_edges() const { return m_; }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && has_edge(v, u)) out.push_back(u);
        return out;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        const uint64_t* row = &bits_[static_cast<size_t>(v) * words_];
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row[w]);
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Induced subgraph on `keep` (in the given order); vertex i of the result
    /// corresponds to keep[i].
    Graph induced(const std::vector<int>& keep) const {
        Graph h(static_cast<int>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = i + 1; j < keep.size(); ++j)
                if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        return h;
    }

    /// Optional external names, used only by the file formats.
    std::vector<std::string> labels;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }
    void set_bit(int u, int v) { bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t(1) << (v % 64); }

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

/// Connected components as vertex lists, smallest vertex first.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u : g.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline bool same_component(const Graph& g, int a, int b, const std::vector<char>& removed) {
    if (removed[a] || removed[b]) return false;
    int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == b) return true;
        for (int u : g.neighbors(v))
            if (!seen[u] && !removed[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return false;
}

}  // namespace chordalkit
