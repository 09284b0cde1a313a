#pragma once

#include "murlab/matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace murlab {

using VertexSet = std::uint64_t;

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }

template <class F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        const int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || static_cast<std::size_t>(n) > kMaxDimension)
            throw std::invalid_argument("graph order must be in [0, " + std::to_string(kMaxDimension) + "]");
    }
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] VertexSet vertices() const { return all_vertices(n_); }
    [[nodiscard]] VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
    [[nodiscard]] int degree(int v) const { return popcount(neighbors(v)); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }

    [[nodiscard]] int edge_count() const {
        int m = 0;
        for (auto row : adj_) m += popcount(row);
        return m / 2;
    }

    [[nodiscard]] std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_vertex(neighbors(u) & ~all_vertices(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    [[nodiscard]] std::vector<int> degrees() const {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
        return d;
    }

    [[nodiscard]] bool is_regular() const {
        for (int v = 1; v < n_; ++v)
            if (degree(v) != degree(0)) return false;
        return true;
    }

    /// Edge count inside the vertex set `s`.
    [[nodiscard]] int edges_within(VertexSet s) const {
        int m = 0;
        for_each_vertex(s, [&](int v) { m += popcount(neighbors(v) & s); });
        return m / 2;
    }

    [[nodiscard]] bool is_clique(VertexSet s) const {
        bool ok = true;
        for_each_vertex(s, [&](int v) { ok = ok && (neighbors(v) & s) == (s & ~bit(v)); });
        return ok;
    }

    [[nodiscard]] QMatrix adjacency_matrix() const {
        QMatrix a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_), Rational(0));
        for (auto [u, v] : edges()) {
            a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = Rational(1);
            a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = Rational(1);
        }
        return a;
    }

    /// L = D - A
    [[nodiscard]] QMatrix laplacian_matrix() const {
        QMatrix l(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_), Rational(0));
        for (int u = 0; u < n_; ++u) {
            l(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) = Rational(degree(u));
            for_each_vertex(neighbors(u), [&](int v) {
                l(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = Rational(-1);
            });
        }
        return l;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

/// Subgraph induced on `keep`, relabelled in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (keep[i] == keep[j]) throw std::invalid_argument("induced_subgraph: repeated vertex");
            if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("delete_vertex: vertex out of range");
    std::vector<int> keep;
    for (int u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

}  // namespace murlab
