#pragma once

#include "murlab/graph.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace murlab::gen {

namespace detail {
inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

inline Graph empty(int n) {
    detail::require(n >= 0, "empty: negative order");
    return Graph(n);
}

inline Graph complete(int n) {
    detail::require(n >= 0, "complete: negative order");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// v_0 - v_1 - ... - v_{n-1}
inline Graph path(int n) {
    detail::require(n >= 0, "path: negative order");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    detail::require(n >= 3, "cycle: order must be at least 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// K_{1,n-1} on n vertices with centre 0.
inline Graph star(int n) {
    detail::require(n >= 1, "star: order must be at least 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

inline Graph complete_multipartite(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        detail::require(s >= 0, "complete_multipartite: negative part size");
        n += s;
    }
    Graph g(n);
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int r, int s) { return complete_multipartite({r, s}); }

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.order();
    Graph g(n);
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(u + offset, v + offset);
        offset += p.order();
    }
    return g;
}

inline Graph join(const std::vector<Graph>& parts) {
    Graph g = disjoint_union(parts);
    int offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int end = offset + parts[i].order();
        for (int u = offset; u < end; ++u)
            for (int v = end; v < g.order(); ++v) g.add_edge(u, v);
        offset = end;
    }
    return g;
}

/// k disjoint copies of g.
inline Graph copies(int k, const Graph& g) {
    detail::require(k >= 0, "copies: negative count");
    return disjoint_union(std::vector<Graph>(static_cast<std::size_t>(k), g));
}

/// Path v_1..v_n plus v_{n+1} adjacent only to v_{n-1}; n+1 vertices, 0-indexed.
inline Graph p_prime(int n) {
    detail::require(n >= 3, "p_prime: n must be at least 3");
    Graph g(n + 1);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n - 2, n);
    return g;
}

/// (K_r ∪ complement(K_s)) ∨ {v}: clique on 0..r-1, independent vertices
/// r..r+s-1, and the dominating vertex r+s last.
inline Graph clique_plus_isolated_join_v(int r, int s) {
    detail::require(r >= 0 && s >= 0, "clique_plus_isolated_join_v: negative size");
    return join({disjoint_union({complete(r), empty(s)}), empty(1)});
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

/// Erdős–Rényi G(n, p) from the given engine.
inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    detail::require(n >= 0, "random_graph: negative order");
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace murlab::gen
