#pragma once

#include "murlab/graph.hpp"

#include <optional>
#include <vector>

namespace murlab {

struct Components {
    int count = 0;
    std::vector<VertexSet> parts;  // ordered by smallest vertex
};

/// Vertices reachable from `from` inside `within`.
inline VertexSet reachable(const Graph& g, int from, VertexSet within) {
    VertexSet seen = bit(from) & within;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline Components components(const Graph& g) {
    Components out;
    VertexSet left = g.vertices();
    while (left) {
        const VertexSet part = reachable(g, std::countr_zero(left), left);
        out.parts.push_back(part);
        left &= ~part;
    }
    out.count = static_cast<int>(out.parts.size());
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).count <= 1; }

/// BFS distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen = bit(source);
    VertexSet frontier = seen;
    for (int d = 0; frontier; ++d) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) {
            dist[static_cast<std::size_t>(v)] = d;
            next |= g.neighbors(v);
        });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return dist;
}

struct Diameter {
    std::optional<int> value;  // empty when the graph is disconnected
    int u = 0, v = 0;          // a pair realizing the diameter
};

inline Diameter diameter(const Graph& g) {
    Diameter out{0, 0, 0};
    if (!is_connected(g)) return {std::nullopt, 0, 0};
    for (int s = 0; s < g.order(); ++s) {
        const auto dist = bfs_distances(g, s);
        for (int t = 0; t < g.order(); ++t)
            if (dist[static_cast<std::size_t>(t)] > *out.value) out = {dist[static_cast<std::size_t>(t)], s, t};
    }
    return out;
}

}  // namespace murlab
