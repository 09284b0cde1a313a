#pragma once

#include "murlab/graph.hpp"
#include "murlab/structure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace murlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

struct InducedPath {
    std::vector<int> vertices;  // in walk order
    bool exhaustive = true;     // false when the node budget ran out
    std::uint64_t nodes = 0;
    [[nodiscard]] int length() const { return static_cast<int>(vertices.size()); }
};

/// Longest induced path by depth-first extension from every start vertex.
/// A path is only recorded from its smaller endpoint.
inline InducedPath longest_induced_path(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget) {
    InducedPath best;
    if (g.order() == 0) return best;
    best.vertices = {0};
    std::vector<int> path;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    // `blocked` holds the path and every neighbour of a non-final path vertex.
    auto extend = [&](auto&& self, VertexSet blocked) -> void {
        if (out_of_budget) return;
        if (++nodes > node_budget) {
            out_of_budget = true;
            return;
        }
        const int last = path.back();
        if (path.size() > best.vertices.size() && last > path.front()) best.vertices = path;
        const VertexSet free_now = g.vertices() & ~blocked;
        if (static_cast<int>(path.size()) + popcount(free_now) <= best.length()) return;
        const VertexSet next = g.neighbors(last) & free_now;
        for_each_vertex(next, [&](int w) {
            path.push_back(w);
            self(self, blocked | bit(w) | g.neighbors(last));
            path.pop_back();
        });
    };

    for (int s = 0; s < g.order() && !out_of_budget; ++s) {
        path = {s};
        extend(extend, bit(s));
    }
    best.exhaustive = !out_of_budget;
    best.nodes = nodes;
    return best;
}

/// How an induced linear forest yields its bound: a single path, several
/// paths, or paths together with isolated vertices.
enum class PathForestVariant { SinglePath, MultiplePaths, SinglePathWithIsolated, PathsWithIsolated };

inline std::string to_string(PathForestVariant v) {
    switch (v) {
        case PathForestVariant::SinglePath: return "single-path";
        case PathForestVariant::MultiplePaths: return "multiple-paths";
        case PathForestVariant::SinglePathWithIsolated: return "single-path-with-isolated";
        case PathForestVariant::PathsWithIsolated: return "paths-with-isolated";
    }
    return "unknown";
}

struct PathForestWitness {
    std::vector<std::vector<int>> paths;  // each has at least two vertices
    std::vector<int> isolated;
    int bound = 0;
    bool exhaustive = true;
    std::uint64_t nodes = 0;

    [[nodiscard]] PathForestVariant variant() const {
        const bool single = paths.size() == 1;
        if (isolated.empty()) return single ? PathForestVariant::SinglePath : PathForestVariant::MultiplePaths;
        return single ? PathForestVariant::SinglePathWithIsolated : PathForestVariant::PathsWithIsolated;
    }
};

/// Σkᵢ − t − [m = 0] for t paths of kᵢ vertices and m isolated vertices.
inline int path_forest_bound(const std::vector<std::vector<int>>& paths, std::size_t isolated) {
    if (paths.empty()) return 0;
    int total = 0;
    for (const auto& p : paths) total += static_cast<int>(p.size());
    return total - static_cast<int>(paths.size()) - (isolated == 0 ? 1 : 0);
}

/// Checks that the witness vertices are distinct, each path is induced and
/// has at least two vertices, no edge joins different pieces, and the stored
/// bound matches the formula.
inline bool validate_path_forest(const Graph& g, const PathForestWitness& w) {
    if (w.paths.empty()) return false;
    VertexSet used = 0;
    auto claim = [&](int v) {
        if (v < 0 || v >= g.order() || (used & bit(v))) return false;
        used |= bit(v);
        return true;
    };
    int expected_edges = 0;
    for (const auto& p : w.paths) {
        if (p.size() < 2) return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!claim(p[i])) return false;
            if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
        }
        expected_edges += static_cast<int>(p.size()) - 1;
    }
    for (int v : w.isolated)
        if (!claim(v)) return false;
    for (int v : w.isolated)
        if (g.neighbors(v) & used) return false;
    return g.edges_within(used) == expected_edges && w.bound == path_forest_bound(w.paths, w.isolated.size());
}

namespace detail {

/// Splits an induced linear forest into ordered paths and isolated vertices.
inline void decompose_linear_forest(const Graph& g, VertexSet s, PathForestWitness& out) {
    out.paths.clear();
    out.isolated.clear();
    VertexSet left = s;
    while (left) {
        const VertexSet comp = reachable(g, std::countr_zero(left), s);
        left &= ~comp;
        if (popcount(comp) == 1) {
            out.isolated.push_back(std::countr_zero(comp));
            continue;
        }
        int start = -1;
        for_each_vertex(comp, [&](int v) {
            if (start < 0 && popcount(g.neighbors(v) & comp) == 1) start = v;
        });
        std::vector<int> walk{start};
        VertexSet seen = bit(start);
        while (true) {
            const VertexSet next = g.neighbors(walk.back()) & comp & ~seen;
            if (!next) break;
            walk.push_back(std::countr_zero(next));
            seen |= next;
        }
        out.paths.push_back(std::move(walk));
    }
}

}  // namespace detail

/// Best path-forest lower-bound witness. Since Σkᵢ − t is the edge count of
/// the forest, the search maximizes |E(S)| − [S has no isolated vertex] over
/// vertex sets S inducing a linear forest with at least one edge.
inline PathForestWitness best_induced_path_forest(const Graph& g,
                                                  std::uint64_t node_budget = kDefaultNodeBudget) {
    const int n = g.order();
    PathForestWitness best;
    if (n < 2 || g.edge_count() == 0) return best;

    VertexSet best_set = 0;
    int best_value = -1;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    auto value_of = [&](VertexSet s) {
        int isolated = 0;
        for_each_vertex(s, [&](int v) { isolated += (g.neighbors(v) & s) == 0; });
        const int edges = g.edges_within(s);
        if (edges == 0) return -1;
        return edges - (isolated == 0 ? 1 : 0);
    };

    // Vertices are decided in index order; the value of any completion is at
    // most |S| + (undecided vertices) − 2.
    auto search = [&](auto&& self, int v, VertexSet s) -> void {
        if (out_of_budget) return;
        if (++nodes > node_budget) {
            out_of_budget = true;
            return;
        }
        if (popcount(s) + (n - v) - 2 <= best_value) return;
        if (v == n) {
            const int val = value_of(s);
            if (val > best_value) {
                best_value = val;
                best_set = s;
            }
            return;
        }
        const VertexSet nb = g.neighbors(v) & s;
        bool can_add = popcount(nb) <= 2;
        if (can_add)
            for_each_vertex(nb, [&](int u) { can_add = can_add && popcount(g.neighbors(u) & s) < 2; });
        if (can_add && popcount(nb) == 2) {
            const int a = std::countr_zero(nb);
            can_add = !(reachable(g, a, s) & (nb & ~bit(a)));
        }
        if (can_add) self(self, v + 1, s | bit(v));
        self(self, v + 1, s);
    };
    search(search, 0, 0);

    if (best_value < 0) {
        // Budget ran out before any complete set was scored; fall back to one edge.
        auto [u, v] = g.edges().front();
        best_set = bit(u) | bit(v);
    }
    detail::decompose_linear_forest(g, best_set, best);
    best.bound = path_forest_bound(best.paths, best.isolated.size());
    best.exhaustive = !out_of_budget;
    best.nodes = nodes;
    return best;
}

}  // namespace murlab
