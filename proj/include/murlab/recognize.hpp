#pragma once

#include "murlab/graph.hpp"
#include "murlab/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace murlab {

enum class FamilyKind {
    Complete,
    Empty,
    TwoCliques,              // K_r ∪ K_s
    CliquePlusIsolated,      // K_r ∪ complement(K_s), r ≥ 2, s ≥ 1
    UnionOfCliques,          // k ≥ 2 cliques, all of order ≥ 2
    CliqueIsolatedJoinVertex,  // (K_r ∪ complement(K_s)) ∨ {v}
    Path,
    Cycle,
    EqualCycles,             // k ≥ 2 disjoint copies of C_n
    Regular,
};

inline std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Complete: return "complete";
        case FamilyKind::Empty: return "empty";
        case FamilyKind::TwoCliques: return "two-cliques";
        case FamilyKind::CliquePlusIsolated: return "clique+isolated";
        case FamilyKind::UnionOfCliques: return "union-of-cliques";
        case FamilyKind::CliqueIsolatedJoinVertex: return "clique-isolated-join-vertex";
        case FamilyKind::Path: return "path";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::EqualCycles: return "equal-cycles";
        case FamilyKind::Regular: return "regular";
    }
    return "unknown";
}

inline FamilyKind family_kind_from_string(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(FamilyKind::Regular); ++k)
        if (to_string(static_cast<FamilyKind>(k)) == s) return static_cast<FamilyKind>(k);
    throw std::invalid_argument("unknown family kind: " + s);
}

struct FamilyMatch {
    FamilyKind kind = FamilyKind::Empty;
    bool on_complement = false;
    std::vector<int> sizes;  // clique orders or cycle lengths, descending
    int r = 0, s = 0;        // clique / independent part of the join shape
    int apex = -1;           // dominating vertex of the join shape
    int degree = 0;          // regularity degree

    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

inline FamilyMatch make_match(FamilyKind kind, std::vector<int> sizes = {}) {
    FamilyMatch m;
    m.kind = kind;
    m.sizes = std::move(sizes);
    return m;
}

inline std::string describe(const FamilyMatch& m) {
    std::string out = to_string(m.kind);
    switch (m.kind) {
        case FamilyKind::UnionOfCliques:
        case FamilyKind::TwoCliques:
        case FamilyKind::EqualCycles:
            out += "(k=" + std::to_string(m.sizes.size()) + ")";
            break;
        case FamilyKind::CliquePlusIsolated:
        case FamilyKind::CliqueIsolatedJoinVertex:
            out += "(r=" + std::to_string(m.r) + ",s=" + std::to_string(m.s) + ")";
            break;
        case FamilyKind::Regular: out += "(d=" + std::to_string(m.degree) + ")"; break;
        default: break;
    }
    if (m.on_complement) out += " in complement";
    return out;
}

namespace detail {

/// Component orders when every component is a clique; empty otherwise.
inline std::vector<int> clique_component_sizes(const Graph& g) {
    std::vector<int> sizes;
    for (VertexSet part : components(g).parts) {
        if (!g.is_clique(part)) return {};
        sizes.push_back(popcount(part));
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

inline void recognize_direct(const Graph& g, bool on_complement, std::vector<FamilyMatch>& out) {
    const int n = g.order();
    const int m = g.edge_count();
    auto add = [&](FamilyMatch f) {
        f.on_complement = on_complement;
        out.push_back(std::move(f));
    };

    if (m == n * (n - 1) / 2) add(make_match(FamilyKind::Complete));
    if (m == 0) add(make_match(FamilyKind::Empty));

    const auto sizes = detail::clique_component_sizes(g);
    if (!sizes.empty() && m > 0 && m < n * (n - 1) / 2) {
        if (sizes.size() == 2) add(make_match(FamilyKind::TwoCliques, sizes));
        const long big = std::count_if(sizes.begin(), sizes.end(), [](int s) { return s >= 2; });
        if (big == 1 && sizes.size() >= 2) {
            FamilyMatch f = make_match(FamilyKind::CliquePlusIsolated, sizes);
            f.r = sizes.front();
            f.s = static_cast<int>(sizes.size()) - 1;
            add(f);
        }
        if (sizes.size() >= 2 && sizes.back() >= 2) add(make_match(FamilyKind::UnionOfCliques, sizes));
    }

    // Dominating vertex whose removal leaves one clique plus isolated vertices.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != n - 1) continue;
        const Graph rest = delete_vertex(g, v);
        const auto parts = components(rest).parts;
        int r = 0, s = 0, nontrivial = 0;
        bool ok = true;
        for (VertexSet p : parts) {
            if (popcount(p) == 1) {
                ++s;
            } else {
                ++nontrivial;
                r = popcount(p);
                ok = ok && rest.is_clique(p);
            }
        }
        if (ok && nontrivial <= 1) {
            FamilyMatch f = make_match(FamilyKind::CliqueIsolatedJoinVertex);
            f.r = r;
            f.s = s;
            f.apex = v;
            add(f);
            break;
        }
    }

    if (n == 0) return;
    const bool connected = is_connected(g);
    int max_degree = 0;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    if (connected && n >= 2 && m == n - 1 && max_degree <= 2) add(make_match(FamilyKind::Path));

    if (g.is_regular()) {
        const int d = g.degree(0);
        if (d == 2) {
            const auto parts = components(g).parts;
            std::vector<int> lengths;
            for (VertexSet p : parts) lengths.push_back(popcount(p));
            if (parts.size() == 1) add(make_match(FamilyKind::Cycle, lengths));
            else if (std::all_of(lengths.begin(), lengths.end(), [&](int l) { return l == lengths.front(); }))
                add(make_match(FamilyKind::EqualCycles, lengths));
        }
        FamilyMatch f = make_match(FamilyKind::Regular);
        f.degree = d;
        add(f);
    }
}

}  // namespace detail

/// Every recognized family shape of g, first those of g itself and then those
/// of its complement (flagged `on_complement`).
inline std::vector<FamilyMatch> recognize_family(const Graph& g) {
    std::vector<FamilyMatch> out;
    detail::recognize_direct(g, false, out);
    detail::recognize_direct(complement(g), true, out);
    return out;
}

inline bool has_family(const std::vector<FamilyMatch>& matches, FamilyKind kind) {
    return std::any_of(matches.begin(), matches.end(), [&](const FamilyMatch& f) { return f.kind == kind; });
}

/// G or its complement is complete.
inline bool in_mur0_class(const Graph& g) {
    const int n = g.order();
    const int m = g.edge_count();
    return m == 0 || m == n * (n - 1) / 2;
}

/// Two clique components, or one clique of order ≥ 2 plus isolated vertices,
/// on G or on its complement (excluding the mur 0 class).
inline bool in_mur1_class(const Graph& g) {
    if (in_mur0_class(g)) return false;
    const auto matches = recognize_family(g);
    return has_family(matches, FamilyKind::TwoCliques) || has_family(matches, FamilyKind::CliquePlusIsolated);
}

}  // namespace murlab
