#pragma once

#include "murlab/bounds.hpp"
#include "murlab/certificate.hpp"
#include "murlab/mur.hpp"

#include <string>
#include <variant>

namespace murlab {

struct ReplayResult {
    bool ok = true;
    std::string detail;
};

namespace detail {

inline ReplayResult check(bool ok, const std::string& what) { return {ok, ok ? "" : what}; }

inline ReplayResult replay_family(const Graph& g, const FamilyFormula& c, int claimed) {
    const auto matches = recognize_family(g);
    if (std::find(matches.begin(), matches.end(), c.match) == matches.end())
        return {false, "family shape " + describe(c.match) + " not recognized"};
    const auto v = family_value(g, c.match);
    return check(v && *v == c.value && c.value == claimed, "family value mismatch");
}

inline ReplayResult replay_regular(const Graph& g, const RegularSpectrum& c, int claimed) {
    if (!g.is_regular()) return {false, "graph is not regular"};
    const auto s = regular_spectrum(g);
    return check(s.multiplicity == c.multiplicity && s.components == c.components && s.degree == c.degree &&
                     regular_value(g.order(), s) == claimed,
                 "regular spectrum mismatch");
}

struct LowerReplay {
    const Graph& g;
    int claimed;
    ReplayResult operator()(const TrivialBound& c) const { return check(c.value == 0 && claimed == 0, "trivial lower bound must be 0"); }
    ReplayResult operator()(const PathForestBound& c) const {
        const Graph h = c.on_complement ? complement(g) : g;
        if (!validate_path_forest(h, c.witness)) return {false, "path forest witness does not validate"};
        return check(c.witness.bound == claimed, "path forest bound mismatch");
    }
    ReplayResult operator()(const DiameterBound& c) const {
        const Graph h = c.on_complement ? complement(g) : g;
        if (c.u < 0 || c.u >= h.order() || c.v < 0 || c.v >= h.order()) return {false, "diameter witness out of range"};
        const int d = bfs_distances(h, c.u)[static_cast<std::size_t>(c.v)];
        return check(d == c.distance && d - 1 == claimed, "distance witness mismatch");
    }
    ReplayResult operator()(const OutsideSmallClasses& c) const {
        if (in_mur0_class(g)) return {false, "graph is complete or empty"};
        if (c.level >= 2 && in_mur1_class(g)) return {false, "graph has a mur 1 shape"};
        return check(c.level == claimed && (c.level == 1 || c.level == 2), "class level mismatch");
    }
    ReplayResult operator()(const FamilyFormula& c) const { return replay_family(g, c, claimed); }
    ReplayResult operator()(const RegularSpectrum& c) const { return replay_regular(g, c, claimed); }
};

struct UpperReplay {
    const Graph& g;
    int claimed;
    ReplayResult operator()(const TrivialBound& c) const {
        const int v = std::max(0, g.order() - 2);
        return check(c.value == v && claimed == v, "order bound mismatch");
    }
    ReplayResult operator()(const ComponentBound& c) const {
        const Graph h = c.on_complement ? complement(g) : g;
        const int k = components(h).count;
        return check(k == c.components && g.order() - k == claimed, "component count mismatch");
    }
    ReplayResult operator()(const LaplacianMultiplicity& c) const {
        const auto s = laplacian_spectrum(c.on_complement ? complement(g) : g);
        return check(s.multiplicity == c.multiplicity && c.multiplicity > 0 &&
                         g.order() - c.multiplicity - 1 == claimed,
                     "laplacian multiplicity mismatch");
    }
    ReplayResult operator()(const RegularSpectrum& c) const { return replay_regular(g, c, claimed); }
    ReplayResult operator()(const FamilyFormula& c) const { return replay_family(g, c, claimed); }
    ReplayResult operator()(const ExplicitParams& c) const {
        const int r = static_cast<int>(rank_rational(universal_matrix(g, c.point)));
        return check(r == c.rank && r == claimed,
                     "rank at " + to_string(c.point) + " is " + std::to_string(r) + ", certificate says " +
                         std::to_string(c.rank));
    }
};

}  // namespace detail

inline ReplayResult replay_lower(const Graph& g, const LowerCertificate& c, int claimed) {
    return std::visit(detail::LowerReplay{g, claimed}, c);
}

inline ReplayResult replay_upper(const Graph& g, const UpperCertificate& c, int claimed) {
    return std::visit(detail::UpperReplay{g, claimed}, c);
}

/// Re-checks both certificates of a result without rerunning any search.
inline ReplayResult replay(const Graph& g, const MurResult& r) {
    if (r.lower > r.upper) return {false, "lower bound exceeds upper bound"};
    if (r.exact != (r.lower == r.upper) || r.exact != r.value.has_value()) return {false, "exactness flag mismatch"};
    auto lo = replay_lower(g, r.lower_certificate, r.lower);
    if (!lo.ok) return {false, "lower: " + lo.detail};
    auto up = replay_upper(g, r.upper_certificate, r.upper);
    if (!up.ok) return {false, "upper: " + up.detail};
    return {};
}

}  // namespace murlab
