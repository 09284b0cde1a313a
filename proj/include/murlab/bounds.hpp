#pragma once

#include "murlab/certificate.hpp"
#include "murlab/generators.hpp"
#include "murlab/induced_paths.hpp"
#include "murlab/linalg.hpp"
#include "murlab/params.hpp"
#include "murlab/recognize.hpp"
#include "murlab/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace murlab {

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;  // induced-path search nodes
    int grid_den = 4;                                // grid denominators 1..grid_den
    int grid_num = 4;                                // grid numerators |p| ≤ grid_num
    int random_points = 200;
    std::uint64_t seed = 42;
    bool use_families = true;
    bool instantiate_spectral = false;
};

struct SearchStats {
    std::size_t candidates = 0;
    std::size_t modular_rejections = 0;
    std::size_t exact_evaluations = 0;
    bool lower_exhaustive = true;
};

// ---------------------------------------------------------------- spectra

/// Regular graphs: n − 1 − max(m, c − 1). For connected graphs this is
/// n − (m + 1). For disconnected ones, the complement is connected and
/// regular, and its non-degree eigenvalues are −1 − λ over the spectrum of A
/// restricted to e⊥; there the degree eigenvalue keeps multiplicity c − 1,
/// so the largest multiplicity seen by the complement is max(m, c − 1).
inline RegularSpectrum regular_spectrum(const Graph& g) {
    if (!g.is_regular()) throw std::invalid_argument("regular_mur: graph is not regular");
    RegularSpectrum out;
    out.components = components(g).count;
    if (g.order() == 0) return out;
    out.degree = g.degree(0);
    const auto rm = root_multiplicity(charpoly(g.adjacency_matrix()), Rational(out.degree));
    out.multiplicity = rm.quotient.is_constant() ? 0 : max_multiplicity(squarefree_decomposition(rm.quotient));
    return out;
}

inline int regular_value(int n, const RegularSpectrum& s) {
    return std::max(0, n - 1 - std::max(s.multiplicity, s.components - 1));
}

inline int regular_mur(const Graph& g) { return regular_value(g.order(), regular_spectrum(g)); }

struct LaplacianSpectrum {
    int multiplicity = 0;  // largest multiplicity of a nonzero eigenvalue (0 if none)
    UniPoly factor;        // squarefree factor carrying those eigenvalues
};

inline LaplacianSpectrum laplacian_spectrum(const Graph& g) {
    LaplacianSpectrum out;
    if (g.order() == 0) return out;
    const auto rm = root_multiplicity(charpoly(g.laplacian_matrix()), Rational(0));
    if (rm.quotient.is_constant()) return out;
    for (const auto& part : squarefree_decomposition(rm.quotient))
        if (part.multiplicity > out.multiplicity) out = {part.multiplicity, part.factor};
    return out;
}

// ---------------------------------------------------------------- families

/// Value for (K_r ∪ complement(K_s)) ∨ {v}, where a closed form is known.
inline std::optional<int> clique_join_vertex_value(int r, int s) {
    if (s - r + 1 != 0) {
        if (s == 0 || (s == 1 && r == 0)) return 0;
        if (r <= 1) return 1;
        return 2;
    }
    if (s >= 3) return 3;
    return std::nullopt;
}

/// Closed-form mur for one recognized shape of g, if the shape has one.
inline std::optional<int> family_value(const Graph& g, const FamilyMatch& m) {
    switch (m.kind) {
        case FamilyKind::Complete:
        case FamilyKind::Empty: return 0;
        case FamilyKind::TwoCliques:
        case FamilyKind::CliquePlusIsolated: return 1;
        case FamilyKind::UnionOfCliques: return static_cast<int>(m.sizes.size()) - 1;
        case FamilyKind::CliqueIsolatedJoinVertex: return clique_join_vertex_value(m.r, m.s);
        case FamilyKind::Path: return std::max(0, g.order() - 2);
        case FamilyKind::Cycle:
        case FamilyKind::EqualCycles:
        case FamilyKind::Regular: return regular_mur(g);
    }
    return std::nullopt;
}

struct FamilyResult {
    int value = 0;
    FamilyMatch match;
    std::optional<RegularSpectrum> spectrum;  // set for regular graphs
};

/// Exact value from the first matching family, in the order complete/empty,
/// mur 1 shapes, unions of cliques, clique-join-vertex, path, regular.
inline std::optional<FamilyResult> family_mur(const Graph& g) {
    static constexpr FamilyKind order[] = {
        FamilyKind::Complete,       FamilyKind::Empty, FamilyKind::TwoCliques, FamilyKind::CliquePlusIsolated,
        FamilyKind::UnionOfCliques, FamilyKind::CliqueIsolatedJoinVertex, FamilyKind::Path,
    };
    const auto matches = recognize_family(g);
    for (FamilyKind kind : order)
        for (const auto& m : matches) {
            if (m.kind != kind) continue;
            if (auto v = family_value(g, m)) return FamilyResult{*v, m, std::nullopt};
        }
    if (g.is_regular()) {
        const auto spec = regular_spectrum(g);
        FamilyMatch m = make_match(FamilyKind::Regular);
        m.degree = spec.degree;
        return FamilyResult{regular_value(g.order(), spec), m, spec};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- lower bounds

inline LowerBound mur_lower(const Graph& g, const SearchOptions& opts = {}, SearchStats* stats = nullptr) {
    LowerBound best{0, TrivialBound{0}};
    auto consider = [&](int value, LowerCertificate cert) {
        if (value > best.value) best = {value, std::move(cert)};
    };
    const Graph gc = complement(g);
    for (bool on_complement : {false, true}) {
        const Graph& h = on_complement ? gc : g;
        PathForestWitness w = best_induced_path_forest(h, opts.node_budget);
        if (stats) stats->lower_exhaustive = stats->lower_exhaustive && w.exhaustive;
        if (!w.paths.empty()) consider(w.bound, PathForestBound{std::move(w), on_complement});
    }
    for (bool on_complement : {false, true}) {
        const Diameter d = diameter(on_complement ? gc : g);
        if (d.value && *d.value >= 2) consider(*d.value - 1, DiameterBound{d.u, d.v, *d.value, on_complement});
    }
    if (!in_mur0_class(g)) {
        consider(1, OutsideSmallClasses{1});
        if (!in_mur1_class(g)) consider(2, OutsideSmallClasses{2});
    }
    return best;
}

// ---------------------------------------------------------------- candidate points

namespace detail {

inline std::vector<Rational> grid_values(int den, int num) {
    std::set<Rational> vals;
    for (int q = 1; q <= den; ++q)
        for (int p = -num; p <= num; ++p) vals.insert(Rational(p, q));
    return {vals.begin(), vals.end()};
}

/// Integer roots of a monic integer polynomial inside [lo, hi].
inline std::vector<long> integer_roots(const UniPoly& p, long lo, long hi) {
    std::vector<long> out;
    for (long x = lo; x <= hi; ++x)
        if (p.eval(Rational(x)).is_zero()) out.push_back(x);
    return out;
}

/// Rank-2 point for (K_r ∪ complement(K_s)) ∨ {v} with r ≥ 2 and s − r + 1 ≠ 0.
inline std::optional<RationalPoint> clique_join_vertex_point(int r, int s) {
    if (r < 2 || s - r + 1 == 0) return std::nullopt;
    return RationalPoint{Rational(-1, r - 1), Rational(r - 1, s - r + 1), Rational(1, r - 1)};
}

}  // namespace detail

/// Deduplicated candidate points in lexicographic (β, γ, δ) order.
inline std::vector<RationalPoint> candidate_params(const Graph& g, const SearchOptions& opts = {}) {
    const int n = g.order();
    std::set<RationalPoint> pts;
    for (const auto& p : presets()) pts.insert(p.normalized());

    std::set<int> degrees;
    for (int d : g.degrees()) degrees.insert(d);
    std::set<Rational> deltas = {0, 1, -1};
    for (int d : degrees) {
        if (d >= 1) deltas.insert(Rational(1, d));
        if (d >= 2) deltas.insert(Rational(1, d - 1));
    }
    for (const Rational& gamma : {Rational(0), Rational(-1), Rational(-1, 2)})
        for (const auto& delta : deltas) {
            pts.insert({0, gamma, delta});
            for (int d : degrees) {
                const Rational dd = delta * Rational(d);
                pts.insert({-gamma - dd, gamma, delta});
                pts.insert({-dd, gamma, delta});
                pts.insert({Rational(1) - dd, gamma, delta});
            }
        }

    if (n > 0) {
        const Rational nn(n);
        for (long lambda : detail::integer_roots(charpoly(g.laplacian_matrix()), 0, n))
            pts.insert({Rational(lambda), -Rational(lambda) / nn, -1});
        const bool regular = g.is_regular();
        const int r = regular ? g.degree(0) : 0;
        for (long lambda : detail::integer_roots(charpoly(g.adjacency_matrix()), -(n - 1), n - 1)) {
            pts.insert({-Rational(lambda), 0, 0});
            if (regular) pts.insert({-Rational(lambda), Rational(lambda - r) / nn, 0});
        }
        QMatrix q = g.laplacian_matrix();
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j)
                if (i != j) q(i, j) = -q(i, j);
        for (long mu : detail::integer_roots(charpoly(q), 0, 2L * (n - 1))) pts.insert({-Rational(mu), 0, 1});

        pts.insert({1, Rational(-1, n), -1});
        pts.insert({0, Rational(-2, n), 0});
    }

    for (const auto& m : recognize_family(g)) {
        if (m.kind != FamilyKind::CliqueIsolatedJoinVertex) continue;
        if (auto p = detail::clique_join_vertex_point(m.r, m.s))
            pts.insert(m.on_complement ? complement_params(complement(g), *p) : *p);
    }

    const auto grid = detail::grid_values(opts.grid_den, opts.grid_num);
    for (const auto& b : grid)
        for (const auto& c : grid)
            for (const auto& d : grid) pts.insert({b, c, d});

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> num(-16, 16), den(1, 16);
    for (int k = 0; k < opts.random_points; ++k) {
        Rational b(num(rng), den(rng));
        Rational c(num(rng), den(rng));
        Rational d(num(rng), den(rng));
        pts.insert({b, c, d});
    }
    return {pts.begin(), pts.end()};
}

// ---------------------------------------------------------------- upper bounds

namespace detail {

/// Rank of U(p) modulo the filter prime, or nullopt if a parameter's
/// denominator vanishes there.
inline std::optional<std::size_t> universal_rank_mod_p(const Graph& g, const RationalPoint& p) {
    const auto b = to_mod_p(p.beta), c = to_mod_p(p.gamma), d = to_mod_p(p.delta);
    if (!b || !c || !d) return std::nullopt;
    const auto n = static_cast<std::size_t>(g.order());
    const std::uint64_t edge = (*c + 1) % kFilterPrime;
    std::vector<std::uint64_t> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                const std::uint64_t dd = mulmod(*d, static_cast<std::uint64_t>(g.degree(static_cast<int>(i))));
                m[i * n + j] = ((*b + *c) % kFilterPrime + dd) % kFilterPrime;
            } else {
                m[i * n + j] = g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? edge : *c;
            }
        }
    return rank_mod_p(m, n, n);
}

}  // namespace detail

/// Smallest rank found over `points` that beats `current`, stopping once
/// `target` is reached. Points are scanned in the given order, so ties keep
/// the earliest point.
inline std::optional<ExplicitParams> search_points(const Graph& g, const std::vector<RationalPoint>& points,
                                                   int current, int target, SearchStats* stats = nullptr) {
    std::optional<ExplicitParams> best;
    for (const auto& p : points) {
        if (current <= target) break;
        if (stats) ++stats->candidates;
        const auto modular = detail::universal_rank_mod_p(g, p);
        if (modular && static_cast<int>(*modular) >= current) {
            if (stats) ++stats->modular_rejections;
            continue;
        }
        if (stats) ++stats->exact_evaluations;
        const int r = static_cast<int>(rank_rational(universal_matrix(g, p)));
        if (r < current) {
            current = r;
            best = ExplicitParams{p, r};
        }
    }
    return best;
}

/// Best structural upper bound (no parameter search).
inline UpperBound structural_upper(const Graph& g, bool use_families = true) {
    const int n = g.order();
    UpperBound best{std::max(0, n - 2), TrivialBound{std::max(0, n - 2)}};
    auto consider = [&](int value, UpperCertificate cert) {
        if (value < best.value) best = {value, std::move(cert)};
    };
    if (use_families) {
        if (auto f = family_mur(g)) {
            if (f->spectrum) consider(f->value, *f->spectrum);
            else consider(f->value, FamilyFormula{f->match, f->value});
        }
    }
    const Graph gc = complement(g);
    for (bool on_complement : {false, true}) {
        const Graph& h = on_complement ? gc : g;
        consider(n - components(h).count, ComponentBound{components(h).count, on_complement});
    }
    for (bool on_complement : {false, true}) {
        const auto spec = laplacian_spectrum(on_complement ? gc : g);
        if (spec.multiplicity > 0)
            consider(n - spec.multiplicity - 1, LaplacianMultiplicity{spec.multiplicity, on_complement});
    }
    return best;
}

/// Structural bounds refined by exact rank evaluation over candidate_params,
/// stopping as soon as `lower_target` is reached.
inline UpperBound mur_upper(const Graph& g, const SearchOptions& opts = {}, int lower_target = 0,
                            SearchStats* stats = nullptr) {
    if (g.order() == 0) return {0, TrivialBound{0}};
    UpperBound best = structural_upper(g, opts.use_families);
    if (best.value <= lower_target) return best;
    if (auto e = search_points(g, candidate_params(g, opts), best.value, lower_target, stats))
        best = {e->rank, *e};
    return best;
}

}  // namespace murlab
