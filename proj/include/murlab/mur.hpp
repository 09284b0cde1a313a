#pragma once

#include "murlab/bounds.hpp"
#include "murlab/certificate.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace murlab {

/// Rank of L + (λ/n)J − λI over Q(λ) for the Laplacian eigenvalues of largest
/// multiplicity, one entry per branch of their squarefree factor.
struct SpectralInstantiation {
    UniPoly factor;
    int expected_rank = 0;  // n − m − 1
    std::vector<AlgebraicRankBranch> branches;

    [[nodiscard]] bool verified() const {
        if (branches.empty()) return false;
        for (const auto& b : branches)
            if (static_cast<int>(b.rank) > expected_rank) return false;
        return true;
    }
};

inline std::optional<SpectralInstantiation> instantiate_laplacian_shift(const Graph& g) {
    const auto spec = laplacian_spectrum(g);
    if (spec.multiplicity == 0) return std::nullopt;
    const auto ctx = AlgContext::make(spec.factor);
    const auto lambda = AlgElement::generator(ctx);
    // U(λ, −λ/n, −1) = −(L + (λ/n)J − λI)
    const AlgebraicPoint p{lambda, lambda * Rational(-1, g.order()), lambda.lift(-1)};
    SpectralInstantiation out{spec.factor, g.order() - spec.multiplicity - 1, rank_algebraic(universal_matrix(g, p))};
    return out;
}

struct MurResult {
    int lower = 0;
    int upper = 0;
    LowerCertificate lower_certificate = TrivialBound{0};
    UpperCertificate upper_certificate = TrivialBound{0};
    bool exact = false;
    std::optional<int> value;
    SearchStats stats;
    std::optional<SpectralInstantiation> spectral;  // only with instantiate_spectral
};

namespace detail {

inline MurResult finish(int lower, LowerCertificate lc, int upper, UpperCertificate uc, SearchStats stats) {
    if (lower > upper)
        throw std::logic_error("inconsistent bounds: lower " + std::to_string(lower) + " exceeds upper " +
                               std::to_string(upper));
    MurResult r;
    r.lower = lower;
    r.upper = upper;
    r.lower_certificate = std::move(lc);
    r.upper_certificate = std::move(uc);
    r.exact = lower == upper;
    if (r.exact) r.value = lower;
    r.stats = stats;
    return r;
}

}  // namespace detail

/// Families first; otherwise lower and upper bounds with candidate search.
inline MurResult compute_mur(const Graph& g, const SearchOptions& opts = {}) {
    MurResult result;
    SearchStats stats;
    bool done = false;
    if (opts.use_families) {
        if (auto f = family_mur(g)) {
            if (f->spectrum) {
                result = detail::finish(f->value, *f->spectrum, f->value, *f->spectrum, stats);
            } else {
                const FamilyFormula cert{f->match, f->value};
                LowerBound lower{f->value, cert};
                if (f->match.kind == FamilyKind::Path) {
                    // The closed form for paths is an upper construction; the
                    // matching lower bound is the induced path itself.
                    LowerBound search = mur_lower(g, opts, &stats);
                    if (search.value == f->value) lower = std::move(search);
                }
                result = detail::finish(lower.value, lower.certificate, f->value, cert, stats);
            }
            done = true;
        }
    }
    if (!done) {
        LowerBound lower = mur_lower(g, opts, &stats);
        UpperBound upper = mur_upper(g, opts, lower.value, &stats);
        result = detail::finish(lower.value, std::move(lower.certificate), upper.value, std::move(upper.certificate),
                                stats);
    }
    if (opts.instantiate_spectral) result.spectral = instantiate_laplacian_shift(g);
    return result;
}

inline std::string summary(const MurResult& r) {
    const std::string lo = label(r.lower_certificate), up = label(r.upper_certificate);
    std::string out = r.exact ? "mur = " + std::to_string(r.lower) + " (exact)"
                              : "mur ∈ [" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
    out += lo == up ? " [" + lo + "]" : " [lower: " + lo + "; upper: " + up + "]";
    return out;
}

// ---------------------------------------------------------------- spread

struct SpreadResult {
    int vertex = 0;
    int degree = 0;
    int lo = 0, hi = 0;                // interval for mur(G) − mur(G − v)
    int bound_lo = 0, bound_hi = 0;    // max(−d, −(n−d−1)) .. min(d+2, n−d+1)
    bool exact = false;
    std::optional<int> value;
    bool consistent = true;  // the interval meets [bound_lo, bound_hi]
    MurResult whole;
    MurResult deleted;
};

inline SpreadResult mur_spread(const Graph& g, int v, const SearchOptions& opts = {}) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("mur_spread needs at least two vertices");
    if (v < 0 || v >= n) throw std::out_of_range("mur_spread: vertex out of range");
    SpreadResult s;
    s.vertex = v;
    s.degree = g.degree(v);
    s.whole = compute_mur(g, opts);
    s.deleted = compute_mur(delete_vertex(g, v), opts);
    s.lo = s.whole.lower - s.deleted.upper;
    s.hi = s.whole.upper - s.deleted.lower;
    s.exact = s.whole.exact && s.deleted.exact;
    if (s.exact) s.value = s.lo;
    s.bound_lo = std::max(-s.degree, -(n - s.degree - 1));
    s.bound_hi = std::min(s.degree + 2, n - s.degree + 1);
    s.consistent = s.lo <= s.bound_hi && s.hi >= s.bound_lo;
    return s;
}

}  // namespace murlab
