#pragma once

#include "murlab/graph.hpp"
#include "murlab/matrix.hpp"

#include <string>
#include <vector>

namespace murlab {

/// Normalized universal-matrix parameters; α is fixed at 1.
template <class S>
struct ParamPoint {
    S beta;
    S gamma;
    S delta;
};

using RationalPoint = ParamPoint<Rational>;
using AlgebraicPoint = ParamPoint<AlgElement>;

inline bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.beta == b.beta && a.gamma == b.gamma && a.delta == b.delta;
}

/// Lexicographic order on (β, γ, δ).
inline bool operator<(const RationalPoint& a, const RationalPoint& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.delta < b.delta;
}

inline std::string to_string(const RationalPoint& p) {
    return "(" + p.beta.str() + "," + p.gamma.str() + "," + p.delta.str() + ")";
}

struct Preset {
    std::string name;
    Rational alpha, beta, gamma, delta;

    [[nodiscard]] RationalPoint normalized() const {
        if (alpha.is_zero()) throw std::invalid_argument("preset " + name + " has alpha = 0");
        return {beta / alpha, gamma / alpha, delta / alpha};
    }
};

/// Adjacency, Laplacian, signless Laplacian, Seidel and complement adjacency
/// as raw (α, β, γ, δ).
inline const std::vector<Preset>& presets() {
    static const std::vector<Preset> list = {
        {"adjacency", 1, 0, 0, 0},
        {"laplacian", -1, 0, 0, 1},
        {"signless-laplacian", 1, 0, 0, 1},
        {"seidel", -2, -1, 1, 0},
        {"complement-adjacency", -1, -1, 1, 0},
    };
    return list;
}

namespace detail {
inline void check_context(const Rational&, const Rational&, const Rational&) {}
inline void check_context(const AlgElement& a, const AlgElement& b, const AlgElement& c) {
    if (!AlgElement::same_context(a, b) || !AlgElement::same_context(a, c))
        throw std::invalid_argument("parameter point mixes algebraic contexts");
}
}  // namespace detail

/// U = A + βI + γJ + δD: diagonal β+γ+δdᵢ, edges 1+γ, non-edges γ.
template <class S>
Matrix<S> universal_matrix(const Graph& g, const ParamPoint<S>& p) {
    detail::check_context(p.beta, p.gamma, p.delta);
    const auto n = static_cast<std::size_t>(g.order());
    const S edge = p.gamma + Rational(1);
    std::vector<S> data;
    data.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                data.push_back(p.beta + p.gamma + p.delta * Rational(g.degree(static_cast<int>(i))));
            else
                data.push_back(g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? edge : p.gamma);
        }
    return Matrix<S>(n, n, std::move(data));
}

/// U with β, γ, δ left as polynomial variables.
inline PMatrix symbolic_universal_matrix(const Graph& g) {
    const auto b = MultiPoly3::beta(), c = MultiPoly3::gamma(), d = MultiPoly3::delta();
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<MultiPoly3> data;
    data.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                data.push_back(b + c + d * MultiPoly3(Rational(g.degree(static_cast<int>(i)))));
            else
                data.push_back(g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? c + MultiPoly3(Rational(1)) : c);
        }
    return PMatrix(n, n, std::move(data));
}

/// p' with U_{complement(G)}(p') = −U_G(p), so both matrices have equal rank.
template <class S>
ParamPoint<S> complement_params(const Graph& g, const ParamPoint<S>& p) {
    detail::check_context(p.beta, p.gamma, p.delta);
    const Rational n_minus_1(g.order() - 1);
    return {-(p.beta + Rational(-1) + p.delta * n_minus_1), -(p.gamma + Rational(1)), p.delta};
}

}  // namespace murlab
