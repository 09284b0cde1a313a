#pragma once

#include "murlab/algebraic.hpp"
#include "murlab/matrix.hpp"
#include "murlab/unipoly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace murlab {

namespace detail {

/// Clears denominators row by row, giving an integer matrix with the same rank.
inline std::vector<std::vector<mpz_class>> integer_rows(const QMatrix& m) {
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    return out;
}

/// Fraction-free row echelon reduction in place. Pivot = first nonzero entry
/// in column order. Returns the rank; for a square input `sign_det` receives
/// the determinant (zero when singular).
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>>& a, std::size_t cols, mpz_class* sign_det = nullptr) {
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    std::size_t rank = 0;
    int sign = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        if (p != rank) {
            std::swap(a[p], a[rank]);
            sign = -sign;
        }
        const mpz_class& piv = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_class f = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = piv * a[i][j] - f * a[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    if (sign_det) *sign_det = rank == rows && rows == cols ? mpz_class(sign * prev) : mpz_class(0);
    return rank;
}

}  // namespace detail

/// Exact rank over Q via fraction-free (Bareiss) elimination.
inline std::size_t rank_rational(const QMatrix& m) {
    auto a = detail::integer_rows(m);
    return detail::bareiss_rank(a, m.cols());
}

/// Exact determinant over Q via fraction-free elimination.
inline Rational determinant(const QMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
        scale *= l;
    }
    auto a = detail::integer_rows(m);
    mpz_class det;
    detail::bareiss_rank(a, m.cols(), &det);
    return Rational(det, scale);
}

/// Monic characteristic polynomial det(xI - m) via the Faddeev-LeVerrier
/// trace recursion, exact over Q.
inline UniPoly charpoly(const QMatrix& m) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    QMatrix acc(n, n, Rational(0));  // M_k
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
        // c_{n-k} = -tr(m * M_k) / k
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) tr += m(i, j) * acc(j, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

/// True iff m * x = v has a rational solution.
inline bool in_column_space(const QMatrix& m, std::span<const Rational> v) {
    if (v.size() != m.rows()) throw std::invalid_argument("column-space test dimension mismatch");
    std::vector<Rational> aug;
    aug.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.push_back(m(i, j));
        aug.push_back(v[i]);
    }
    return rank_rational(m) == rank_rational(QMatrix(m.rows(), m.cols() + 1, std::move(aug)));
}

// ---------------------------------------------------------------------------
// Modular rank, used as a filter: for an integer matrix reduced mod p,
// rank_p <= rank_Q, so rank_p never overstates the rational rank.

inline constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(prod & kFilterPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kFilterPrime) s -= kFilterPrime;
    return s;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b);
        b = mulmod(b, b);
        e >>= 1;
    }
    return r;
}

/// Image of a rational in Z/pZ, or nullopt when p divides the denominator.
inline std::optional<std::uint64_t> to_mod_p(const Rational& r) {
    const unsigned long d = mpz_fdiv_ui(r.den().get_mpz_t(), kFilterPrime);
    if (d == 0) return std::nullopt;
    const unsigned long n = mpz_fdiv_ui(r.num().get_mpz_t(), kFilterPrime);
    return mulmod(n, powmod(d, kFilterPrime - 2));
}

/// Rank of a square matrix over Z/pZ; `a` is destroyed.
inline std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p * cols + col] == 0) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(a[p * cols + j], a[rank * cols + j]);
        const std::uint64_t inv = powmod(a[rank * cols + col], kFilterPrime - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t f = mulmod(a[i * cols + col], inv);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                const std::uint64_t t = mulmod(f, a[rank * cols + j]);
                std::uint64_t& x = a[i * cols + j];
                x = x >= t ? x - t : x + kFilterPrime - t;
            }
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------

/// Rank over the rational function field Q(beta, gamma, delta), by
/// fraction-free elimination with full pivoting on the lowest-degree entry.
inline std::size_t rank_generic(const PMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<MultiPoly3>> a(rows, std::vector<MultiPoly3>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
    std::vector<std::size_t> colperm(cols);
    for (std::size_t j = 0; j < cols; ++j) colperm[j] = j;

    MultiPoly3 prev(1);
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        std::size_t pi = rows, pj = cols;
        int best = -1;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const auto& e = a[i][colperm[j]];
                if (e.is_zero()) continue;
                const int d = e.total_degree();
                if (best < 0 || d < best) {
                    best = d;
                    pi = i;
                    pj = j;
                }
            }
        if (best < 0) break;
        std::swap(a[pi], a[k]);
        std::swap(colperm[pj], colperm[k]);
        const MultiPoly3 piv = a[k][colperm[k]];
        for (std::size_t i = k + 1; i < rows; ++i) {
            const MultiPoly3 f = a[i][colperm[k]];
            for (std::size_t j = k + 1; j < cols; ++j) {
                const std::size_t c = colperm[j];
                a[i][c] = (piv * a[i][c] - f * a[k][c]).exact_div(prev);
            }
            a[i][colperm[k]] = MultiPoly3();
        }
        prev = piv;
    }
    return k;
}

// ---------------------------------------------------------------------------

struct AlgebraicRankBranch {
    UniPoly modulus;  // monic factor of the original modulus
    std::size_t rank;
    friend bool operator==(const AlgebraicRankBranch&, const AlgebraicRankBranch&) = default;
};

namespace detail {

struct AlgElim {
    std::size_t rows, cols;
    std::vector<UniPoly> a;  // representatives, row-major
    UniPoly& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

inline void eliminate_branch(AlgElim m, const UniPoly& f, std::size_t r, std::size_t col, std::size_t rank,
                             std::vector<AlgebraicRankBranch>& out) {
    for (; col < m.cols && r < m.rows; ++col) {
        std::size_t pivot = m.rows;
        for (std::size_t i = r; i < m.rows; ++i) {
            UniPoly& e = m.at(i, col);
            e = e % f;
            if (e.is_zero()) continue;
            UniPoly g = poly_gcd(e, f);
            if (!g.is_constant()) {
                // zero divisor: restart from this state on each factor
                const UniPoly h = exact_div(f, g);
                eliminate_branch(m, g, r, col, rank, out);
                eliminate_branch(std::move(m), h, r, col, rank, out);
                return;
            }
            pivot = i;
            break;
        }
        if (pivot == m.rows) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const UniPoly inv = poly_xgcd(m.at(r, col), f).s;
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            UniPoly& lead = m.at(i, col);
            lead = lead % f;
            if (lead.is_zero()) continue;
            const UniPoly factor = (lead * inv) % f;
            for (std::size_t j = col + 1; j < m.cols; ++j) m.at(i, j) = (m.at(i, j) - factor * m.at(r, j)) % f;
            lead = UniPoly();
        }
        ++r;
        ++rank;
    }
    out.push_back({f, rank});
}

}  // namespace detail

/// Rank over Q[x]/(f) by Gaussian elimination with dynamic evaluation: when a
/// candidate pivot is a zero divisor the modulus is split and each factor is
/// finished separately. Branch moduli are pairwise coprime, multiply to the
/// context modulus, and are returned sorted.
inline std::vector<AlgebraicRankBranch> rank_algebraic(const AMatrix& m) {
    if (m.data().empty()) return {};
    const AlgContextPtr& ctx = m.data().front().context();
    detail::AlgElim e{m.rows(), m.cols(), {}};
    e.a.reserve(m.data().size());
    for (const auto& x : m.data()) {
        if (!AlgElement::same_context(x, m.data().front())) throw std::invalid_argument("mixed algebraic contexts");
        e.a.push_back(x.rep());
    }
    std::vector<AlgebraicRankBranch> out;
    detail::eliminate_branch(std::move(e), ctx->modulus(), 0, 0, 0, out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.modulus < y.modulus; });
    return out;
}

}  // namespace murlab
