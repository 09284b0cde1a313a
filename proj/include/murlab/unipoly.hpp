#pragma once

#include "murlab/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace murlab {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    /// c * x^k
    static UniPoly monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }
    /// x - r
    static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    [[nodiscard]] const Rational& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    [[nodiscard]] UniPoly monic() const {
        if (is_zero()) return {};
        UniPoly out = *this;
        const Rational lc = leading();
        for (auto& c : out.coeffs_) c /= lc;
        return out;
    }

    [[nodiscard]] Rational eval(const Rational& at) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    [[nodiscard]] UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
        return UniPoly(std::move(d));
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    UniPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(out));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Orders by degree, then coefficients from the leading term down.
    friend bool operator<(const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int k = a.degree(); k >= 0; --k) {
            const auto& x = a.coeffs_[static_cast<std::size_t>(k)];
            const auto& y = b.coeffs_[static_cast<std::size_t>(k)];
            if (x != y) return x < y;
        }
        return false;
    }

    /// Human-readable form in the variable `var`, e.g. "x^4 - 4*x^2".
    [[nodiscard]] std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            const Rational mag = abs(c);
            if (first) {
                if (c.sign() < 0) os << "-";
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            const bool unit = mag.is_one();
            if (k == 0) {
                os << mag;
            } else {
                if (!unit) os << mag << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

/// Polynomial long division: a = q*b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    const Rational& lb = b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const Rational f = rem[k] / lb;
        quot[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
    }
    rem.resize(db);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

/// Quotient of a division expected to be exact.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct ExtendedGcd {
    UniPoly gcd;  // monic
    UniPoly s;    // s*a + t*b = gcd
    UniPoly t;
};

inline ExtendedGcd poly_xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {UniPoly{}, UniPoly{}, UniPoly{}};
    const Rational lc = r0.leading();
    const Rational inv = Rational(1) / lc;
    return {r0 * inv, s0 * inv, t0 * inv};
}

struct SquarefreeFactor {
    UniPoly factor;  // monic, squarefree
    int multiplicity;
    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. Returns monic, squarefree, pairwise coprime factors with
/// strictly increasing multiplicities; p = lc(p) * prod factor^multiplicity.
/// A nonzero constant yields an empty list.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;
    const UniPoly f = p.monic();
    const UniPoly df = f.derivative();
    const UniPoly a0 = poly_gcd(f, df);
    UniPoly b = exact_div(f, a0);
    UniPoly c = exact_div(df, a0);
    UniPoly d = c - b.derivative();
    int i = 1;
    while (!b.is_constant()) {
        UniPoly a = poly_gcd(b, d);
        if (!a.is_constant()) out.push_back({a, i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

inline int max_multiplicity(const std::vector<SquarefreeFactor>& parts) {
    int m = 0;
    for (const auto& part : parts) m = std::max(m, part.multiplicity);
    return m;
}

struct RootMultiplicity {
    int multiplicity;
    UniPoly quotient;  // p / (x - r)^multiplicity
};

/// Largest e with (x - r)^e dividing p, and the cofactor.
inline RootMultiplicity root_multiplicity(const UniPoly& p, const Rational& r) {
    if (p.is_zero()) throw std::invalid_argument("root multiplicity in the zero polynomial");
    RootMultiplicity out{0, p};
    while (out.quotient.degree() >= 1) {
        // synthetic division by (x - r)
        const auto& cs = out.quotient.coeffs();
        std::vector<Rational> q(cs.size() - 1);
        Rational carry(0);
        for (std::size_t k = cs.size(); k-- > 1;) {
            carry = carry * r + cs[k];
            q[k - 1] = carry;
        }
        if (!(carry * r + cs[0]).is_zero()) break;
        out.quotient = UniPoly(std::move(q));
        ++out.multiplicity;
    }
    return out;
}

}  // namespace murlab
