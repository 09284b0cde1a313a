#pragma once

#include "murlab/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace murlab {

/// Sparse polynomial in the three universal-matrix parameters (beta, gamma,
/// delta). Exponent triples map to nonzero rational coefficients.
class MultiPoly3 {
public:
    using Exponent = std::array<std::uint16_t, 3>;
    enum Var : std::size_t { Beta = 0, Gamma = 1, Delta = 2 };

    MultiPoly3() = default;
    MultiPoly3(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[Exponent{0, 0, 0}] = c;
    }
    MultiPoly3(long c) : MultiPoly3(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly3 var(Var v) {
        MultiPoly3 p;
        Exponent e{0, 0, 0};
        e[v] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }
    static MultiPoly3 beta() { return var(Beta); }
    static MultiPoly3 gamma() { return var(Gamma); }
    static MultiPoly3 delta() { return var(Delta); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }

    [[nodiscard]] int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0] + e[1] + e[2]));
        return d;
    }

    [[nodiscard]] Rational eval(const Rational& b, const Rational& g, const Rational& d) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += c * pow(b, e[0]) * pow(g, e[1]) * pow(d, e[2]);
        return acc;
    }

    MultiPoly3& operator+=(const MultiPoly3& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly3& operator-=(const MultiPoly3& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly3 operator+(MultiPoly3 a, const MultiPoly3& b) { return a += b; }
    friend MultiPoly3 operator-(MultiPoly3 a, const MultiPoly3& b) { return a -= b; }
    friend MultiPoly3 operator-(const MultiPoly3& a) { return MultiPoly3() - a; }
    friend MultiPoly3 operator*(const MultiPoly3& a, const MultiPoly3& b) {
        MultiPoly3 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(Exponent{static_cast<std::uint16_t>(ea[0] + eb[0]),
                                      static_cast<std::uint16_t>(ea[1] + eb[1]),
                                      static_cast<std::uint16_t>(ea[2] + eb[2])},
                             ca * cb);
        return out;
    }
    MultiPoly3& operator*=(const MultiPoly3& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly3&, const MultiPoly3&) = default;

    /// Exact division in Q[beta, gamma, delta]; throws if `d` does not divide `*this`.
    /// Uses lex order on (beta, gamma, delta).
    [[nodiscard]] MultiPoly3 exact_div(const MultiPoly3& d) const {
        if (d.is_zero()) throw std::domain_error("multivariate division by zero");
        const auto& [lead_e, lead_c] = *d.terms_.rbegin();
        MultiPoly3 quotient;
        MultiPoly3 rem = *this;
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            Exponent qe{};
            for (std::size_t k = 0; k < 3; ++k) {
                if (re[k] < lead_e[k]) throw std::logic_error("inexact multivariate division");
                qe[k] = static_cast<std::uint16_t>(re[k] - lead_e[k]);
            }
            MultiPoly3 t;
            t.terms_[qe] = rc / lead_c;
            quotient += t;
            rem -= t * d;
        }
        return quotient;
    }

    [[nodiscard]] std::string str() const {
        if (is_zero()) return "0";
        static constexpr const char* names[3] = {"b", "g", "d"};
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
            first = false;
            const Rational mag = abs(c);
            const bool constant_term = e[0] + e[1] + e[2] == 0;
            bool need_star = false;
            if (!mag.is_one() || constant_term) {
                os << mag;
                need_star = true;
            }
            for (std::size_t k = 0; k < 3; ++k) {
                if (e[k] == 0) continue;
                if (need_star) os << "*";
                os << names[k];
                if (e[k] > 1) os << "^" << e[k];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    void add_term(const Exponent& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Exponent, Rational> terms_;
};

}  // namespace murlab
