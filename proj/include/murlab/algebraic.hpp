#pragma once

#include "murlab/unipoly.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>

namespace murlab {

/// Q[x]/(f) for a squarefree f of degree >= 1. The modulus is stored monic.
/// f need not be irreducible; zero divisors are handled by splitting.
class AlgContext {
public:
    explicit AlgContext(const UniPoly& modulus) : modulus_(modulus.monic()) {
        if (modulus_.degree() < 1) throw std::invalid_argument("algebraic modulus must have degree >= 1");
        if (!poly_gcd(modulus_, modulus_.derivative()).is_constant())
            throw std::invalid_argument("algebraic modulus must be squarefree: " + modulus_.str());
    }

    static std::shared_ptr<const AlgContext> make(const UniPoly& modulus) {
        return std::make_shared<const AlgContext>(modulus);
    }

    [[nodiscard]] const UniPoly& modulus() const { return modulus_; }
    [[nodiscard]] int degree() const { return modulus_.degree(); }

private:
    UniPoly modulus_;
};

using AlgContextPtr = std::shared_ptr<const AlgContext>;

/// Element of Q[x]/(f); the representative is kept reduced modulo f.
class AlgElement {
public:
    AlgElement(AlgContextPtr ctx, const UniPoly& rep) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("algebraic element without context");
        rep_ = rep % ctx_->modulus();
    }
    AlgElement(AlgContextPtr ctx, const Rational& c) : AlgElement(std::move(ctx), UniPoly::constant(c)) {}

    /// The class of x, i.e. the symbolic root of the modulus.
    static AlgElement generator(const AlgContextPtr& ctx) { return {ctx, UniPoly::x()}; }

    [[nodiscard]] const UniPoly& rep() const { return rep_; }
    [[nodiscard]] const AlgContextPtr& context() const { return ctx_; }
    [[nodiscard]] bool is_zero() const { return rep_.is_zero(); }

    /// Same element as a constant `c` of this element's context.
    [[nodiscard]] AlgElement lift(const Rational& c) const { return {ctx_, c}; }

    AlgElement& operator+=(const AlgElement& o) {
        check_same(o);
        rep_ += o.rep_;
        return *this;
    }
    AlgElement& operator-=(const AlgElement& o) {
        check_same(o);
        rep_ -= o.rep_;
        return *this;
    }
    AlgElement& operator*=(const AlgElement& o) {
        check_same(o);
        rep_ = (rep_ * o.rep_) % ctx_->modulus();
        return *this;
    }
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(AlgElement a, const AlgElement& b) { return a *= b; }
    friend AlgElement operator-(AlgElement a) {
        a.rep_ = -a.rep_;
        return a;
    }
    friend AlgElement operator+(AlgElement a, const Rational& c) { return a += a.lift(c); }
    friend AlgElement operator*(AlgElement a, const Rational& c) {
        a.rep_ *= c;
        return a;
    }

    friend bool operator==(const AlgElement& a, const AlgElement& b) {
        return same_context(a, b) && a.rep_ == b.rep_;
    }

    static bool same_context(const AlgElement& a, const AlgElement& b) {
        return a.ctx_ == b.ctx_ || a.ctx_->modulus() == b.ctx_->modulus();
    }

private:
    void check_same(const AlgElement& o) const {
        if (!same_context(*this, o)) throw std::invalid_argument("mixed algebraic contexts");
    }

    AlgContextPtr ctx_;
    UniPoly rep_;
};

/// The modulus factors as first * second, with `first` = gcd(rep, modulus).
/// The element vanishes on the `first` branch and is invertible on `second`.
struct Split {
    UniPoly first;
    UniPoly second;
};

/// Inverse in Q[x]/(f) by extended Euclid, or a splitting of f when the
/// element is a zero divisor. Throws on the zero element.
inline std::variant<AlgElement, Split> alg_invert(const AlgElement& a) {
    if (a.is_zero()) throw std::domain_error("inverting the zero algebraic element");
    const UniPoly& f = a.context()->modulus();
    ExtendedGcd eg = poly_xgcd(a.rep(), f);
    if (eg.gcd.is_constant()) return AlgElement(a.context(), eg.s);
    return Split{eg.gcd, exact_div(f, eg.gcd)};
}

/// Inverse that must exist; throws when the element is a zero divisor.
inline AlgElement alg_inverse_or_throw(const AlgElement& a) {
    auto r = alg_invert(a);
    if (auto* inv = std::get_if<AlgElement>(&r)) return *inv;
    const auto& s = std::get<Split>(r);
    throw std::domain_error("zero divisor; modulus splits as (" + s.first.str() + ")*(" + s.second.str() + ")");
}

inline AlgElement operator/(const AlgElement& a, const AlgElement& b) { return a * alg_inverse_or_throw(b); }

}  // namespace murlab
