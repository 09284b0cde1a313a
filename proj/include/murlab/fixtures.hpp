#pragma once

#include "murlab/bounds.hpp"
#include "murlab/generators.hpp"
#include "murlab/linalg.hpp"
#include "murlab/mur.hpp"
#include "murlab/params.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace murlab {

struct FixtureReport {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;

    void expect(bool ok, const std::string& what) {
        passed = passed && ok;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

namespace detail {

/// U(P'_n) with β = −θ, δ = θ and the given γ, ranked on every branch of the modulus.
inline void check_algebraic_pprime(FixtureReport& rep, int n, const UniPoly& modulus,
                                   const std::function<AlgElement(const AlgElement&)>& gamma_of, int expected) {
    const auto ctx = AlgContext::make(modulus);
    const auto theta = AlgElement::generator(ctx);
    const AlgebraicPoint p{-theta, gamma_of(theta), theta};
    const auto branches = rank_algebraic(universal_matrix(gen::p_prime(n), p));
    rep.expect(!branches.empty(), "elimination produced branches");
    for (const auto& b : branches)
        rep.expect(static_cast<int>(b.rank) == expected, "branch " + b.modulus.str("t") + ": rank " +
                                                             std::to_string(b.rank) + " (expected " +
                                                             std::to_string(expected) + ")");
    const auto lower = mur_lower(gen::p_prime(n));
    rep.expect(lower.value == expected,
               "lower bound " + std::to_string(lower.value) + " from " + label(lower.certificate));
}

inline void check_rational_rank(FixtureReport& rep, const std::string& what, const Graph& g, const RationalPoint& p,
                                int expected) {
    const int r = static_cast<int>(rank_rational(universal_matrix(g, p)));
    rep.expect(r == expected, what + " at " + to_string(p) + ": rank " + std::to_string(r) + " (expected " +
                                  std::to_string(expected) + ")");
}

}  // namespace detail

inline const std::map<std::string, std::function<void(FixtureReport&)>>& fixture_table() {
    static const std::map<std::string, std::function<void(FixtureReport&)>> table = {
        {"pprime8-golden",
         [](FixtureReport& rep) {
             // γ = 1/(3θ − 5) with θ² = θ + 1
             detail::check_algebraic_pprime(
                 rep, 8, UniPoly{-1, -1, 1},
                 [](const AlgElement& t) { return alg_inverse_or_throw(t * Rational(3) + Rational(-5)); }, 6);
         }},
        {"pprime10-heptagon",
         [](FixtureReport& rep) {
             // θ = −2cos(2πk/7), γ = −1/(θ² − 5θ + 6)
             detail::check_algebraic_pprime(
                 rep, 10, UniPoly{1, -2, -1, 1},
                 [](const AlgElement& t) {
                     return -alg_inverse_or_throw(t * t + t * Rational(-5) + Rational(6));
                 },
                 8);
         }},
        {"path-laplacian-shift",
         [](FixtureReport& rep) {
             detail::check_rational_rank(rep, "P3", gen::path(3), {1, Rational(-1, 3), -1}, 1);
         }},
        {"pprime-rational-thirds",
         [](FixtureReport& rep) {
             for (int n : {6, 9, 12}) {
                 const Graph g = gen::p_prime(n);
                 detail::check_rational_rank(rep, "P'" + std::to_string(n), g, {1, Rational(-1, n + 1), -1}, n - 2);
                 const auto lower = mur_lower(g);
                 rep.expect(lower.value == n - 2, "P'" + std::to_string(n) + " lower bound " +
                                                      std::to_string(lower.value) + " from " + label(lower.certificate));
             }
         }},
        {"pprime-rational-quarters",
         [](FixtureReport& rep) {
             for (int n : {7, 11}) {
                 const Graph g = gen::p_prime(n);
                 detail::check_rational_rank(rep, "P'" + std::to_string(n), g, {0, Rational(-2, n + 1), 0}, n - 2);
                 const auto lower = mur_lower(g);
                 rep.expect(lower.value == n - 2, "P'" + std::to_string(n) + " lower bound " +
                                                      std::to_string(lower.value) + " from " + label(lower.certificate));
             }
         }},
        {"generalized-star",
         [](FixtureReport& rep) {
             // Tree with degree sequence 1,1,1,2,3: centre 0, leaves 1 and 2, path 0-3-4.
             const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
             const auto s = mur_spread(g, 4);
             rep.lines.push_back("info " + summary(s.whole));
             rep.lines.push_back("info after deleting the pendant: " + summary(s.deleted));
             rep.expect(s.exact && s.value == 2, "spread at the far pendant: [" + std::to_string(s.lo) + "," +
                                                     std::to_string(s.hi) + "] (expected exactly 2)");
         }},
    };
    return table;
}

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : fixture_table()) out.push_back(name);
    return out;
}

inline FixtureReport verify_fixture(const std::string& name) {
    const auto& table = fixture_table();
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown fixture: " + name);
    FixtureReport rep;
    rep.name = name;
    it->second(rep);
    return rep;
}

}  // namespace murlab
