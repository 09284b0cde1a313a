// Acceptance harness: one PASS/FAIL line per criterion.
//
//   acceptance                       run every criterion
//   acceptance --criterion NAME      run one criterion
//   acceptance --list                list criterion names
//
// Exit status is 0 only if every selected criterion passes.

#include "murlab/murlab.hpp"

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace murlab;

namespace {

// Pinned tolerances. Integer values compare exactly; these are the only knobs.
constexpr std::uint64_t kSeed = 42;
constexpr int kPropertyTrials = 100;
constexpr int kLaplacianGraphs = 50;
constexpr int kColumnSpaceMatrices = 50;
constexpr double kCorpusSeconds = 300.0;

struct Outcome {
    bool passed = true;
    int checks = 0;
    std::string failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        passed = false;
        if (failures.size() < 400) failures += (failures.empty() ? "" : "; ") + what;
    }
};

std::string show(const MurResult& r) {
    return r.exact ? std::to_string(*r.value) : "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

void expect_mur(Outcome& o, const std::string& name, const Graph& g, int expected) {
    const auto r = compute_mur(g);
    o.expect(r.exact && *r.value == expected, name + " = " + show(r) + " (want " + std::to_string(expected) + ")");
}

std::vector<Graph> corpus(const std::string& file) {
    std::ifstream in(std::string(MURLAB_TEST_DATA) + "/" + file);
    std::vector<Graph> out;
    for (std::string t; in >> t;) out.push_back(parse_graph6(t));
    return out;
}

Rational random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return {num(rng), den(rng)};
}

// ------------------------------------------------------------------ 1. families

Outcome families_paths() {
    Outcome o;
    for (int n = 3; n <= 12; ++n) expect_mur(o, "P" + std::to_string(n), gen::path(n), n - 2);
    return o;
}

Outcome families_path_unions() {
    Outcome o;
    for (int n = 4; n <= 10; ++n)
        expect_mur(o, "P" + std::to_string(n - 1) + "∪P1", gen::disjoint_union({gen::path(n - 1), gen::empty(1)}), n - 2);
    for (int n = 3; n <= 7; ++n)
        expect_mur(o, "P" + std::to_string(n) + "∪P" + std::to_string(n), gen::copies(2, gen::path(n)), 2 * n - 3);
    return o;
}

Outcome families_cycles() {
    Outcome o;
    for (int n = 3; n <= 12; ++n) expect_mur(o, "C" + std::to_string(n), gen::cycle(n), n - 3);
    for (int k = 1; k <= 3; ++k)
        for (int n = 3; n <= 5; ++n)
            expect_mur(o, std::to_string(k) + "C" + std::to_string(n), gen::copies(k, gen::cycle(n)), k * n - 2 * k - 1);
    return o;
}

Outcome families_complete() {
    Outcome o;
    for (int n = 1; n <= 10; ++n) {
        expect_mur(o, "K" + std::to_string(n), gen::complete(n), 0);
        expect_mur(o, "empty" + std::to_string(n), gen::empty(n), 0);
    }
    return o;
}

Outcome families_mur1() {
    Outcome o;
    for (int a = 1; a <= 9; ++a)
        for (int b = a; a + b <= 10; ++b) {
            if (b == 1) continue;  // K1 ∪ K1 is empty
            const Graph g = gen::disjoint_union({gen::complete(a), gen::complete(b)});
            const std::string name = "K" + std::to_string(a) + "∪K" + std::to_string(b);
            expect_mur(o, name, g, 1);
            expect_mur(o, "co-(" + name + ")", complement(g), 1);
        }
    for (int r = 2; r <= 9; ++r)
        for (int s = 1; r + s <= 10; ++s) {
            const Graph g = gen::disjoint_union({gen::complete(r), gen::empty(s)});
            const std::string name = "K" + std::to_string(r) + "∪" + std::to_string(s) + "K1";
            expect_mur(o, name, g, 1);
            expect_mur(o, "co-(" + name + ")", complement(g), 1);
        }
    for (int n = 2; n <= 8; ++n)
        expect_mur(o, "K" + std::to_string(n) + "∪K1∪K1",
                   gen::disjoint_union({gen::complete(n), gen::complete(1), gen::complete(1)}), 1);
    return o;
}

void partitions(int left, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.size() >= 2) out.push_back(cur);
    for (int p = min_part; p <= left; ++p) {
        cur.push_back(p);
        partitions(left - p, p, cur, out);
        cur.pop_back();
    }
}

Outcome families_union_of_cliques() {
    Outcome o;
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    partitions(12, 2, cur, all);
    for (const auto& sizes : all) {
        std::vector<Graph> cliques;
        std::string name;
        for (int s : sizes) {
            cliques.push_back(gen::complete(s));
            name += (name.empty() ? "" : ",") + std::to_string(s);
        }
        const int k = static_cast<int>(sizes.size());
        expect_mur(o, "∪K{" + name + "}", gen::disjoint_union(cliques), k - 1);
        expect_mur(o, "K{" + name + "}", gen::complete_multipartite(sizes), k - 1);
    }
    return o;
}

Outcome families_clique_join_vertex() {
    Outcome o;
    for (int r = 0; r <= 10; ++r)
        for (int s = 0; r + s <= 10; ++s) {
            if (s - r + 1 == 0) continue;
            int want = 2;
            if (s == 0 || (s == 1 && r == 0)) want = 0;
            else if (r <= 1) want = 1;
            expect_mur(o, "(K" + std::to_string(r) + "∪" + std::to_string(s) + "K1)∨v",
                       gen::clique_plus_isolated_join_v(r, s), want);
        }
    for (int r = 4; r <= 6; ++r)
        expect_mur(o, "(K" + std::to_string(r) + "∪" + std::to_string(r - 1) + "K1)∨v",
                   gen::clique_plus_isolated_join_v(r, r - 1), 3);
    const auto small = compute_mur(gen::clique_plus_isolated_join_v(4, 3));
    const auto big = compute_mur(gen::clique_plus_isolated_join_v(4, 4));
    o.expect(small.exact && big.exact && *small.value == 3 && *big.value == 2 && *small.value > *big.value,
             "monotonicity counterexample: " + show(small) + " vs " + show(big));
    return o;
}

Outcome families_cycle_union_gap() {
    Outcome o;
    for (int k = 1; k <= 2; ++k) {
        const Graph c3 = gen::copies(k, gen::cycle(3)), c4 = gen::copies(k, gen::cycle(4));
        const auto u = compute_mur(gen::disjoint_union({c3, c4}));
        const auto a = compute_mur(c3), b = compute_mur(c4);
        const std::string name = std::to_string(k) + "C3∪" + std::to_string(k) + "C4";
        o.expect(u.exact && *u.value == 5 * k - 1, name + " = " + show(u));
        o.expect(u.exact && a.exact && b.exact && *u.value - *a.value - *b.value == 2 * k + 1,
                 name + " gap over " + show(a) + "+" + show(b));
    }
    return o;
}

// ------------------------------------------------------------------ 2. pendant-extended paths

Outcome pprime_rational() {
    Outcome o;
    auto check = [&](int n, const RationalPoint& p) {
        const Graph g = gen::p_prime(n);
        const std::string name = "P'" + std::to_string(n);
        const auto rank = rank_rational(universal_matrix(g, p));
        o.expect(static_cast<int>(rank) == n - 2, name + " rank at " + to_string(p) + " = " + std::to_string(rank));
        const auto path = longest_induced_path(g);
        o.expect(path.length() - 2 == n - 2, name + " induced path bound " + std::to_string(path.length() - 2));
        const auto r = compute_mur(g);
        o.expect(r.exact && *r.value == n - 2, name + " pipeline " + show(r));
    };
    for (int n : {6, 9, 12}) check(n, {1, Rational(-1, n + 1), -1});
    for (int n : {7, 11}) check(n, {0, Rational(-2, n + 1), 0});
    return o;
}

Outcome pprime_algebraic() {
    Outcome o;
    {
        // θ² = θ + 1; β = −θ, γ = 1/(3θ − 5), δ = θ
        const auto ctx = AlgContext::make(UniPoly{-1, -1, 1});
        const auto t = AlgElement::generator(ctx);
        const AlgebraicPoint p{-t, alg_inverse_or_throw(t * Rational(3) + Rational(-5)), t};
        const auto branches = rank_algebraic(universal_matrix(gen::p_prime(8), p));
        std::size_t degree = 0;
        for (const auto& b : branches) {
            degree += static_cast<std::size_t>(b.modulus.degree());
            o.expect(b.rank == 6, "P'8 branch " + b.modulus.str() + " rank " + std::to_string(b.rank));
        }
        o.expect(degree == 2, "P'8 branches cover both roots");
    }
    {
        // θ³ − θ² − 2θ + 1 = 0; β = −θ, γ = −1/(θ² − 5θ + 6), δ = θ
        const auto ctx = AlgContext::make(UniPoly{1, -2, -1, 1});
        const auto t = AlgElement::generator(ctx);
        const AlgebraicPoint p{-t, -alg_inverse_or_throw(t * t + t * Rational(-5) + Rational(6)), t};
        const auto branches = rank_algebraic(universal_matrix(gen::p_prime(10), p));
        std::size_t degree = 0;
        for (const auto& b : branches) {
            degree += static_cast<std::size_t>(b.modulus.degree());
            o.expect(b.rank == 8, "P'10 branch " + b.modulus.str() + " rank " + std::to_string(b.rank));
        }
        o.expect(degree == 3, "P'10 branches cover all three roots");
    }
    return o;
}

Outcome pprime_small_intervals() {
    Outcome o;
    for (int n : {4, 5}) {
        const auto r = compute_mur(gen::p_prime(n));
        o.expect(!r.exact && r.lower == n - 2 && r.upper == n - 1,
                 "P'" + std::to_string(n) + " = " + show(r) + " (want interval [" + std::to_string(n - 2) + "," +
                     std::to_string(n - 1) + "])");
    }
    return o;
}

// ------------------------------------------------------------------ 3. properties

Outcome complement_transfer() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    for (const Graph& g : corpus("small_graphs.g6")) {
        if (g.order() > 6) continue;
        const Graph gc = complement(g);
        for (int t = 0; t < kPropertyTrials; ++t) {
            const RationalPoint p{random_q(rng), random_q(rng), random_q(rng)};
            const auto a = rank_rational(universal_matrix(g, p));
            const auto b = rank_rational(universal_matrix(gc, complement_params(g, p)));
            o.expect(a == b, encode_graph6(g) + " at " + to_string(p));
        }
    }
    return o;
}

/// Components by union-find over the edge list.
int count_components(const Graph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return parent[static_cast<std::size_t>(v)] == v ? v
                                                        : parent[static_cast<std::size_t>(v)] =
                                                              find(parent[static_cast<std::size_t>(v)]);
    };
    int count = g.order();
    for (auto [u, v] : g.edges()) {
        const int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --count;
        }
    }
    return count;
}

Outcome laplacian_kernel() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 1);
    for (int t = 0; t < kLaplacianGraphs; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = gen::random_graph(rng, n, 0.25);
        QMatrix l(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Rational(0));
        for (auto [u, v] : g.edges()) {
            const auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
            l(a, b) = l(b, a) = -1;
            l(a, a) += 1;
            l(b, b) += 1;
        }
        const auto rank = rank_rational(l);
        o.expect(static_cast<int>(rank) == n - count_components(g), encode_graph6(g));
    }
    return o;
}

Outcome column_space() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 2);
    int applicable = 0;
    for (int t = 0; t < kColumnSpaceMatrices; ++t) {
        const std::size_t n = 2 + rng() % 7;
        const std::size_t k = 1 + rng() % (n - 1);
        QMatrix x(n, k, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) x(i, j) = random_q(rng);
        QMatrix d(k, k, Rational(0));
        for (std::size_t j = 0; j < k; ++j) d(j, j) = random_q(rng);
        const QMatrix a = x * d * x.transpose();  // symmetric, rank < n
        o.expect(a.symmetric() && rank_rational(a) < n, "construction is singular symmetric");
        const std::vector<Rational> e(n, Rational(1));
        if (in_column_space(a, e)) continue;
        ++applicable;
        Rational gamma = random_q(rng);
        if (gamma.is_zero()) gamma = Rational(1, 3);
        o.expect(in_column_space(a + gamma * QMatrix(n, n, Rational(1)), e),
                 "trial " + std::to_string(t) + " gamma " + gamma.str());
    }
    o.expect(applicable > 0, "no applicable matrices");
    return o;
}

std::vector<Graph> exact_family_corpus() {
    std::vector<Graph> out;
    for (int n = 3; n <= 8; ++n) out.push_back(gen::path(n));
    for (int n = 3; n <= 8; ++n) out.push_back(gen::cycle(n));
    for (int n = 2; n <= 7; ++n) out.push_back(gen::complete(n));
    for (int n = 3; n <= 7; ++n) out.push_back(gen::star(n));
    for (int r = 2; r <= 4; ++r)
        for (int s = r; s <= 4; ++s) out.push_back(gen::complete_bipartite(r, s));
    out.push_back(gen::complete_multipartite({2, 2, 2}));
    out.push_back(gen::disjoint_union({gen::complete(3), gen::complete(3)}));
    out.push_back(gen::disjoint_union({gen::complete(4), gen::empty(2)}));
    out.push_back(gen::clique_plus_isolated_join_v(3, 3));
    out.push_back(gen::clique_plus_isolated_join_v(4, 3));
    out.push_back(gen::clique_plus_isolated_join_v(4, 4));
    out.push_back(gen::petersen());
    return out;
}

Outcome spread_bounds() {
    Outcome o;
    int exact = 0;
    for (const Graph& g : exact_family_corpus()) {
        const int n = g.order();
        const auto whole = compute_mur(g);
        for (int v = 0; v < n; ++v) {
            const int d = g.degree(v);
            const auto part = compute_mur(delete_vertex(g, v));
            const int lo = std::max(-d, -(n - d - 1)), hi = std::min(d + 2, n - d + 1);
            const std::string name = encode_graph6(g) + " v" + std::to_string(v);
            if (whole.exact && part.exact) {
                ++exact;
                const int spread = *whole.value - *part.value;
                o.expect(lo <= spread && spread <= hi, name + " spread " + std::to_string(spread));
            } else {
                o.expect(whole.lower - part.upper <= hi && whole.upper - part.lower >= lo, name + " interval");
            }
        }
    }
    o.expect(exact > 100, "too few exact spreads: " + std::to_string(exact));
    return o;
}

Outcome spread_examples() {
    Outcome o;
    auto check = [&](const std::string& name, const Graph& g, int v, int want) {
        const auto s = mur_spread(g, v);
        o.expect(s.exact && *s.value == want, name + " spread " +
                                                  (s.exact ? std::to_string(*s.value)
                                                           : "[" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]") +
                                                  " (want " + std::to_string(want) + ")");
    };
    check("(K4∪4K1)∨v at an independent vertex", gen::clique_plus_isolated_join_v(4, 4), 4, -1);
    check("K1,4 at a leaf", gen::star(5), 1, 0);
    check("P5 at an endpoint", gen::path(5), 0, 1);
    // degree sequence 1,1,1,2,3; the far pendant of the length-two arm
    check("generalized star at the far pendant", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}), 4, 2);
    return o;
}

Outcome regular_monotonicity() {
    Outcome o;
    std::vector<Graph> graphs;
    for (int n = 4; n <= 10; ++n) graphs.push_back(gen::cycle(n));
    for (int n = 3; n <= 8; ++n) graphs.push_back(gen::complete(n));
    for (int r = 2; r <= 5; ++r) graphs.push_back(gen::complete_bipartite(r, r));
    for (const Graph& g : graphs) {
        const auto whole = compute_mur(g);
        o.expect(whole.exact, encode_graph6(g) + " not exact");
        for (int v = 0; v < g.order(); ++v) {
            const auto part = compute_mur(delete_vertex(g, v));
            o.expect(part.upper <= whole.lower,
                     encode_graph6(g) + " minus v" + std::to_string(v) + ": " + show(part) + " vs " + show(whole));
        }
    }
    return o;
}

Outcome corpus_sanity() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto seven = corpus("graphs7.g6");
    o.expect(seven.size() == 1044, "corpus size " + std::to_string(seven.size()));
    int exact = 0;
    for (const Graph& g : seven) {
        const auto r = compute_mur(g);
        exact += r.exact;
        o.expect(r.lower <= r.upper && r.upper <= g.order() - 2, encode_graph6(g) + " " + show(r));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < kCorpusSeconds, "7-vertex corpus took " + std::to_string(secs) + " s");
    for (const Graph& g : corpus("small_graphs.g6")) {
        if (g.order() >= 7 || g.order() < 2) continue;
        const auto r = compute_mur(g);
        o.expect(r.lower <= r.upper && r.upper <= g.order() - 2, encode_graph6(g) + " " + show(r));
    }
    std::cout << "  7-vertex corpus: " << exact << "/1044 exact in " << secs << " s\n";
    return o;
}

// ------------------------------------------------------------------ 4. spectrum

Outcome petersen() {
    Outcome o;
    const Graph g = gen::petersen();
    UniPoly expected = UniPoly::linear_root(3);
    for (int k = 0; k < 5; ++k) expected *= UniPoly::linear_root(1);
    for (int k = 0; k < 4; ++k) expected *= UniPoly::linear_root(-2);
    o.expect(charpoly(g.adjacency_matrix()) == expected, "charpoly is not (x-3)(x-1)^5(x+2)^4");
    expect_mur(o, "Petersen", g, 4);
    return o;
}

Outcome charpoly_c4() {
    Outcome o;
    const UniPoly p = charpoly(gen::cycle(4).adjacency_matrix());
    o.expect(p == UniPoly({0, 0, -4, 0, 1}), "charpoly(C4) = " + p.str());
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> table = {
        {"families-paths", families_paths},
        {"families-path-unions", families_path_unions},
        {"families-cycles", families_cycles},
        {"families-complete", families_complete},
        {"families-mur1", families_mur1},
        {"families-union-of-cliques", families_union_of_cliques},
        {"families-clique-join-vertex", families_clique_join_vertex},
        {"families-cycle-union-gap", families_cycle_union_gap},
        {"pprime-rational", pprime_rational},
        {"pprime-algebraic", pprime_algebraic},
        {"pprime-small-intervals", pprime_small_intervals},
        {"complement-transfer", complement_transfer},
        {"laplacian-kernel", laplacian_kernel},
        {"column-space", column_space},
        {"spread-bounds", spread_bounds},
        {"spread-examples", spread_examples},
        {"regular-monotonicity", regular_monotonicity},
        {"corpus-sanity", corpus_sanity},
        {"petersen", petersen},
        {"charpoly-c4", charpoly_c4},
    };
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--list") == 0) {
            for (const auto& [name, fn] : criteria()) std::cout << name << "\n";
            return 0;
        }
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = argv[++i];
            continue;
        }
        std::cerr << "usage: acceptance [--criterion NAME | --list]\n";
        return 2;
    }
    bool all_passed = true, found = false;
    for (const auto& [name, fn] : criteria()) {
        if (!only.empty() && name != only) continue;
        found = true;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.passed ? "PASS " : "FAIL ") << name << " (" << o.checks << " checks, " << secs << " s)";
        if (!o.passed) std::cout << ": " << o.failures;
        std::cout << std::endl;
        all_passed = all_passed && o.passed;
    }
    if (!found) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return 2;
    }
    return all_passed ? 0 : 1;
}
