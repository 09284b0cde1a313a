#pragma once

#include "murlab/bounds.hpp"
#include "murlab/fixtures.hpp"
#include "murlab/generators.hpp"
#include "murlab/graph_io.hpp"
#include "murlab/linalg.hpp"
#include "murlab/mur.hpp"
#include "murlab/params.hpp"
#include "murlab/replay.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace murlab {

struct CheckResult {
    std::string suite;
    std::string tag;  // the result being exercised
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteOptions {
    SearchOptions search;
    int trials = 100;
};

namespace detail {

class SuiteRun {
public:
    SuiteRun(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}
    void check(const std::string& tag, const std::string& name, bool ok, const std::string& detail = "") {
        out_.push_back({suite_, tag, name, ok, detail});
    }

private:
    std::string suite_;
    std::vector<CheckResult>& out_;
};

inline Rational suite_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
    return {num(rng), den(rng)};
}

inline RationalPoint suite_point(std::mt19937_64& rng) {
    return {suite_rational(rng), suite_rational(rng), suite_rational(rng)};
}

inline std::string interval(const MurResult& r) {
    return "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

/// Expect an exact pipeline value.
inline void expect_value(SuiteRun& run, const std::string& tag, const std::string& name, const Graph& g, int expected,
                         const SearchOptions& opts) {
    const auto r = compute_mur(g, opts);
    const auto rp = replay(g, r);
    run.check(tag, name, r.exact && r.value == expected && rp.ok,
              summary(r) + ", expected " + std::to_string(expected) + (rp.ok ? "" : "; replay: " + rp.detail));
}

inline void suite_complements(SuiteRun& run, const SuiteOptions& o) {
    std::mt19937_64 rng(o.search.seed);
    int mismatches = 0;
    std::string first;
    for (int t = 0; t < o.trials; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = gen::random_graph(rng, n);
        const RationalPoint p = suite_point(rng);
        const auto a = rank_rational(universal_matrix(g, p));
        const auto b = rank_rational(universal_matrix(complement(g), complement_params(g, p)));
        if (a != b && mismatches++ == 0) first = encode_graph6(g) + " at " + to_string(p);
    }
    run.check("complement transfer", "rank(U_G(p)) = rank(U_Gc(p')) on " + std::to_string(o.trials) + " random trials",
              mismatches == 0, mismatches ? std::to_string(mismatches) + " mismatches, first " + first : "");
    const Graph p6 = gen::path(6);
    const RationalPoint p{2, Rational(-1, 3), Rational(1, 2)};
    const auto m = universal_matrix(p6, p), mc = universal_matrix(complement(p6), complement_params(p6, p));
    bool negated = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) negated = negated && mc(i, j) == -m(i, j);
    run.check("complement transfer", "U_Gc(p') = -U_G(p) entrywise on P6", negated);
}

inline void suite_laplacian(SuiteRun& run, const SuiteOptions& o) {
    std::mt19937_64 rng(o.search.seed + 1);
    const int trials = std::max(1, o.trials / 2);
    int bad = 0;
    std::string first;
    for (int t = 0; t < trials; ++t) {
        const Graph g = gen::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
        // (β, γ, δ) = (0, 0, −1) gives A − D = −L
        const auto r = rank_rational(universal_matrix(g, RationalPoint{0, 0, -1}));
        const auto c = components(g).count;
        if (static_cast<int>(r) != g.order() - c && bad++ == 0) first = encode_graph6(g);
    }
    run.check("laplacian kernel", "rank L = n - c on " + std::to_string(trials) + " random graphs", bad == 0,
              bad ? "first failure " + first : "");
}

inline void suite_colspace(SuiteRun& run, const SuiteOptions& o) {
    std::mt19937_64 rng(o.search.seed + 2);
    const int trials = std::max(1, o.trials / 2);
    int applicable = 0, bad = 0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 2 + rng() % 7, k = 1 + rng() % (n - 1);
        // A = X diag(w) Xᵀ with X of size n×k is symmetric of rank ≤ k < n
        QMatrix x(n, k, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) x(i, j) = suite_rational(rng);
        QMatrix w(k, k, Rational(0));
        for (std::size_t j = 0; j < k; ++j) w(j, j) = suite_rational(rng);
        const QMatrix a = x * w * x.transpose();
        const std::vector<Rational> e(n, Rational(1));
        if (in_column_space(a, e)) continue;
        ++applicable;
        Rational gamma = suite_rational(rng);
        if (gamma.is_zero()) gamma = 1;
        if (!in_column_space(a + gamma * QMatrix(n, n, Rational(1)), e)) ++bad;
    }
    run.check("ones vector in column space",
              "e not in col(A) implies e in col(A + gJ), " + std::to_string(applicable) + " applicable of " +
                  std::to_string(trials),
              bad == 0 && applicable > 0, bad ? std::to_string(bad) + " counterexamples" : "");
}

inline std::vector<std::pair<std::string, Graph>> exact_family_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 3; n <= 7; ++n) out.emplace_back("P" + std::to_string(n), gen::path(n));
    for (int n = 3; n <= 7; ++n) out.emplace_back("C" + std::to_string(n), gen::cycle(n));
    for (int n = 2; n <= 6; ++n) out.emplace_back("K" + std::to_string(n), gen::complete(n));
    for (int n = 3; n <= 6; ++n) out.emplace_back("K1," + std::to_string(n - 1), gen::star(n));
    out.emplace_back("K2,3", gen::complete_bipartite(2, 3));
    out.emplace_back("K3,3", gen::complete_bipartite(3, 3));
    out.emplace_back("K2∪K3", gen::disjoint_union({gen::complete(2), gen::complete(3)}));
    out.emplace_back("K4∪2K1", gen::disjoint_union({gen::complete(4), gen::empty(2)}));
    out.emplace_back("(K3∪2K1)∨v", gen::clique_plus_isolated_join_v(3, 2));
    out.emplace_back("(K4∪4K1)∨v", gen::clique_plus_isolated_join_v(4, 4));
    out.emplace_back("(K4∪3K1)∨v", gen::clique_plus_isolated_join_v(4, 3));
    out.emplace_back("petersen", gen::petersen());
    return out;
}

inline void suite_spread_bounds(SuiteRun& run, const SuiteOptions& o) {
    for (const auto& [name, g] : exact_family_corpus()) {
        int checked = 0, exact = 0;
        std::string bad;
        for (int v = 0; v < g.order(); ++v) {
            const auto s = mur_spread(g, v, o.search);
            ++checked;
            if (s.exact) {
                ++exact;
                if (*s.value < s.bound_lo || *s.value > s.bound_hi)
                    bad += " v" + std::to_string(v) + "=" + std::to_string(*s.value);
            } else if (!s.consistent) {
                bad += " v" + std::to_string(v) + " interval [" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]";
            }
        }
        run.check("vertex spread", name + ": spread within degree bounds at all vertices", bad.empty(),
                  std::to_string(exact) + "/" + std::to_string(checked) + " exact" + (bad.empty() ? "" : ";" + bad));
    }
    struct Example {
        std::string name;
        Graph g;
        int v, expected;
    };
    const std::vector<Example> examples = {
        {"endpoint of P5", gen::path(5), 0, 1},
        {"pendant of K1,4", gen::star(5), 1, 0},
        {"isolated-side vertex of (K4∪4K1)∨v", gen::clique_plus_isolated_join_v(4, 4), 4, -1},
    };
    for (const auto& ex : examples) {
        const auto s = mur_spread(ex.g, ex.v, o.search);
        run.check("vertex spread", ex.name + " has spread " + std::to_string(ex.expected),
                  s.exact && s.value == ex.expected,
                  "[" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]");
    }
}

inline std::vector<std::pair<std::string, Graph>> union_pairs_left() {
    return {{"K4", gen::complete(4)}, {"P4", gen::path(4)}, {"P5", gen::path(5)}, {"C3", gen::cycle(3)},
            {"C4", gen::cycle(4)},    {"C5", gen::cycle(5)}, {"K2,3", gen::complete_bipartite(2, 3)}};
}

inline void suite_union_lower(SuiteRun& run, const SuiteOptions& o) {
    const auto parts = union_pairs_left();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < parts.size(); ++j) {
            const auto& [a, g] = parts[i];
            const auto& [b, h] = parts[j];
            const auto rg = compute_mur(g, o.search), rh = compute_mur(h, o.search);
            const auto ru = compute_mur(gen::disjoint_union({g, h}), o.search);
            if (!rg.exact || !rh.exact) continue;
            run.check("union lower bound", "mur(" + a + ")+mur(" + b + ") <= mur(" + a + "∪" + b + ")",
                      ru.upper >= *rg.value + *rh.value,
                      std::to_string(*rg.value) + "+" + std::to_string(*rh.value) + " vs " + interval(ru));
        }
    for (int k = 1; k <= 2; ++k) {
        const Graph u = gen::disjoint_union({gen::copies(k, gen::cycle(3)), gen::copies(k, gen::cycle(4))});
        const auto r = compute_mur(u, o.search);
        const int separate = regular_mur(gen::copies(k, gen::cycle(3))) + regular_mur(gen::copies(k, gen::cycle(4)));
        run.check("union lower bound",
                  std::to_string(k) + "C3∪" + std::to_string(k) + "C4 exceeds the sum by " + std::to_string(2 * k + 1),
                  r.exact && *r.value == 5 * k - 1 && *r.value - separate == 2 * k + 1,
                  summary(r) + ", sum of parts " + std::to_string(separate));
    }
}

inline void suite_union_upper(SuiteRun& run, const SuiteOptions& o) {
    const auto parts = union_pairs_left();
    for (const auto& [a, g] : parts)
        for (const auto& [b, h] : parts) {
            const auto rg = compute_mur(g, o.search);
            if (!rg.exact) continue;
            const auto ru = compute_mur(gen::disjoint_union({g, h}), o.search);
            const int bound = *rg.value + h.order() + 1;
            run.check("union upper bound", "mur(" + a + "∪" + b + ") <= mur(" + a + ")+|" + b + "|+1",
                      ru.upper <= bound, interval(ru) + " vs " + std::to_string(bound));
        }
}

inline void suite_monotonicity(SuiteRun& run, const SuiteOptions& o) {
    std::vector<std::pair<std::string, Graph>> regular;
    for (int n = 4; n <= 8; ++n) regular.emplace_back("C" + std::to_string(n), gen::cycle(n));
    for (int n = 3; n <= 7; ++n) regular.emplace_back("K" + std::to_string(n), gen::complete(n));
    for (int r = 2; r <= 4; ++r) regular.emplace_back("K" + std::to_string(r) + "," + std::to_string(r),
                                                       gen::complete_bipartite(r, r));
    regular.emplace_back("petersen", gen::petersen());
    for (const auto& [name, g] : regular) {
        const auto whole = compute_mur(g, o.search);
        std::string bad;
        for (int v = 0; v < g.order(); ++v) {
            const auto part = compute_mur(delete_vertex(g, v), o.search);
            if (part.lower > whole.upper) bad += " v" + std::to_string(v) + " " + interval(part);
        }
        run.check("regular monotonicity", name + ": vertex-deleted subgraphs do not exceed mur", bad.empty(),
                  "mur " + interval(whole) + bad);
    }
    // A δ = 0 point restricts to principal submatrices.
    std::mt19937_64 rng(o.search.seed + 3);
    int tested = 0, bad = 0;
    for (int t = 0; t < o.trials; ++t) {
        const Graph g = gen::random_graph(rng, 3 + static_cast<int>(rng() % 5));
        const auto r = compute_mur(g, o.search);
        const auto* cert = std::get_if<ExplicitParams>(&r.upper_certificate);
        if (!cert || !cert->point.delta.is_zero()) continue;
        ++tested;
        const auto full = universal_matrix(g, cert->point);
        for (int v = 0; v < g.order(); ++v) {
            std::vector<std::size_t> keep;
            std::vector<int> kv;
            for (int u = 0; u < g.order(); ++u)
                if (u != v) keep.push_back(static_cast<std::size_t>(u)), kv.push_back(u);
            const auto sub = rank_rational(full.principal(keep));
            const auto direct = rank_rational(universal_matrix(induced_subgraph(g, kv), cert->point));
            if (sub != direct || static_cast<int>(sub) > cert->rank) ++bad;
        }
    }
    run.check("delta-zero monotonicity",
              "principal submatrices of delta=0 optima (" + std::to_string(tested) + " graphs)", bad == 0,
              bad ? std::to_string(bad) + " failures" : "");
}

inline void suite_families(SuiteRun& run, const SuiteOptions& o) {
    const auto& s = o.search;
    for (int n = 3; n <= 10; ++n) expect_value(run, "paths", "P" + std::to_string(n), gen::path(n), n - 2, s);
    for (int n = 4; n <= 8; ++n)
        expect_value(run, "paths", "P" + std::to_string(n - 1) + "∪K1",
                     gen::disjoint_union({gen::path(n - 1), gen::empty(1)}), n - 2, s);
    for (int n = 3; n <= 5; ++n)
        expect_value(run, "paths", "P" + std::to_string(n) + "∪P" + std::to_string(n), gen::copies(2, gen::path(n)),
                     2 * n - 3, s);
    for (int n = 3; n <= 10; ++n) expect_value(run, "cycles", "C" + std::to_string(n), gen::cycle(n), n - 3, s);
    for (int k = 2; k <= 3; ++k)
        for (int n = 3; n <= 5; ++n)
            expect_value(run, "cycles", std::to_string(k) + "C" + std::to_string(n), gen::copies(k, gen::cycle(n)),
                         k * n - 2 * k - 1, s);
    for (int n = 1; n <= 8; ++n) {
        expect_value(run, "mur zero", "K" + std::to_string(n), gen::complete(n), 0, s);
        expect_value(run, "mur zero", "empty " + std::to_string(n), gen::empty(n), 0, s);
    }
    expect_value(run, "mur one", "K3∪K4", gen::disjoint_union({gen::complete(3), gen::complete(4)}), 1, s);
    expect_value(run, "mur one", "K6∪K1∪K1", gen::disjoint_union({gen::complete(6), gen::empty(2)}), 1, s);
    expect_value(run, "mur one", "K3,4", gen::complete_bipartite(3, 4), 1, s);
    expect_value(run, "mur one", "complement of K4∪3K1",
                 complement(gen::disjoint_union({gen::complete(4), gen::empty(3)})), 1, s);
    for (const std::vector<int>& sizes : std::vector<std::vector<int>>{{2, 2, 2}, {2, 3, 4}, {3, 3, 3, 2}, {2, 2, 2, 2, 2}}) {
        std::vector<Graph> cliques;
        std::string tag;
        for (int m : sizes) cliques.push_back(gen::complete(m)), tag += (tag.empty() ? "" : ",") + std::to_string(m);
        const int k = static_cast<int>(sizes.size());
        expect_value(run, "union of cliques", "∪K(" + tag + ")", gen::disjoint_union(cliques), k - 1, s);
        expect_value(run, "union of cliques", "K(" + tag + ")", gen::complete_multipartite(sizes), k - 1, s);
    }
    for (int r = 0; r <= 6; ++r)
        for (int s2 = 0; r + s2 <= 8; ++s2) {
            if (s2 - r + 1 == 0) continue;
            const int expected = (s2 == 0 || (s2 == 1 && r == 0)) ? 0 : (r <= 1 ? 1 : 2);
            expect_value(run, "clique plus independent set joined to a vertex",
                         "(K" + std::to_string(r) + "∪" + std::to_string(s2) + "K1)∨v",
                         gen::clique_plus_isolated_join_v(r, s2), expected, s);
        }
    for (int r = 4; r <= 6; ++r)
        expect_value(run, "clique plus independent set joined to a vertex",
                     "(K" + std::to_string(r) + "∪" + std::to_string(r - 1) + "K1)∨v",
                     gen::clique_plus_isolated_join_v(r, r - 1), 3, s);
    // recognizers disabled: the family value must still sit in the generic interval
    SearchOptions generic = s;
    generic.use_families = false;
    const std::vector<std::pair<std::string, Graph>> probes = {
        {"P5", gen::path(5)},     {"C5", gen::cycle(5)},
        {"K5", gen::complete(5)}, {"K3∪K2", gen::disjoint_union({gen::complete(3), gen::complete(2)})},
        {"K2,2,2", gen::complete_multipartite({2, 2, 2})}, {"(K2∪3K1)∨v", gen::clique_plus_isolated_join_v(2, 3)},
        {"(K4∪3K1)∨v", gen::clique_plus_isolated_join_v(4, 3)}};
    for (const auto& [name, g] : probes) {
        const auto fam = compute_mur(g, s);
        const auto gen_r = compute_mur(g, generic);
        run.check("family value within generic bounds", name,
                  fam.exact && gen_r.lower <= *fam.value && *fam.value <= gen_r.upper,
                  "family " + summary(fam) + "; generic " + interval(gen_r));
    }
}

inline void suite_pprime(SuiteRun& run, const SuiteOptions& o) {
    for (const char* name : {"pprime-rational-thirds", "pprime-rational-quarters", "pprime8-golden", "pprime10-heptagon",
                             "path-laplacian-shift"}) {
        const auto rep = verify_fixture(name);
        std::string detail;
        for (const auto& line : rep.lines)
            if (!rep.passed || line.rfind("FAIL", 0) == 0) detail += (detail.empty() ? "" : "; ") + line;
        run.check("pendant-extended paths", std::string("fixture ") + name, rep.passed, detail);
    }
    for (int n : {4, 5}) {
        const auto r = compute_mur(gen::p_prime(n), o.search);
        run.check("pendant-extended paths", "P'" + std::to_string(n) + " reports an honest interval",
                  !r.exact && r.lower == n - 2 && r.upper == n - 1, summary(r));
    }
}

using SuiteFn = std::function<void(SuiteRun&, const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"complements", suite_complements},     {"laplacian", suite_laplacian},
        {"colspace", suite_colspace},           {"spread-bounds", suite_spread_bounds},
        {"union-lower", suite_union_lower},     {"union-upper", suite_union_upper},
        {"monotonicity", suite_monotonicity},   {"families", suite_families},
        {"pprime", suite_pprime},
    };
    return table;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : detail::suite_table()) out.push_back(name);
    out.emplace_back("all");
    return out;
}

/// Throws std::invalid_argument for an unknown suite.
inline std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts = {}) {
    std::vector<CheckResult> out;
    bool found = false;
    for (const auto& [suite, fn] : detail::suite_table()) {
        if (name != "all" && name != suite) continue;
        found = true;
        detail::SuiteRun run(suite, out);
        fn(run, opts);
    }
    if (!found) {
        std::string names;
        for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown suite '" + name + "'; available: " + names);
    }
    return out;
}

}  // namespace murlab
