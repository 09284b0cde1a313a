#include "murlab/murlab.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace murlab;
using murlab::testing::naive_rank;
using murlab::testing::random_graph;
using murlab::testing::random_rational;

namespace {

std::vector<Graph> read_corpus(const std::string& file) {
    std::ifstream in(std::string(MURLAB_TEST_DATA) + "/" + file);
    std::vector<Graph> out;
    for (std::string t; in >> t;) out.push_back(parse_graph6(t));
    return out;
}

bool contains(const std::vector<RationalPoint>& pts, const RationalPoint& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

/// Smallest rank of U(p) over a small rational cube, by plain elimination.
std::size_t grid_min_rank(const Graph& g) {
    const std::vector<Rational> vals = {-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1, 2};
    std::size_t best = static_cast<std::size_t>(g.order());
    for (const auto& b : vals)
        for (const auto& c : vals)
            for (const auto& d : vals) best = std::min(best, naive_rank(universal_matrix(g, RationalPoint{b, c, d})));
    return best;
}

}  // namespace

// ------------------------------------------------------------------ summaries

TEST(Summary, PathSix) {
    EXPECT_EQ(summary(compute_mur(gen::path(6))), "mur = 4 (exact) [lower: induced P6; upper: family:path]");
}

TEST(Summary, CycleSeven) {
    EXPECT_EQ(summary(compute_mur(gen::cycle(7))), "mur = 4 (exact) [regular spectrum: m=2]");
}

TEST(Summary, PendantExtendedPathFourIsAnInterval) {
    const auto r = compute_mur(gen::p_prime(4));
    EXPECT_FALSE(r.exact);
    EXPECT_FALSE(r.value.has_value());
    EXPECT_EQ(summary(r).rfind("mur ∈ [2,3]", 0), 0U) << summary(r);
}

// ------------------------------------------------------------------ families

TEST(Families, ClosedFormValues) {
    for (int n = 3; n <= 9; ++n) EXPECT_EQ(compute_mur(gen::path(n)).value, n - 2);
    for (int n = 3; n <= 9; ++n) EXPECT_EQ(compute_mur(gen::cycle(n)).value, n - 3);
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(compute_mur(gen::complete(n)).value, 0);
        EXPECT_EQ(compute_mur(gen::empty(n)).value, 0);
    }
    EXPECT_EQ(compute_mur(gen::copies(2, gen::cycle(4))).value, 3);
    EXPECT_EQ(compute_mur(gen::complete_multipartite({2, 3, 4})).value, 2);
    EXPECT_EQ(compute_mur(gen::disjoint_union({gen::complete(6), gen::empty(2)})).value, 1);
    EXPECT_EQ(compute_mur(gen::petersen()).value, 4);
}

TEST(Families, CliqueJoinVertexTable) {
    EXPECT_EQ(clique_join_vertex_value(4, 0), 0);
    EXPECT_EQ(clique_join_vertex_value(0, 1), 0);
    EXPECT_EQ(clique_join_vertex_value(1, 3), 1);
    EXPECT_EQ(clique_join_vertex_value(3, 4), 2);
    EXPECT_EQ(clique_join_vertex_value(4, 3), 3);
    EXPECT_EQ(clique_join_vertex_value(4, 4), 2);
    EXPECT_FALSE(clique_join_vertex_value(3, 2).has_value());
    EXPECT_EQ(compute_mur(gen::clique_plus_isolated_join_v(4, 3)).value, 3);
    EXPECT_EQ(compute_mur(gen::clique_plus_isolated_join_v(4, 4)).value, 2);
}

TEST(Families, RegularFormulaAgreesWithKnownValues) {
    for (int n = 3; n <= 9; ++n) EXPECT_EQ(regular_mur(gen::cycle(n)), n - 3);
    for (int k = 1; k <= 3; ++k)
        for (int n = 3; n <= 5; ++n) EXPECT_EQ(regular_mur(gen::copies(k, gen::cycle(n))), k * n - 2 * k - 1);
    for (int r = 2; r <= 5; ++r) EXPECT_EQ(regular_mur(gen::complete_bipartite(r, r)), 1);
    EXPECT_EQ(regular_mur(gen::copies(3, gen::complete(3))), 2);
}

TEST(Families, ValueLiesInGenericInterval) {
    SearchOptions generic;
    generic.use_families = false;
    for (const Graph& g : {gen::path(5), gen::cycle(6), gen::complete(4), gen::complete_bipartite(2, 3),
                           gen::copies(2, gen::cycle(3)), gen::clique_plus_isolated_join_v(4, 3),
                           gen::disjoint_union({gen::complete(3), gen::empty(2)})}) {
        const auto fam = compute_mur(g);
        ASSERT_TRUE(fam.exact) << encode_graph6(g);
        const auto r = compute_mur(g, generic);
        EXPECT_LE(r.lower, *fam.value) << encode_graph6(g);
        EXPECT_GE(r.upper, *fam.value) << encode_graph6(g);
    }
}

// ------------------------------------------------------------------ candidates

TEST(Candidates, ContainsTheNamedPoints) {
    const auto p3 = candidate_params(gen::path(3));
    EXPECT_TRUE(contains(p3, {1, Rational(-1, 3), -1}));
    EXPECT_TRUE(contains(p3, {3, -1, -1}));
    EXPECT_EQ(rank_rational(universal_matrix(gen::path(3), RationalPoint{1, Rational(-1, 3), -1})), 1U);
    EXPECT_TRUE(contains(candidate_params(gen::complete(5)), {1, -1, 0}));
    const Graph k3e2 = gen::disjoint_union({gen::complete(3), gen::empty(2)});
    EXPECT_TRUE(contains(candidate_params(k3e2), {0, 0, Rational(1, 2)}));
    EXPECT_EQ(rank_rational(universal_matrix(k3e2, RationalPoint{0, 0, Rational(1, 2)})), 1U);
}

TEST(Candidates, SortedAndDeterministic) {
    const auto a = candidate_params(gen::p_prime(5));
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    EXPECT_EQ(std::adjacent_find(a.begin(), a.end()), a.end());
    EXPECT_EQ(a, candidate_params(gen::p_prime(5)));
    SearchOptions other;
    other.seed = 7;
    EXPECT_NE(a, candidate_params(gen::p_prime(5), other));
}

// ------------------------------------------------------------------ soundness

TEST(Soundness, LowerNeverExceedsAnyRank) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        const auto r = compute_mur(g);
        for (int k = 0; k < 5; ++k) {
            const RationalPoint p{random_rational(rng), random_rational(rng), random_rational(rng)};
            EXPECT_LE(static_cast<std::size_t>(r.lower), naive_rank(universal_matrix(g, p))) << encode_graph6(g);
        }
        EXPECT_LE(r.upper, std::max(0, g.order() - 2));
        EXPECT_TRUE(replay(g, r).ok) << encode_graph6(g) << " " << replay(g, r).detail;
    }
}

TEST(Soundness, FourVertexGraphsAreExactAndBelowGridOracle) {
    const auto graphs = read_corpus("graphs4.g6");
    ASSERT_EQ(graphs.size(), 11U);
    for (const Graph& g : graphs) {
        const auto r = compute_mur(g);
        EXPECT_TRUE(r.exact) << encode_graph6(g) << " " << summary(r);
        EXPECT_LE(static_cast<std::size_t>(r.lower), grid_min_rank(g)) << encode_graph6(g);
        EXPECT_LE(static_cast<std::size_t>(r.upper), static_cast<std::size_t>(g.order()));
    }
}

TEST(Soundness, ComplementHasTheSameMur) {
    const auto graphs = read_corpus("small_graphs.g6");
    for (const Graph& g : graphs) {
        if (g.order() > 6) continue;
        const auto a = compute_mur(g), b = compute_mur(complement(g));
        EXPECT_LE(a.lower, b.upper) << encode_graph6(g);
        EXPECT_LE(b.lower, a.upper) << encode_graph6(g);
        if (a.exact && b.exact) {
            EXPECT_EQ(a.value, b.value) << encode_graph6(g);
        }
    }
}

TEST(Soundness, InconsistentBoundsThrow) {
    EXPECT_THROW(detail::finish(3, TrivialBound{0}, 2, TrivialBound{2}, {}), std::logic_error);
}

TEST(Soundness, ForkIsCertifiedOnlyAsAnInterval) {
    const Graph fork(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    const auto r = compute_mur(fork);
    EXPECT_EQ(r.lower, 2);
    EXPECT_EQ(r.upper, 3);
    EXPECT_FALSE(r.exact);
}

// ------------------------------------------------------------------ complement transfer

TEST(ComplementTransfer, AllLabelledGraphsOnFiveVertices) {
    std::mt19937_64 rng(5);
    murlab::testing::for_each_labelled_graph(5, [&](const Graph& g) {
        const RationalPoint p{random_rational(rng), random_rational(rng), random_rational(rng)};
        const auto m = universal_matrix(g, p);
        const auto mc = universal_matrix(complement(g), complement_params(g, p));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) ASSERT_EQ(mc(i, j), -m(i, j));
        EXPECT_EQ(naive_rank(m), naive_rank(mc));
    });
}

// ------------------------------------------------------------------ monotonicity and unions

TEST(Monotonicity, DeltaZeroPointsRestrictToInducedSubgraphs) {
    std::mt19937_64 rng(8);
    int tested = 0;
    for (int t = 0; t < 80; ++t) {
        const Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 4));
        const RationalPoint p{random_rational(rng), random_rational(rng), 0};
        const auto whole = naive_rank(universal_matrix(g, p));
        for (int v = 0; v < g.order(); ++v) {
            EXPECT_LE(naive_rank(universal_matrix(delete_vertex(g, v), p)), whole);
            ++tested;
        }
    }
    EXPECT_GT(tested, 0);
}

TEST(Monotonicity, RegularGraphsDominateVertexDeletions) {
    for (const Graph& g : {gen::cycle(6), gen::cycle(7), gen::complete(5), gen::complete_bipartite(3, 3),
                           gen::petersen()}) {
        const auto whole = compute_mur(g);
        ASSERT_TRUE(whole.exact);
        for (int v = 0; v < g.order(); ++v) EXPECT_LE(compute_mur(delete_vertex(g, v)).lower, *whole.value);
    }
}

TEST(Unions, CycleUnionGap) {
    for (int k = 1; k <= 2; ++k) {
        const auto c3 = compute_mur(gen::copies(k, gen::cycle(3)));
        const auto c4 = compute_mur(gen::copies(k, gen::cycle(4)));
        const auto u = compute_mur(gen::disjoint_union({gen::copies(k, gen::cycle(3)), gen::copies(k, gen::cycle(4))}));
        ASSERT_TRUE(u.exact);
        EXPECT_EQ(*u.value, 5 * k - 1);
        EXPECT_EQ(*u.value - *c3.value - *c4.value, 2 * k + 1);
    }
}

TEST(Unions, SuitesPass) {
    for (const char* suite : {"union-lower", "union-upper"})
        for (const auto& c : run_suite(suite)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

// ------------------------------------------------------------------ spread

TEST(Spread, WorkedExamples) {
    EXPECT_EQ(mur_spread(gen::path(5), 0).value, 1);
    EXPECT_EQ(mur_spread(gen::star(5), 1).value, 0);
    const Graph g = gen::join({gen::empty(1), gen::disjoint_union({gen::complete(4), gen::empty(4)})});
    EXPECT_EQ(g.degree(5), 1);
    EXPECT_EQ(mur_spread(g, 5).value, -1);
}

TEST(Spread, BoundsHoldOnTheFamilyCorpus) {
    for (const auto& c : run_suite("spread-bounds")) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Spread, IntervalArithmetic) {
    const Graph fork(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    const auto s = mur_spread(fork, 4);
    EXPECT_EQ(s.lo, s.whole.lower - s.deleted.upper);
    EXPECT_EQ(s.hi, s.whole.upper - s.deleted.lower);
    EXPECT_EQ(s.bound_lo, -1);
    EXPECT_EQ(s.bound_hi, 3);
    EXPECT_TRUE(s.consistent);
    EXPECT_THROW(mur_spread(fork, 5), std::out_of_range);
    EXPECT_THROW(mur_spread(gen::empty(1), 0), std::invalid_argument);
}

// ------------------------------------------------------------------ certificates

TEST(Replay, RejectsTamperedCertificates) {
    const Graph g = gen::p_prime(5);
    auto r = compute_mur(g);
    ASSERT_TRUE(replay(g, r).ok);

    auto forged = r;
    forged.upper_certificate = ExplicitParams{{0, 0, 0}, 3};
    forged.upper = 3;
    EXPECT_FALSE(replay(g, forged).ok);

    auto lifted = r;
    lifted.lower += 1;
    lifted.exact = lifted.lower == lifted.upper;
    if (lifted.exact) lifted.value = lifted.lower;
    EXPECT_FALSE(replay(g, lifted).ok);

    auto wrong_graph = r;
    EXPECT_FALSE(replay(gen::complete(6), wrong_graph).ok);
}

TEST(Replay, ExplicitParamsReverifyAcrossCorpus) {
    const auto graphs = read_corpus("small_graphs.g6");
    int explicit_certs = 0;
    for (std::size_t i = 0; i < graphs.size(); i += 7) {
        const auto r = compute_mur(graphs[i]);
        if (const auto* c = std::get_if<ExplicitParams>(&r.upper_certificate)) {
            ++explicit_certs;
            EXPECT_EQ(naive_rank(universal_matrix(graphs[i], c->point)), static_cast<std::size_t>(c->rank));
        }
        EXPECT_TRUE(replay(graphs[i], r).ok) << encode_graph6(graphs[i]);
    }
    EXPECT_GT(explicit_certs, 0);
}

TEST(Report, JsonRoundTripAndReplay) {
    for (const Graph& g : {gen::path(6), gen::cycle(7), gen::p_prime(5), gen::complete_multipartite({2, 3}),
                           gen::clique_plus_isolated_join_v(4, 3), gen::petersen()}) {
        Report rep;
        rep.graph = g;
        rep.complement = g.order() == 6;
        rep.result = compute_mur(rep.analyzed());
        rep.elapsed_ms = 1.5;
        const auto j = to_json(rep);
        EXPECT_EQ(j.at("format"), "murlab-report/1");
        const auto back = report_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(to_json(back), j);
        EXPECT_TRUE(replay(back).ok) << encode_graph6(g);
    }
}

TEST(Report, SpectralInstantiationRoundTrips) {
    SearchOptions opts;
    opts.instantiate_spectral = true;
    Report rep;
    rep.graph = gen::cycle(5);
    rep.options = opts;
    rep.result = compute_mur(rep.graph, opts);
    ASSERT_TRUE(rep.result.spectral.has_value());
    EXPECT_TRUE(rep.result.spectral->verified());
    EXPECT_EQ(rep.result.spectral->factor, (UniPoly{5, -5, 1}));
    EXPECT_EQ(to_json(report_from_json(to_json(rep))), to_json(rep));
}

TEST(Report, RejectsForeignAndInconsistentDocuments) {
    Report rep;
    rep.graph = gen::path(4);
    rep.result = compute_mur(rep.graph);
    auto j = to_json(rep);
    auto wrong_format = j;
    wrong_format["format"] = "murlab-report/0";
    EXPECT_THROW(report_from_json(wrong_format), std::invalid_argument);
    auto wrong_g6 = j;
    wrong_g6["graph"]["graph6"] = "C~";
    EXPECT_THROW(report_from_json(wrong_g6), std::invalid_argument);
    auto wrong_side = j;
    wrong_side["certificates"]["lower"] = {{"kind", "components"}, {"components", 1}, {"on_complement", false}};
    EXPECT_THROW(report_from_json(wrong_side), std::invalid_argument);
}

// ------------------------------------------------------------------ fixtures and suites

TEST(Fixtures, ExplicitConstructionsReplay) {
    for (const char* name : {"pprime8-golden", "pprime10-heptagon", "path-laplacian-shift", "pprime-rational-thirds",
                             "pprime-rational-quarters"}) {
        const auto rep = verify_fixture(name);
        EXPECT_TRUE(rep.passed) << name;
    }
    EXPECT_THROW(verify_fixture("no-such-fixture"), std::invalid_argument);
}

TEST(Suites, PropertySuitesPass) {
    for (const char* suite : {"complements", "laplacian", "colspace", "families", "pprime"})
        for (const auto& c : run_suite(suite)) EXPECT_TRUE(c.passed) << suite << ": " << c.name << ": " << c.detail;
    EXPECT_THROW(run_suite("bogus"), std::invalid_argument);
}
