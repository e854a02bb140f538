#include <gtest/gtest.h>

#include <random>

#include "perfrank/audit.hpp"
#include "perfrank/scores.hpp"
#include "perfrank/two_class.hpp"
#include "test_util.hpp"

using namespace perfrank;
namespace tc = perfrank::two_class;

namespace {

const Score& score(const char* id) { return catalog_entry(id).score; }

AuditOptions coarse() {
    AuditOptions o;
    o.resolution = 12;
    return o;
}

bool same_witness(const std::optional<CombinationWitness>& a, const std::optional<CombinationWitness>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->p1 == b->p1 && a->p2 == b->p2 && a->lambda == b->lambda && a->score_mixture == b->score_mixture;
}

}  // namespace

TEST(Lambdas, DefaultSet) {
    const auto l = default_lambdas();
    ASSERT_EQ(l.size(), 11u);
    EXPECT_DOUBLE_EQ(l.front(), 0.01);
    EXPECT_DOUBLE_EQ(l.back(), 0.99);
    const std::vector<double> bad = {0.5, 1.0};
    EXPECT_THROW(test_convex_bounds(score("f1"), make_grid(ConstraintSet::unconstrained(), 3), bad),
                 std::invalid_argument);
}

TEST(SatisfactionTest, Examples) {
    const auto u = make_grid(ConstraintSet::unconstrained(), 12);
    const auto f = make_grid(ConstraintSet::fixed_positive_prior(0.2), 20);
    EXPECT_TRUE(test_satisfaction_axiom(score("accuracy"), u).passed);
    EXPECT_TRUE(test_satisfaction_axiom(score("accuracy"), f).passed);
    auto er = test_satisfaction_axiom(score("error_rate"), u);
    ASSERT_FALSE(er.passed);
    ASSERT_TRUE(er.witness);
    EXPECT_TRUE(replay(score("error_rate"), *er.witness));
    EXPECT_FALSE(test_satisfaction_axiom(score("ptn"), u).passed);
    EXPECT_TRUE(test_satisfaction_axiom(score("ptn"), f).passed);
}

TEST(SatisfactionTest, NonBinarySatisfaction) {
    auto space = testutil::make_space(3);
    RandomVariable s(space, {0.0, 0.5, 1.0});
    const auto g = make_simplex_grid(space, 8);
    EXPECT_TRUE(test_satisfaction_axiom(expected_value_score(s), g, s).passed);
    EXPECT_FALSE(test_satisfaction_axiom(expected_value_score(s).negated(), g, s).passed);
    // Middle sample scored worst: the point mass on the worst sample beats
    // the point mass on the middle one.
    RandomVariable v(space, {0.5, 0.0, 1.0});
    auto r = test_satisfaction_axiom(expected_value_score(v), g, s);
    ASSERT_FALSE(r.passed);
    EXPECT_DOUBLE_EQ(r.witness->threshold, 0.0);
    EXPECT_TRUE(replay(expected_value_score(v), *r.witness));
}

TEST(ConvexTests, Examples) {
    const auto u = make_grid(ConstraintSet::unconstrained(), 12);
    const auto l = default_lambdas();
    EXPECT_TRUE(test_convex_upper(score("accuracy"), u, l).passed);
    EXPECT_FALSE(test_convex_upper(score("mcc"), u, l).passed);
    EXPECT_TRUE(test_convex_lower(score("f1"), u, l).passed);
    EXPECT_TRUE(test_convex_lower(score("tpr"), u, l).passed);
    const auto f2 = make_grid(ConstraintSet::fixed_positive_prior(0.2), 40);
    EXPECT_FALSE(test_convex_upper(score("gmean_tnr_tpr"), f2, l).passed);
    EXPECT_TRUE(test_convex_lower(score("gmean_tnr_tpr"), f2, l).passed);
    const auto f5 = make_grid(ConstraintSet::fixed_positive_prior(0.5), 40);
    EXPECT_FALSE(test_convex_lower(score("markedness"), f5, l).passed);
}

TEST(ConvexTests, WitnessesReplay) {
    const auto u = make_grid(ConstraintSet::unconstrained(), 10);
    const auto l = default_lambdas();
    for (const char* id : {"mcc", "markedness", "odds_ratio", "d_prime", "cohen_kappa", "balanced_accuracy"}) {
        auto b = test_convex_bounds(score(id), u, l);
        ASSERT_FALSE(b.upper.passed) << id;
        ASSERT_FALSE(b.lower.passed) << id;
        EXPECT_TRUE(replay(score(id), *b.upper.witness, Bound::Upper)) << id;
        EXPECT_TRUE(replay(score(id), *b.lower.witness, Bound::Lower)) << id;
        EXPECT_FALSE(replay(score(id), *b.upper.witness, Bound::Lower)) << id;
    }
}

TEST(ConvexTests, SerialAndParallelAgree) {
    const auto u = make_grid(ConstraintSet::unconstrained(), 14);
    const auto f = make_grid(ConstraintSet::fixed_positive_prior(0.2), 30);
    const auto l = default_lambdas();
    for (const auto& e : catalog()) {
        for (const auto* g : {&u, &f}) {
            auto s = test_convex_bounds(e.score, *g, l, Execution::Serial);
            auto p = test_convex_bounds(e.score, *g, l, Execution::Parallel);
            EXPECT_EQ(s.upper.passed, p.upper.passed) << e.id;
            EXPECT_EQ(s.lower.passed, p.lower.passed) << e.id;
            EXPECT_TRUE(same_witness(s.upper.witness, p.upper.witness)) << e.id;
            EXPECT_TRUE(same_witness(s.lower.witness, p.lower.witness)) << e.id;
        }
    }
}

// A counterexample found on a coarse grid survives refinement to a grid
// containing it (resolution 12 points are resolution 24 points).
TEST(ConvexTests, RefinementKeepsCounterexamples) {
    const auto l = default_lambdas();
    const auto coarse_grid = make_grid(ConstraintSet::unconstrained(), 12);
    const auto fine = make_grid(ConstraintSet::unconstrained(), 24);
    for (const char* id : {"mcc", "gmean_tnr_tpr", "markedness"}) {
        auto c = test_convex_upper(score(id), coarse_grid, l);
        ASSERT_FALSE(c.passed);
        EXPECT_FALSE(test_convex_upper(score(id), fine, l).passed) << id;
    }
}

TEST(AuditScore, Examples) {
    auto acc = audit_score(score("accuracy"), ConstraintSet::unconstrained(), coarse());
    EXPECT_TRUE(acc.all_pass());
    auto kappa = audit_score(score("cohen_kappa"), ConstraintSet::unconstrained(), coarse());
    EXPECT_FALSE(kappa.test1);
    EXPECT_FALSE(kappa.test2);
    EXPECT_FALSE(kappa.test3);
    EXPECT_TRUE(kappa.witness1 && kappa.witness2 && kappa.witness3);
    AuditOptions o;
    o.resolution = 40;
    auto kappa2 = audit_score(score("cohen_kappa"), ConstraintSet::fixed_positive_prior(0.2), o);
    EXPECT_TRUE(kappa2.all_pass());
    auto orr = audit_score(score("odds_ratio"), ConstraintSet::fixed_positive_prior(0.5), o);
    EXPECT_TRUE(orr.test1);
    EXPECT_FALSE(orr.test2);
    EXPECT_FALSE(orr.test3);
}

TEST(AuditScore, PairGridSubsamplesOnlyLargeUnconstrainedGrids) {
    AuditOptions o;
    EXPECT_EQ(pair_grid(make_grid(ConstraintSet::unconstrained()), o).size(), 2000u);
    EXPECT_EQ(pair_grid(make_grid(ConstraintSet::unconstrained(), 12), o).size(), 455u);
    EXPECT_EQ(pair_grid(make_grid(ConstraintSet::fixed_positive_prior(0.2)), o).size(), 6561u);
}

// Ranking scores pass all three tests (any importance, any constraint set).
TEST(AuditScore, RankingScoresAlwaysPass) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 10; ++k) {
        auto I = testutil::random_importance(rng, tc::space());
        const auto r = ranking_score(I, tc::satisfaction());
        for (const auto& c : {ConstraintSet::unconstrained(), ConstraintSet::fixed_positive_prior(0.2),
                              ConstraintSet::fixed_positive_prior(0.5)}) {
            AuditOptions o;
            o.resolution = c.is_unconstrained() ? 10 : 25;
            EXPECT_TRUE(audit_score(r, c, o).all_pass()) << k << " " << c.label();
        }
    }
}
