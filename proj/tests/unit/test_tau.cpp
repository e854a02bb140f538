#include <gtest/gtest.h>

#include <random>

#include "perfrank/scores.hpp"
#include "perfrank/tau.hpp"
#include "perfrank/two_class.hpp"
#include "test_util.hpp"

using namespace perfrank;
namespace tc = perfrank::two_class;

namespace {

const Score& score(const char* id) { return catalog_entry(id).score; }

SearchOptions search_only() {
    SearchOptions o;
    o.use_equivalences = false;
    return o;
}

}  // namespace

TEST(ImportanceParameters, RoundTrip) {
    auto I = importance_from_ab(0.25, 0.75);
    EXPECT_DOUBLE_EQ(I[tc::TN], 0.75);
    EXPECT_DOUBLE_EQ(I[tc::FP], 0.25);
    EXPECT_DOUBLE_EQ(I[tc::FN], 0.75);
    EXPECT_DOUBLE_EQ(I[tc::TP], 0.25);
    auto [a, b] = ab_from_importance(tc::importance(0, 0.5, 0.5, 1));
    EXPECT_DOUBLE_EQ(a, 1.0);
    EXPECT_DOUBLE_EQ(b, 0.5);
    EXPECT_THROW(importance_from_ab(1.5, 0.0), std::invalid_argument);
}

TEST(TauOfImportance, Examples) {
    for (const auto& c : {ConstraintSet::unconstrained(), ConstraintSet::fixed_positive_prior(0.2)}) {
        const auto g = make_grid(c);
        const auto r = ranking_score(importance_from_ab(0.5, 0.5), tc::satisfaction());
        EXPECT_DOUBLE_EQ(*tau_of_importance(r, g, 0.5, 0.5), 1.0);
        EXPECT_DOUBLE_EQ(*tau_of_importance(score("accuracy"), g, 0.5, 0.5), 1.0);
        EXPECT_DOUBLE_EQ(*tau_of_importance(score("error_rate"), g, 0.5, 0.5), -1.0);
    }
}

TEST(TauOfImportance, FewerThanTwoPointsIsUndefined) {
    auto space = tc::space();
    PerformanceGrid g(space, ConstraintSet::unconstrained(), 1, {0.5, 0.5, 0.0, 0.0});
    EXPECT_FALSE(tau_of_importance(score("accuracy"), g, 0.5, 0.5).has_value());
}

// Per-face and global rescaling of I* leave tau unchanged.
TEST(TauObjective, ReparameterizationInvariance) {
    const auto g = make_grid(ConstraintSet::unconstrained(), 16);
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(0.0, 1.0), k(0.1, 10.0);
    for (const char* id : {"mcc", "f1", "d_prime", "kappa_chance"}) {
        TauObjective obj(score(id), g);
        for (int t = 0; t < 10; ++t) {
            const double a = u(rng), b = u(rng);
            const auto base = obj(a, b);
            const double s = k(rng), s1 = k(rng), s0 = k(rng);
            EXPECT_EQ(obj.at(tc::importance(s * (1 - a), s * (1 - b), s * b, s * a)), base) << id;
            EXPECT_EQ(obj.at(tc::importance(s1 * (1 - a), s0 * (1 - b), s0 * b, s1 * a)), base) << id;
        }
    }
}

TEST(OptimizeTau, AnalyticShortcuts) {
    const auto g = make_grid(ConstraintSet::unconstrained());
    auto f1 = optimize_tau(catalog_entry("f1"), g, Objective::Max);
    EXPECT_TRUE(f1.analytic);
    EXPECT_EQ(*f1.tau, 1.0);
    const double want[4] = {0, 0.5, 0.5, 1};
    for (int k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(f1.importance[k], want[k]);
    auto fnr = optimize_tau(catalog_entry("fnr"), g, Objective::Min);
    EXPECT_TRUE(fnr.analytic);
    EXPECT_EQ(*fnr.tau, -1.0);
    // The shortcut only applies in the direction of the equivalence.
    auto f1min = optimize_tau(catalog_entry("f1"), g, Objective::Min);
    EXPECT_FALSE(f1min.analytic);
}

TEST(OptimizeTau, AccuracyMinimumOnDefaultGrid) {
    auto r = optimize_tau(catalog_entry("accuracy"), make_grid(ConstraintSet::unconstrained()), Objective::Min);
    ASSERT_TRUE(r.tau);
    EXPECT_NEAR(*r.tau, 0.469, 0.02);
    EXPECT_NEAR(*r.tau, 0.4694, 0.0005);
    EXPECT_FALSE(r.analytic);
}

TEST(OptimizeTau, ConstantScoreReportsZero) {
    const auto g = make_grid(ConstraintSet::fixed_positive_prior(0.5), 20);
    auto r = optimize_tau(catalog_entry("kappa_chance"), g, Objective::Max);
    EXPECT_TRUE(r.analytic);
    EXPECT_EQ(*r.tau, 0.0);
}

TEST(OptimizeTau, ResultReproducesAndStaysInRange) {
    const auto g = make_grid(ConstraintSet::unconstrained(), 14);
    for (const auto& e : catalog()) {
        TauObjective obj(e.score, g);
        for (auto dir : {Objective::Min, Objective::Max}) {
            auto r = search_tau(obj, dir);
            ASSERT_TRUE(r.tau) << e.id;
            EXPECT_GE(*r.tau, -1.0);
            EXPECT_LE(*r.tau, 1.0);
            EXPECT_EQ(obj(r.a, r.b), r.tau) << e.id;
            EXPECT_EQ(r.iterations, 5);
            EXPECT_EQ(r.evaluations, 605u);
        }
    }
}

TEST(OptimizeTau, NegationSymmetry) {
    const auto g = make_grid(ConstraintSet::fixed_positive_prior(0.2), 20);
    for (const char* id : {"mcc", "accuracy", "gmean_tnr_tpr", "error_rate"}) {
        auto lo = optimize_tau(score(id), g, Objective::Min, search_only());
        auto hi = optimize_tau(score(id).negated(), g, Objective::Max, search_only());
        ASSERT_TRUE(lo.tau && hi.tau);
        EXPECT_DOUBLE_EQ(*lo.tau, -*hi.tau) << id;
    }
}

TEST(OptimizeTau, SerialAndParallelAgree) {
    const auto g = make_grid(ConstraintSet::unconstrained(), 12);
    for (const char* id : {"mcc", "odds_ratio", "ptn"}) {
        SearchOptions s = search_only(), p = search_only();
        s.execution = Execution::Serial;
        p.execution = Execution::Parallel;
        auto a = optimize_tau(score(id), g, Objective::Max, s);
        auto b = optimize_tau(score(id), g, Objective::Max, p);
        EXPECT_EQ(a.tau, b.tau);
        EXPECT_EQ(a.a, b.a);
        EXPECT_EQ(a.b, b.b);
    }
}

TEST(OptimizeTau, OptionValidation) {
    const auto g = make_grid(ConstraintSet::unconstrained(), 4);
    TauObjective obj(score("f1"), g);
    SearchOptions o;
    o.cells = 1;
    EXPECT_THROW(search_tau(obj, Objective::Max, o), std::invalid_argument);
    o = SearchOptions{};
    o.shrink = 1.0;
    EXPECT_THROW(search_tau(obj, Objective::Max, o), std::invalid_argument);
}
