#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "perfrank/grid.hpp"
#include "perfrank/two_class.hpp"

using namespace perfrank;

TEST(Grid, UnconstrainedSizes) {
    EXPECT_EQ(make_grid(ConstraintSet::unconstrained(), 1).size(), 4u);
    EXPECT_EQ(make_grid(ConstraintSet::unconstrained(), 32).size(), 6545u);
    EXPECT_EQ(make_grid(ConstraintSet::unconstrained()).size(), 6545u);
    EXPECT_EQ(simplex_grid_size(4, 32), 6545u);
    EXPECT_EQ(simplex_grid_size(9, 4), 495u);
}

TEST(Grid, UnconstrainedPointsAreLatticeCompositions) {
    const auto g = make_grid(ConstraintSet::unconstrained(), 6);
    std::set<std::vector<long>> seen;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = g.point(i);
        std::vector<long> c;
        long total = 0;
        for (double v : p) {
            const long k = std::lround(v * 6);
            EXPECT_NEAR(v, k / 6.0, 1e-15);
            c.push_back(k);
            total += k;
        }
        EXPECT_EQ(total, 6);
        EXPECT_TRUE(seen.insert(c).second);
    }
    EXPECT_EQ(seen.size(), 84u);
}

TEST(Grid, FixedPriorPoints) {
    const auto c = ConstraintSet::fixed_positive_prior(0.2);
    const auto g = make_grid(c, 2);
    ASSERT_EQ(g.size(), 9u);
    auto has = [&](std::array<double, 4> q) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto p = g.point(i);
            bool eq = true;
            for (int k = 0; k < 4; ++k) eq = eq && std::abs(p[k] - q[k]) < 1e-15;
            if (eq) return true;
        }
        return false;
    };
    EXPECT_TRUE(has({0.8, 0, 0.2, 0}));
    EXPECT_TRUE(has({0, 0.8, 0, 0.2}));
    const auto big = make_grid(c);
    EXPECT_EQ(big.size(), 6561u);
    for (std::size_t i = 0; i < big.size(); ++i) {
        EXPECT_NEAR(two_class::prior_pos(big.point(i)), 0.2, 1e-12);
    }
}

TEST(Grid, ConstraintValidation) {
    EXPECT_THROW(ConstraintSet::fixed_positive_prior(0.0), std::invalid_argument);
    EXPECT_THROW(ConstraintSet::fixed_positive_prior(1.0), std::invalid_argument);
    EXPECT_THROW(make_grid(ConstraintSet::unconstrained(), 0), std::invalid_argument);
    EXPECT_EQ(ConstraintSet::unconstrained().label(), "unconstrained");
    EXPECT_EQ(ConstraintSet::fixed_positive_prior(0.2).label(), "prior=0.2");
}

TEST(Grid, SubsampleIsDeterministicAndSorted) {
    const auto g = make_grid(ConstraintSet::unconstrained());
    const auto a = g.subsample(2000, 7);
    const auto b = g.subsample(2000, 7);
    const auto c = g.subsample(2000, 8);
    ASSERT_EQ(a.size(), 2000u);
    EXPECT_TRUE(std::equal(a.flat().begin(), a.flat().end(), b.flat().begin()));
    EXPECT_FALSE(std::equal(a.flat().begin(), a.flat().end(), c.flat().begin()));
    EXPECT_EQ(g.subsample(10000, 7).size(), g.size());
}

TEST(Grid, CsvExport) {
    const auto g = make_grid(ConstraintSet::fixed_positive_prior(0.2), 1);
    std::ostringstream os;
    g.write_csv(os);
    const std::string s = os.str();
    EXPECT_EQ(s.substr(0, s.find('\n')), "p_tn,p_fp,p_fn,p_tp");
    EXPECT_NE(s.find("0.80000000000000004,0,0.20000000000000001,0"), std::string::npos);
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 5);
}
