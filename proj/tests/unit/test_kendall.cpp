#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "perfrank/kendall.hpp"

using namespace perfrank;

namespace {

// O(n^2) pair counting.
std::optional<double> brute_force_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
    long long concordant = 0, discordant = 0, tx = 0, ty = 0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j], dy = y[i] - y[j];
            if (dx == 0 && dy == 0) continue;
            if (dx == 0) {
                ++tx;
            } else if (dy == 0) {
                ++ty;
            } else if ((dx > 0) == (dy > 0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double den = std::sqrt(static_cast<double>(concordant + discordant + tx)) *
                       std::sqrt(static_cast<double>(concordant + discordant + ty));
    if (den == 0) return std::nullopt;
    return (concordant - discordant) / den;
}

}  // namespace

TEST(KendallTau, Examples) {
    const std::vector<double> a = {1, 2, 3};
    const std::vector<double> b = {3, 2, 1};
    EXPECT_DOUBLE_EQ(*kendall_tau(a, a), 1.0);
    EXPECT_DOUBLE_EQ(*kendall_tau(a, b), -1.0);
    const std::vector<double> x = {1, 2, 3, 4};
    const std::vector<double> y = {1, 3, 2, 4};
    EXPECT_NEAR(*kendall_tau(x, y), 4.0 / 6.0, 1e-15);
}

// Values cross-checked against scipy.stats.kendalltau (tau-b, default).
TEST(KendallTau, TiedReferenceValues) {
    const std::vector<double> x = {1, 1, 2, 2, 3, 4, 4, 5};
    const std::vector<double> y = {2, 1, 2, 3, 3, 5, 4, 4};
    EXPECT_NEAR(*kendall_tau(x, y), 0.8, 1e-14);
    const std::vector<double> u = {0, 0, 0, 1, 1};
    const std::vector<double> v = {1, 0, 1, 0, 1};
    EXPECT_NEAR(*kendall_tau(u, v), -0.1666666666666667, 1e-14);
}

TEST(KendallTau, Errors) {
    const std::vector<double> a = {1, 2, 3};
    const std::vector<double> b = {1, 2};
    const std::vector<double> one = {1};
    const std::vector<double> c = {5, 5, 5};
    const std::vector<double> nan = {1, NAN, 2};
    EXPECT_THROW(kendall_tau(a, b), std::invalid_argument);
    EXPECT_THROW(kendall_tau(one, one), std::invalid_argument);
    EXPECT_THROW(kendall_tau(a, nan), std::invalid_argument);
    EXPECT_FALSE(kendall_tau(c, c).has_value());
    EXPECT_FALSE(kendall_tau(a, c).has_value());
}

TEST(KendallTau, MatchesBruteForce) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> len(2, 300), levels(1, 12);
    for (int k = 0; k < 200; ++k) {
        const int n = len(rng);
        // Few distinct levels on some cases so ties are common.
        std::uniform_int_distribution<int> vx(0, levels(rng)), vy(0, k % 3 == 0 ? 1000000 : levels(rng));
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = vx(rng);
            y[i] = vy(rng);
        }
        const auto fast = kendall_tau(x, y);
        const auto slow = brute_force_tau_b(x, y);
        ASSERT_EQ(fast.has_value(), slow.has_value()) << k;
        if (fast) {
            EXPECT_NEAR(*fast, *slow, 1e-12) << k;
        }
    }
}

TEST(TieRanks, ToleranceMergesNearEqualValues) {
    const std::vector<double> v = {0.3, 0.1 + 0.2, 0.5, 0.2};
    const auto exact = tie_ranks(v);
    EXPECT_NE(exact[0], exact[1]);
    const auto loose = tie_ranks(v, 1e-12);
    EXPECT_EQ(loose[0], loose[1]);
    EXPECT_EQ(loose[3], 0u);
    EXPECT_EQ(loose[2], 2u);
}
