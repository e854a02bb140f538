#include <gtest/gtest.h>

#include <random>

#include "perfrank/ordering.hpp"
#include "perfrank/scores.hpp"
#include "perfrank/two_class.hpp"
#include "test_util.hpp"

using namespace perfrank;
namespace tc = perfrank::two_class;

TEST(Compare, Examples) {
    const auto& acc = catalog_entry("accuracy").score;
    EXPECT_EQ(compare(acc, tc::performance(0.3, 0.2, 0.2, 0.3), tc::performance(0.4, 0.1, 0.1, 0.4)),
              Relation::Worse);
    const auto& tpr = catalog_entry("tpr").score;
    EXPECT_EQ(compare(tpr, tc::performance(0.5, 0.5, 0, 0), tc::performance(0, 0, 0.5, 0.5)),
              Relation::Incomparable);
    const auto out = tc::performance(0.5, 0.5, 0, 0);
    EXPECT_EQ(compare(tpr, out, tc::performance(0.5, 0.5, 0, 0)), Relation::Equivalent);
    EXPECT_EQ(compare(tpr, out, tc::performance(0.25, 0.75, 0, 0)), Relation::Incomparable);
}

TEST(Compare, RejectsMixedSpaces) {
    auto other = testutil::make_space(4);
    const auto& acc = catalog_entry("accuracy").score;
    EXPECT_THROW(compare(acc, tc::performance(0.25, 0.25, 0.25, 0.25), Performance(other, {0.25, 0.25, 0.25, 0.25})),
                 std::invalid_argument);
}

TEST(Compare, ExactlyOneRelationAndConverse) {
    std::mt19937_64 rng(11);
    for (const auto& e : catalog()) {
        for (int k = 0; k < 200; ++k) {
            auto p1 = testutil::random_performance(rng, tc::space());
            auto p2 = testutil::random_performance(rng, tc::space());
            const Relation r12 = compare(e.score, p1, p2);
            const Relation r21 = compare(e.score, p2, p1);
            switch (r12) {
                case Relation::Worse: EXPECT_EQ(r21, Relation::Better); break;
                case Relation::Better: EXPECT_EQ(r21, Relation::Worse); break;
                default: EXPECT_EQ(r21, r12); break;
            }
        }
    }
}

namespace {

// Rank-bound set sizes counted directly from the scores.
RankBounds brute_force_bounds(const std::vector<EntityRecord>& es, std::size_t i, const Score& s) {
    int better_than_me = 0, at_least_me = 0;
    const auto xi = s(es[i].performance);
    for (std::size_t j = 0; j < es.size(); ++j) {
        const auto xj = s(es[j].performance);
        const bool same = es[i].performance.identical(es[j].performance);
        if (xi && xj && *xi < *xj) ++better_than_me;
        if (same || (xi && xj && *xi <= *xj)) ++at_least_me;
    }
    return {better_than_me + 1, at_least_me};
}

}  // namespace

TEST(RankBounds, Examples) {
    const auto& acc = catalog_entry("accuracy").score;
    std::vector<EntityRecord> es = {{"a", tc::performance(0.45, 0.05, 0.05, 0.45)},
                                    {"b", tc::performance(0.4, 0.1, 0.1, 0.4)},
                                    {"c", tc::performance(0.3, 0.1, 0.1, 0.5)}};
    auto b = rank_bounds(es, acc);
    EXPECT_EQ(b["a"].lower, 1);
    EXPECT_EQ(b["a"].upper, 1);
    EXPECT_EQ(b["b"].lower, 2);
    EXPECT_EQ(b["b"].upper, 3);
    EXPECT_EQ(b["c"].lower, 2);
    EXPECT_EQ(b["c"].upper, 3);
    EXPECT_EQ(b["c"].rank(), 2);

    auto single = rank_bounds({{"x", tc::performance(1, 0, 0, 0)}}, acc);
    EXPECT_EQ(single["x"].lower, 1);
    EXPECT_EQ(single["x"].upper, 1);
}

TEST(RankBounds, OutOfDomainEntity) {
    const auto& tpr = catalog_entry("tpr").score;
    std::vector<EntityRecord> es = {{"in", tc::performance(0.25, 0.25, 0.25, 0.25)},
                                    {"out", tc::performance(0.5, 0.5, 0, 0)}};
    auto b = rank_bounds(es, tpr);
    EXPECT_EQ(b["out"].lower, 1);
    EXPECT_EQ(b["out"].upper, 1);
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto ref = brute_force_bounds(es, i, tpr);
        EXPECT_EQ(b[es[i].id].lower, ref.lower);
        EXPECT_EQ(b[es[i].id].upper, ref.upper);
    }
}

TEST(RankBounds, MatchBruteForceCount) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> grid(0, 4);
    for (const char* id : {"accuracy", "f1", "tpr", "mcc", "plr"}) {
        const auto& s = catalog_entry(id).score;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<EntityRecord> es;
            for (int k = 0; k < 15; ++k) {
                // Coarse lattice so that ties and repeats occur.
                double v[4];
                double sum = 0;
                for (double& x : v) sum += (x = grid(rng));
                if (sum == 0) v[0] = sum = 1;
                es.push_back({"e" + std::to_string(k), tc::performance(v[0] / sum, v[1] / sum, v[2] / sum, v[3] / sum)});
            }
            auto b = rank_bounds(es, s);
            for (std::size_t i = 0; i < es.size(); ++i) {
                auto ref = brute_force_bounds(es, i, s);
                EXPECT_EQ(b[es[i].id].lower, ref.lower) << id;
                EXPECT_EQ(b[es[i].id].upper, ref.upper) << id;
                EXPECT_LE(b[es[i].id].lower, b[es[i].id].upper);
            }
        }
    }
}

TEST(RankBounds, Errors) {
    const auto& acc = catalog_entry("accuracy").score;
    EXPECT_THROW(rank_bounds({}, acc), std::invalid_argument);
    std::vector<EntityRecord> dup = {{"a", tc::performance(1, 0, 0, 0)}, {"a", tc::performance(0, 1, 0, 0)}};
    EXPECT_THROW(rank_bounds(dup, acc), std::invalid_argument);
}

// Adding or removing an entity never changes the relation between two others.
TEST(RankBounds, RelationsIndependentOfOtherEntities) {
    std::mt19937_64 rng(13);
    const auto& s = catalog_entry("f1").score;
    std::vector<Performance> ps;
    for (int k = 0; k < 12; ++k) ps.push_back(testutil::random_performance(rng, tc::space()));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const Relation full = compare(s, ps[i], ps[j]);
            std::vector<Performance> subset = {ps[i], ps[j]};
            EXPECT_EQ(compare(s, subset[0], subset[1]), full);
        }
    }
}

TEST(Lemmas, CatalogScoresOverRandomSamples) {
    std::mt19937_64 rng(14);
    const char* ids[] = {"accuracy", "f1", "tpr", "ppv", "mcc", "cohen_kappa", "plr", "nlr", "d_prime", "error_rate"};
    for (const char* id : ids) {
        std::vector<Performance> sample;
        for (int k = 0; k < 30; ++k) sample.push_back(testutil::random_performance(rng, tc::space()));
        sample.push_back(sample[3]);  // exact duplicate exercises equivalence
        auto report = relation_properties_check(catalog_entry(id).score, sample);
        EXPECT_TRUE(report.all_hold()) << id;
    }
}

TEST(Lemmas, RankingScoreOverVertices) {
    auto r = ranking_score(tc::importance(0.3, 1, 0.2, 0.7), tc::satisfaction());
    std::vector<Performance> v = {tc::performance(1, 0, 0, 0), tc::performance(0, 1, 0, 0),
                                  tc::performance(0, 0, 1, 0), tc::performance(0, 0, 0, 1)};
    EXPECT_TRUE(relation_properties_check(r, v).all_hold());
}

TEST(Lemmas, BrokenRelationFailsTransitivity) {
    const auto& acc = catalog_entry("accuracy").score;
    Preorder sloppy = [&](const Performance& a, const Performance& b) { return *acc(a) <= *acc(b) + 0.1; };
    std::vector<Performance> v = {tc::performance(0.5, 0.5, 0, 0), tc::performance(0.5, 0.42, 0.0, 0.08),
                                  tc::performance(0.5, 0.34, 0.0, 0.16)};
    auto report = relation_properties_check(sloppy, v);
    EXPECT_FALSE(report.holds("le_transitive"));
    EXPECT_FALSE(report.all_hold());
    EXPECT_THROW(report.holds("no_such_lemma"), std::invalid_argument);
}
