#pragma once

// Empirical axiom tests for arbitrary scores over a performance grid:
//   test 1: compatibility with the satisfaction,
//   test 2: X(mixture) <= max of the mixed performances' scores,
//   test 3: X(mixture) >= min of the mixed performances' scores.
//
// The pair loops of tests 2 and 3 come in a serial reference and an OpenMP
// version. Both report the first violation in (i, j, lambda) order, so their
// verdicts and witnesses are identical.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfrank/core.hpp"
#include "perfrank/grid.hpp"

namespace perfrank {

enum class Execution { Serial, Parallel };

/// {0.01, 0.1, 0.2, ..., 0.9, 0.99}
std::vector<double> default_lambdas();

struct AuditOptions {
    std::vector<double> lambdas = default_lambdas();
    /// Unconstrained grids larger than this are subsampled for tests 2-3.
    std::size_t pair_subsample = 2000;
    std::uint64_t seed = 7;
    /// Grid resolution; 0 selects the constraint's default.
    int resolution = 0;
    double tolerance = kEqualityTolerance;
    Execution execution = Execution::Parallel;
};

/// P1 is supported where S <= threshold, P2 where S >= threshold, yet
/// X(P1) > X(P2).
struct SatisfactionWitness {
    std::vector<double> worse;
    std::vector<double> better;
    double threshold = 0.0;
    double worse_score = 0.0;
    double better_score = 0.0;
};

/// Q = lambda P1 + (1 - lambda) P2 scores outside [min, max] of X(P1), X(P2).
struct CombinationWitness {
    std::vector<double> p1;
    std::vector<double> p2;
    double lambda = 0.0;
    std::vector<double> mixture;
    double score1 = 0.0;
    double score2 = 0.0;
    double score_mixture = 0.0;
};

struct SatisfactionResult {
    bool passed = true;
    std::optional<SatisfactionWitness> witness;
};

struct CombinationResult {
    bool passed = true;
    std::optional<CombinationWitness> witness;
};

struct ConvexBounds {
    CombinationResult upper;  // test 2
    CombinationResult lower;  // test 3
};

enum class Bound { Upper, Lower };

/// Test 1 against an arbitrary satisfaction on the grid's space.
SatisfactionResult test_satisfaction_axiom(const Score& score, const PerformanceGrid& grid,
                                           const RandomVariable& satisfaction,
                                           double tolerance = kEqualityTolerance);

/// Test 1 against the two-class satisfaction (1, 0, 0, 1).
SatisfactionResult test_satisfaction_axiom(const Score& score, const PerformanceGrid& grid);

/// Tests 2 and 3 in one sweep over unordered grid pairs. The lambda set is
/// closed under lambda -> 1 - lambda first, so every ordered pair is covered.
/// Throws std::invalid_argument unless every lambda lies in (0, 1).
ConvexBounds test_convex_bounds(const Score& score, const PerformanceGrid& grid,
                                std::span<const double> lambdas,
                                Execution execution = Execution::Parallel,
                                double tolerance = kEqualityTolerance);

CombinationResult test_convex_upper(const Score& score, const PerformanceGrid& grid,
                                    std::span<const double> lambdas,
                                    Execution execution = Execution::Parallel,
                                    double tolerance = kEqualityTolerance);

CombinationResult test_convex_lower(const Score& score, const PerformanceGrid& grid,
                                    std::span<const double> lambdas,
                                    Execution execution = Execution::Parallel,
                                    double tolerance = kEqualityTolerance);

/// Re-evaluates a stored witness; true when the violation reproduces.
bool replay(const Score& score, const CombinationWitness& w, Bound bound,
            double tolerance = kEqualityTolerance);
bool replay(const Score& score, const SatisfactionWitness& w, double tolerance = kEqualityTolerance);

struct TestVerdict {
    bool test1 = true;
    bool test2 = true;
    bool test3 = true;
    std::optional<SatisfactionWitness> witness1;
    std::optional<CombinationWitness> witness2;
    std::optional<CombinationWitness> witness3;

    bool all_pass() const noexcept { return test1 && test2 && test3; }
};

/// Grid used for tests 2-3: the full grid, or a seeded subsample when the
/// grid is unconstrained and larger than options.pair_subsample.
PerformanceGrid pair_grid(const PerformanceGrid& grid, const AuditOptions& options);

/// All three tests on an explicit grid and satisfaction.
TestVerdict audit_score(const Score& score, const PerformanceGrid& grid, const RandomVariable& satisfaction,
                        const AuditOptions& options = {});

/// All three tests on the two-class grid for a constraint set.
TestVerdict audit_score(const Score& score, const ConstraintSet& constraint, const AuditOptions& options = {});

}  // namespace perfrank
