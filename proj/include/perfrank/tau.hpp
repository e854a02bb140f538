#pragma once

// Best and worst Kendall consistency between a two-class score and the
// ranking scores R_I, searched over importances parameterized by
//   a = I(tp) / (I(tn) + I(tp)),   b = I(fn) / (I(fp) + I(fn)),
// i.e. I* = (1 - a, 1 - b, b, a) on (tn, fp, fn, tp).

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "perfrank/audit.hpp"
#include "perfrank/core.hpp"
#include "perfrank/grid.hpp"
#include "perfrank/scores.hpp"

namespace perfrank {

enum class Objective { Min, Max };
const char* to_string(Objective o) noexcept;

struct SearchOptions {
    int cells = 11;          ///< points per side of each search square
    double shrink = 0.25;    ///< side ratio between consecutive squares
    double min_side = 1e-3;  ///< stop once the next square would be smaller
    /// Values closer than this (relative to max(1, |v|)) count as ties, so
    /// rounding noise between algebraically equal values does not break them.
    double tie_tolerance = kEqualityTolerance;
    Execution execution = Execution::Parallel;
    /// Return exactly +-1 when the catalog declares a monotone equivalence.
    bool use_equivalences = true;
    /// Still run the search when the shortcut applies, to report its value.
    bool search_analytic = true;
};

/// (1 - a, 1 - b, b, a) on the two-class space.
RandomVariable importance_from_ab(double a, double b);

/// Inverse of importance_from_ab up to per-face scaling; a face with zero
/// total importance maps to 1/2.
std::pair<double, double> ab_from_importance(const RandomVariable& importance);

/// tau(a, b) with the score evaluated once on the grid. Pairs where either
/// the score or R_I is undefined are dropped.
class TauObjective {
public:
    TauObjective(const Score& score, const PerformanceGrid& grid, double tie_tolerance = kEqualityTolerance);

    std::optional<double> operator()(double a, double b) const;
    std::optional<double> at(const RandomVariable& importance) const;

    /// In-domain points of the score.
    std::size_t domain_size() const noexcept { return rank_.size(); }
    /// True when every in-domain score value ties with every other.
    bool score_constant() const noexcept;

private:
    std::optional<double> evaluate(const std::array<double, 4>& importance) const;

    std::vector<std::array<double, 4>> points_;
    std::vector<std::uint32_t> rank_;
    double tie_tolerance_;
};

std::optional<double> tau_of_importance(const Score& score, const PerformanceGrid& grid, double a, double b,
                                        double tie_tolerance = kEqualityTolerance);

struct TauResult {
    Objective objective = Objective::Max;
    /// Reported value; nullopt when fewer than two comparable points exist.
    std::optional<double> tau;
    double a = 0.5;
    double b = 0.5;
    /// Importance reaching tau (declared importance for analytic results).
    std::array<double, 4> importance{0.5, 0.5, 0.5, 0.5};
    /// tau comes from a declared equivalence (+-1) or a constant score (0).
    bool analytic = false;
    /// Best value found by the direct search, when it ran.
    std::optional<double> searched;
    double searched_a = 0.5;
    double searched_b = 0.5;
    int iterations = 0;
    std::size_t evaluations = 0;
};

/// Coarse-to-fine direct search: a cells x cells lattice on the current
/// square, then a square shrunk by `shrink` recentred (and shifted back into
/// [0,1]^2) on the best point, until the side drops below min_side. Ties go to
/// the lexicographically smallest (a, b).
TauResult search_tau(const TauObjective& objective, Objective direction, const SearchOptions& options = {});

/// Search plus the analytic shortcuts: +-1 when `equivalence` is given and
/// points the same way as the objective, 0 when the score is constant.
TauResult optimize_tau(const Score& score, const PerformanceGrid& grid, Objective direction,
                       const SearchOptions& options = {},
                       const std::optional<Equivalence>& equivalence = std::nullopt);

/// Uses the entry's declared equivalence on grid.constraint().
TauResult optimize_tau(const CatalogEntry& entry, const PerformanceGrid& grid, Objective direction,
                       const SearchOptions& options = {});

}  // namespace perfrank
