#pragma once

// Regularly spaced performances within a constraint set.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfrank/core.hpp"

namespace perfrank {

/// Either all performances, or the two-class performances with a fixed
/// positive prior P({fn, tp}).
class ConstraintSet {
public:
    static ConstraintSet unconstrained() { return ConstraintSet{}; }
    /// Throws std::invalid_argument unless 0 < prior < 1.
    static ConstraintSet fixed_positive_prior(double prior);

    bool is_unconstrained() const noexcept { return !prior_; }
    std::optional<double> positive_prior() const noexcept { return prior_; }

    /// "unconstrained" or "prior=<value>".
    std::string label() const;

    bool operator==(const ConstraintSet&) const = default;

private:
    std::optional<double> prior_;
};

inline constexpr int kDefaultUnconstrainedResolution = 32;  // C(35,3) = 6545 points
inline constexpr int kDefaultFixedPriorResolution = 80;     // 81^2 = 6561 points

/// Row-major block of performances sharing one sample space.
class PerformanceGrid {
public:
    PerformanceGrid(SpacePtr space, ConstraintSet constraint, int resolution, std::vector<double> flat);

    const SpacePtr& space() const noexcept { return space_; }
    const ConstraintSet& constraint() const noexcept { return constraint_; }
    int resolution() const noexcept { return resolution_; }
    std::size_t size() const noexcept { return flat_.size() / stride_; }
    std::size_t stride() const noexcept { return stride_; }

    std::span<const double> point(std::size_t i) const noexcept {
        return {flat_.data() + i * stride_, stride_};
    }
    Performance performance(std::size_t i) const;
    std::span<const double> flat() const noexcept { return flat_; }

    /// Deterministic subset of `count` points (sorted by original index),
    /// drawn with an mt19937_64 seeded by `seed`. Returns *this when
    /// count >= size().
    PerformanceGrid subsample(std::size_t count, std::uint64_t seed) const;

    /// CSV with one column per sample label ("p_<label>"), 17 significant digits.
    void write_csv(std::ostream& os) const;

private:
    SpacePtr space_;
    ConstraintSet constraint_;
    int resolution_;
    std::size_t stride_;
    std::vector<double> flat_;
};

/// Two-class grid: the simplex lattice (i,j,k,l)/n when unconstrained, or
/// {(pi-(1-v), pi- v, pi+(1-u), pi+ u)} for u, v in {0, 1/m, ..., 1} at a
/// fixed prior. Throws std::invalid_argument when resolution < 1.
PerformanceGrid make_grid(const ConstraintSet& constraint, int resolution);

/// Default resolution for the constraint (32 unconstrained, 80 fixed prior).
PerformanceGrid make_grid(const ConstraintSet& constraint);

int default_resolution(const ConstraintSet& constraint) noexcept;

/// Simplex lattice with step 1/n on an arbitrary finite space.
PerformanceGrid make_simplex_grid(const SpacePtr& space, int resolution);

/// Number of lattice points: C(n + k - 1, k - 1).
std::uint64_t simplex_grid_size(std::size_t labels, int resolution);

}  // namespace perfrank
