#pragma once

// The two-class crisp classification space: samples (tn, fp, fn, tp) in
// that order, satisfaction 1 on {tn, tp}.

#include <array>
#include <span>

#include "perfrank/core.hpp"

namespace perfrank::two_class {

enum Sample : std::size_t { TN = 0, FP = 1, FN = 2, TP = 3 };

/// Shared (tn, fp, fn, tp) space.
const SpacePtr& space();

/// S = (1, 0, 0, 1).
const RandomVariable& satisfaction();

RandomVariable importance(double tn, double fp, double fn, double tp, std::string name = {});
RandomVariable importance(const std::array<double, 4>& values, std::string name = {});

Performance performance(double tn, double fp, double fn, double tp);

inline double prior_pos(std::span<const double> p) noexcept { return p[FN] + p[TP]; }
inline double prior_neg(std::span<const double> p) noexcept { return p[TN] + p[FP]; }
inline double rate_pos(std::span<const double> p) noexcept { return p[FP] + p[TP]; }
inline double rate_neg(std::span<const double> p) noexcept { return p[TN] + p[FN]; }

/// Ground-truth class of a sample: false = negative, true = positive.
inline bool truth_is_positive(Sample s) noexcept { return s == FN || s == TP; }
/// Predicted class of a sample.
inline bool prediction_is_positive(Sample s) noexcept { return s == FP || s == TP; }

}  // namespace perfrank::two_class
