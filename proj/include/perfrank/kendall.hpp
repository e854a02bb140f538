#pragma once

// Kendall's tau-b with tie correction, O(n log n) (Knight's merge-sort count).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace perfrank {

/// tau-b = (C - D) / sqrt((n0 - n1)(n0 - n2)). Values compare exactly.
/// Returns nullopt when either side is constant (the denominator vanishes).
/// Throws std::invalid_argument on a length mismatch, fewer than 2 values or NaN.
std::optional<double> kendall_tau(std::span<const double> xs, std::span<const double> ys);

/// tau-b on integer ranks; same contract as kendall_tau.
std::optional<double> kendall_tau_ranks(std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys);

/// Dense ranks (0, 1, ...) where neighbours in sorted order that differ by at
/// most tolerance * max(1, |value|) share a rank. Zero tolerance ranks exactly.
std::vector<std::uint32_t> tie_ranks(std::span<const double> values, double tolerance = 0.0);

}  // namespace perfrank
