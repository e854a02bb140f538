#include "perfrank/kendall.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace perfrank {

namespace {

using Count = std::uint64_t;

Count pairs(Count t) { return t * (t - 1) / 2; }

// Sum of t(t-1)/2 over runs of equal values in a sorted sequence.
template <class It, class Eq>
Count tied_pairs(It first, It last, Eq eq) {
    Count total = 0;
    while (first != last) {
        It run = first + 1;
        while (run != last && eq(*first, *run)) ++run;
        total += pairs(static_cast<Count>(run - first));
        first = run;
    }
    return total;
}

// Bottom-up merge sort of v, returning the number of inversions.
Count sort_count_swaps(std::vector<std::uint32_t>& v) {
    const std::size_t n = v.size();
    std::vector<std::uint32_t> buf(n);
    Count swaps = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (v[j] < v[i]) {
                    swaps += mid - i;
                    buf[k++] = v[j++];
                } else {
                    buf[k++] = v[i++];
                }
            }
            while (i < mid) buf[k++] = v[i++];
            while (j < hi) buf[k++] = v[j++];
        }
        v.swap(buf);
    }
    return swaps;
}

}  // namespace

std::vector<std::uint32_t> tie_ranks(std::span<const double> values, double tolerance) {
    const std::size_t n = values.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
    std::vector<std::uint32_t> rank(n);
    std::uint32_t r = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            const double prev = values[order[k - 1]];
            const double cur = values[order[k]];
            if (cur - prev > tolerance * std::max(1.0, std::abs(cur))) ++r;
        }
        rank[order[k]] = r;
    }
    return rank;
}

std::optional<double> kendall_tau_ranks(std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("kendall_tau: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("kendall_tau: need at least two observations");
    const std::size_t n = xs.size();

    std::vector<std::uint64_t> packed(n);
    for (std::size_t i = 0; i < n; ++i) packed[i] = (std::uint64_t{xs[i]} << 32) | ys[i];
    std::sort(packed.begin(), packed.end());

    const Count n1 = tied_pairs(packed.begin(), packed.end(),
                                [](std::uint64_t a, std::uint64_t b) { return (a >> 32) == (b >> 32); });
    const Count n3 = tied_pairs(packed.begin(), packed.end(), [](std::uint64_t a, std::uint64_t b) { return a == b; });

    std::vector<std::uint32_t> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint32_t>(packed[i]);
    const Count swaps = sort_count_swaps(y);
    const Count n2 = tied_pairs(y.begin(), y.end(), [](std::uint32_t a, std::uint32_t b) { return a == b; });

    const Count n0 = pairs(n);
    if (n1 == n0 || n2 == n0) return std::nullopt;
    // C - D = n0 - n1 - n2 + n3 - 2 * swaps
    const double num = static_cast<double>(n0) - static_cast<double>(n1) - static_cast<double>(n2) +
                       static_cast<double>(n3) - 2.0 * static_cast<double>(swaps);
    const double den = std::sqrt(static_cast<double>(n0 - n1)) * std::sqrt(static_cast<double>(n0 - n2));
    return std::clamp(num / den, -1.0, 1.0);
}

std::optional<double> kendall_tau(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("kendall_tau: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("kendall_tau: need at least two observations");
    auto is_nan = [](double v) { return std::isnan(v); };
    if (std::any_of(xs.begin(), xs.end(), is_nan) || std::any_of(ys.begin(), ys.end(), is_nan)) {
        throw std::invalid_argument("kendall_tau: NaN input");
    }
    const auto rx = tie_ranks(xs);
    const auto ry = tie_ranks(ys);
    return kendall_tau_ranks(rx, ry);
}

}  // namespace perfrank
