#include "perfrank/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "perfrank/two_class.hpp"

namespace perfrank {

ConstraintSet ConstraintSet::fixed_positive_prior(double prior) {
    if (!(prior > 0.0 && prior < 1.0)) {
        throw std::invalid_argument("positive prior must lie strictly between 0 and 1");
    }
    ConstraintSet c;
    c.prior_ = prior;
    return c;
}

std::string ConstraintSet::label() const {
    if (!prior_) return "unconstrained";
    char buf[64];
    std::snprintf(buf, sizeof buf, "prior=%g", *prior_);
    return buf;
}

PerformanceGrid::PerformanceGrid(SpacePtr space, ConstraintSet constraint, int resolution,
                                 std::vector<double> flat)
    : space_(std::move(space)),
      constraint_(constraint),
      resolution_(resolution),
      stride_(space_ ? space_->size() : 0),
      flat_(std::move(flat)) {
    if (!space_) throw std::invalid_argument("grid without sample space");
    if (flat_.size() % stride_ != 0) throw std::invalid_argument("grid storage is not a whole number of points");
}

Performance PerformanceGrid::performance(std::size_t i) const {
    auto p = point(i);
    return Performance(space_, std::vector<double>(p.begin(), p.end()));
}

namespace {

// Unbiased draw in [0, bound) from the standardized mt19937_64 stream, so the
// subsample does not depend on the standard library's distributions.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

PerformanceGrid PerformanceGrid::subsample(std::size_t count, std::uint64_t seed) const {
    const std::size_t n = size();
    if (count >= n) return *this;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(draw_below(rng, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    std::vector<double> flat;
    flat.reserve(count * stride_);
    for (std::size_t i : idx) {
        auto p = point(i);
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PerformanceGrid(space_, constraint_, resolution_, std::move(flat));
}

void PerformanceGrid::write_csv(std::ostream& os) const {
    for (std::size_t k = 0; k < stride_; ++k) {
        os << (k ? "," : "") << "p_" << space_->labels()[k];
    }
    os << '\n';
    char buf[32];
    for (std::size_t i = 0; i < size(); ++i) {
        auto p = point(i);
        for (std::size_t k = 0; k < stride_; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", p[k]);
            os << (k ? "," : "") << buf;
        }
        os << '\n';
    }
}

std::uint64_t simplex_grid_size(std::size_t labels, int resolution) {
    // C(n + k - 1, k - 1), computed incrementally to stay exact.
    std::uint64_t c = 1;
    const std::uint64_t n = static_cast<std::uint64_t>(resolution);
    for (std::uint64_t i = 1; i < labels; ++i) c = c * (n + i) / i;
    return c;
}

PerformanceGrid make_simplex_grid(const SpacePtr& space, int resolution) {
    if (resolution < 1) throw std::invalid_argument("grid resolution must be at least 1");
    const std::size_t k = space->size();
    const double n = static_cast<double>(resolution);
    std::vector<double> flat;
    flat.reserve(simplex_grid_size(k, resolution) * k);
    std::vector<int> counts(k, 0);
    // Enumerate compositions of `resolution` into k parts in lexicographic
    // order of the leading k-1 counts; the last count takes the remainder.
    auto emit = [&] {
        for (int c : counts) flat.push_back(c / n);
    };
    if (k == 1) {
        counts[0] = resolution;
        emit();
        return PerformanceGrid(space, ConstraintSet::unconstrained(), resolution, std::move(flat));
    }
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
        if (pos + 1 == k) {
            counts[pos] = remaining;
            emit();
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            counts[pos] = c;
            rec(pos + 1, remaining - c);
        }
    };
    rec(0, resolution);
    return PerformanceGrid(space, ConstraintSet::unconstrained(), resolution, std::move(flat));
}

int default_resolution(const ConstraintSet& constraint) noexcept {
    return constraint.is_unconstrained() ? kDefaultUnconstrainedResolution : kDefaultFixedPriorResolution;
}

PerformanceGrid make_grid(const ConstraintSet& constraint, int resolution) {
    if (resolution < 1) throw std::invalid_argument("grid resolution must be at least 1");
    if (constraint.is_unconstrained()) return make_simplex_grid(two_class::space(), resolution);
    const double pos = *constraint.positive_prior();
    const double neg = 1.0 - pos;
    const double m = static_cast<double>(resolution);
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(resolution + 1) * (resolution + 1) * 4);
    for (int iu = 0; iu <= resolution; ++iu) {
        const double u = iu / m;
        for (int iv = 0; iv <= resolution; ++iv) {
            const double v = iv / m;
            flat.push_back(neg * (1.0 - v));
            flat.push_back(neg * v);
            flat.push_back(pos * (1.0 - u));
            flat.push_back(pos * u);
        }
    }
    return PerformanceGrid(two_class::space(), constraint, resolution, std::move(flat));
}

PerformanceGrid make_grid(const ConstraintSet& constraint) {
    return make_grid(constraint, default_resolution(constraint));
}

}  // namespace perfrank
