#include "perfrank/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "perfrank/two_class.hpp"

namespace perfrank {

std::vector<double> default_lambdas() {
    return {0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
}

namespace {

struct Evaluated {
    std::vector<double> value;
    std::vector<char> in_domain;
};

Evaluated evaluate_grid(const Score& score, const PerformanceGrid& grid) {
    Evaluated e;
    const std::size_t n = grid.size();
    e.value.assign(n, 0.0);
    e.in_domain.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (auto v = score.evaluate(grid.point(i))) {
            e.value[i] = *v;
            e.in_domain[i] = 1;
        }
    }
    return e;
}

std::vector<double> symmetric_lambdas(std::span<const double> lambdas) {
    std::vector<double> out;
    for (double l : lambdas) {
        if (!(l > 0.0 && l < 1.0)) throw std::invalid_argument("mixing weights must lie in (0, 1)");
        out.push_back(l);
        out.push_back(1.0 - l);
    }
    std::sort(out.begin(), out.end());
    // 1 - l is not always bit-identical to its mirror in the input, so merge
    // values that agree to within rounding.
    std::vector<double> merged;
    for (double l : out) {
        if (merged.empty() || l - merged.back() > 1e-15) merged.push_back(l);
    }
    return merged;
}

struct Hit {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t lambda = 0;
    double score = 0.0;
};

CombinationWitness make_witness(const PerformanceGrid& grid, const Evaluated& ev,
                                std::span<const double> lambdas, const Hit& h) {
    CombinationWitness w;
    auto a = grid.point(h.i);
    auto b = grid.point(h.j);
    w.p1.assign(a.begin(), a.end());
    w.p2.assign(b.begin(), b.end());
    w.lambda = lambdas[h.lambda];
    w.mixture.resize(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) w.mixture[k] = w.lambda * a[k] + (1.0 - w.lambda) * b[k];
    w.score1 = ev.value[h.i];
    w.score2 = ev.value[h.j];
    w.score_mixture = h.score;
    return w;
}

// Serial reference: plain triple loop, stops once every requested bound has
// its first violation.
void convex_serial(const Score& score, const PerformanceGrid& grid, const Evaluated& ev,
                   std::span<const double> lambdas, double tol, bool want_upper, bool want_lower,
                   std::optional<Hit>& upper, std::optional<Hit>& lower) {
    const std::size_t n = grid.size();
    const std::size_t k = grid.stride();
    std::vector<double> q(k);
    for (std::size_t i = 0; i < n; ++i) {
        if (!ev.in_domain[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!ev.in_domain[j]) continue;
            const double hi = std::max(ev.value[i], ev.value[j]);
            const double lo = std::min(ev.value[i], ev.value[j]);
            auto a = grid.point(i);
            auto b = grid.point(j);
            for (std::size_t l = 0; l < lambdas.size(); ++l) {
                const double lam = lambdas[l];
                for (std::size_t c = 0; c < k; ++c) q[c] = lam * a[c] + (1.0 - lam) * b[c];
                auto v = score.evaluate(q);
                if (!v) continue;
                if (want_upper && !upper && *v > hi + tol) upper = Hit{i, j, l, *v};
                if (want_lower && !lower && *v < lo - tol) lower = Hit{i, j, l, *v};
                if ((!want_upper || upper) && (!want_lower || lower)) return;
            }
        }
    }
}

// Scans row i (pairs (i, j > i)) for the first violation of each bound.
void scan_row(const Score& score, const PerformanceGrid& grid, const Evaluated& ev,
              std::span<const double> lambdas, double tol, std::size_t i, bool want_upper,
              bool want_lower, std::optional<Hit>& upper, std::optional<Hit>& lower) {
    const std::size_t n = grid.size();
    const std::size_t k = grid.stride();
    double q[kMaxLabels];
    const std::span<const double> qs(q, k);
    auto a = grid.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
        if (!ev.in_domain[j]) continue;
        const double hi = std::max(ev.value[i], ev.value[j]);
        const double lo = std::min(ev.value[i], ev.value[j]);
        auto b = grid.point(j);
        for (std::size_t l = 0; l < lambdas.size(); ++l) {
            const double lam = lambdas[l];
            for (std::size_t c = 0; c < k; ++c) q[c] = lam * a[c] + (1.0 - lam) * b[c];
            auto v = score.evaluate(qs);
            if (!v) continue;
            if (want_upper && !upper && *v > hi + tol) upper = Hit{i, j, l, *v};
            if (want_lower && !lower && *v < lo - tol) lower = Hit{i, j, l, *v};
            if ((!want_upper || upper) && (!want_lower || lower)) return;
        }
    }
}

// Rows are distributed across threads; each bound keeps the violation from
// the smallest row index, which is the one the serial loop finds first.
void convex_parallel(const Score& score, const PerformanceGrid& grid, const Evaluated& ev,
                     std::span<const double> lambdas, double tol, bool want_upper, bool want_lower,
                     std::optional<Hit>& upper, std::optional<Hit>& lower) {
    const std::size_t n = grid.size();
    std::atomic<std::size_t> first_upper{want_upper ? n : 0};
    std::atomic<std::size_t> first_lower{want_lower ? n : 0};
    const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (long r = 0; r < rows; ++r) {
        const auto i = static_cast<std::size_t>(r);
        if (!ev.in_domain[i]) continue;
        const bool up = i < first_upper.load(std::memory_order_relaxed);
        const bool down = i < first_lower.load(std::memory_order_relaxed);
        if (!up && !down) continue;
        std::optional<Hit> hu, hl;
        scan_row(score, grid, ev, lambdas, tol, i, up, down, hu, hl);
        if (hu || hl) {
#pragma omp critical(perfrank_convex_hit)
            {
                if (hu && i < first_upper.load()) {
                    first_upper.store(i);
                    upper = hu;
                }
                if (hl && i < first_lower.load()) {
                    first_lower.store(i);
                    lower = hl;
                }
            }
        }
    }
}

ConvexBounds run_convex(const Score& score, const PerformanceGrid& grid, std::span<const double> lambdas,
                        Execution execution, double tol, bool want_upper, bool want_lower) {
    const auto lam = symmetric_lambdas(lambdas);
    const Evaluated ev = evaluate_grid(score, grid);
    std::optional<Hit> upper, lower;
    if (execution == Execution::Serial) {
        convex_serial(score, grid, ev, lam, tol, want_upper, want_lower, upper, lower);
    } else {
        convex_parallel(score, grid, ev, lam, tol, want_upper, want_lower, upper, lower);
    }
    ConvexBounds out;
    if (upper) out.upper = {false, make_witness(grid, ev, lam, *upper)};
    if (lower) out.lower = {false, make_witness(grid, ev, lam, *lower)};
    return out;
}

Event support_of(std::span<const double> p) {
    Event e = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] > 0.0) e |= Event{1} << k;
    }
    return e;
}

}  // namespace

SatisfactionResult test_satisfaction_axiom(const Score& score, const PerformanceGrid& grid,
                                           const RandomVariable& satisfaction, double tolerance) {
    if (!same_space(grid.space(), satisfaction.space())) {
        throw std::invalid_argument("satisfaction and grid live on different spaces");
    }
    const Evaluated ev = evaluate_grid(score, grid);
    const std::size_t n = grid.size();
    std::vector<Event> support(n);
    for (std::size_t i = 0; i < n; ++i) support[i] = support_of(grid.point(i));

    std::vector<double> levels(satisfaction.values().begin(), satisfaction.values().end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // Thresholds strictly between two levels are implied by the lower level,
    // so checking s at each distinct value of S covers every s.
    for (double s : levels) {
        Event at_most = 0, at_least = 0;
        for (std::size_t k = 0; k < satisfaction.size(); ++k) {
            if (satisfaction[k] <= s) at_most |= Event{1} << k;
            if (satisfaction[k] >= s) at_least |= Event{1} << k;
        }
        std::optional<std::size_t> worst_low, best_high;  // argmax over "low" side, argmin over "high" side
        for (std::size_t i = 0; i < n; ++i) {
            if (!ev.in_domain[i]) continue;
            if ((support[i] & ~at_most) == 0 && (!worst_low || ev.value[i] > ev.value[*worst_low])) worst_low = i;
            if ((support[i] & ~at_least) == 0 && (!best_high || ev.value[i] < ev.value[*best_high])) best_high = i;
        }
        if (!worst_low || !best_high) continue;
        if (ev.value[*worst_low] > ev.value[*best_high] + tolerance) {
            SatisfactionWitness w;
            auto a = grid.point(*worst_low);
            auto b = grid.point(*best_high);
            w.worse.assign(a.begin(), a.end());
            w.better.assign(b.begin(), b.end());
            w.threshold = s;
            w.worse_score = ev.value[*worst_low];
            w.better_score = ev.value[*best_high];
            return {false, std::move(w)};
        }
    }
    return {};
}

SatisfactionResult test_satisfaction_axiom(const Score& score, const PerformanceGrid& grid) {
    return test_satisfaction_axiom(score, grid, two_class::satisfaction());
}

ConvexBounds test_convex_bounds(const Score& score, const PerformanceGrid& grid, std::span<const double> lambdas,
                                Execution execution, double tolerance) {
    return run_convex(score, grid, lambdas, execution, tolerance, true, true);
}

CombinationResult test_convex_upper(const Score& score, const PerformanceGrid& grid,
                                    std::span<const double> lambdas, Execution execution, double tolerance) {
    return run_convex(score, grid, lambdas, execution, tolerance, true, false).upper;
}

CombinationResult test_convex_lower(const Score& score, const PerformanceGrid& grid,
                                    std::span<const double> lambdas, Execution execution, double tolerance) {
    return run_convex(score, grid, lambdas, execution, tolerance, false, true).lower;
}

bool replay(const Score& score, const CombinationWitness& w, Bound bound, double tolerance) {
    auto x1 = score.evaluate(w.p1);
    auto x2 = score.evaluate(w.p2);
    std::vector<double> q(w.p1.size());
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = w.lambda * w.p1[k] + (1.0 - w.lambda) * w.p2[k];
    auto xq = score.evaluate(q);
    if (!x1 || !x2 || !xq) return false;
    if (bound == Bound::Upper) return *xq > std::max(*x1, *x2) + tolerance;
    return *xq < std::min(*x1, *x2) - tolerance;
}

bool replay(const Score& score, const SatisfactionWitness& w, double tolerance) {
    auto x1 = score.evaluate(w.worse);
    auto x2 = score.evaluate(w.better);
    return x1 && x2 && *x1 > *x2 + tolerance;
}

PerformanceGrid pair_grid(const PerformanceGrid& grid, const AuditOptions& options) {
    if (grid.constraint().is_unconstrained() && options.pair_subsample > 0 &&
        grid.size() > options.pair_subsample) {
        return grid.subsample(options.pair_subsample, options.seed);
    }
    return grid;
}

TestVerdict audit_score(const Score& score, const PerformanceGrid& grid, const RandomVariable& satisfaction,
                        const AuditOptions& options) {
    TestVerdict v;
    auto t1 = test_satisfaction_axiom(score, grid, satisfaction, options.tolerance);
    v.test1 = t1.passed;
    v.witness1 = std::move(t1.witness);
    const PerformanceGrid pairs = pair_grid(grid, options);
    auto b = test_convex_bounds(score, pairs, options.lambdas, options.execution, options.tolerance);
    v.test2 = b.upper.passed;
    v.witness2 = std::move(b.upper.witness);
    v.test3 = b.lower.passed;
    v.witness3 = std::move(b.lower.witness);
    return v;
}

TestVerdict audit_score(const Score& score, const ConstraintSet& constraint, const AuditOptions& options) {
    const int res = options.resolution > 0 ? options.resolution : default_resolution(constraint);
    return audit_score(score, make_grid(constraint, res), two_class::satisfaction(), options);
}

}  // namespace perfrank
