#include "perfrank/tau.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "perfrank/kendall.hpp"
#include "perfrank/two_class.hpp"

namespace perfrank {

using two_class::FN;
using two_class::FP;
using two_class::TN;
using two_class::TP;

const char* to_string(Objective o) noexcept { return o == Objective::Min ? "min" : "max"; }

RandomVariable importance_from_ab(double a, double b) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
        throw std::invalid_argument("importance parameters must lie in [0, 1]");
    }
    return two_class::importance(1.0 - a, 1.0 - b, b, a);
}

std::pair<double, double> ab_from_importance(const RandomVariable& importance) {
    if (importance.size() != 4) throw std::invalid_argument("two-class importance expected");
    auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.5; };
    return {ratio(importance[TP], importance[TN] + importance[TP]),
            ratio(importance[FN], importance[FP] + importance[FN])};
}

TauObjective::TauObjective(const Score& score, const PerformanceGrid& grid, double tie_tolerance)
    : tie_tolerance_(tie_tolerance) {
    if (grid.stride() != 4) throw std::invalid_argument("tau search needs a two-class grid");
    std::vector<double> values;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto p = grid.point(i);
        auto v = score.evaluate(p);
        if (!v) continue;
        points_.push_back({p[0], p[1], p[2], p[3]});
        values.push_back(*v);
    }
    rank_ = tie_ranks(values, tie_tolerance_);
}

bool TauObjective::score_constant() const noexcept {
    return !rank_.empty() && *std::max_element(rank_.begin(), rank_.end()) == 0;
}

std::optional<double> TauObjective::evaluate(const std::array<double, 4>& w) const {
    std::vector<std::uint32_t> xr;
    std::vector<double> y;
    xr.reserve(points_.size());
    y.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        const double num = w[TN] * p[TN] + w[TP] * p[TP];
        const double den = num + w[FP] * p[FP] + w[FN] * p[FN];
        if (den == 0.0) continue;
        xr.push_back(rank_[i]);
        y.push_back(num / den);
    }
    if (xr.size() < 2) return std::nullopt;
    return kendall_tau_ranks(xr, tie_ranks(y, tie_tolerance_));
}

std::optional<double> TauObjective::operator()(double a, double b) const {
    return evaluate({1.0 - a, 1.0 - b, b, a});
}

std::optional<double> TauObjective::at(const RandomVariable& importance) const {
    if (importance.size() != 4 || !importance.is_valid_importance()) {
        throw std::invalid_argument("invalid two-class importance");
    }
    return evaluate({importance[0], importance[1], importance[2], importance[3]});
}

std::optional<double> tau_of_importance(const Score& score, const PerformanceGrid& grid, double a, double b,
                                        double tie_tolerance) {
    importance_from_ab(a, b);  // validates the parameters
    return TauObjective(score, grid, tie_tolerance)(a, b);
}

namespace {

bool better(double candidate, double incumbent, Objective dir) {
    return dir == Objective::Max ? candidate > incumbent : candidate < incumbent;
}

}  // namespace

TauResult search_tau(const TauObjective& objective, Objective direction, const SearchOptions& options) {
    if (options.cells < 2) throw std::invalid_argument("search needs at least 2 points per side");
    if (!(options.shrink > 0.0 && options.shrink < 1.0)) throw std::invalid_argument("shrink must lie in (0, 1)");
    if (!(options.min_side > 0.0)) throw std::invalid_argument("min_side must be positive");

    TauResult r;
    r.objective = direction;
    const int m = options.cells;
    std::vector<std::optional<double>> values(static_cast<std::size_t>(m) * m);
    double side = 1.0, lo_a = 0.0, lo_b = 0.0;
    std::optional<double> best;
    double best_a = 0.5, best_b = 0.5;

    while (side >= options.min_side) {
        auto coord = [&](double lo, int k) { return std::min(1.0, lo + side * k / (m - 1)); };
        const long cells = static_cast<long>(m) * m;
        if (options.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (long c = 0; c < cells; ++c) {
                values[c] = objective(coord(lo_a, static_cast<int>(c / m)), coord(lo_b, static_cast<int>(c % m)));
            }
        } else {
            for (long c = 0; c < cells; ++c) {
                values[c] = objective(coord(lo_a, static_cast<int>(c / m)), coord(lo_b, static_cast<int>(c % m)));
            }
        }
        r.evaluations += static_cast<std::size_t>(cells);
        ++r.iterations;

        // Cells are in lexicographic (a, b) order, so a strict comparison keeps
        // the smallest (a, b) among ties.
        std::optional<double> local;
        double la = 0.5, lb = 0.5;
        for (long c = 0; c < cells; ++c) {
            if (!values[c]) continue;
            if (!local || better(*values[c], *local, direction)) {
                local = values[c];
                la = coord(lo_a, static_cast<int>(c / m));
                lb = coord(lo_b, static_cast<int>(c % m));
            }
        }
        if (!local) break;
        if (!best || better(*local, *best, direction) ||
            (*local == *best && std::pair{la, lb} < std::pair{best_a, best_b})) {
            best = local;
            best_a = la;
            best_b = lb;
        }
        side *= options.shrink;
        lo_a = std::clamp(la - side / 2, 0.0, 1.0 - side);
        lo_b = std::clamp(lb - side / 2, 0.0, 1.0 - side);
    }

    r.searched = best;
    r.searched_a = best_a;
    r.searched_b = best_b;
    r.tau = best;
    r.a = best_a;
    r.b = best_b;
    r.importance = {1.0 - best_a, 1.0 - best_b, best_b, best_a};
    return r;
}

TauResult optimize_tau(const Score& score, const PerformanceGrid& grid, Objective direction,
                       const SearchOptions& options, const std::optional<Equivalence>& equivalence) {
    const TauObjective objective(score, grid, options.tie_tolerance);

    if (objective.score_constant()) {
        // Every pair is a tie on the score side: tau-b is 0/0, reported as 0.
        TauResult r;
        r.objective = direction;
        r.tau = 0.0;
        r.analytic = true;
        return r;
    }

    const bool shortcut =
        options.use_equivalences && equivalence &&
        ((equivalence->direction == Monotonicity::Increasing) == (direction == Objective::Max));
    if (!shortcut) return search_tau(objective, direction, options);

    TauResult r;
    if (options.search_analytic) r = search_tau(objective, direction, options);
    r.objective = direction;
    r.analytic = true;
    r.tau = direction == Objective::Max ? 1.0 : -1.0;
    const auto [a, b] = ab_from_importance(equivalence->importance);
    r.a = a;
    r.b = b;
    for (std::size_t k = 0; k < 4; ++k) r.importance[k] = equivalence->importance[k];
    return r;
}

TauResult optimize_tau(const CatalogEntry& entry, const PerformanceGrid& grid, Objective direction,
                       const SearchOptions& options) {
    return optimize_tau(entry.score, grid, direction, options, entry.equivalence_for(grid.constraint()));
}

}  // namespace perfrank
