#pragma once

// Finite sample spaces and satisfactions for common evaluation problems:
// classification, information retrieval, detection, clustering, ranking and
// discretized regression. Each setup comes with its expected-satisfaction
// score; any importance on the same space yields a ranking score.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "perfrank/audit.hpp"
#include "perfrank/core.hpp"

namespace perfrank::tasks {

struct TaskSetup {
    std::string name;
    SpacePtr space;
    RandomVariable satisfaction;
    std::vector<std::string> notes;

    /// E_P[S].
    Score expected_satisfaction() const;
    /// R_I for an importance on this space.
    Score ranking(const RandomVariable& importance) const;
    /// Random variable on this space; values in label order.
    RandomVariable variable(std::vector<double> values, std::string name = {}) const;
};

/// (tn, fp, fn, tp) with S = (1, 0, 0, 1).
TaskSetup two_class();

/// Similarity between the true class (first) and the predicted class (second).
using Similarity = std::function<double(std::size_t, std::size_t)>;

/// Omega = classes x classes, labels "<true>|<predicted>" in row-major order.
/// S is the diagonal indicator, or sim(true, predicted) when given.
/// Throws std::invalid_argument with fewer than 2 classes, duplicate names,
/// or a non-finite similarity.
TaskSetup multi_class(const std::vector<std::string>& classes, const Similarity& sim = {});

/// Macro-averaged F1 over the classes of a multi_class space (defined when
/// every per-class F1 is).
Score macro_f1(std::size_t classes);

/// First test-2 violation of macro_f1 on the 3-class simplex grid.
/// Throws std::runtime_error when none exists at this resolution.
CombinationWitness macro_f1_counterexample(int resolution = 4);

/// Omega = {fp, fn, tp}, S = 1 on tp.
TaskSetup information_retrieval();

/// Omega = {none, fp, fn, tp}: "none" ends an experiment with neither a
/// detection nor a target. S = 1 on {none, tp}.
TaskSetup detection();
/// tp / (fp + fn + tp), the ranking score with I = 1 on {fp, fn, tp}.
Score detection_iou();
/// 2tp / (fp + fn + 2tp), the ranking score with I = 1_{fp,tp} + 1_{fn,tp}.
Score detection_f1();

/// Pair-counting view of clustering: same space and satisfaction as two_class.
TaskSetup clustering();
/// Fowlkes-Mallows index sqrt(PPV * TPR).
Score fmi_score();
/// First pair and mixture on the unconstrained simplex grid with
/// FMI(mixture) < min(FMI(P1), FMI(P2)) - margin. Throws std::runtime_error
/// when the grid holds no such witness.
CombinationWitness fmi_counterexample(int resolution = 32, double margin = 1e-9);

/// Omega = {concordant, discordant}, S = (1, -1). E[S] = 1 - 2 P(discordant).
TaskSetup ranking_task();

/// Omega = y_cells x yhat_cells, labels "y=<v>|yhat=<w>", S from the table
/// (e.g. -(y - yhat)^2 makes E[S] = -MSE on the discretization).
TaskSetup discretized_regression(const std::vector<double>& y_cells, const std::vector<double>& yhat_cells,
                                 const std::function<double(double, double)>& satisfaction);

}  // namespace perfrank::tasks
