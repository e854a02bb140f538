#include "perfrank/tasks.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "perfrank/grid.hpp"
#include "perfrank/two_class.hpp"

namespace perfrank::tasks {

Score TaskSetup::expected_satisfaction() const { return expected_value_score(satisfaction); }

Score TaskSetup::ranking(const RandomVariable& importance) const { return ranking_score(importance, satisfaction); }

RandomVariable TaskSetup::variable(std::vector<double> values, std::string name) const {
    return RandomVariable(space, std::move(values), std::move(name));
}

TaskSetup two_class() {
    return {"two-class classification", two_class::space(), two_class::satisfaction(), {}};
}

TaskSetup multi_class(const std::vector<std::string>& classes, const Similarity& sim) {
    if (classes.size() < 2) throw std::invalid_argument("multi-class task needs at least two classes");
    if (std::set<std::string>(classes.begin(), classes.end()).size() != classes.size()) {
        throw std::invalid_argument("duplicate class name");
    }
    const std::size_t c = classes.size();
    std::vector<std::string> labels;
    std::vector<double> s;
    for (std::size_t t = 0; t < c; ++t) {
        for (std::size_t p = 0; p < c; ++p) {
            labels.push_back(classes[t] + "|" + classes[p]);
            const double v = sim ? sim(t, p) : (t == p ? 1.0 : 0.0);
            if (!std::isfinite(v)) throw std::invalid_argument("similarity must be finite");
            s.push_back(v);
        }
    }
    auto space = SampleSpace::make(std::move(labels));
    TaskSetup t{"multi-class classification", space, RandomVariable(space, std::move(s), "S"), {}};
    t.notes.push_back("E[S] with the default satisfaction is the multi-class accuracy.");
    t.notes.push_back(
        "Macro-averaged scores are not ranking scores on this space and can break the axioms; "
        "see macro_f1_counterexample().");
    return t;
}

Score macro_f1(std::size_t classes) {
    if (classes < 2) throw std::invalid_argument("macro F1 needs at least two classes");
    const std::size_t c = classes;
    return Score(
        "macro-F1", c * c, [c](std::span<const double> p) -> std::optional<double> {
            double sum = 0.0;
            for (std::size_t k = 0; k < c; ++k) {
                double truth = 0.0, pred = 0.0;
                for (std::size_t j = 0; j < c; ++j) {
                    truth += p[k * c + j];
                    pred += p[j * c + k];
                }
                const double den = truth + pred;
                if (den == 0.0) return std::nullopt;
                sum += 2.0 * p[k * c + k] / den;
            }
            return sum / static_cast<double>(c);
        });
}

CombinationWitness macro_f1_counterexample(int resolution) {
    const auto setup = multi_class({"a", "b", "c"});
    const auto grid = make_simplex_grid(setup.space, resolution);
    const auto lambdas = default_lambdas();
    auto r = test_convex_upper(macro_f1(3), grid, lambdas, Execution::Serial);
    if (r.passed) throw std::runtime_error("no macro-F1 violation at this grid resolution");
    return *r.witness;
}

TaskSetup information_retrieval() {
    auto space = SampleSpace::make({"fp", "fn", "tp"});
    TaskSetup t{"information retrieval", space, RandomVariable(space, {0.0, 0.0, 1.0}, "S"), {}};
    t.notes.push_back(
        "Three outcomes: each experiment ends at the first fp, fn or tp. A four-outcome variant with "
        "tn is equally possible; whether mixtures of retrieval systems are achievable depends on the "
        "experiment and is left to the user.");
    return t;
}

TaskSetup detection() {
    auto space = SampleSpace::make({"none", "fp", "fn", "tp"});
    TaskSetup t{"detection", space, RandomVariable(space, {1.0, 0.0, 0.0, 1.0}, "S"), {}};
    t.notes.push_back("IoU and F1 are ranking scores here: see detection_iou() and detection_f1().");
    return t;
}

Score detection_iou() {
    const auto d = detection();
    return ranking_score(d.variable({0.0, 1.0, 1.0, 1.0}, "IoU"), d.satisfaction);
}

Score detection_f1() {
    const auto d = detection();
    return ranking_score(d.variable({0.0, 1.0, 1.0, 2.0}, "F1"), d.satisfaction);
}

TaskSetup clustering() {
    TaskSetup t{"clustering (pair counting)", two_class::space(), two_class::satisfaction(), {}};
    t.notes.push_back("Samples are pairs of elements: same/different cluster in truth and prediction.");
    t.notes.push_back(
        "The Fowlkes-Mallows index satisfies the satisfaction axiom but not the lower convex bound; "
        "see fmi_counterexample().");
    return t;
}

Score fmi_score() {
    using namespace two_class;
    return Score(
        "FMI", 4, [](std::span<const double> p) { return p[TP] + p[FP] > 0.0 && p[TP] + p[FN] > 0.0; },
        [](std::span<const double> p) {
            return std::sqrt(p[TP] / (p[TP] + p[FP]) * (p[TP] / (p[TP] + p[FN])));
        });
}

CombinationWitness fmi_counterexample(int resolution, double margin) {
    const auto grid = make_simplex_grid(two_class::space(), resolution);
    const auto lambdas = default_lambdas();
    auto r = test_convex_lower(fmi_score(), grid, lambdas, Execution::Serial, margin);
    if (r.passed) throw std::runtime_error("no FMI violation at this grid resolution");
    return *r.witness;
}

TaskSetup ranking_task() {
    auto space = SampleSpace::make({"concordant", "discordant"});
    TaskSetup t{"ranking", space, RandomVariable(space, {1.0, -1.0}, "S"), {}};
    t.notes.push_back("E[S] = 1 - 2 P(discordant) is Kendall's tau between the two rankings.");
    t.notes.push_back("With two outcomes every ranking score induces the same order on performances.");
    return t;
}

TaskSetup discretized_regression(const std::vector<double>& y_cells, const std::vector<double>& yhat_cells,
                                 const std::function<double(double, double)>& satisfaction) {
    if (y_cells.empty() || yhat_cells.empty()) throw std::invalid_argument("regression needs at least one cell");
    if (!satisfaction) throw std::invalid_argument("regression needs a satisfaction function");
    std::vector<std::string> labels;
    std::vector<double> s;
    char buf[96];
    for (double y : y_cells) {
        for (double yh : yhat_cells) {
            std::snprintf(buf, sizeof buf, "y=%g|yhat=%g", y, yh);
            labels.push_back(buf);
            const double v = satisfaction(y, yh);
            if (!std::isfinite(v)) throw std::invalid_argument("satisfaction must be finite");
            s.push_back(v);
        }
    }
    auto space = SampleSpace::make(std::move(labels));
    TaskSetup t{"regression (discretized)", space, RandomVariable(space, std::move(s), "S"), {}};
    t.notes.push_back("S = -(y - yhat)^2 gives E[S] = -MSE; S = -|y - yhat| gives E[S] = -MAE.");
    return t;
}

}  // namespace perfrank::tasks
