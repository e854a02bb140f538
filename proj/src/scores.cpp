#include "perfrank/scores.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "perfrank/two_class.hpp"

namespace perfrank {

const char* to_string(Monotonicity m) noexcept {
    return m == Monotonicity::Increasing ? "increasing" : "decreasing";
}

const char* to_string(Validity v) noexcept {
    switch (v) {
        case Validity::Always: return "always";
        case Validity::FixedPriorsOnly: return "fixed-priors-only";
        case Validity::Never: return "never";
    }
    return "?";
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse normal CDF needs 0 < p < 1");
    // Acklam's rational approximation (relative error 1.15e-9) followed by
    // one Halley step against erfc, which brings it to machine precision.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double low = 0.02425;
    double x;
    if (p < low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

namespace {

using namespace two_class;
using Probs = std::span<const double>;
using Opt = std::optional<double>;

Opt ratio(double num, double den) {
    if (den == 0.0) return std::nullopt;
    return num / den;
}

double pos_of(const ConstraintSet& c) { return *c.positive_prior(); }

Equivalence identity_equiv(RandomVariable importance) {
    return Equivalence{std::move(importance), Monotonicity::Increasing, [](double r) { return r; }};
}

Equivalence complement_equiv(RandomVariable importance) {
    return Equivalence{std::move(importance), Monotonicity::Decreasing, [](double r) { return 1.0 - r; }};
}

// Entries whose link to R_I holds for every performance.
auto always(std::function<Equivalence()> make) {
    return [make = std::move(make)](const ConstraintSet&) -> std::optional<Equivalence> { return make(); };
}

// Entries whose link holds only once the positive prior is fixed.
auto at_fixed_prior(std::function<Equivalence(double pos)> make) {
    return [make = std::move(make)](const ConstraintSet& c) -> std::optional<Equivalence> {
        if (c.is_unconstrained()) return std::nullopt;
        return make(pos_of(c));
    };
}

Opt f_beta(Probs p, double beta) {
    const double b2 = beta * beta;
    return ratio((1.0 + b2) * p[TP], (1.0 + b2) * p[TP] + b2 * p[FN] + p[FP]);
}

Opt tnr(Probs p) { return ratio(p[TN], p[TN] + p[FP]); }
Opt tpr(Probs p) { return ratio(p[TP], p[TP] + p[FN]); }
Opt ppv(Probs p) { return ratio(p[TP], p[TP] + p[FP]); }
Opt npv(Probs p) { return ratio(p[TN], p[TN] + p[FN]); }

double chance_agreement(Probs p) {
    return prior_neg(p) * rate_neg(p) + prior_pos(p) * rate_pos(p);
}

CatalogEntry entry(std::string id, std::string label, Validity validity, Score::Fn fn,
                   std::function<std::optional<Equivalence>(const ConstraintSet&)> equiv = {},
                   std::function<bool(const ConstraintSet&)> constant = {}) {
    Score s(id, 4, std::move(fn));
    return CatalogEntry{std::move(id), std::move(label), std::move(s), validity, std::move(equiv),
                        std::move(constant)};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    const auto A = Validity::Always;
    const auto F = Validity::FixedPriorsOnly;
    const auto N = Validity::Never;

    c.push_back(entry("accuracy", "Accuracy", A, [](Probs p) -> Opt { return p[TN] + p[TP]; },
                      always([] { return identity_equiv(importance(0.5, 0.5, 0.5, 0.5, "accuracy")); })));
    c.push_back(entry("f0.5", "F-score for beta=0.5", A, [](Probs p) { return f_beta(p, 0.5); },
                      always([] { return identity_equiv(importance(0, 0.8, 0.2, 1, "f0.5")); })));
    c.push_back(entry("f1", "F-score for beta=1.0", A, [](Probs p) { return f_beta(p, 1.0); },
                      always([] { return identity_equiv(importance(0, 0.5, 0.5, 1, "f1")); })));
    c.push_back(entry("f2", "F-score for beta=2.0", A, [](Probs p) { return f_beta(p, 2.0); },
                      always([] { return identity_equiv(importance(0, 0.2, 0.8, 1, "f2")); })));
    c.push_back(entry("npv", "Negative Predictive Value (NPV)", A, npv,
                      always([] { return identity_equiv(importance(1, 0, 1, 0, "npv")); })));
    c.push_back(entry("ppv", "Positive Predictive Value (PPV)", A, ppv,
                      always([] { return identity_equiv(importance(0, 1, 0, 1, "ppv")); })));
    c.push_back(entry("tnr", "True Negative Rate (TNR)", A, tnr,
                      always([] { return identity_equiv(importance(1, 1, 0, 0, "tnr")); })));
    c.push_back(entry("tpr", "True Positive Rate (TPR)", A, tpr,
                      always([] { return identity_equiv(importance(0, 0, 1, 1, "tpr")); })));

    c.push_back(entry(
        "balanced_accuracy", "Balanced Accuracy", F,
        [](Probs p) -> Opt {
            auto a = tnr(p), b = tpr(p);
            if (!a || !b) return std::nullopt;
            return 0.5 * (*a + *b);
        },
        at_fixed_prior([](double pos) {
            return identity_equiv(importance(pos, pos, 1 - pos, 1 - pos, "balanced_accuracy"));
        })));
    c.push_back(entry(
        "cohen_kappa", "Cohen's kappa", F,
        [](Probs p) -> Opt {
            const double pe = chance_agreement(p);
            return ratio(p[TN] + p[TP] - pe, 1.0 - pe);
        },
        at_fixed_prior([](double pos) {
            const double neg = 1.0 - pos;
            const double d = neg * neg + pos * pos;
            return Equivalence{importance(pos * pos / d, 0.5, 0.5, neg * neg / d, "cohen_kappa"),
                               Monotonicity::Increasing,
                               [neg, pos, d](double r) { return (r - 2.0 * neg * pos) / d; }};
        })));
    c.push_back(entry(
        "informedness", "Informedness", F,
        [](Probs p) -> Opt {
            auto a = tnr(p), b = tpr(p);
            if (!a || !b) return std::nullopt;
            return *a + *b - 1.0;
        },
        at_fixed_prior([](double pos) {
            return Equivalence{importance(pos, pos, 1 - pos, 1 - pos, "informedness"),
                               Monotonicity::Increasing, [](double r) { return 2.0 * r - 1.0; }};
        })));
    c.push_back(entry(
        "plr", "Positive Likelihood Ratio (PLR)", F,
        [](Probs p) -> Opt {
            // TPR / FPR = (tp / pi+) / (fp / pi-)
            if (prior_pos(p) == 0.0 || p[FP] == 0.0) return std::nullopt;
            return (p[TP] / prior_pos(p)) / (p[FP] / prior_neg(p));
        },
        at_fixed_prior([](double pos) {
            const double k = (1.0 - pos) / pos;
            return Equivalence{importance(0, 1, 0, 1, "plr"), Monotonicity::Increasing,
                               [k](double r) { return k * r / (1.0 - r); }};
        })));
    c.push_back(entry("ptn", "Probability of True Negative (PTN)", F, [](Probs p) -> Opt { return p[TN]; },
                      at_fixed_prior([](double pos) {
                          const double neg = 1.0 - pos;
                          return Equivalence{importance(1, 1, 0, 0, "ptn"), Monotonicity::Increasing,
                                             [neg](double r) { return neg * r; }};
                      })));
    c.push_back(entry("ptp", "Probability of True Positive (PTP)", F, [](Probs p) -> Opt { return p[TP]; },
                      at_fixed_prior([](double pos) {
                          return Equivalence{importance(0, 0, 1, 1, "ptp"), Monotonicity::Increasing,
                                             [pos](double r) { return pos * r; }};
                      })));

    c.push_back(entry(
        "kappa_chance", "Chance in Cohen's kappa", N, [](Probs p) -> Opt { return chance_agreement(p); }, {},
        [](const ConstraintSet& cs) { return cs.positive_prior() == 0.5; }));
    c.push_back(entry("error_rate", "Error Rate", N, [](Probs p) -> Opt { return p[FP] + p[FN]; },
                      always([] { return complement_equiv(importance(0.5, 0.5, 0.5, 0.5, "accuracy")); })));
    c.push_back(entry("fdr", "False Discovery Rate (FDR)", N,
                      [](Probs p) { return ratio(p[FP], p[FP] + p[TP]); },
                      always([] { return complement_equiv(importance(0, 1, 0, 1, "ppv")); })));
    c.push_back(entry("fnr", "False Negative Rate (FNR)", N,
                      [](Probs p) { return ratio(p[FN], p[FN] + p[TP]); },
                      always([] { return complement_equiv(importance(0, 0, 1, 1, "tpr")); })));
    c.push_back(entry("for", "False Omission Rate (FOR)", N,
                      [](Probs p) { return ratio(p[FN], p[FN] + p[TN]); },
                      always([] { return complement_equiv(importance(1, 0, 1, 0, "npv")); })));
    c.push_back(entry("fpr", "False Positive Rate (FPR)", N,
                      [](Probs p) { return ratio(p[FP], p[FP] + p[TN]); },
                      always([] { return complement_equiv(importance(1, 1, 0, 0, "tnr")); })));
    c.push_back(entry("gmean_tnr_tpr", "Geometric mean of TNR and TPR", N, [](Probs p) -> Opt {
        auto a = tnr(p), b = tpr(p);
        if (!a || !b) return std::nullopt;
        return std::sqrt(*a * *b);
    }));
    c.push_back(entry("markedness", "Markedness", N, [](Probs p) -> Opt {
        auto a = ppv(p), b = npv(p);
        if (!a || !b) return std::nullopt;
        return *a + *b - 1.0;
    }));
    c.push_back(entry("mcc", "Matthews Correlation Coefficient (MCC)", N, [](Probs p) -> Opt {
        const double den = rate_pos(p) * rate_neg(p) * prior_pos(p) * prior_neg(p);
        if (den == 0.0) return std::nullopt;
        return (p[TP] * p[TN] - p[FP] * p[FN]) / std::sqrt(den);
    }));
    c.push_back(entry(
        "nlr", "Negative Likelihood Ratio (NLR)", N,
        [](Probs p) -> Opt {
            // FNR / TNR = (fn / pi+) / (tn / pi-)
            if (prior_pos(p) == 0.0 || p[TN] == 0.0) return std::nullopt;
            return (p[FN] / prior_pos(p)) / (p[TN] / prior_neg(p));
        },
        at_fixed_prior([](double pos) {
            const double k = (1.0 - pos) / pos;
            return Equivalence{importance(1, 0, 1, 0, "nlr"), Monotonicity::Decreasing,
                               [k](double r) { return k * (1.0 - r) / r; }};
        })));
    c.push_back(entry("odds_ratio", "Odds Ratio (OR)", N,
                      [](Probs p) { return ratio(p[TP] * p[TN], p[FP] * p[FN]); }));
    c.push_back(entry("rate_positive_predictions", "Rate of positive predictions", N,
                      [](Probs p) -> Opt { return rate_pos(p); }));
    c.push_back(entry("d_prime", "Sensitivity Index Estimate (d')", N, [](Probs p) -> Opt {
        auto hit = tpr(p), fa = ratio(p[FP], p[FP] + p[TN]);
        if (!hit || !fa) return std::nullopt;
        if (*hit <= 0.0 || *hit >= 1.0 || *fa <= 0.0 || *fa >= 1.0) return std::nullopt;
        return inverse_normal_cdf(*hit) - inverse_normal_cdf(*fa);
    }));
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

const CatalogEntry& catalog_entry(std::string_view id) {
    for (const auto& e : catalog()) {
        if (e.id == id) return e;
    }
    throw std::invalid_argument("unknown score '" + std::string(id) + "'");
}

std::optional<double> eval_score(std::string_view id, const Performance& p) {
    return catalog_entry(id).score(p);
}

std::vector<EquivalenceCheck> verify_importance_equivalences(const PerformanceGrid& grid) {
    std::vector<EquivalenceCheck> out;
    for (const auto& e : catalog()) {
        auto eq = e.equivalence_for(grid.constraint());
        if (!eq) continue;
        const Score r = ranking_score(eq->importance, two_class::satisfaction());
        EquivalenceCheck chk{e.id};
        std::vector<std::pair<double, double>> pairs;  // (R_I, score)
        for (std::size_t i = 0; i < grid.size(); ++i) {
            auto x = e.score.evaluate(grid.point(i));
            auto y = r.evaluate(grid.point(i));
            if (x.has_value() != y.has_value()) chk.domains_match = false;
            if (!x || !y) continue;
            ++chk.points_checked;
            chk.max_deviation = std::max(chk.max_deviation, std::abs(*x - eq->transform(*y)));
            pairs.emplace_back(*y, *x);
        }
        std::sort(pairs.begin(), pairs.end());
        const double sign = eq->direction == Monotonicity::Increasing ? 1.0 : -1.0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].first - pairs[k - 1].first <= kEqualityTolerance) continue;
            const double step = sign * (pairs[k].second - pairs[k - 1].second);
            if (step < -1e-9 * std::max(1.0, std::abs(pairs[k].second))) chk.monotone = false;
        }
        out.push_back(chk);
    }
    return out;
}

}  // namespace perfrank
