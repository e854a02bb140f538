#include "perfrank/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "perfrank/core.hpp"

namespace perfrank {

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    SpacePtr space(int k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
        return SampleSpace::make(labels);
    }

    // About one entry in four is zeroed so that boundary performances occur.
    Performance performance(const SpacePtr& s, bool sparse = true) {
        std::exponential_distribution<double> exp1(1.0);
        std::vector<double> p(s->size());
        double sum = 0.0;
        for (auto& v : p) sum += (v = (sparse && coin()) ? 0.0 : exp1(rng_));
        if (sum == 0.0) {
            p[0] = sum = 1.0;
        }
        for (auto& v : p) v /= sum;
        return Performance(s, p);
    }

    RandomVariable importance(const SpacePtr& s) {
        std::vector<double> v(s->size());
        bool any = false;
        for (auto& x : v) any |= (x = coin() ? 0.0 : uniform(0.0, 1.0)) > 0.0;
        if (!any) v[0] = 1.0;
        return RandomVariable(s, v, "I");
    }

    RandomVariable satisfaction(const SpacePtr& s, bool binary) {
        std::vector<double> v(s->size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = binary ? static_cast<double>(i % 2) : uniform(-2.0, 2.0);
        if (binary) std::shuffle(v.begin(), v.end(), rng_);
        return RandomVariable(s, v, "S");
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    bool coin() { return std::uniform_int_distribution<int>(0, 3)(rng_) == 0; }

    std::mt19937_64 rng_;
};

// Drives one property: trial(k, check) is called until enough instances
// were recorded or the draw budget is spent.
PropertyCheck run(const std::string& name, int min_instances,
                  const std::function<void(int, PropertyCheck&)>& trial) {
    PropertyCheck c{name};
    for (int k = 0; k < 20 * min_instances && c.instances < min_instances; ++k) trial(k, c);
    return c;
}

void record(PropertyCheck& c, double error, double limit) {
    ++c.instances;
    c.max_error = std::max(c.max_error, error);
    if (!(error <= limit)) ++c.failures;
}

int sign(double d) { return (d > 0) - (d < 0); }

}  // namespace

std::vector<PropertyCheck> check_ranking_properties(std::uint64_t seed, int min_instances) {
    Sampler g(seed);
    std::vector<PropertyCheck> out;

    out.push_back(run("decomposition", min_instances, [&](int k, PropertyCheck& c) {
        auto s = g.space(k);
        auto I = g.importance(s);
        auto S = g.satisfaction(s, false);
        auto p = g.performance(s);
        auto r = ranking_score(I, S)(p);
        if (!r) return;
        const auto f = filter(I, p);
        double sum = 0.0;
        for (double v : f.probs()) sum += v;
        record(c, std::max(std::abs(sum - 1.0), std::abs(S.expectation(f) - *r)), 1e-12);
    }));

    out.push_back(run("affine_satisfaction", min_instances, [&](int k, PropertyCheck& c) {
        auto s = g.space(k);
        auto I = g.importance(s);
        auto S = g.satisfaction(s, false);
        const double a = g.uniform(0.1, 5.0), b = g.uniform(-3.0, 3.0);
        auto r1 = ranking_score(I, S), r2 = ranking_score(I, S.affine(a, b));
        auto p1 = g.performance(s), p2 = g.performance(s);
        auto x1 = r1(p1), x2 = r1(p2), y1 = r2(p1), y2 = r2(p2);
        if (!x1 || !x2) return;
        double err = std::max(std::abs(*y1 - (a * *x1 + b)), std::abs(*y2 - (a * *x2 + b))) /
                     std::max({1.0, std::abs(*y1), std::abs(*y2)});
        if (std::abs(*x1 - *x2) > 1e-9 && sign(*x1 - *x2) != sign(*y1 - *y2)) err = 1.0;
        record(c, err, 1e-12);
    }));

    out.push_back(run("scale_invariance", min_instances, [&](int k, PropertyCheck& c) {
        auto s = g.space(k);
        auto I = g.importance(s);
        auto S = g.satisfaction(s, false);
        auto p = g.performance(s);
        auto x = ranking_score(I, S)(p);
        auto y = ranking_score(I.scaled(g.uniform(0.01, 100.0)), S)(p);
        if (!x || !y) return;
        record(c, std::abs(*x - *y), 1e-12);
    }));

    out.push_back(run("per_face_scaling", min_instances, [&](int k, PropertyCheck& c) {
        auto s = g.space(k);
        auto I = g.importance(s);
        auto S = g.satisfaction(s, true);
        const double a0 = g.uniform(0.05, 20.0), a1 = g.uniform(0.05, 20.0);
        std::vector<double> v(I.values().begin(), I.values().end());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= S[i] == 1.0 ? a1 : a0;
        auto r1 = ranking_score(I, S), r2 = ranking_score(RandomVariable(s, v), S);
        auto p1 = g.performance(s), p2 = g.performance(s);
        auto x1 = r1(p1), x2 = r1(p2), y1 = r2(p1), y2 = r2(p2);
        if (!x1 || !x2 || std::abs(*x1 - *x2) < 1e-12) return;
        record(c, !y1 || !y2 || sign(*x1 - *x2) != sign(*y1 - *y2) ? 1.0 : 0.0, 0.0);
    }));

    // Shared importance on one face: the mean of the importances yields the
    // harmonic mean (good face) or the f-mean with f(x) = 1/(1-x) (bad face).
    for (const bool good_face : {true, false}) {
        out.push_back(run(good_face ? "harmonic_mean" : "f_mean", min_instances, [&](int k, PropertyCheck& c) {
            auto s = g.space(k);
            auto S = g.satisfaction(s, true);
            auto I1 = g.importance(s), I2 = g.importance(s);
            std::vector<double> v2(I2.values().begin(), I2.values().end()), vm(v2.size());
            for (std::size_t i = 0; i < v2.size(); ++i) {
                if ((S[i] == 1.0) == good_face) v2[i] = I1[i];
                vm[i] = (I1[i] + v2[i]) / 2;
            }
            RandomVariable J2(s, v2);
            if (!J2.is_valid_importance()) return;
            auto p = g.performance(s, false);
            auto r1 = ranking_score(I1, S)(p), r2 = ranking_score(J2, S)(p),
                 rm = ranking_score(RandomVariable(s, vm), S)(p);
            if (!r1 || !r2 || !rm) return;
            auto f = [&](double x) { return good_face ? 1.0 / x : 1.0 / (1.0 - x); };
            if (good_face ? (*r1 <= 0 || *r2 <= 0 || *rm <= 0) : (*r1 >= 1 || *r2 >= 1 || *rm >= 1)) return;
            record(c, std::abs(f(*rm) - (f(*r1) + f(*r2)) / 2) / std::max(1.0, f(*rm)), 1e-9);
        }));
    }

    out.push_back(run("convex_contours", min_instances, [&](int k, PropertyCheck& c) {
        auto s = g.space(k);
        auto r = ranking_score(g.importance(s), g.satisfaction(s, false));
        auto p = g.performance(s), p1 = g.performance(s), p2 = g.performance(s);
        auto x = r(p), x1 = r(p1), x2 = r(p2);
        if (!x || !x1 || !x2) return;
        const bool below = *x1 <= *x && *x2 <= *x;
        const bool above = *x1 >= *x && *x2 >= *x;
        if (!below && !above) return;
        double err = 0.0;
        for (int j = 1; j < 20; ++j) {
            auto q = r(mix(p1, p2, j / 20.0));
            if (!q) continue;
            if (below) err = std::max(err, *q - *x);
            if (above) err = std::max(err, *x - *q);
        }
        record(c, err, 1e-12);
    }));

    out.push_back(run("range", min_instances, [&](int k, PropertyCheck& c) {
        auto s = g.space(k);
        auto S = g.satisfaction(s, false);
        auto x = ranking_score(g.importance(s), S)(g.performance(s));
        if (!x) return;
        record(c, std::max({0.0, S.min() - *x, *x - S.max()}), 1e-12);
    }));
    return out;
}

}  // namespace perfrank
