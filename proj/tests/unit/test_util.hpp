#pragma once

#include <random>
#include <string>
#include <vector>

#include "perfrank/core.hpp"

namespace testutil {

inline perfrank::SpacePtr make_space(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
    return perfrank::SampleSpace::make(labels);
}

// Random probability vector; about one entry in four is zeroed so that
// boundary performances show up.
inline std::vector<double> random_probs(std::mt19937_64& rng, std::size_t n, bool sparse = true) {
    std::exponential_distribution<double> exp1(1.0);
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<double> p(n);
    double sum = 0.0;
    for (auto& v : p) {
        v = (sparse && coin(rng) == 0) ? 0.0 : exp1(rng);
        sum += v;
    }
    if (sum == 0.0) {
        p[0] = 1.0;
        return p;
    }
    for (auto& v : p) v /= sum;
    return p;
}

inline perfrank::Performance random_performance(std::mt19937_64& rng, const perfrank::SpacePtr& space,
                                                bool sparse = true) {
    return perfrank::Performance(space, random_probs(rng, space->size(), sparse));
}

inline perfrank::RandomVariable random_importance(std::mt19937_64& rng, const perfrank::SpacePtr& space) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<double> v(space->size());
    bool any = false;
    for (auto& x : v) {
        x = coin(rng) == 0 ? 0.0 : u(rng);
        any = any || x > 0.0;
    }
    if (!any) v[0] = 1.0;
    return perfrank::RandomVariable(space, v, "I");
}

inline perfrank::RandomVariable random_satisfaction(std::mt19937_64& rng, const perfrank::SpacePtr& space,
                                                    bool binary) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> v(space->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = binary ? static_cast<double>(i % 2) : u(rng);
    if (binary) std::shuffle(v.begin(), v.end(), rng);
    return perfrank::RandomVariable(space, v, "S");
}

}  // namespace testutil
