#include "perfrank/golden.hpp"

#include <stdexcept>

namespace perfrank {

// {test1, test2, test3, {tau_min}, {tau_max}} per constraint set.
const std::vector<GoldenRow>& golden_table() {
    static const std::vector<GoldenRow> rows = {
        {"accuracy",
         {{{true, true, true, {0.469, false, 0.469}, {1.0, true, 0.982}},
          {true, true, true, {0.157, false, 0.157}, {1.0, true, 0.998}},
          {true, true, true, {0.505, false, 0.505}, {1.0, true, 0.995}}}}},
        {"f0.5",
         {{{true, true, true, {0.079, false, 0.079}, {1.0, true, 1.000}},
          {true, true, true, {0.451, false, 0.451}, {1.0, true, 1.000}},
          {true, true, true, {0.352, false, 0.352}, {1.0, true, 1.000}}}}},
        {"f1",
         {{{true, true, true, {0.161, false, 0.161}, {1.0, true, 0.994}},
          {true, true, true, {0.352, false, 0.352}, {1.0, true, 1.000}},
          {true, true, true, {0.194, false, 0.194}, {1.0, true, 1.000}}}}},
        {"f2",
         {{{true, true, true, {0.079, false, 0.079}, {1.0, true, 1.000}},
          {true, true, true, {0.194, false, 0.194}, {1.0, true, 1.000}},
          {true, true, true, {0.072, false, 0.072}, {1.0, true, 1.000}}}}},
        {"npv",
         {{{true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.503, false, 0.503}, {1.0, true, 1.000}},
          {true, true, true, {0.503, false, 0.503}, {1.0, true, 1.000}}}}},
        {"ppv",
         {{{true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.503, false, 0.503}, {1.0, true, 1.000}},
          {true, true, true, {0.503, false, 0.503}, {1.0, true, 1.000}}}}},
        {"tnr",
         {{{true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}}}}},
        {"tpr",
         {{{true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}}}}},
        {"balanced_accuracy",
         {{{true, false, false, {0.486, false, 0.486}, {0.713, false, 0.713}},
          {true, true, true, {0.504, false, 0.504}, {1.0, true, 0.997}},
          {true, true, true, {0.505, false, 0.505}, {1.0, true, 0.995}}}}},
        {"cohen_kappa",
         {{{false, false, false, {0.476, false, 0.476}, {0.697, false, 0.697}},
          {true, true, true, {0.503, false, 0.503}, {1.0, true, 1.000}},
          {true, true, true, {0.505, false, 0.505}, {1.0, true, 0.995}}}}},
        {"informedness",
         {{{true, false, false, {0.486, false, 0.486}, {0.713, false, 0.713}},
          {true, true, true, {0.504, false, 0.504}, {1.0, true, 0.997}},
          {true, true, true, {0.505, false, 0.505}, {1.0, true, 0.995}}}}},
        {"plr",
         {{{true, false, false, {0.420, false, 0.420}, {0.677, false, 0.677}},
          {true, true, true, {0.491, false, 0.491}, {1.0, true, 1.000}},
          {true, true, true, {0.491, false, 0.491}, {1.0, true, 1.000}}}}},
        {"ptn",
         {{{false, true, true, {-0.007, false, -0.007}, {0.818, false, 0.818}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}}}}},
        {"ptp",
         {{{false, true, true, {-0.006, false, -0.006}, {0.818, false, 0.818}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}},
          {true, true, true, {0.000, false, 0.000}, {1.0, true, 1.000}}}}},
        {"kappa_chance",
         {{{false, false, false, {0.194, false, 0.194}, {0.498, false, 0.498}},
          {false, true, true, {-0.157, false, -0.157}, {0.849, false, 0.849}},
          {true, true, true, {0.0, true, -0.012}, {0.0, true, 0.008}}}}},
        {"error_rate",
         {{{false, true, true, {-1.0, true, -0.982}, {-0.469, false, -0.469}},
          {false, true, true, {-1.0, true, -0.998}, {-0.157, false, -0.157}},
          {false, true, true, {-1.0, true, -0.995}, {-0.505, false, -0.505}}}}},
        {"fdr",
         {{{false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}},
          {false, true, true, {-1.0, true, -1.000}, {-0.503, false, -0.503}},
          {false, true, true, {-1.0, true, -1.000}, {-0.503, false, -0.503}}}}},
        {"fnr",
         {{{false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}},
          {false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}},
          {false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}}}}},
        {"for",
         {{{false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}},
          {false, true, true, {-1.0, true, -1.000}, {-0.503, false, -0.503}},
          {false, true, true, {-1.0, true, -1.000}, {-0.503, false, -0.503}}}}},
        {"fpr",
         {{{false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}},
          {false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}},
          {false, true, true, {-1.0, true, -1.000}, {0.000, false, 0.000}}}}},
        {"gmean_tnr_tpr",
         {{{true, false, false, {0.461, false, 0.461}, {0.653, false, 0.653}},
          {true, false, true, {0.503, false, 0.503}, {0.831, false, 0.831}},
          {true, false, true, {0.503, false, 0.503}, {0.830, false, 0.830}}}}},
        {"markedness",
         {{{true, false, false, {0.486, false, 0.486}, {0.713, false, 0.713}},
          {true, false, false, {0.418, false, 0.418}, {0.887, false, 0.887}},
          {true, false, false, {0.503, false, 0.503}, {0.913, false, 0.913}}}}},
        {"mcc",
         {{{true, false, false, {0.503, false, 0.503}, {0.746, false, 0.746}},
          {true, false, false, {0.458, false, 0.458}, {0.944, false, 0.944}},
          {true, false, false, {0.503, false, 0.503}, {0.963, false, 0.963}}}}},
        {"nlr",
         {{{false, false, false, {-0.677, false, -0.677}, {-0.418, false, -0.418}},
          {false, true, true, {-1.0, true, -1.000}, {-0.491, false, -0.491}},
          {false, true, true, {-1.0, true, -1.000}, {-0.491, false, -0.491}}}}},
        {"odds_ratio",
         {{{true, false, false, {0.499, false, 0.499}, {0.671, false, 0.671}},
          {true, false, false, {0.503, false, 0.503}, {0.894, false, 0.894}},
          {true, false, false, {0.503, false, 0.503}, {0.892, false, 0.892}}}}},
        {"rate_positive_predictions",
         {{{false, true, true, {-0.469, false, -0.469}, {0.469, false, 0.469}},
          {false, true, true, {-0.849, false, -0.849}, {0.157, false, 0.157}},
          {false, true, true, {-0.504, false, -0.504}, {0.505, false, 0.505}}}}},
        {"d_prime",
         {{{true, false, false, {0.502, false, 0.502}, {0.786, false, 0.786}},
          {true, false, false, {0.503, false, 0.503}, {0.926, false, 0.926}},
          {true, false, false, {0.503, false, 0.503}, {0.924, false, 0.924}}}}},
    };
    return rows;
}

const GoldenRow& golden_row(std::string_view id) {
    for (const auto& r : golden_table()) {
        if (r.id == id) return r;
    }
    throw std::invalid_argument("no reference row for '" + std::string(id) + "'");
}

}  // namespace perfrank
