#pragma once

// Published verdicts and Kendall tau extremes for the 27 catalog scores on
// the three standard constraint sets (unconstrained, prior 0.2, prior 0.5).

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace perfrank {

struct GoldenTau {
    double value;    ///< printed value (+-1 or 0 for analytic entries)
    bool analytic;   ///< obtained theoretically rather than by search
    double raw;      ///< search value behind an analytic entry; equals value otherwise
};

struct GoldenCell {
    bool test1, test2, test3;
    GoldenTau tau_min, tau_max;
};

struct GoldenRow {
    std::string id;
    std::array<GoldenCell, 3> cells;  ///< unconstrained, prior 0.2, prior 0.5
};

const std::vector<GoldenRow>& golden_table();

/// Throws std::invalid_argument for an unknown id.
const GoldenRow& golden_row(std::string_view id);

}  // namespace perfrank
