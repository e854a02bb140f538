#pragma once

// Seeded numerical checks of the algebraic properties of ranking scores:
// decomposition through filter, affine satisfaction, scale invariance,
// per-face scaling, harmonic and f-means, convex contour sets and range.

#include <cstdint>
#include <string>
#include <vector>

namespace perfrank {

struct PropertyCheck {
    std::string name;
    int instances = 0;  ///< random instances that were in domain and checked
    int failures = 0;
    double max_error = 0.0;

    bool passed(int min_instances) const noexcept { return failures == 0 && instances >= min_instances; }
};

/// Runs every check until it has min_instances in-domain instances (or a
/// draw budget of 20x that runs out). Sample spaces have 2 to 6 outcomes.
std::vector<PropertyCheck> check_ranking_properties(std::uint64_t seed, int min_instances = 1000);

}  // namespace perfrank
