#pragma once

// Catalog of classical two-class scores over (tn, fp, fn, tp), with the
// ranking scores they are monotonically tied to.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perfrank/core.hpp"
#include "perfrank/grid.hpp"

namespace perfrank {

enum class Monotonicity { Increasing, Decreasing };

/// Where a score can be used for ranking: everywhere, only at fixed class
/// priors, or nowhere.
enum class Validity { Always, FixedPriorsOnly, Never };

const char* to_string(Monotonicity m) noexcept;
const char* to_string(Validity v) noexcept;

/// A strictly monotone link between a score and R_I on a constraint set.
struct Equivalence {
    RandomVariable importance;
    Monotonicity direction;
    /// Score value as a function of R_I(P).
    std::function<double(double)> transform;
};

struct CatalogEntry {
    std::string id;     ///< stable lowercase identifier, e.g. "f1"
    std::string label;  ///< human-readable row label
    Score score;
    Validity validity;
    /// Declared equivalence on a constraint set, if any.
    std::function<std::optional<Equivalence>(const ConstraintSet&)> equivalence;
    /// True when the score is constant on the constraint set.
    std::function<bool(const ConstraintSet&)> constant_on;

    std::optional<Equivalence> equivalence_for(const ConstraintSet& c) const {
        return equivalence ? equivalence(c) : std::nullopt;
    }
    bool is_constant_on(const ConstraintSet& c) const { return constant_on && constant_on(c); }
};

/// The 27 audited scores, in table order.
const std::vector<CatalogEntry>& catalog();

/// Entry lookup; throws std::invalid_argument for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);

/// Value of a catalog score at p, or nullopt outside its domain.
std::optional<double> eval_score(std::string_view id, const Performance& p);

/// Inverse of the standard normal CDF on (0, 1).
double inverse_normal_cdf(double p);

struct EquivalenceCheck {
    std::string id;
    std::size_t points_checked = 0;
    double max_deviation = 0.0;  ///< max |score - transform(R_I)| on the common domain
    bool domains_match = true;   ///< score and R_I defined on the same grid points
    bool monotone = true;        ///< declared direction holds on every checked pair
};

/// For every entry with an equivalence on grid.constraint(), measures the
/// deviation between the score and its closed form, and checks the declared
/// direction over sorted neighbours.
std::vector<EquivalenceCheck> verify_importance_equivalences(const PerformanceGrid& grid);

}  // namespace perfrank
