#pragma once

// Finite sample spaces, performances (probability measures over them),
// random variables, scores, and the ranking-score family.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perfrank {

/// Absolute tolerance used for every equality comparison on probabilities.
inline constexpr double kEqualityTolerance = 1e-12;

/// Largest accepted deviation of a raw probability vector's sum from 1.
/// Inputs within it are renormalized; anything larger is rejected.
inline constexpr double kNormalizationSlack = 1e-9;

/// Events are subsets of the sample space, one bit per label.
using Event = std::uint64_t;

inline constexpr std::size_t kMaxLabels = 64;

class SampleSpace {
public:
    explicit SampleSpace(std::vector<std::string> labels);

    static std::shared_ptr<const SampleSpace> make(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }

    /// Index of `label`; throws std::invalid_argument when unknown.
    std::size_t index_of(std::string_view label) const;

    /// Builds an event from label names.
    Event event(std::initializer_list<std::string_view> labels) const;
    Event event(const std::vector<std::string>& labels) const;

    Event universe() const noexcept;

    bool operator==(const SampleSpace& other) const noexcept { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const SampleSpace>;

bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept;

/// A probability measure on a finite sample space.
class Performance {
public:
    /// Validates and, when the sum is within kNormalizationSlack of 1,
    /// renormalizes. Throws std::invalid_argument otherwise.
    Performance(SpacePtr space, std::vector<double> probs);

    const SpacePtr& space() const noexcept { return space_; }
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t i) const noexcept { return probs_[i]; }
    std::size_t size() const noexcept { return probs_.size(); }

    double probability(Event e) const noexcept;

    /// Bitwise equality of the probability vectors on the same space.
    bool identical(const Performance& other) const noexcept;

private:
    SpacePtr space_;
    std::vector<double> probs_;
};

/// Convex combination lambda*a + (1-lambda)*b.
Performance mix(const Performance& a, const Performance& b, double lambda);

/// Real-valued function on the samples.
class RandomVariable {
public:
    RandomVariable(SpacePtr space, std::vector<double> values, std::string name = {});

    const SpacePtr& space() const noexcept { return space_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::string& name() const noexcept { return name_; }

    double min() const noexcept;
    double max() const noexcept;

    /// Smallest / largest value over the samples of a non-empty event.
    double min_over(Event e) const;
    double max_over(Event e) const;

    /// True when every value is 0 or 1.
    bool is_binary() const noexcept;
    /// Non-negative and not identically zero.
    bool is_valid_importance() const noexcept;

    double expectation(std::span<const double> probs) const noexcept;
    double expectation(const Performance& p) const noexcept { return expectation(p.probs()); }

    RandomVariable scaled(double k) const;
    RandomVariable affine(double alpha, double beta) const;

private:
    SpacePtr space_;
    std::vector<double> values_;
    std::string name_;
};

/// Partial function from performances to reals. Points outside the domain
/// evaluate to std::nullopt; the underlying function is never asked to
/// produce a value there.
class Score {
public:
    using Fn = std::function<std::optional<double>(std::span<const double>)>;
    using DomainFn = std::function<bool(std::span<const double>)>;
    using ValueFn = std::function<double(std::span<const double>)>;

    Score(std::string name, std::size_t arity, Fn fn);
    Score(std::string name, std::size_t arity, DomainFn domain, ValueFn value);

    const std::string& name() const noexcept { return name_; }
    /// Number of samples the score expects; 0 means any.
    std::size_t arity() const noexcept { return arity_; }

    /// Raw evaluation on a probability vector of the right arity.
    std::optional<double> evaluate(std::span<const double> probs) const { return fn_(probs); }

    /// Checked evaluation; throws std::invalid_argument on arity mismatch.
    std::optional<double> operator()(const Performance& p) const;
    bool in_domain(const Performance& p) const { return (*this)(p).has_value(); }

    /// Same domain, values negated.
    Score negated() const;

private:
    std::string name_;
    std::size_t arity_;
    Fn fn_;
};

/// E_P[V].
Score expected_value_score(const RandomVariable& v);

/// P(e1 | e2) with domain P(e2) != 0. Requires {} != e1 strictly inside e2.
Score probabilistic_score(const SampleSpace& space, Event e1, Event e2);

/// R_I(P) = E_P[I S] / E_P[I], domain E_P[I] != 0.
Score ranking_score(const RandomVariable& importance, const RandomVariable& satisfaction);

/// Importance-weighted renormalization of p; throws std::domain_error when
/// E_p[I] = 0.
Performance filter(const RandomVariable& importance, const Performance& p);

}  // namespace perfrank
