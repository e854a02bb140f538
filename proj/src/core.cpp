#include "perfrank/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace perfrank {

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw std::invalid_argument("sample space needs at least one label");
    }
    if (labels_.size() > kMaxLabels) {
        throw std::invalid_argument("sample space limited to 64 labels");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) {
            throw std::invalid_argument("sample labels must be non-empty");
        }
        if (!seen.insert(l).second) {
            throw std::invalid_argument("duplicate sample label '" + l + "'");
        }
    }
}

std::shared_ptr<const SampleSpace> SampleSpace::make(std::vector<std::string> labels) {
    return std::make_shared<const SampleSpace>(std::move(labels));
}

std::size_t SampleSpace::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw std::invalid_argument("unknown sample label '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

Event SampleSpace::event(std::initializer_list<std::string_view> labels) const {
    Event e = 0;
    for (auto l : labels) e |= Event{1} << index_of(l);
    return e;
}

Event SampleSpace::event(const std::vector<std::string>& labels) const {
    Event e = 0;
    for (const auto& l : labels) e |= Event{1} << index_of(l);
    return e;
}

Event SampleSpace::universe() const noexcept {
    return size() == 64 ? ~Event{0} : (Event{1} << size()) - 1;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Performance::Performance(SpacePtr space, std::vector<double> probs)
    : space_(std::move(space)), probs_(std::move(probs)) {
    if (!space_) throw std::invalid_argument("performance without sample space");
    if (probs_.size() != space_->size()) {
        throw std::invalid_argument("performance has " + std::to_string(probs_.size()) +
                                    " entries for a space of " + std::to_string(space_->size()));
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw std::invalid_argument("probabilities must be finite and non-negative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormalizationSlack) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", not 1");
    }
    if (sum != 1.0) {
        for (double& p : probs_) p /= sum;
    }
}

double Performance::probability(Event e) const noexcept {
    double total = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (e & (Event{1} << i)) total += probs_[i];
    }
    return total;
}

bool Performance::identical(const Performance& other) const noexcept {
    return same_space(space_, other.space_) && probs_ == other.probs_;
}

Performance mix(const Performance& a, const Performance& b, double lambda) {
    if (!same_space(a.space(), b.space())) {
        throw std::invalid_argument("cannot mix performances on different spaces");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("mixing weight must lie in [0,1]");
    }
    std::vector<double> q(a.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = lambda * a[i] + (1.0 - lambda) * b[i];
    return Performance(a.space(), std::move(q));
}

RandomVariable::RandomVariable(SpacePtr space, std::vector<double> values, std::string name)
    : space_(std::move(space)), values_(std::move(values)), name_(std::move(name)) {
    if (!space_) throw std::invalid_argument("random variable without sample space");
    if (values_.size() != space_->size()) {
        throw std::invalid_argument("random variable has " + std::to_string(values_.size()) +
                                    " values for a space of " + std::to_string(space_->size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("random variable values must be finite");
    }
}

double RandomVariable::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }
double RandomVariable::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

double RandomVariable::min_over(Event e) const {
    if ((e & space_->universe()) == 0) throw std::invalid_argument("empty event");
    double m = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(e & (Event{1} << i))) continue;
        if (first || values_[i] < m) m = values_[i];
        first = false;
    }
    return m;
}

double RandomVariable::max_over(Event e) const {
    if ((e & space_->universe()) == 0) throw std::invalid_argument("empty event");
    double m = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(e & (Event{1} << i))) continue;
        if (first || values_[i] > m) m = values_[i];
        first = false;
    }
    return m;
}

bool RandomVariable::is_binary() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

bool RandomVariable::is_valid_importance() const noexcept {
    bool any_positive = false;
    for (double v : values_) {
        if (v < 0.0) return false;
        any_positive = any_positive || v > 0.0;
    }
    return any_positive;
}

double RandomVariable::expectation(std::span<const double> probs) const noexcept {
    double total = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) total += values_[i] * probs[i];
    return total;
}

RandomVariable RandomVariable::scaled(double k) const { return affine(k, 0.0); }

RandomVariable RandomVariable::affine(double alpha, double beta) const {
    std::vector<double> v(values_);
    for (double& x : v) x = alpha * x + beta;
    return RandomVariable(space_, std::move(v), name_);
}

Score::Score(std::string name, std::size_t arity, Fn fn)
    : name_(std::move(name)), arity_(arity), fn_(std::move(fn)) {}

Score::Score(std::string name, std::size_t arity, DomainFn domain, ValueFn value)
    : name_(std::move(name)), arity_(arity) {
    fn_ = [domain = std::move(domain), value = std::move(value)](std::span<const double> p)
        -> std::optional<double> {
        if (!domain(p)) return std::nullopt;
        return value(p);
    };
}

std::optional<double> Score::operator()(const Performance& p) const {
    if (arity_ != 0 && p.size() != arity_) {
        throw std::invalid_argument("score '" + name_ + "' expects " + std::to_string(arity_) +
                                    " samples, got " + std::to_string(p.size()));
    }
    return fn_(p.probs());
}

Score Score::negated() const {
    return Score("-" + name_, arity_, [fn = fn_](std::span<const double> p) -> std::optional<double> {
        auto v = fn(p);
        if (!v) return std::nullopt;
        return -*v;
    });
}

Score expected_value_score(const RandomVariable& v) {
    std::vector<double> values(v.values().begin(), v.values().end());
    return Score("E[" + v.name() + "]", values.size(),
                 [values](std::span<const double> p) -> std::optional<double> {
                     double total = 0.0;
                     for (std::size_t i = 0; i < values.size(); ++i) total += values[i] * p[i];
                     return total;
                 });
}

Score probabilistic_score(const SampleSpace& space, Event e1, Event e2) {
    const Event all = space.universe();
    if (e1 == 0 || (e1 & ~all) != 0 || (e2 & ~all) != 0 || (e1 & ~e2) != 0 || e1 == e2) {
        throw std::invalid_argument("probabilistic score requires {} != e1, e1 strictly inside e2");
    }
    const std::size_t n = space.size();
    return Score("P[" + std::to_string(e1) + "|" + std::to_string(e2) + "]", n,
                 [e1, e2, n](std::span<const double> p) -> std::optional<double> {
                     double num = 0.0, den = 0.0;
                     for (std::size_t i = 0; i < n; ++i) {
                         const Event bit = Event{1} << i;
                         if (e2 & bit) den += p[i];
                         if (e1 & bit) num += p[i];
                     }
                     if (den == 0.0) return std::nullopt;
                     return num / den;
                 });
}

Score ranking_score(const RandomVariable& importance, const RandomVariable& satisfaction) {
    if (!same_space(importance.space(), satisfaction.space())) {
        throw std::invalid_argument("importance and satisfaction live on different spaces");
    }
    if (!importance.is_valid_importance()) {
        throw std::invalid_argument("importance must be non-negative and not identically zero");
    }
    const std::size_t n = importance.size();
    std::vector<double> weight(importance.values().begin(), importance.values().end());
    std::vector<double> weighted(n);
    for (std::size_t i = 0; i < n; ++i) weighted[i] = importance[i] * satisfaction[i];
    std::string name = "R[" + (importance.name().empty() ? std::string("I") : importance.name()) + "]";
    return Score(std::move(name), n,
                 [weight = std::move(weight), weighted = std::move(weighted)](
                     std::span<const double> p) -> std::optional<double> {
                     double num = 0.0, den = 0.0;
                     for (std::size_t i = 0; i < weight.size(); ++i) {
                         num += weighted[i] * p[i];
                         den += weight[i] * p[i];
                     }
                     if (den == 0.0) return std::nullopt;
                     return num / den;
                 });
}

Performance filter(const RandomVariable& importance, const Performance& p) {
    if (!same_space(importance.space(), p.space())) {
        throw std::invalid_argument("importance and performance live on different spaces");
    }
    if (!importance.is_valid_importance()) {
        throw std::invalid_argument("importance must be non-negative and not identically zero");
    }
    const double total = importance.expectation(p);
    if (total == 0.0) throw std::domain_error("filter undefined: E_P[I] = 0");
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = p[i] * importance[i] / total;
    return Performance(p.space(), std::move(q));
}

}  // namespace perfrank
