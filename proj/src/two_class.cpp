#include "perfrank/two_class.hpp"

namespace perfrank::two_class {

const SpacePtr& space() {
    static const SpacePtr s = SampleSpace::make({"tn", "fp", "fn", "tp"});
    return s;
}

const RandomVariable& satisfaction() {
    static const RandomVariable s(space(), {1.0, 0.0, 0.0, 1.0}, "S");
    return s;
}

RandomVariable importance(double tn, double fp, double fn, double tp, std::string name) {
    return RandomVariable(space(), {tn, fp, fn, tp}, std::move(name));
}

RandomVariable importance(const std::array<double, 4>& values, std::string name) {
    return importance(values[0], values[1], values[2], values[3], std::move(name));
}

Performance performance(double tn, double fp, double fn, double tp) {
    return Performance(space(), {tn, fp, fn, tp});
}

}  // namespace perfrank::two_class
