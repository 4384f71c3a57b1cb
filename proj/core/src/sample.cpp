#include "asymptest/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asymptest/error.hpp"

namespace asymptest {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw InvalidSample("sample needs at least 2 observations, got " +
                            std::to_string(values_.size()));
    }
    const auto bad = std::find_if(values_.begin(), values_.end(),
                                  [](double v) { return !std::isfinite(v); });
    if (bad != values_.end()) {
        throw InvalidSample("sample entry " + std::to_string(bad - values_.begin()) +
                            " is not finite");
    }
}

Sample::Sample(std::initializer_list<double> values)
    : Sample(std::vector<double>(values)) {}

double Sample::scale() const noexcept {
    double s = 1.0;
    for (double v : values_) s = std::max(s, std::abs(v));
    return s;
}

Sample Sample::scaled(double factor) const {
    std::vector<double> out(values_);
    for (double& v : out) v *= factor;
    return Sample(std::move(out));
}

Sample Sample::shifted(double offset) const {
    std::vector<double> out(values_);
    for (double& v : out) v += offset;
    return Sample(std::move(out));
}

}  // namespace asymptest
