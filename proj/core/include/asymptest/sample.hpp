#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace asymptest {

/**
 * A finite vector of real observations.
 *
 * Construction validates the invariants every estimator relies on: at least
 * two observations (variances divide by n - 1) and no NaN or infinite entry.
 * Violations raise InvalidSample.
 */
class Sample {
public:
    explicit Sample(std::vector<double> values);
    Sample(std::initializer_list<double> values);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    /// max(1, max |value|); the reference magnitude for near-zero checks.
    [[nodiscard]] double scale() const noexcept;

    /// Returns a copy with every value multiplied by `factor`.
    [[nodiscard]] Sample scaled(double factor) const;
    /// Returns a copy with `offset` added to every value.
    [[nodiscard]] Sample shifted(double offset) const;

private:
    std::vector<double> values_;
};

}  // namespace asymptest
