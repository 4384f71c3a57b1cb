#pragma once

#include <stdexcept>
#include <string>

namespace asymptest {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sample violates its invariants (n < 2, non-finite entry).
class InvalidSample : public Error {
public:
    using Error::Error;
};

/// A ratio estimator's denominator is numerically zero.
class NearZeroDenominator : public Error {
public:
    using Error::Error;
};

/// A standard error of zero leaves the studentized statistic undefined.
class DegenerateSample : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain (df <= 0, p outside (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Wrong number of samples for the requested parameter.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Inconsistent combination of otherwise valid options.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace asymptest
