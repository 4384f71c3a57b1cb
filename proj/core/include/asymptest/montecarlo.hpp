#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "asymptest/hypothesis.hpp"
#include "asymptest/rng.hpp"

namespace asymptest {

/// Classical Gaussian-theory test run alongside the asymptotic one.
enum class Comparator { ChiSquare, Fisher };

[[nodiscard]] std::string_view to_string(Comparator c);

/**
 * One replication campaign.
 *
 * Replication i draws sample 1 from stream 2i and sample 2 from stream
 * 2i + 1 of `master_seed`, so results do not depend on `threads`.
 * The comparator needs parameter Var (chi-square), or RVar / DVar with
 * reference 0 (Fisher; the tested ratio is the reference, respectively rho).
 */
struct SimulationConfig {
    DistributionSpec dist1;
    std::optional<DistributionSpec> dist2;
    std::size_t n1 = 500;
    std::size_t n2 = 500;
    std::size_t replications = 10000;
    double alpha = 0.05;
    TestSpec test_spec;
    std::uint64_t master_seed = 0;
    std::optional<Comparator> classical_comparator;
    /// Histogram bin count; 0 selects the Freedman-Diaconis rule.
    std::size_t bins = 0;
    /// Worker threads; 0 uses std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Throws UsageError / ArityError / DomainError on an inconsistent setup.
    void validate() const;
};

/// Rows: classical test accepts H1 (false, true).
/// Columns: asymptotic test accepts H1 (false, true). Entries are fractions.
using AgreementTable = std::array<std::array<double, 2>, 2>;

struct StatisticMoments {
    double mean = 0.0;
    double sd = 0.0;
    double skewness = 0.0;
    /// Fraction of replications beyond +-z_{1-alpha/2} (after standardizing
    /// the classical statistic with its Gaussian-theory mean and variance).
    double fraction_beyond = 0.0;
};

struct HistogramBin {
    double left;
    double right;
    std::size_t count;
};

struct SimulationReport {
    std::size_t replications = 0;
    double rejection_rate_asymptotic = 0.0;
    std::optional<double> rejection_rate_classical;
    std::optional<AgreementTable> agreement_table;
    StatisticMoments statistic_moments;
    std::vector<HistogramBin> histogram;
    /// Empirical variance of the classical statistic, and its ratio to the
    /// Gaussian-theory variance 2(n-1) (chi-square) or 2/n1 + 2/n2 (F).
    std::optional<double> classical_variance;
    std::optional<double> variance_ratio;
};

/// True value of the parameter implied by the sampling laws.
[[nodiscard]] double null_reference(Parameter p, const DistributionSpec& dist1,
                                    const std::optional<DistributionSpec>& dist2, double rho = 1.0);

/// Histogram and moments of the studentized statistic across replications.
[[nodiscard]] SimulationReport simulate_statistic_distribution(const SimulationConfig& cfg);

/// Histogram and moments of the classical statistic ((n-1) s^2 / sigma0^2 or
/// the variance ratio over r0), plus its variance ratio to Gaussian theory.
[[nodiscard]] SimulationReport classical_statistic_distribution(const SimulationConfig& cfg);

/// Runs both tests per replication; fills the agreement table and both
/// rejection rates. A test "accepts H1" when its p-value is <= alpha.
[[nodiscard]] SimulationReport estimate_type1_error(const SimulationConfig& cfg);

/// Freedman-Diaconis histogram (or `bins` equal-width bins when nonzero).
[[nodiscard]] std::vector<HistogramBin> make_histogram(std::vector<double> values, std::size_t bins = 0);

}  // namespace asymptest
