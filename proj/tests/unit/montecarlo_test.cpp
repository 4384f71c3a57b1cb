#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "asymptest/error.hpp"
#include "asymptest/montecarlo.hpp"

using namespace asymptest;

namespace {

SimulationConfig exp_variance_config(std::size_t m) {
    SimulationConfig cfg;
    cfg.dist1 = DistributionSpec::exponential(1);
    cfg.n1 = 200;
    cfg.replications = m;
    cfg.test_spec.parameter = Parameter::Var;
    cfg.test_spec.alternative = Alternative::Less;
    cfg.test_spec.reference = 1.0;
    cfg.classical_comparator = Comparator::ChiSquare;
    cfg.master_seed = 42;
    return cfg;
}

void expect_same(const SimulationReport& a, const SimulationReport& b) {
    EXPECT_EQ(a.replications, b.replications);
    EXPECT_EQ(a.rejection_rate_asymptotic, b.rejection_rate_asymptotic);
    EXPECT_EQ(a.rejection_rate_classical, b.rejection_rate_classical);
    EXPECT_EQ(a.agreement_table, b.agreement_table);
    EXPECT_EQ(a.statistic_moments.mean, b.statistic_moments.mean);
    EXPECT_EQ(a.statistic_moments.sd, b.statistic_moments.sd);
    EXPECT_EQ(a.statistic_moments.skewness, b.statistic_moments.skewness);
    EXPECT_EQ(a.statistic_moments.fraction_beyond, b.statistic_moments.fraction_beyond);
    EXPECT_EQ(a.classical_variance, b.classical_variance);
    ASSERT_EQ(a.histogram.size(), b.histogram.size());
    for (std::size_t i = 0; i < a.histogram.size(); ++i) {
        EXPECT_EQ(a.histogram[i].left, b.histogram[i].left);
        EXPECT_EQ(a.histogram[i].count, b.histogram[i].count);
    }
}

}  // namespace

TEST(MonteCarlo, ReportDoesNotDependOnThreadCount) {
    SimulationConfig cfg = exp_variance_config(600);
    cfg.threads = 1;
    const SimulationReport type1 = estimate_type1_error(cfg);
    const SimulationReport classical = classical_statistic_distribution(cfg);
    for (unsigned t : {2u, 3u, 8u}) {
        cfg.threads = t;
        SCOPED_TRACE(t);
        expect_same(type1, estimate_type1_error(cfg));
        expect_same(classical, classical_statistic_distribution(cfg));
    }
}

TEST(MonteCarlo, SeedChangesResults) {
    SimulationConfig cfg = exp_variance_config(300);
    const SimulationReport a = simulate_statistic_distribution(cfg);
    cfg.master_seed = 43;
    EXPECT_NE(a.statistic_moments.mean, simulate_statistic_distribution(cfg).statistic_moments.mean);
}

TEST(MonteCarlo, AgreementMarginalsEqualRates) {
    SimulationConfig cfg = exp_variance_config(1000);
    const SimulationReport r = estimate_type1_error(cfg);
    ASSERT_TRUE(r.agreement_table);
    const auto& t = *r.agreement_table;
    EXPECT_EQ(t[0][1] + t[1][1], r.rejection_rate_asymptotic);
    EXPECT_EQ(t[1][0] + t[1][1], *r.rejection_rate_classical);
    EXPECT_NEAR(t[0][0] + t[0][1] + t[1][0] + t[1][1], 1.0, 1e-12);
}

TEST(MonteCarlo, AlphaOneAlwaysRejects) {
    SimulationConfig cfg = exp_variance_config(50);
    cfg.alpha = 1.0;
    const SimulationReport r = estimate_type1_error(cfg);
    EXPECT_EQ(r.rejection_rate_asymptotic, 1.0);
    EXPECT_EQ(*r.rejection_rate_classical, 1.0);
}

TEST(MonteCarlo, SingleReplicationGivesSingleBin) {
    SimulationConfig cfg = exp_variance_config(1);
    const SimulationReport r = simulate_statistic_distribution(cfg);
    ASSERT_EQ(r.histogram.size(), 1u);
    EXPECT_EQ(r.histogram[0].count, 1u);
}

TEST(MonteCarlo, MeanStatisticHasNominalSize) {
    SimulationConfig cfg;
    cfg.dist1 = DistributionSpec::uniform(0, 5);
    cfg.n1 = 500;
    cfg.replications = 10000;
    cfg.test_spec.parameter = Parameter::Mean;
    cfg.test_spec.reference = 2.5;
    cfg.master_seed = 8;
    const SimulationReport r = simulate_statistic_distribution(cfg);
    EXPECT_NEAR(r.statistic_moments.fraction_beyond, 0.05, 0.01);
    EXPECT_NEAR(r.rejection_rate_asymptotic, r.statistic_moments.fraction_beyond, 1e-3);
    EXPECT_FALSE(r.agreement_table);
}

TEST(MonteCarlo, ClassicalSizeDistortionFollowsKurtosis) {
    // Heavy-tailed laws inflate the one-sided chi-square rejection, the
    // uniform law deflates the two-sided Fisher rejection.
    SimulationConfig cfg = exp_variance_config(4000);
    cfg.n1 = 1000;
    const SimulationReport e = estimate_type1_error(cfg);
    EXPECT_GT(*e.rejection_rate_classical, 0.05 + 3 * std::sqrt(0.05 * 0.95 / 4000));

    SimulationConfig u;
    u.dist1 = DistributionSpec::uniform(0, 5);
    u.dist2 = u.dist1;
    u.n1 = u.n2 = 1000;
    u.replications = 4000;
    u.test_spec.parameter = Parameter::DVar;
    u.classical_comparator = Comparator::Fisher;
    u.master_seed = 9;
    const SimulationReport f = estimate_type1_error(u);
    EXPECT_LT(*f.rejection_rate_classical, 0.05 - 3 * std::sqrt(0.05 * 0.95 / 4000));
    EXPECT_NEAR(f.rejection_rate_asymptotic, 0.05, std::max(0.02, 3 * std::sqrt(0.05 * 0.95 / 4000)));
}

TEST(MonteCarlo, AsymptoticVarianceTestSizeNearNominal) {
    for (const auto& law : {DistributionSpec::uniform(0, 5), DistributionSpec::chi2(5)}) {
        SimulationConfig cfg;
        cfg.dist1 = law;
        cfg.n1 = 1000;
        cfg.replications = 10000;
        cfg.test_spec.parameter = Parameter::Var;
        cfg.test_spec.reference = theoretical_moments(law).variance;
        cfg.classical_comparator = Comparator::ChiSquare;
        cfg.master_seed = 10;
        const SimulationReport r = estimate_type1_error(cfg);
        EXPECT_NEAR(r.rejection_rate_asymptotic, 0.05, std::max(0.02, 3 * std::sqrt(0.05 * 0.95 / 1e4)))
            << law.describe();
    }
}

TEST(MonteCarlo, ValidationErrors) {
    SimulationConfig cfg = exp_variance_config(10);
    cfg.alpha = 0.0;
    EXPECT_THROW((void)estimate_type1_error(cfg), DomainError);
    cfg = exp_variance_config(10);
    cfg.replications = 0;
    EXPECT_THROW((void)estimate_type1_error(cfg), UsageError);
    cfg = exp_variance_config(10);
    cfg.test_spec.parameter = Parameter::Mean;
    EXPECT_THROW((void)estimate_type1_error(cfg), UsageError);
    cfg = exp_variance_config(10);
    cfg.classical_comparator.reset();
    EXPECT_THROW((void)estimate_type1_error(cfg), UsageError);
    cfg = exp_variance_config(10);
    cfg.dist2 = DistributionSpec::uniform(0, 1);
    EXPECT_THROW((void)estimate_type1_error(cfg), ArityError);
    cfg = exp_variance_config(10);
    cfg.n1 = 1;
    EXPECT_THROW((void)estimate_type1_error(cfg), UsageError);
}

TEST(MonteCarlo, NullReference) {
    const auto e = DistributionSpec::exponential(0.5);
    const auto u = DistributionSpec::uniform(0, 5);
    EXPECT_DOUBLE_EQ(null_reference(Parameter::Mean, e, std::nullopt), 2.0);
    EXPECT_DOUBLE_EQ(null_reference(Parameter::Var, e, std::nullopt), 4.0);
    EXPECT_DOUBLE_EQ(null_reference(Parameter::DMean, u, e), 0.5);
    EXPECT_DOUBLE_EQ(null_reference(Parameter::DMean, u, e, 2.0), -1.5);
    EXPECT_DOUBLE_EQ(null_reference(Parameter::RMean, u, e), 1.25);
    EXPECT_DOUBLE_EQ(null_reference(Parameter::RVar, u, e), 25.0 / 12.0 / 4.0);
    EXPECT_THROW((void)null_reference(Parameter::DVar, u, std::nullopt), ArityError);
}

TEST(Histogram, FreedmanDiaconisAndExplicitBins) {
    std::vector<double> v(1000);
    std::iota(v.begin(), v.end(), 0.0);
    const auto fd = make_histogram(v);
    // IQR = 499.5, width = 2 * 499.5 / 10 = 99.9, range 999 -> 10 bins.
    EXPECT_EQ(fd.size(), 10u);
    std::size_t total = 0;
    for (const auto& b : fd) total += b.count;
    EXPECT_EQ(total, 1000u);
    EXPECT_EQ(fd.front().left, 0.0);
    EXPECT_EQ(fd.back().right, 999.0);

    const auto fixed = make_histogram(v, 4);
    ASSERT_EQ(fixed.size(), 4u);
    EXPECT_EQ(fixed[0].count, 250u);
    EXPECT_EQ(fixed[3].count, 250u);
    EXPECT_TRUE(make_histogram({}).empty());
    EXPECT_EQ(make_histogram({2.0, 2.0, 2.0}).size(), 1u);
}
