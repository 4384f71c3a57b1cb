#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "asymptest/distributions.hpp"
#include "asymptest/error.hpp"
#include "asymptest/rng.hpp"
#include "support/oracles.hpp"

using namespace asymptest;

namespace {

std::vector<double> draw(const DistributionSpec& spec, std::size_t n, SeedSpec seed) {
    std::vector<double> out(n);
    RandomStream stream(seed);
    fill(spec, out, stream);
    return out;
}

// 1% Kolmogorov-Smirnov critical value.
double ks_critical(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

}  // namespace

TEST(Rng, SameSeedGivesIdenticalDraws) {
    for (const auto& spec : {DistributionSpec::normal(1, 2), DistributionSpec::exponential(0.5),
                             DistributionSpec::uniform(0, 5), DistributionSpec::chi2(5)}) {
        const auto a = draw(spec, 1000, {123, 7});
        const auto b = draw(spec, 1000, {123, 7});
        EXPECT_EQ(a, b) << spec.describe();
        EXPECT_NE(a, draw(spec, 1000, {123, 8})) << spec.describe();
        EXPECT_NE(a, draw(spec, 1000, {124, 7})) << spec.describe();
    }
}

TEST(Rng, SampleHelperMatchesFill) {
    const Sample s = sample(DistributionSpec::uniform(0, 5), 64, {5, 3});
    const auto v = draw(DistributionSpec::uniform(0, 5), 64, {5, 3});
    EXPECT_TRUE(std::equal(v.begin(), v.end(), s.values().begin()));
    EXPECT_THROW((void)sample(DistributionSpec::uniform(0, 5), 1, {5, 3}), InvalidSample);
}

TEST(Rng, UniformStaysInSupport) {
    for (double x : draw(DistributionSpec::uniform(0, 5), 100000, {1, 0})) {
        ASSERT_GE(x, 0.0);
        ASSERT_LE(x, 5.0);
    }
    RandomStream stream({2, 0});
    for (int i = 0; i < 100000; ++i) {
        const double u = stream.uniform();
        const double v = stream.uniform_positive();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_GT(v, 0.0);
        ASSERT_LE(v, 1.0);
    }
}

TEST(Rng, StreamsAreUncorrelated) {
    constexpr std::size_t n = 100000;
    for (std::uint64_t j : {1ULL, 2ULL, 1000ULL, (1ULL << 40)}) {
        const auto a = draw(DistributionSpec::normal(0, 1), n, {42, 0});
        const auto b = draw(DistributionSpec::normal(0, 1), n, {42, j});
        const double ma = oracle::mean(a);
        const double mb = oracle::mean(b);
        double sab = 0, saa = 0, sbb = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sab += (a[i] - ma) * (b[i] - mb);
            saa += (a[i] - ma) * (a[i] - ma);
            sbb += (b[i] - mb) * (b[i] - mb);
        }
        EXPECT_LT(std::abs(sab / std::sqrt(saa * sbb)), 3.0 * std::pow(10.0, -2.5)) << j;
    }
}

TEST(Rng, EmpiricalCdfsMatchTheory) {
    constexpr std::size_t n = 100000;
    EXPECT_LE(oracle::kolmogorov_distance(draw(DistributionSpec::normal(2, 3), n, {3, 0}),
                                          [](double x) { return std_normal_cdf((x - 2) / 3); }),
              ks_critical(n));
    EXPECT_LE(oracle::kolmogorov_distance(draw(DistributionSpec::exponential(2), n, {3, 1}),
                                          [](double x) { return x < 0 ? 0.0 : -std::expm1(-2 * x); }),
              ks_critical(n));
    EXPECT_LE(oracle::kolmogorov_distance(draw(DistributionSpec::uniform(-1, 4), n, {3, 2}),
                                          [](double x) { return std::clamp((x + 1) / 5, 0.0, 1.0); }),
              ks_critical(n));
    for (double nu : {0.6, 1.0, 5.0, 37.5}) {
        EXPECT_LE(oracle::kolmogorov_distance(draw(DistributionSpec::chi2(nu), n, {3, 3}),
                                              [nu](double x) { return chi2_cdf(x, nu); }),
                  ks_critical(n))
            << nu;
    }
}

TEST(Rng, LargeSampleMoments) {
    const auto e = draw(DistributionSpec::exponential(1), 1000000, {10, 0});
    EXPECT_NEAR(oracle::mean(e), 1.0, 0.01);
    EXPECT_NEAR(oracle::kurtosis(e), 9.0, 0.5);
    const auto c = draw(DistributionSpec::chi2(5), 1000000, {10, 1});
    EXPECT_NEAR(oracle::variance(c), 10.0, 0.3);
}

TEST(Rng, TheoreticalMoments) {
    const auto e = theoretical_moments(DistributionSpec::exponential(1));
    EXPECT_DOUBLE_EQ(e.mean, 1.0);
    EXPECT_DOUBLE_EQ(e.variance, 1.0);
    EXPECT_DOUBLE_EQ((e.kurtosis - 1) / 2, 4.0);
    const auto u = theoretical_moments(DistributionSpec::uniform(0, 5));
    EXPECT_DOUBLE_EQ(u.mean, 2.5);
    EXPECT_DOUBLE_EQ(u.variance, 25.0 / 12.0);
    EXPECT_DOUBLE_EQ((u.kurtosis - 1) / 2, 0.4);
    const auto c = theoretical_moments(DistributionSpec::chi2(5));
    EXPECT_DOUBLE_EQ(c.mean, 5.0);
    EXPECT_DOUBLE_EQ(c.variance, 10.0);
    EXPECT_DOUBLE_EQ((c.kurtosis - 1) / 2, 1.0 + 6.0 / 5.0);
    const auto n = theoretical_moments(DistributionSpec::normal(-1, 3));
    EXPECT_DOUBLE_EQ(n.variance, 9.0);
    EXPECT_DOUBLE_EQ(n.kurtosis, 3.0);
}

TEST(Rng, InvalidParametersAreRejected) {
    EXPECT_THROW((void)DistributionSpec::normal(0, 0), DomainError);
    EXPECT_THROW((void)DistributionSpec::exponential(-1), DomainError);
    EXPECT_THROW((void)DistributionSpec::uniform(3, 3), DomainError);
    EXPECT_THROW((void)DistributionSpec::chi2(0), DomainError);
}

TEST(Rng, Describe) {
    EXPECT_EQ(DistributionSpec::exponential(1).describe(), "exp(1)");
    EXPECT_EQ(DistributionSpec::uniform(0, 5).describe(), "unif(0,5)");
    EXPECT_EQ(DistributionSpec::chi2(5).describe(), "chi2(5)");
}
