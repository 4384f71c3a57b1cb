#include "asymptest/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "asymptest/distributions.hpp"
#include "asymptest/error.hpp"
#include "asymptest/estimators.hpp"

namespace asymptest {

namespace {

enum class Focus { Asymptotic, Classical };

struct Outcome {
    double asymptotic_statistic = 0.0;
    double classical_statistic = 0.0;
    bool asymptotic_reject = false;
    bool classical_reject = false;
};

bool needs_second_sample(const SimulationConfig& cfg) {
    return is_two_sample(cfg.test_spec.parameter) ||
           cfg.classical_comparator == Comparator::Fisher;
}

// Ratio tested by the F comparator.
double fisher_reference(const TestSpec& spec) {
    return spec.parameter == Parameter::RVar ? spec.reference : spec.rho;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

StatisticMoments moments_of(const std::vector<double>& values, double center, double scale,
                            double z) {
    StatisticMoments m;
    const double count = static_cast<double>(values.size());
    double sum = 0.0;
    std::size_t beyond = 0;
    for (double v : values) {
        sum += v;
        if (std::abs((v - center) / scale) > z) ++beyond;
    }
    m.mean = sum / count;
    double m2 = 0.0;
    double m3 = 0.0;
    for (double v : values) {
        const double d = v - m.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m.sd = values.size() > 1 ? std::sqrt(m2 / (count - 1.0)) : 0.0;
    m2 /= count;
    m3 /= count;
    m.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    m.fraction_beyond = static_cast<double>(beyond) / count;
    return m;
}

std::vector<Outcome> run_replications(const SimulationConfig& cfg) {
    const bool second = needs_second_sample(cfg);
    const DistributionSpec dist2 = cfg.dist2.value_or(cfg.dist1);

    // Decisions use p <= alpha; the interval level is irrelevant here.
    TestSpec asym_spec = cfg.test_spec;
    asym_spec.conf_level = 0.95;
    TestSpec classical_spec = asym_spec;
    classical_spec.rho = 1.0;
    if (cfg.classical_comparator == Comparator::Fisher) {
        classical_spec.parameter = Parameter::RVar;
        classical_spec.reference = fisher_reference(cfg.test_spec);
    }

    std::vector<Outcome> outcomes(cfg.replications);
    auto replicate = [&](std::size_t i) {
        std::vector<double> xs(cfg.n1);
        RandomStream stream1({cfg.master_seed, 2 * static_cast<std::uint64_t>(i)});
        fill(cfg.dist1, xs, stream1);
        const Sample x(std::move(xs));
        std::optional<Sample> y;
        if (second) {
            std::vector<double> ys(cfg.n2);
            RandomStream stream2({cfg.master_seed, 2 * static_cast<std::uint64_t>(i) + 1});
            fill(dist2, ys, stream2);
            y.emplace(std::move(ys));
        }

        Outcome& out = outcomes[i];
        const TestResult asym = is_two_sample(asym_spec.parameter) ? asymp_test(x, *y, asym_spec)
                                                                   : asymp_test(x, asym_spec);
        out.asymptotic_statistic = asym.statistic;
        out.asymptotic_reject = asym.p_value <= cfg.alpha;

        if (cfg.classical_comparator) {
            const TestResult classical = *cfg.classical_comparator == Comparator::ChiSquare
                                             ? chisq_var_test(x, classical_spec)
                                             : fisher_ratio_test(x, *y, classical_spec);
            out.classical_statistic = classical.statistic;
            out.classical_reject = classical.p_value <= cfg.alpha;
        }
    };

    unsigned workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    workers = static_cast<unsigned>(
        std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, cfg.replications)));

    if (workers == 1) {
        for (std::size_t i = 0; i < cfg.replications; ++i) replicate(i);
        return outcomes;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < cfg.replications; i += workers) replicate(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return outcomes;
}

SimulationReport summarize(const SimulationConfig& cfg, const std::vector<Outcome>& outcomes,
                           Focus focus) {
    SimulationReport report;
    report.replications = outcomes.size();
    const double m = static_cast<double>(outcomes.size());

    AgreementTable counts{};
    std::vector<double> statistics;
    statistics.reserve(outcomes.size());
    for (const Outcome& o : outcomes) {
        counts[o.classical_reject ? 1 : 0][o.asymptotic_reject ? 1 : 0] += 1.0;
        statistics.push_back(focus == Focus::Asymptotic ? o.asymptotic_statistic
                                                        : o.classical_statistic);
    }
    for (auto& row : counts)
        for (double& cell : row) cell /= m;

    report.rejection_rate_asymptotic = counts[0][1] + counts[1][1];
    if (cfg.classical_comparator) {
        report.rejection_rate_classical = counts[1][0] + counts[1][1];
        report.agreement_table = counts;
    }

    const double z = cfg.alpha < 1.0 ? std_normal_quantile(1.0 - cfg.alpha / 2.0) : 0.0;
    double center = 0.0;
    double scale = 1.0;
    if (focus == Focus::Classical) {
        double gaussian_variance;
        if (*cfg.classical_comparator == Comparator::ChiSquare) {
            center = static_cast<double>(cfg.n1) - 1.0;
            gaussian_variance = 2.0 * center;
        } else {
            center = 1.0;
            gaussian_variance = 2.0 / static_cast<double>(cfg.n1) + 2.0 / static_cast<double>(cfg.n2);
        }
        scale = std::sqrt(gaussian_variance);
        report.statistic_moments = moments_of(statistics, center, scale, z);
        report.classical_variance = report.statistic_moments.sd * report.statistic_moments.sd;
        report.variance_ratio = *report.classical_variance / gaussian_variance;
    } else {
        report.statistic_moments = moments_of(statistics, center, scale, z);
    }
    report.histogram = make_histogram(std::move(statistics), cfg.bins);
    return report;
}

}  // namespace

std::string_view to_string(Comparator c) {
    return c == Comparator::ChiSquare ? "chisq" : "fisher";
}

void SimulationConfig::validate() const {
    if (replications < 1) throw UsageError("at least one replication is required");
    if (n1 < 2 || n2 < 2) throw UsageError("sample sizes must be at least 2");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
    dist1.validate();
    if (dist2) dist2->validate();

    const Parameter p = test_spec.parameter;
    if (!is_two_sample(p) && dist2 && classical_comparator != Comparator::Fisher) {
        throw ArityError("parameter '" + std::string(to_string(p)) + "' takes a single sample");
    }
    if (!classical_comparator) return;
    if (*classical_comparator == Comparator::ChiSquare && p != Parameter::Var) {
        throw UsageError("the chi-square comparator needs parameter 'var'");
    }
    if (*classical_comparator == Comparator::Fisher) {
        const bool ratio = p == Parameter::RVar;
        const bool weighted_difference = p == Parameter::DVar && test_spec.reference == 0.0;
        if (!ratio && !weighted_difference) {
            throw UsageError("the Fisher comparator needs parameter 'rVar', or 'dVar' with reference 0");
        }
        if (!(fisher_reference(test_spec) > 0.0)) {
            throw DomainError("the Fisher comparator needs a positive reference ratio");
        }
    }
}

double null_reference(Parameter p, const DistributionSpec& dist1,
                      const std::optional<DistributionSpec>& dist2, double rho) {
    const TheoreticalMoments a = theoretical_moments(dist1);
    if (!is_two_sample(p)) return p == Parameter::Mean ? a.mean : a.variance;
    if (!dist2) throw ArityError("parameter '" + std::string(to_string(p)) + "' needs a second law");
    const TheoreticalMoments b = theoretical_moments(*dist2);
    switch (p) {
        case Parameter::DMean: return a.mean - rho * b.mean;
        case Parameter::DVar: return a.variance - rho * b.variance;
        case Parameter::RMean: return a.mean / b.mean;
        case Parameter::RVar: return a.variance / b.variance;
        default: break;
    }
    throw UsageError("unknown parameter");
}

SimulationReport simulate_statistic_distribution(const SimulationConfig& cfg) {
    cfg.validate();
    return summarize(cfg, run_replications(cfg), Focus::Asymptotic);
}

SimulationReport classical_statistic_distribution(const SimulationConfig& cfg) {
    cfg.validate();
    if (!cfg.classical_comparator) throw UsageError("a classical comparator is required");
    return summarize(cfg, run_replications(cfg), Focus::Classical);
}

SimulationReport estimate_type1_error(const SimulationConfig& cfg) {
    cfg.validate();
    if (!cfg.classical_comparator) throw UsageError("a classical comparator is required");
    return summarize(cfg, run_replications(cfg), Focus::Asymptotic);
}

std::vector<HistogramBin> make_histogram(std::vector<double> values, std::size_t bins) {
    if (values.empty()) return {};
    std::sort(values.begin(), values.end());
    const double lo = values.front();
    const double hi = values.back();
    if (!(hi > lo)) return {{lo, hi, values.size()}};

    if (bins == 0) {
        const double iqr = quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
        const double width = 2.0 * iqr / std::cbrt(static_cast<double>(values.size()));
        bins = width > 0.0 ? static_cast<std::size_t>(std::ceil((hi - lo) / width)) : 1;
        bins = std::clamp<std::size_t>(bins, 1, 10000);
    }
    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<HistogramBin> out(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        out[b] = {lo + width * static_cast<double>(b),
                  b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1), 0};
    }
    for (double v : values) {
        const auto b = std::min(bins - 1, static_cast<std::size_t>((v - lo) / width));
        ++out[b].count;
    }
    return out;
}

}  // namespace asymptest
