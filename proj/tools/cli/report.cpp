#include "report.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "asymptest/error.hpp"

namespace asymptest::cli {

namespace {

std::string format_bound(double v) {
    if (std::isinf(v)) return v < 0 ? "-Inf" : "Inf";
    return fmt::format("{:.7g}", v);
}

std::string alternative_sentence(Alternative a) {
    switch (a) {
        case Alternative::Less: return "less than";
        case Alternative::Greater: return "greater than";
        case Alternative::TwoSided: return "not equal to";
    }
    return "not equal to";
}

std::string estimate_label(const TestContext& ctx) {
    if (ctx.classical) return ctx.spec.parameter == Parameter::Var ? "variance" : "ratio of variances";
    return parameter_label(ctx.spec.parameter, ctx.spec.rho);
}

std::string p_value_text(double p) {
    // Same display floor as R's format.pval (machine epsilon).
    if (p < 2.2e-16) return "p-value < 2.2e-16";
    return fmt::format("p-value = {:.4g}", p);
}

}  // namespace

std::string render_text(const TestResult& r, const TestContext& ctx) {
    std::string out;
    out += fmt::format("\n\t{}\n\n", r.method);
    out += fmt::format("data:  {}\n", ctx.data_description);

    if (ctx.classical && ctx.spec.parameter == Parameter::Var) {
        out += fmt::format("X-squared = {:.4f}, df = {}, {}\n", r.statistic, ctx.n1 - 1, p_value_text(r.p_value));
    } else if (ctx.classical) {
        out += fmt::format("F = {:.4f}, num df = {}, denom df = {}, {}\n", r.statistic, ctx.n1 - 1, ctx.n2 - 1,
                           p_value_text(r.p_value));
    } else {
        out += fmt::format("statistic = {:.4f}, {}\n", r.statistic, p_value_text(r.p_value));
    }

    const std::string label = estimate_label(ctx);
    const std::string true_label = ctx.classical && ctx.spec.parameter == Parameter::Var ? "variance" : label;
    out += fmt::format("alternative hypothesis: true {} is {} {:.7g}\n", true_label,
                       alternative_sentence(ctx.spec.alternative), ctx.spec.reference);
    out += fmt::format("{:g} percent confidence interval:\n", 100.0 * ctx.spec.conf_level);
    out += fmt::format(" {} {}\n", format_bound(r.ci_lower), format_bound(r.ci_upper));
    out += fmt::format("sample estimates:\n{}\n{:.7g}\n", label, r.estimate);
    if (r.small_sample_warning) {
        out += fmt::format("warning: fewer than {} observations; the normal approximation may be poor\n",
                           kSmallSampleThreshold);
    }
    return out;
}

nlohmann::json encode_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    return v;
}

double decode_double(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw UsageError("expected a number or \"inf\"/\"-inf\"/\"nan\" in JSON");
}

nlohmann::json to_json(const TestResult& r) {
    return {
        {"statistic", encode_double(r.statistic)},
        {"p_value", encode_double(r.p_value)},
        {"ci_lower", encode_double(r.ci_lower)},
        {"ci_upper", encode_double(r.ci_upper)},
        {"estimate", encode_double(r.estimate)},
        {"std_err", encode_double(r.std_err)},
        {"method", r.method},
        {"small_sample_warning", r.small_sample_warning},
    };
}

TestResult test_result_from_json(const nlohmann::json& j) {
    TestResult r;
    r.statistic = decode_double(j.at("statistic"));
    r.p_value = decode_double(j.at("p_value"));
    r.ci_lower = decode_double(j.at("ci_lower"));
    r.ci_upper = decode_double(j.at("ci_upper"));
    r.estimate = decode_double(j.at("estimate"));
    r.std_err = decode_double(j.at("std_err"));
    r.method = j.at("method").get<std::string>();
    r.small_sample_warning = j.at("small_sample_warning").get<bool>();
    return r;
}

nlohmann::json config_to_json(const SimulationConfig& cfg) {
    nlohmann::json j = {
        {"dist1", cfg.dist1.describe()},
        {"dist2", cfg.dist2 ? nlohmann::json(cfg.dist2->describe()) : nlohmann::json(nullptr)},
        {"n1", cfg.n1},
        {"n2", cfg.n2},
        {"replications", cfg.replications},
        {"alpha", cfg.alpha},
        {"parameter", std::string(to_string(cfg.test_spec.parameter))},
        {"alternative", std::string(to_string(cfg.test_spec.alternative))},
        {"reference", encode_double(cfg.test_spec.reference)},
        {"rho", cfg.test_spec.rho},
        {"master_seed", cfg.master_seed},
        {"comparator", cfg.classical_comparator
                           ? nlohmann::json(std::string(to_string(*cfg.classical_comparator)))
                           : nlohmann::json(nullptr)},
    };
    return j;
}

nlohmann::json to_json(const SimulationReport& report) {
    nlohmann::json j;
    j["replications"] = report.replications;
    j["rejection_rate_asymptotic"] = report.rejection_rate_asymptotic;
    j["rejection_rate_classical"] =
        report.rejection_rate_classical ? nlohmann::json(*report.rejection_rate_classical) : nlohmann::json(nullptr);
    if (report.agreement_table) {
        const auto& t = *report.agreement_table;
        j["agreement_table"] = {{t[0][0], t[0][1]}, {t[1][0], t[1][1]}};
    } else {
        j["agreement_table"] = nullptr;
    }
    const auto& m = report.statistic_moments;
    j["statistic_moments"] = {{"mean", encode_double(m.mean)},
                              {"sd", encode_double(m.sd)},
                              {"skewness", encode_double(m.skewness)},
                              {"fraction_beyond", m.fraction_beyond}};
    j["classical_variance"] =
        report.classical_variance ? encode_double(*report.classical_variance) : nlohmann::json(nullptr);
    j["variance_ratio"] = report.variance_ratio ? encode_double(*report.variance_ratio) : nlohmann::json(nullptr);
    nlohmann::json bins = nlohmann::json::array();
    for (const auto& b : report.histogram) {
        bins.push_back({{"left", b.left}, {"right", b.right}, {"count", b.count}});
    }
    j["histogram"] = std::move(bins);
    return j;
}

std::string histogram_csv(const SimulationReport& report) {
    std::string out = "bin_left,bin_right,count\n";
    for (const auto& b : report.histogram) {
        out += fmt::format("{:.17g},{:.17g},{}\n", b.left, b.right, b.count);
    }
    return out;
}

std::string render_summary(const SimulationReport& report, const SimulationConfig& cfg) {
    std::string out;
    out += fmt::format("replications            {}\n", report.replications);
    out += fmt::format("law(s)                  {}{}\n", cfg.dist1.describe(),
                       cfg.dist2 ? " / " + cfg.dist2->describe() : std::string());
    out += fmt::format("sample size(s)          {}{}\n", cfg.n1,
                       cfg.dist2 || is_two_sample(cfg.test_spec.parameter) ? fmt::format(" / {}", cfg.n2)
                                                                           : std::string());
    out += fmt::format("parameter               {} ({}, reference {:.7g})\n", to_string(cfg.test_spec.parameter),
                       to_string(cfg.test_spec.alternative), cfg.test_spec.reference);
    out += fmt::format("asymptotic rejection    {:.4f}\n", report.rejection_rate_asymptotic);
    if (report.rejection_rate_classical) {
        out += fmt::format("{:<24}{:.4f}\n", fmt::format("{} rejection", to_string(*cfg.classical_comparator)),
                           *report.rejection_rate_classical);
    }
    if (report.agreement_table) {
        const auto& t = *report.agreement_table;
        out += "agreement (rows classical, cols asymptotic; accept / reject H1)\n";
        out += fmt::format("    {:.4f}  {:.4f}\n    {:.4f}  {:.4f}\n", t[0][0], t[0][1], t[1][0], t[1][1]);
    }
    const auto& m = report.statistic_moments;
    out += fmt::format("statistic mean / sd     {:.4f} / {:.4f}\n", m.mean, m.sd);
    out += fmt::format("statistic skewness      {:.4f}\n", m.skewness);
    out += fmt::format("fraction beyond z       {:.4f}\n", m.fraction_beyond);
    if (report.variance_ratio) {
        out += fmt::format("classical variance      {:.6g}\n", *report.classical_variance);
        out += fmt::format("variance ratio          {:.4f}\n", *report.variance_ratio);
    }
    return out;
}

}  // namespace asymptest::cli
