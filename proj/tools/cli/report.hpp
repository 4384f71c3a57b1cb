#pragma once

#include <string>

#include <json.hpp>

#include "asymptest/hypothesis.hpp"
#include "asymptest/montecarlo.hpp"

namespace asymptest::cli {

/// What was tested, for the text report.
struct TestContext {
    TestSpec spec;
    std::string data_description;
    bool classical = false;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

/// htest-style block: title, data line, statistic and p-value, alternative,
/// confidence interval, estimate.
[[nodiscard]] std::string render_text(const TestResult& r, const TestContext& ctx);

/// Non-finite doubles are written as the strings "inf", "-inf" and "nan".
[[nodiscard]] nlohmann::json encode_double(double v);
[[nodiscard]] double decode_double(const nlohmann::json& j);

[[nodiscard]] nlohmann::json to_json(const TestResult& r);
[[nodiscard]] TestResult test_result_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json to_json(const SimulationReport& report);
[[nodiscard]] nlohmann::json config_to_json(const SimulationConfig& cfg);

/// Header "bin_left,bin_right,count" followed by one line per bin.
[[nodiscard]] std::string histogram_csv(const SimulationReport& report);

/// Human-readable summary printed by the simulate subcommands.
[[nodiscard]] std::string render_summary(const SimulationReport& report, const SimulationConfig& cfg);

}  // namespace asymptest::cli
