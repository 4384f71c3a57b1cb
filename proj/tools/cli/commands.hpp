#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "asymptest/distributions.hpp"
#include "asymptest/hypothesis.hpp"
#include "asymptest/montecarlo.hpp"
#include "asymptest/rng.hpp"
#include "dataset.hpp"

namespace asymptest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

/// Case-insensitive choice among `names`: an exact match wins, otherwise
/// `text` must be a prefix of exactly one name. Throws UsageError.
[[nodiscard]] std::string_view match_choice(std::string_view text, std::initializer_list<std::string_view> names,
                                            std::string_view what);

[[nodiscard]] Parameter parse_parameter(std::string_view text);
[[nodiscard]] Alternative parse_alternative(std::string_view text);
[[nodiscard]] Family parse_family(std::string_view text);
[[nodiscard]] Comparator parse_comparator(std::string_view text);

/// "exp:<rate>", "unif:<a>,<b>", "norm:<mu>,<sigma>" or "chi2:<nu>".
[[nodiscard]] DistributionSpec parse_distribution(std::string_view text);

/// Display form of a dataset reference, e.g. Petal.Width[Species == "setosa"].
[[nodiscard]] std::string describe(const DatasetRef& ref);

/// Worker count for simulations: hardware concurrency, capped by the
/// ASYMPTEST_THREADS environment variable when set.
[[nodiscard]] unsigned simulation_threads();

/// Entry point; `args` excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymptest::cli
