#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "asymptest/error.hpp"
#include "report.hpp"

namespace asymptest::cli {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string join(std::initializer_list<std::string_view> names) {
    std::string out;
    for (auto n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

double parse_argument_number(std::string_view text, std::string_view context) {
    try {
        return parse_number(text);
    } catch (const DataError&) {
        throw UsageError("'" + std::string(text) + "' is not a number in " + std::string(context));
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw DataError("failed writing '" + path.string() + "'");
}

// ---------------------------------------------------------------- test

struct TestOptions {
    std::string param;
    std::string alt = "two.sided";
    double ref = kUnset;
    double conf = 0.95;
    double rho = 1.0;
    std::string x;
    std::string y;
    bool classical = false;
    bool json = false;
};

void add_test_command(CLI::App& app, TestOptions& o) {
    auto* cmd = app.add_subcommand("test", "Run an asymptotic (or classical) test on one or two samples");
    cmd->add_option("--param", o.param, "mean | var | dmean | dvar | rmean | rvar")->required();
    cmd->add_option("--alt", o.alt, "two.sided | greater | less (prefixes accepted)");
    cmd->add_option("--ref", o.ref, "Reference value under H0 (default 1 for ratios, else 0)");
    cmd->add_option("--conf", o.conf, "Confidence level");
    cmd->add_option("--rho", o.rho, "Weight of the second sample for dmean / dvar");
    cmd->add_option("--x", o.x, "First sample, source:column[filtercol==value]")->required();
    cmd->add_option("--y", o.y, "Second sample, same syntax");
    cmd->add_flag("--classical", o.classical, "Run the chi-square (var) or F (rvar) test instead");
    cmd->add_flag("--json", o.json, "Print the result as JSON");
}

int run_test_command(const TestOptions& o, std::ostream& out) {
    TestSpec spec;
    spec.parameter = parse_parameter(o.param);
    spec.alternative = parse_alternative(o.alt);
    spec.conf_level = o.conf;
    spec.rho = o.rho;
    const bool ratio = spec.parameter == Parameter::RMean || spec.parameter == Parameter::RVar;
    const bool classical_var = o.classical && spec.parameter == Parameter::Var;
    spec.reference = !std::isnan(o.ref) ? o.ref : (ratio || classical_var ? 1.0 : 0.0);

    const bool two = is_two_sample(spec.parameter);
    if (two && o.y.empty()) {
        throw ArityError("parameter '" + std::string(to_string(spec.parameter)) + "' needs --y");
    }
    if (!two && !o.y.empty()) {
        throw ArityError("parameter '" + std::string(to_string(spec.parameter)) + "' takes a single sample");
    }
    if (o.classical && spec.parameter != Parameter::Var && spec.parameter != Parameter::RVar) {
        throw UsageError("--classical is available for parameters var and rvar only");
    }

    const DatasetRef xref = parse_dataset_ref(o.x);
    std::optional<DatasetRef> yref;
    if (two) yref = parse_dataset_ref(o.y);
    const Sample x = ingest(xref);
    std::optional<Sample> y;
    if (yref) y = ingest(*yref);

    TestResult result;
    if (o.classical) {
        result = spec.parameter == Parameter::Var ? chisq_var_test(x, spec) : fisher_ratio_test(x, *y, spec);
    } else {
        result = two ? asymp_test(x, *y, spec) : asymp_test(x, spec);
    }

    if (o.json) {
        out << to_json(result).dump(2) << '\n';
        return kExitOk;
    }
    TestContext ctx;
    ctx.spec = spec;
    ctx.classical = o.classical;
    ctx.n1 = x.size();
    ctx.n2 = y ? y->size() : 0;
    ctx.data_description = describe(xref) + (yref ? " and " + describe(*yref) : std::string());
    out << render_text(result, ctx);
    return kExitOk;
}

// ------------------------------------------------------------ simulate

enum class Campaign { Type1, Dist, VarRatio };

struct SimOptions {
    std::string dist1;
    std::string dist2;
    std::size_t n = 500;
    std::size_t n2 = 0;
    std::size_t m = 10000;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::string param;
    std::string alt = "two.sided";
    double ref = kUnset;
    double rho = 1.0;
    std::string comparator;
    std::size_t bins = 0;
    std::string out_dir = ".";
};

void add_sim_options(CLI::App* cmd, SimOptions& o) {
    cmd->add_option("--dist1", o.dist1, "Law of sample 1: exp:RATE, unif:A,B, norm:MU,SIGMA, chi2:NU")->required();
    cmd->add_option("--dist2", o.dist2, "Law of sample 2 (same syntax)");
    cmd->add_option("--n", o.n, "Size of sample 1");
    cmd->add_option("--n2", o.n2, "Size of sample 2 (default: --n)");
    cmd->add_option("--m", o.m, "Number of replications");
    cmd->add_option("--alpha", o.alpha, "Nominal level of the tests");
    cmd->add_option("--seed", o.seed, "Master seed (unsigned 64-bit)");
    cmd->add_option("--param", o.param, "Tested parameter");
    cmd->add_option("--alt", o.alt, "two.sided | greater | less");
    cmd->add_option("--ref", o.ref, "Reference value (default: the true value under the laws)");
    cmd->add_option("--rho", o.rho, "Weight for dmean / dvar");
    cmd->add_option("--comparator", o.comparator, "chisq | fisher");
    cmd->add_option("--bins", o.bins, "Histogram bins (0: Freedman-Diaconis)");
    cmd->add_option("--out", o.out_dir, "Output directory for report.json and histogram.csv");
}

SimulationConfig build_config(const SimOptions& o, Campaign campaign) {
    SimulationConfig cfg;
    cfg.dist1 = parse_distribution(o.dist1);
    if (!o.dist2.empty()) cfg.dist2 = parse_distribution(o.dist2);
    cfg.n1 = o.n;
    cfg.n2 = o.n2 != 0 ? o.n2 : o.n;
    cfg.replications = o.m;
    cfg.alpha = o.alpha;
    cfg.master_seed = o.seed;
    cfg.bins = o.bins;
    cfg.threads = simulation_threads();

    if (!o.comparator.empty()) {
        cfg.classical_comparator = parse_comparator(o.comparator);
    } else if (campaign != Campaign::Dist) {
        cfg.classical_comparator = cfg.dist2 ? Comparator::Fisher : Comparator::ChiSquare;
    }
    const bool fisher = cfg.classical_comparator == Comparator::Fisher;
    if (fisher && !cfg.dist2) cfg.dist2 = cfg.dist1;

    TestSpec& spec = cfg.test_spec;
    if (!o.param.empty()) {
        spec.parameter = parse_parameter(o.param);
    } else if (campaign == Campaign::Type1) {
        spec.parameter = fisher ? Parameter::DVar : Parameter::Var;
    } else if (campaign == Campaign::VarRatio) {
        spec.parameter = fisher ? Parameter::RVar : Parameter::Var;
    } else {
        spec.parameter = cfg.dist2 ? Parameter::DMean : Parameter::Mean;
    }
    if (is_two_sample(spec.parameter) && !cfg.dist2) cfg.dist2 = cfg.dist1;
    spec.alternative = parse_alternative(o.alt);
    spec.rho = o.rho;
    spec.reference = !std::isnan(o.ref) ? o.ref : null_reference(spec.parameter, cfg.dist1, cfg.dist2, spec.rho);
    return cfg;
}

int run_simulation(const SimOptions& o, Campaign campaign, std::ostream& out) {
    const SimulationConfig cfg = build_config(o, campaign);
    SimulationReport report;
    switch (campaign) {
        case Campaign::Type1: report = estimate_type1_error(cfg); break;
        case Campaign::Dist: report = simulate_statistic_distribution(cfg); break;
        case Campaign::VarRatio: report = classical_statistic_distribution(cfg); break;
    }

    const std::filesystem::path dir(o.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw DataError("cannot create '" + dir.string() + "': " + ec.message());

    nlohmann::json doc = to_json(report);
    doc["config"] = config_to_json(cfg);
    write_file(dir / "report.json", doc.dump(2) + "\n");
    write_file(dir / "histogram.csv", histogram_csv(report));

    out << render_summary(report, cfg);
    out << fmt::format("wrote {} and {}\n", (dir / "report.json").string(), (dir / "histogram.csv").string());
    return kExitOk;
}

// ---------------------------------------------------------------- dist

struct DistOptions {
    std::string family;
    double df1 = kUnset;
    double df2 = kUnset;
    double at = kUnset;
};

void add_dist_options(CLI::App* cmd, DistOptions& o) {
    cmd->add_option("--family", o.family, "normal | chi2 | f | chi2cr | fcr")->required();
    cmd->add_option("--df1", o.df1, "First degrees of freedom");
    cmd->add_option("--df2", o.df2, "Second degrees of freedom");
    cmd->add_option("--at", o.at, "Point (cdf) or probability (quantile)")->required();
}

int run_dist(const DistOptions& o, bool quantile, std::ostream& out) {
    const DistributionQuery q{parse_family(o.family), o.df1, o.df2, o.at};
    const double value = quantile ? evaluate_quantile(q) : evaluate_cdf(q);
    out << fmt::format("{:.10g}\n", value);
    return kExitOk;
}

}  // namespace

std::string_view match_choice(std::string_view text, std::initializer_list<std::string_view> names,
                              std::string_view what) {
    const std::string needle = lower(text);
    if (needle.empty()) throw UsageError("empty " + std::string(what));
    for (auto n : names) {
        if (lower(n) == needle) return n;
    }
    std::optional<std::string_view> found;
    for (auto n : names) {
        if (lower(n).rfind(needle, 0) == 0) {
            if (found) {
                throw UsageError("ambiguous " + std::string(what) + " '" + std::string(text) +
                                 "'; choose one of " + join(names));
            }
            found = n;
        }
    }
    if (!found) {
        throw UsageError("unknown " + std::string(what) + " '" + std::string(text) + "'; choose one of " +
                         join(names));
    }
    return *found;
}

Parameter parse_parameter(std::string_view text) {
    const auto c = match_choice(text, {"mean", "var", "dmean", "dvar", "rmean", "rvar"}, "parameter");
    if (c == "mean") return Parameter::Mean;
    if (c == "var") return Parameter::Var;
    if (c == "dmean") return Parameter::DMean;
    if (c == "dvar") return Parameter::DVar;
    if (c == "rmean") return Parameter::RMean;
    return Parameter::RVar;
}

Alternative parse_alternative(std::string_view text) {
    const auto c = match_choice(text, {"two.sided", "greater", "less"}, "alternative");
    if (c == "two.sided") return Alternative::TwoSided;
    return c == "greater" ? Alternative::Greater : Alternative::Less;
}

Family parse_family(std::string_view text) {
    const auto c = match_choice(text, {"normal", "chi2", "f", "chi2cr", "fcr"}, "family");
    if (c == "normal") return Family::Normal;
    if (c == "chi2") return Family::Chi2;
    if (c == "f") return Family::F;
    if (c == "chi2cr") return Family::Chi2Cr;
    return Family::FCr;
}

Comparator parse_comparator(std::string_view text) {
    const auto c = match_choice(text, {"chisq", "fisher"}, "comparator");
    return c == "chisq" ? Comparator::ChiSquare : Comparator::Fisher;
}

DistributionSpec parse_distribution(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw UsageError("law must read name:params (e.g. exp:1, unif:0,5), got '" + std::string(text) + "'");
    }
    const auto name = match_choice(text.substr(0, colon), {"exp", "unif", "norm", "chi2"}, "law");
    std::vector<double> args;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        args.push_back(parse_argument_number(rest.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    const std::size_t expected = name == "exp" || name == "chi2" ? 1 : 2;
    if (args.size() != expected) {
        throw UsageError(fmt::format("law '{}' takes {} parameter(s), got {}", name, expected, args.size()));
    }
    if (name == "exp") return DistributionSpec::exponential(args[0]);
    if (name == "chi2") return DistributionSpec::chi2(args[0]);
    if (name == "unif") return DistributionSpec::uniform(args[0], args[1]);
    return DistributionSpec::normal(args[0], args[1]);
}

std::string describe(const DatasetRef& ref) {
    std::string out = ref.source == "iris" ? ref.column : ref.source + ":" + ref.column;
    if (ref.filter) out += fmt::format("[{} == \"{}\"]", ref.filter->column, ref.filter->value);
    return out;
}

unsigned simulation_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ASYMPTEST_THREADS"); env != nullptr && *env != '\0') {
        const double cap = parse_argument_number(env, "ASYMPTEST_THREADS");
        if (!(cap >= 1.0) || cap != std::floor(cap)) {
            throw UsageError("ASYMPTEST_THREADS must be a positive integer");
        }
        n = static_cast<unsigned>(std::min<double>(n, cap));
    }
    return n;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Large-sample hypothesis tests, distribution queries and Monte Carlo campaigns", "asymptest"};
    app.require_subcommand(1);

    TestOptions test_opts;
    add_test_command(app, test_opts);

    SimOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo campaigns");
    simulate->require_subcommand(1);
    auto* type1 = simulate->add_subcommand("type1", "Type I error of the asymptotic and classical tests");
    auto* dist_campaign = simulate->add_subcommand("dist", "Distribution of the studentized statistic");
    auto* varratio = simulate->add_subcommand("varratio", "Variance of the classical statistic vs Gaussian theory");
    for (auto* cmd : {type1, dist_campaign, varratio}) add_sim_options(cmd, sim_opts);

    DistOptions dist_opts;
    auto* dist = app.add_subcommand("dist", "Evaluate a CDF or quantile");
    dist->require_subcommand(1);
    auto* cdf = dist->add_subcommand("cdf", "Cumulative distribution function at --at");
    auto* quantile = dist->add_subcommand("quantile", "Quantile at probability --at");
    for (auto* cmd : {cdf, quantile}) add_dist_options(cmd, dist_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("test")) return run_test_command(test_opts, out);
        if (type1->parsed()) return run_simulation(sim_opts, Campaign::Type1, out);
        if (dist_campaign->parsed()) return run_simulation(sim_opts, Campaign::Dist, out);
        if (varratio->parsed()) return run_simulation(sim_opts, Campaign::VarRatio, out);
        if (cdf->parsed()) return run_dist(dist_opts, false, out);
        if (quantile->parsed()) return run_dist(dist_opts, true, out);
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

}  // namespace asymptest::cli
