#ifndef DEGEN_CLI_HPP
#define DEGEN_CLI_HPP

#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "degen/hyperbolic.hpp"
#include "degen/identity_suite.hpp"
#include "degen/integrand_parser.hpp"
#include "degen/json.hpp"
#include "degen/padic.hpp"
#include "degen/special_numbers.hpp"

namespace degen::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr unsigned default_order = 16;
inline constexpr unsigned max_order = 24;
inline constexpr unsigned max_level = 12;

/// Environment variable that overrides the default truncation order.
inline constexpr const char* order_env = "DEGEN_ORDER";

enum class Format { text, json, csv };

/// Raised for semantically invalid flag combinations; maps to exit status 2.
class usage_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline unsigned env_default_order() {
    const char* v = std::getenv(order_env);
    if (v == nullptr || *v == '\0') return default_order;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0 || n > static_cast<long>(max_order))
        throw usage_error(std::string(order_env) + " must be an integer in [0, 24]");
    return static_cast<unsigned>(n);
}

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw usage_error("unknown format '" + s + "'");
}

inline std::optional<Rational> parse_lambda_flag(const std::string& s) {
    if (s == "symbolic") return std::nullopt;
    return parse_rational(s);
}

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace detail {

inline void print_values(std::ostream& out, Format format, const std::string& kind,
                         const std::vector<LambdaPoly>& values, bool symbolic) {
    switch (format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& v : values) arr.push_back(to_string(v));
        out << json{{"kind", kind}, {"max_index", values.size() - 1}, {"values", arr}}.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            out << n << "," << (symbolic && !values[n].is_constant() ? csv_quote(to_string(values[n]))
                                                                     : to_string(values[n]))
                << "\n";
        break;
    case Format::text:
        for (std::size_t n = 0; n < values.size(); ++n) out << n << "\t" << to_string(values[n]) << "\n";
        break;
    }
}

inline std::vector<LambdaPoly> specialize(std::vector<LambdaPoly> values, const std::optional<Rational>& lambda) {
    if (lambda)
        for (auto& v : values) v = LambdaPoly(lp_eval(v, *lambda));
    return values;
}

} // namespace detail

struct NumbersOptions {
    std::string kind;
    unsigned max = default_order;
    std::string lambda = "symbolic";
    std::string format = "text";
};

inline int run_numbers(const NumbersOptions& o, std::ostream& out) {
    if (o.max > max_order) throw usage_error("--max must be in [0, 24]");
    NumberKind kind = parse_number_kind(o.kind);
    Format format = parse_format(o.format);
    auto lambda = parse_lambda_flag(o.lambda);
    NumberTable t = number_table(kind, o.max);
    std::vector<LambdaPoly> values;
    for (std::size_t n = 0; n <= o.max; ++n) values.push_back(t.as_poly(n));
    if (format == Format::json && !lambda) {
        out << table_json(t).dump(2) << "\n";
        return exit_ok;
    }
    detail::print_values(out, format, o.kind, detail::specialize(std::move(values), lambda), !lambda);
    return exit_ok;
}

struct SeriesOptions {
    std::string function;
    std::string x = "1";
    unsigned order = default_order;
    std::string lambda = "symbolic";
    std::string format = "text";
};

/// Prints EGF coefficients of a hyperbolic function, the degenerate exponential
/// ("degenerate-exp") or (1/lambda) log(1 + lambda a) ("log1p-over-lambda").
inline int run_series(const SeriesOptions& o, std::ostream& out) {
    if (o.order > max_order) throw usage_error("--order must be in [0, 24]");
    Format format = parse_format(o.format);
    auto lambda = parse_lambda_flag(o.lambda);
    Rational x = parse_rational(o.x);

    std::vector<LambdaPoly> egf;
    if (o.function == "degenerate-exp") {
        egf = egf_coefficients(degenerate_exp_series(x, o.order));
    } else if (o.function == "log1p-over-lambda") {
        if (o.order < 1) throw usage_error("log1p-over-lambda needs --order >= 1");
        egf = egf_coefficients(log1p_over_lambda_series(o.order));
    } else {
        HyperbolicSeries h = hyperbolic_series(parse_hyperbolic_kind(o.function), x, o.order);
        if (format == Format::json && !lambda) {
            out << hyperbolic_json(h).dump(2) << "\n";
            return exit_ok;
        }
        egf = h.egf();
    }
    detail::print_values(out, format, o.function, detail::specialize(std::move(egf), lambda), !lambda);
    return exit_ok;
}

struct VerifyOptions {
    unsigned order = default_order;
    std::string x = "1/2";
    std::string y = "1/3";
    std::string format = "text";
};

inline int run_verify(const VerifyOptions& o, std::ostream& out) {
    if (o.order > max_order) throw usage_error("--order must be in [0, 24]");
    Format format = parse_format(o.format);
    if (format == Format::csv) throw usage_error("verify supports text and json output");
    SuiteResult result = run_all(o.order, {{parse_rational(o.x), parse_rational(o.y)}});
    if (format == Format::json) {
        out << reports_json(result.reports).dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& r : result.reports) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (order " << r.order << ")";
            if (!r.passed)
                out << " first failure at index " << *r.first_failure_index << ": " << to_string(*r.lhs_coeff)
                    << " != " << to_string(*r.rhs_coeff);
            out << "\n";
            passed += r.passed;
        }
        out << passed << "/" << result.reports.size() << " identities hold\n";
    }
    return result.all_passed() ? exit_ok : exit_verification_failed;
}

struct IntegrateOptions {
    std::string measure = "both";
    std::int64_t prime = 0;
    std::vector<unsigned> levels;
    std::string integrand;
    unsigned precision = 32;
    std::string format = "text";
};

inline int run_integrate(const IntegrateOptions& o, std::ostream& out) {
    Format format = parse_format(o.format);
    for (std::size_t i = 0; i < o.levels.size(); ++i) {
        if (o.levels[i] < 1 || o.levels[i] > max_level) throw usage_error("levels must lie in [1, 12]");
        if (i > 0 && o.levels[i] <= o.levels[i - 1]) throw usage_error("levels must be strictly ascending");
    }
    PadicContext ctx(o.prime, o.precision);
    IntegrandSpec f = parse_integrand(o.integrand);
    std::vector<Measure> measures;
    if (o.measure == "both")
        measures = {Measure::volkenborn, Measure::fermionic};
    else
        measures = {parse_measure(o.measure)};

    std::vector<ConvergenceReport> reports;
    for (Measure m : measures) reports.push_back(integrate_report(f, m, ctx, o.levels));

    switch (format) {
    case Format::json:
        if (reports.size() == 1) {
            out << convergence_json(reports.front()).dump(2) << "\n";
        } else {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(convergence_json(r));
            out << arr.dump(2) << "\n";
        }
        break;
    case Format::csv:
        out << "measure,N,sum,distance\n";
        for (const auto& r : reports)
            for (const auto& row : r.rows)
                out << to_string(r.measure) << "," << row.level << "," << to_string(row.sum) << ","
                    << distance_string(row.distance_valuation, r.prime) << "\n";
        break;
    case Format::text:
        for (const auto& r : reports) {
            out << to_string(r.measure) << " integral of " << to_string(r.integrand) << " over Z_" << r.prime
                << ", exact value " << to_string(r.exact) << "\n";
            out << "N\tsum\tdistance\n";
            for (const auto& row : r.rows)
                out << row.level << "\t" << to_string(row.sum) << "\t"
                    << distance_string(row.distance_valuation, r.prime) << "\n";
        }
        break;
    }
    return exit_ok;
}

/// Runs the command line in `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when verification
/// fails, 2 on usage or parse errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degenerate Bernoulli/Euler numbers, degenerate hyperbolic series and p-adic Riemann sums", "degen"};
    app.require_subcommand(1);

    NumbersOptions numbers;
    SeriesOptions series;
    VerifyOptions verify;
    IntegrateOptions integrate;
    try {
        unsigned order = env_default_order();
        numbers.max = order;
        series.order = order;
        verify.order = order;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto* numbers_cmd = app.add_subcommand("numbers", "Print a table of special numbers");
    numbers_cmd->add_option("--kind", numbers.kind, "Number family")
        ->required()
        ->check(CLI::IsMember({"degenerate-bernoulli", "degenerate-euler", "cauchy", "bernoulli", "euler"}));
    numbers_cmd->add_option("--max", numbers.max, "Largest index")->check(CLI::Range(0u, max_order));
    numbers_cmd->add_option("--lambda", numbers.lambda, "'symbolic' or a rational value for lambda");
    numbers_cmd->add_option("--format", numbers.format)->check(CLI::IsMember(formats));

    auto* series_cmd = app.add_subcommand("series", "Print EGF coefficients of a series in a");
    series_cmd->add_option("--function", series.function, "Series to expand")
        ->required()
        ->check(CLI::IsMember({"cosh", "sinh", "tanh-half", "coth-half-scaled", "degenerate-exp",
                               "log1p-over-lambda"}));
    series_cmd->add_option("--x", series.x, "Rational argument for cosh, sinh and degenerate-exp");
    series_cmd->add_option("--order", series.order, "Truncation order")->check(CLI::Range(0u, max_order));
    series_cmd->add_option("--lambda", series.lambda, "'symbolic' or a rational value for lambda");
    series_cmd->add_option("--format", series.format)->check(CLI::IsMember(formats));

    auto* verify_cmd = app.add_subcommand("verify", "Check every identity exactly in lambda");
    verify_cmd->add_option("--order", verify.order, "Truncation order")->check(CLI::Range(0u, max_order));
    verify_cmd->add_option("--x", verify.x, "First rational sample");
    verify_cmd->add_option("--y", verify.y, "Second rational sample");
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

    auto* integrate_cmd = app.add_subcommand("integrate", "Finite-level p-adic Riemann sums of a polynomial");
    integrate_cmd->add_option("--measure", integrate.measure)
        ->check(CLI::IsMember({"volkenborn", "fermionic", "both"}));
    integrate_cmd->add_option("--prime", integrate.prime, "Odd prime p")->required();
    integrate_cmd->add_option("--levels", integrate.levels, "Ascending levels N, comma separated")
        ->required()
        ->delimiter(',');
    integrate_cmd->add_option("--integrand", integrate.integrand, "poly:... or ff:n=<int>[,lambda=<rational>]")
        ->required();
    integrate_cmd->add_option("--precision", integrate.precision, "p-adic digits kept")
        ->check(CLI::Range(1u, 4096u));
    integrate_cmd->add_option("--format", integrate.format)->check(CLI::IsMember(formats));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back(); // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*numbers_cmd) return run_numbers(numbers, out);
        if (*series_cmd) return run_series(series, out);
        if (*verify_cmd) return run_verify(verify, out);
        if (*integrate_cmd) return run_integrate(integrate, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace degen::cli

#endif // DEGEN_CLI_HPP
