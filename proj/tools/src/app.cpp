#include "gsum_cli/app.hpp"

#include "gsum_cli/expr.hpp"

#include <gsum/errors.hpp>
#include <gsum/reference.hpp>
#include <gsum/rule_cache.hpp>
#include <gsum/summator.hpp>
#include <gsum/zeros.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace gsum::cli {
namespace {

using Json = nlohmann::ordered_json;

// bench hl prints '-' where the relative error is below this.
constexpr double kDashBelow = 1e-13;

struct Output {
    std::string format = "csv";
    std::string path;
};

struct Config {
    std::optional<std::string> cache_dir;
    bool no_cache = false;
    Output output;

    std::size_t n = 0;
    std::size_t n_max = 64;
    std::string expr;
    std::string side = "two-sided";
    double tol = 1e-12;
    std::vector<double> x{1, 5, 10, 20, 40, 100};
    double a = 1000;
    std::vector<unsigned> orders{1, 2, 3, 4};
    std::size_t points = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<std::filesystem::path> resolve_cache_dir(const Config& cfg)
{
    if (cfg.no_cache)
        return std::nullopt;
    if (cfg.cache_dir)
        return std::filesystem::path(*cfg.cache_dir);
    if (const char* env = std::getenv("GSUM_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "gsum";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "gsum";
    return std::nullopt;
}

RuleCache make_cache(const Config& cfg)
{
    if (auto dir = resolve_cache_dir(cfg))
        return RuleCache(*dir);
    return RuleCache();
}

// CSV helpers

std::string cell(double v)
{
    return format_real(v);
}

void csv_row(std::ostream& os, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            os << ',';
        os << cells[i];
    }
    os << '\n';
}

bool json(const Config& cfg)
{
    return cfg.output.format == "json";
}

void emit_json(std::ostream& os, const Json& j)
{
    os << j.dump(2) << '\n';
}

double relative_error(double value, double exact)
{
    return std::abs(value - exact) / std::abs(exact);
}

// commands

void cmd_rule(const Config& cfg, std::ostream& os)
{
    auto cache = make_cache(cfg);
    const auto rule = cache.get(cfg.n);
    if (json(cfg)) {
        os << rule_to_json(*rule);
        return;
    }
    csv_row(os, {"k", "node", "weight"});
    for (std::size_t k = 0; k < rule->size(); ++k)
        csv_row(os, {std::to_string(k + 1), cell(rule->nodes[k]), cell(rule->weights[k])});
}

void cmd_sum(const Config& cfg, std::ostream& os)
{
    const ExprPtr expr = parse_expr(cfg.expr);
    Summand s;
    s.g = [expr](double k) { return evaluate(*expr, k); };
    s.side = cfg.side == "positive" ? Side::positive_half : Side::two_sided_nonzero;
    s.description = to_string(*expr);

    auto cache = make_cache(cfg);
    const auto report = adaptive_sum(s, cfg.tol, cfg.n_max, cache);

    if (json(cfg)) {
        Json j;
        j["expr"] = s.description;
        j["side"] = cfg.side;
        j["tol"] = cfg.tol;
        j["value"] = report.value();
        j["n_used"] = report.n_used;
        j["status"] = to_string(report.status);
        Json history = Json::array();
        for (std::size_t i = 0; i < report.n.size(); ++i) {
            Json row;
            row["n"] = report.n[i];
            row["value"] = report.values[i];
            row["delta"] = i ? Json(report.deltas[i - 1]) : Json(nullptr);
            history.push_back(row);
        }
        j["history"] = history;
        emit_json(os, j);
        return;
    }
    csv_row(os, {"value", "n_used", "status"});
    csv_row(os, {cell(report.value()), std::to_string(report.n_used), to_string(report.status)});
    os << '\n';
    csv_row(os, {"n", "value", "delta"});
    for (std::size_t i = 0; i < report.n.size(); ++i)
        csv_row(os, {std::to_string(report.n[i]), cell(report.values[i]),
                     i ? cell(report.deltas[i - 1]) : std::string()});
}

void cmd_bench_hl(const Config& cfg, std::ostream& os)
{
    // oracles are independent; results are collected in input order
    std::vector<std::future<double>> jobs;
    for (double x : cfg.x)
        jobs.push_back(std::async(std::launch::async, [x] { return hl_oracle(x); }));
    std::vector<double> exact;
    for (auto& job : jobs)
        exact.push_back(job.get());

    auto cache = make_cache(cfg);
    std::vector<std::vector<double>> err;  // [n-2][x]
    for (std::size_t n = 2; n <= cfg.n_max; ++n) {
        const auto rule = cache.get(n);
        std::vector<double> row;
        for (std::size_t i = 0; i < cfg.x.size(); ++i) {
            const double x = cfg.x[i];
            const Summand s{[x](double k) { return std::sin(x / k) / k; }, Side::positive_half, ""};
            row.push_back(relative_error(gauss_sum(*rule, s), exact[i]));
        }
        err.push_back(std::move(row));
    }

    if (json(cfg)) {
        Json j;
        j["x"] = cfg.x;
        j["oracle"] = exact;
        j["dash_below"] = kDashBelow;
        Json rows = Json::array();
        for (std::size_t r = 0; r < err.size(); ++r)
            rows.push_back(Json{{"n", r + 2}, {"rel_err", err[r]}});
        j["rows"] = rows;
        emit_json(os, j);
        return;
    }
    std::vector<std::string> header{"n"};
    for (double x : cfg.x)
        header.push_back("x=" + format_real(x));
    csv_row(os, header);
    for (std::size_t r = 0; r < err.size(); ++r) {
        std::vector<std::string> cells{std::to_string(r + 2)};
        for (double e : err[r])
            cells.push_back(e < kDashBelow ? "-" : cell(e));
        csv_row(os, cells);
    }
}

void cmd_bench_coth(const Config& cfg, std::ostream& os)
{
    const double a = cfg.a;
    const double exact = coth_closed_form(a);
    const Summand s{[a](double k) { return 1.0 / (a * a + k * k); }, Side::two_sided_nonzero, ""};
    auto cache = make_cache(cfg);

    struct Row {
        std::size_t n;
        double value, rel_err;
        ErrorEstimate estimate;
    };
    std::vector<Row> rows;
    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
        const double v = 1.0 / (a * a) + gauss_sum(*cache.get(n), s);
        rows.push_back({n, v, relative_error(v, exact), apriori_error_coth(n, a)});
    }

    if (json(cfg)) {
        Json j;
        j["a"] = a;
        j["exact"] = exact;
        Json out = Json::array();
        for (const auto& r : rows)
            out.push_back(Json{{"n", r.n},
                               {"value", r.value},
                               {"rel_err", r.rel_err},
                               {"apriori", r.estimate.value},
                               {"advisory", r.estimate.advisory}});
        j["rows"] = out;
        emit_json(os, j);
        return;
    }
    csv_row(os, {"n", "value", "rel_err", "apriori", "advisory"});
    for (const auto& r : rows)
        csv_row(os, {std::to_string(r.n), cell(r.value), cell(r.rel_err), cell(r.estimate.value),
                     r.estimate.advisory ? "1" : "0"});
}

std::vector<std::size_t> grid(std::size_t n_max, std::size_t points)
{
    std::vector<std::size_t> g;
    if (points == 0 || points >= n_max) {
        for (std::size_t n = 1; n <= n_max; ++n)
            g.push_back(n);
        return g;
    }
    std::set<std::size_t> unique;
    const double top = std::log(static_cast<double>(n_max));
    for (std::size_t i = 0; i < points; ++i) {
        const double t = points == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        unique.insert(static_cast<std::size_t>(std::llround(std::exp(t * top))));
    }
    return {unique.begin(), unique.end()};
}

void cmd_bench_richardson(const Config& cfg, std::ostream& os)
{
    const double a = cfg.a;
    const double exact = coth_closed_form(a);
    const auto ns = grid(cfg.n_max, cfg.points);
    const unsigned top = *std::max_element(cfg.orders.begin(), cfg.orders.end());

    std::set<std::size_t> needed;
    for (std::size_t n : ns)
        for (std::size_t k = 0; k <= top; ++k)
            needed.insert(n + k);
    const std::vector<std::size_t> indices(needed.begin(), needed.end());
    const auto seq = partial_sums_G(a, indices);

    const Summand s{[a](double k) { return 1.0 / (a * a + k * k); }, Side::two_sided_nonzero, ""};
    auto cache = make_cache(cfg);

    struct Row {
        std::size_t n;
        std::optional<double> gauss;
        std::vector<double> richardson;
    };
    std::vector<Row> rows;
    for (std::size_t n : ns) {
        Row r{n, std::nullopt, {}};
        if (n <= kMaxRuleSize)
            r.gauss = relative_error(1.0 / (a * a) + gauss_sum(*cache.get(n), s), exact);
        for (unsigned N : cfg.orders)
            r.richardson.push_back(relative_error(richardson(seq, N, n), exact));
        rows.push_back(std::move(r));
    }

    if (json(cfg)) {
        Json j;
        j["a"] = a;
        j["exact"] = exact;
        j["N"] = cfg.orders;
        Json out = Json::array();
        for (const auto& r : rows)
            out.push_back(Json{{"n", r.n},
                               {"gauss", r.gauss ? Json(*r.gauss) : Json(nullptr)},
                               {"richardson", r.richardson}});
        j["rows"] = out;
        emit_json(os, j);
        return;
    }
    std::vector<std::string> header{"n", "gauss"};
    for (unsigned N : cfg.orders)
        header.push_back("R" + std::to_string(N));
    csv_row(os, header);
    for (const auto& r : rows) {
        std::vector<std::string> cells{std::to_string(r.n), r.gauss ? cell(*r.gauss) : std::string()};
        for (double e : r.richardson)
            cells.push_back(cell(e));
        csv_row(os, cells);
    }
}

void cmd_zeros(const Config& cfg, std::ostream& os)
{
    auto cache = make_cache(cfg);
    const auto zs = zero_set(*cache.get(cfg.n));
    const auto density = density_data(zs);
    const std::optional<double> tail =
        zs.n >= 16 ? std::optional<double>(tail_law_check(zs)) : std::nullopt;

    if (json(cfg)) {
        Json j;
        j["n"] = zs.n;
        j["nu"] = zs.nu;
        j["sigma_convention"] = "sigma = j/nu; sigma_full = 2j/nu";
        j["tail_law_deviation"] = tail ? Json(*tail) : Json(nullptr);
        Json rows = Json::array();
        for (std::size_t j0 = 0; j0 < zs.n; ++j0) {
            Json row;
            row["j"] = j0 + 1;
            row["x"] = zs.x[j0];
            row["tau"] = zs.tau[j0];
            row["sigma"] = zs.sigma[j0];
            row["sigma_full"] = 2.0 * zs.sigma[j0];
            row["sigma_law"] = asymptotic_sigma(zs.tau[j0]);
            row["density"] = j0 < density.size() ? Json(density[j0].density) : Json(nullptr);
            rows.push_back(row);
        }
        j["rows"] = rows;
        emit_json(os, j);
        return;
    }
    csv_row(os, {"j", "x", "tau", "sigma", "sigma_full", "sigma_law", "density"});
    for (std::size_t j0 = 0; j0 < zs.n; ++j0)
        csv_row(os, {std::to_string(j0 + 1), cell(zs.x[j0]), cell(zs.tau[j0]), cell(zs.sigma[j0]),
                     cell(2.0 * zs.sigma[j0]), cell(asymptotic_sigma(zs.tau[j0])),
                     j0 < density.size() ? cell(density[j0].density) : std::string()});
}

void add_output_options(CLI::App* cmd, Output& output)
{
    cmd->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", output.path, "Write to PATH instead of stdout");
}

void show_syntax_error(const SyntaxError& e, const std::string& text, std::ostream& err)
{
    err << "expression error: " << e.what() << '\n' << "  " << text << '\n';
    err << "  " << std::string(e.offset() - 1, ' ') << "^\n";
}

} // namespace

std::string format_real(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Gaussian summation of slowly converging series"};
    app.name("gsum");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--cache-dir", cfg.cache_dir,
                   "Rule cache directory (default $GSUM_CACHE_DIR, then ~/.cache/gsum)");
    app.add_flag("--no-cache", cfg.no_cache, "Do not read or write cached rules");

    auto* rule = app.add_subcommand("rule", "Print nodes and weights of the n-point rule");
    rule->add_option("--n", cfg.n, "Rule size")->required()->check(CLI::Range(1, 256));
    add_output_options(rule, cfg.output);

    auto* sum = app.add_subcommand(
        "sum", "Adaptive Gaussian summation of g(k) given as an expression in k.\n"
               "Operators + - * / ^ (right associative, binds tighter than unary minus),\n"
               "constants pi, functions sin cos tan exp log sqrt sinh cosh abs");
    sum->add_option("--expr", cfg.expr, "Summand g(k)")->required();
    sum->add_option("--side", cfg.side, "positive: sum over k >= 1; two-sided: k != 0")
        ->check(CLI::IsMember({"positive", "two-sided"}))
        ->capture_default_str();
    sum->add_option("--tol", cfg.tol, "Relative tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sum->add_option("--n-max", cfg.n_max, "Largest rule size")
        ->check(CLI::Range(2, 256))
        ->capture_default_str();
    add_output_options(sum, cfg.output);

    auto* bench = app.add_subcommand("bench", "Reproduce benchmark tables");
    bench->require_subcommand(1);

    auto* hl = bench->add_subcommand("hl", "Relative error table for sum sin(x/k)/k");
    hl->add_option("--x", cfg.x, "Comma-separated x values in (0, 200]")
        ->delimiter(',')
        ->check(CLI::Range(1e-300, 200.0))
        ->capture_default_str();
    hl->add_option("--n-max", cfg.n_max, "Largest rule size")
        ->check(CLI::Range(2, 256))
        ->capture_default_str();
    add_output_options(hl, cfg.output);

    auto* coth = bench->add_subcommand("coth", "Relative error for sum 1/(a^2+k^2) and its estimate");
    coth->add_option("--a", cfg.a, "Scale a > 0")->check(CLI::PositiveNumber)->capture_default_str();
    coth->add_option("--n-max", cfg.n_max, "Largest rule size")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    add_output_options(coth, cfg.output);

    auto* rich = bench->add_subcommand("richardson", "Richardson extrapolation vs Gaussian summation");
    rich->add_option("--a", cfg.a, "Scale a > 0")->check(CLI::PositiveNumber)->capture_default_str();
    rich->add_option("--N", cfg.orders, "Comma-separated extrapolation orders")
        ->delimiter(',')
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    rich->add_option("--n-max", cfg.n_max, "Largest partial-sum index")
        ->check(CLI::Range(1, 10000000))
        ->capture_default_str();
    rich->add_option("--points", cfg.points, "Log-spaced grid of this many n (0: every n)")
        ->capture_default_str();
    add_output_options(rich, cfg.output);

    auto* zeros = app.add_subcommand("zeros", "Zeros of the rule polynomials and their density");
    zeros->add_option("--n", cfg.n, "Rule size")->required()->check(CLI::Range(2, 256));
    add_output_options(zeros, cfg.output);

    std::vector<const char*> argv{"gsum"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: ";
        app.exit(e, out, err);
        return exit_usage;
    }

    std::ostringstream buffer;
    try {
        if (rule->parsed())
            cmd_rule(cfg, buffer);
        else if (sum->parsed())
            cmd_sum(cfg, buffer);
        else if (hl->parsed())
            cmd_bench_hl(cfg, buffer);
        else if (coth->parsed())
            cmd_bench_coth(cfg, buffer);
        else if (rich->parsed())
            cmd_bench_richardson(cfg, buffer);
        else
            cmd_zeros(cfg, buffer);
    } catch (const SyntaxError& e) {
        show_syntax_error(e, cfg.expr, err);
        return exit_usage;
    } catch (const EvalError& e) {
        err << "numerical failure: " << e.what() << " (k = " << format_real(e.k()) << ")\n";
        return exit_numerical;
    } catch (const EvaluationError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }

    if (cfg.output.path.empty()) {
        out << buffer.str();
        return exit_ok;
    }
    std::ofstream file(cfg.output.path, std::ios::binary | std::ios::trunc);
    file << buffer.str();
    if (!file) {
        err << "usage error: cannot write " << cfg.output.path << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace gsum::cli
