#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "config_file.hpp"
#include "mlpoly/mlpoly.hpp"

namespace mlpoly::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

/// Bad flag values or combinations; maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    SeriesConfig series;
    std::string format = "csv";
    std::uint64_t seed = 42;
    int n_max = 10;
};

template <class T>
T parse_value(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    T v{};
    in >> v;
    if (!in || !(in >> std::ws).eof()) throw UsageError("config key '" + key + "': cannot parse '" + text + "'");
    return v;
}

void apply_config(const ConfigMap& cfg, Settings& s) {
    for (const auto& [key, value] : cfg) {
        if (key == "max_terms") {
            s.series.max_terms = parse_value<std::size_t>(key, value);
        } else if (key == "stop_tol") {
            s.series.stop_tol = parse_value<double>(key, value);
        } else if (key == "accept_rel") {
            s.series.accept_rel = parse_value<double>(key, value);
        } else if (key == "accept_abs") {
            s.series.accept_abs = parse_value<double>(key, value);
        } else if (key == "format") {
            s.format = value;
        } else if (key == "seed") {
            s.seed = parse_value<std::uint64_t>(key, value);
        } else if (key == "n_max") {
            s.n_max = parse_value<int>(key, value);
        } else {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
    if (s.format != "csv" && s.format != "json") throw UsageError("config key 'format' must be csv or json");
}

// ---------------------------------------------------------------------------
// Output records

using Cell = std::variant<double, long long, std::string>;

struct Record {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool single = false;  ///< JSON data is one object rather than an array
};

std::string csv_field(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

ordered_json json_field(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        return round_output(*d);
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

std::string render(const Record& r, const std::string& format) {
    if (format == "json") {
        ordered_json meta = ordered_json::object();
        for (const auto& [k, v] : r.meta) meta[k] = v;
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.rows) {
            ordered_json obj = ordered_json::object();
            for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = json_field(row[i]);
            rows.push_back(std::move(obj));
        }
        ordered_json data = (r.single && rows.size() == 1) ? rows[0] : rows;
        return ordered_json{{"meta", meta}, {"data", data}}.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < r.columns.size(); ++i) out += (i ? "," : "") + r.columns[i];
    out += '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
        out += '\n';
    }
    return out;
}

std::string render(const FracPoly& p, const std::vector<std::pair<std::string, std::string>>& meta,
                   const std::string& format) {
    if (format == "json") {
        ordered_json m = ordered_json::object();
        for (const auto& [k, v] : meta) m[k] = v;
        return ordered_json{{"meta", m}, {"data", ordered_json::parse(to_json(p))}}.dump(2) + "\n";
    }
    Record r;
    r.columns = {"coefficient", "exponent"};
    for (const Monomial& t : p.terms()) r.rows.push_back({t.coeff, t.exponent});
    return render(r, format);
}

std::string render(SolutionProfile profile, const std::string& format) {
    return format == "json" ? to_json(profile) : to_csv(profile);
}

// ---------------------------------------------------------------------------
// Flag checks. Library errors are a fallback; these name the flag.

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

void check_alpha_unit(double alpha) { require(alpha > 0.0 && alpha <= 1.0, "--alpha must be in (0, 1]"); }
void check_n(int n) { require(n >= 0, "--n must be a nonnegative integer"); }

std::vector<double> parse_list(const std::string& flag, const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        require(end != item.c_str() && *end == '\0' && std::isfinite(v),
                flag + ": cannot parse '" + item + "' as a number");
        out.push_back(v);
    }
    require(!out.empty(), flag + " needs at least one value");
    return out;
}

std::string num(double v) { return format_number(v); }

// ---------------------------------------------------------------------------

struct EvalMlArgs {
    std::string func = "ml";
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double z = 0.0;
    double tau = 1.0;
    double t = 1.0;
};

Record eval_ml(const EvalMlArgs& a, const Settings& s) {
    Record r;
    r.single = true;
    r.meta = {{"command", "eval-ml"}, {"func", a.func}, {"alpha", num(a.alpha)}};
    if (a.func == "ml" || a.func == "wright") {
        require(a.alpha > 0.0, "--alpha must be positive");
        EvalResult res;
        if (a.func == "wright") {
            r.meta.emplace_back("beta", num(a.beta));
            res = wright(a.alpha, a.beta, a.z, s.series);
        } else {
            r.meta.emplace_back("beta", num(a.beta));
            r.meta.emplace_back("gamma", num(a.gamma));
            if (a.gamma != 1.0) {
                res = ml_three(a.alpha, a.beta, a.gamma, a.z, s.series);
            } else if (a.beta != 1.0) {
                res = ml_two(a.alpha, a.beta, a.z, s.series);
            } else {
                res = ml_one(a.alpha, a.z, s.series);
            }
        }
        r.meta.emplace_back("z", num(a.z));
        r.columns = {"value", "abs_error_estimate", "terms_used"};
        r.rows.push_back({res.value, res.abs_error_estimate, static_cast<long long>(res.terms_used)});
        return r;
    }
    require(a.tau > 0.0, "--tau must be positive");
    require(a.t >= 0.0, "--t must be nonnegative");
    double v = 0.0;
    if (a.func == "cole-cole") {
        check_alpha_unit(a.alpha);
        v = relaxation_cole_cole(a.alpha, a.tau, a.t, s.series);
    } else {
        r.meta.emplace_back("beta", num(a.beta));
        v = relaxation_hn(a.alpha, a.beta, a.tau, a.t, s.series);
    }
    r.meta.emplace_back("tau", num(a.tau));
    r.meta.emplace_back("t", num(a.t));
    r.columns = {"value"};
    r.rows.push_back({v});
    return r;
}

struct PolyArgs {
    int n = 0;
    double alpha = 1.0;
    double beta = 1.0;
    double x = 0.0;
    double y = 0.0;
    bool coeffs = false;
    bool konhauser = false;
};

std::string eval_fhp(const PolyArgs& a, const Settings& s) {
    check_n(a.n);
    check_alpha_unit(a.alpha);
    std::vector<std::pair<std::string, std::string>> meta{
        {"command", "eval-fhp"}, {"n", std::to_string(a.n)}, {"alpha", num(a.alpha)}, {"y", num(a.y)}};
    if (a.coeffs) return render(fhp_coeffs(a.n, a.alpha, a.y), meta, s.format);
    Record r;
    r.single = true;
    r.meta = meta;
    r.meta.emplace_back("x", num(a.x));
    r.columns = {"value"};
    r.rows.push_back({fhp_eval(a.n, a.alpha, a.x, a.y)});
    return render(r, s.format);
}

std::string eval_mlp(const PolyArgs& a, const Settings& s) {
    check_n(a.n);
    require(a.alpha > 0.0, "--alpha must be positive");
    require(a.beta > 0.0, "--beta must be positive");
    std::vector<std::pair<std::string, std::string>> meta{{"command", "eval-mlp"},
                                                          {"n", std::to_string(a.n)},
                                                          {"alpha", num(a.alpha)},
                                                          {"beta", num(a.beta)},
                                                          {"y", num(a.y)}};
    if (a.coeffs) return render(mlp_coeffs_x(a.n, a.alpha, a.beta, a.y), meta, s.format);
    Record r;
    r.single = true;
    r.meta = meta;
    r.meta.emplace_back("x", num(a.x));
    if (a.konhauser) {
        require(a.x >= 0.0, "--x must be nonnegative with --konhauser");
        r.meta.emplace_back("form", "konhauser");
        r.columns = {"value"};
        r.rows.push_back({konhauser(a.n, a.alpha, a.beta, a.x, a.y)});
    } else {
        r.columns = {"value"};
        r.rows.push_back({mlp_eval(a.n, a.alpha, a.beta, a.x, a.y)});
    }
    return render(r, s.format);
}

struct SolveArgs {
    std::string problem;
    int n = 2;
    double alpha = 0.5;
    double beta = 1.0;
    double k = 1.0;
    double a = 0.0;
    double b = 1.0;
    double y = 1.0;
    std::string coeffs;
    int truncation = -1;
    std::string var = "x";
    double at = 1.0;
    double from = 0.0;
    double to = 1.0;
    int points = 11;
};

SolutionProfile solve(const SolveArgs& a, const Settings& s) {
    require(a.points >= 2, "--points must be at least 2");
    require(a.from < a.to, "--from must be less than --to");
    SolutionProfile profile;
    profile.meta["problem"] = a.problem;
    profile.meta["alpha"] = num(a.alpha);
    profile.meta["variable"] = a.var;
    profile.meta[a.var == "x" ? "t" : "x"] = num(a.at);

    std::function<double(double, double)> f;
    const bool laguerre = a.problem.rfind("laguerre", 0) == 0;
    if (laguerre) {
        require(a.beta > 0.0 && a.beta <= 1.0, "--beta must be in (0, 1]");
        LaguerreProblem prob{a.alpha, a.beta, a.b, {}};
        profile.meta["beta"] = num(a.beta);
        profile.meta["b"] = num(a.b);
        if (a.problem == "laguerre-monomial") {
            check_n(a.n);
            prob.initial = initial::LaguerreMonomial{a.n};
            profile.meta["n"] = std::to_string(a.n);
        } else {
            prob.initial = initial::Wright{a.y};
            profile.meta["y"] = num(a.y);
        }
        prob.validate();
        const bool x_grid = a.var == "x";
        require(x_grid ? a.at > 0.0 : a.at >= 0.0, "--at must be positive (t) or nonnegative (x)");
        require(x_grid ? a.from >= 0.0 : a.from > 0.0, "--from must be nonnegative (x) or positive (t)");
        f = [prob, cfg = s.series](double x, double t) { return solve_laguerre(prob, x, t, cfg); };
    } else {
        DiffusionProblem prob{a.alpha, a.k, {}};
        profile.meta["k"] = num(a.k);
        int truncation = -1;
        if (a.problem == "tf-monomial") {
            check_n(a.n);
            prob.initial = initial::Monomial{a.n};
            profile.meta["n"] = std::to_string(a.n);
        } else if (a.problem == "case-i" || a.problem == "case-ii") {
            check_n(a.n);
            if (a.problem == "case-i") {
                prob.initial = initial::Hermite{a.n, a.a};
            } else {
                prob.initial = initial::Fhp{a.n, a.a};
            }
            profile.meta["n"] = std::to_string(a.n);
            profile.meta["a"] = num(a.a);
        } else {
            require(!a.coeffs.empty(), "--coeffs is required for tf-series");
            std::vector<double> c = parse_list("--coeffs", a.coeffs);
            truncation = a.truncation < 0 ? static_cast<int>(c.size()) - 1 : a.truncation;
            require(truncation < static_cast<int>(c.size()), "--truncation exceeds the number of --coeffs");
            prob.initial = initial::Series{std::move(c)};
            profile.meta["truncation"] = std::to_string(truncation);
        }
        prob.validate();
        require(a.var == "x" ? a.at >= 0.0 : a.from >= 0.0, "t must be nonnegative");
        if (truncation >= 0) {
            f = [prob, truncation](double x, double t) { return solve_tf_diffusion(prob, x, t, truncation); };
        } else {
            f = [prob](double x, double t) { return solve_diffusion(prob, x, t); };
        }
    }

    for (int i = 0; i < a.points; ++i) {
        const double g = (i == a.points - 1) ? a.to : a.from + (a.to - a.from) * i / (a.points - 1);
        profile.grid.push_back(g);
        profile.values.push_back(a.var == "x" ? f(g, a.at) : f(a.at, g));
    }
    return profile;
}

struct VerifyArgs {
    std::string suite = "all";
    std::optional<int> n_max;
    std::optional<std::uint64_t> seed;
    bool serial = false;
};

Record verify_report(const VerifyArgs& a, const Settings& s, bool& all_passed, std::ostream& err) {
    verify::Options opts;
    opts.n_max = a.n_max.value_or(s.n_max);
    opts.seed = a.seed.value_or(s.seed);
    opts.series = s.series;
    opts.parallel = !a.serial;
    require(opts.n_max >= 1, "--n-max must be positive");

    const auto results = verify::run(a.suite, opts);
    std::size_t passed = 0;
    Record r;
    r.columns = {"suite", "check", "cases", "max_error", "tolerance", "status", "note"};
    for (const auto& c : results) {
        passed += c.passed ? 1 : 0;
        r.rows.push_back({c.suite, c.name, static_cast<long long>(c.cases), c.max_error, c.tolerance,
                          std::string(c.passed ? "pass" : "fail"), c.note});
    }
    all_passed = passed == results.size();
    r.meta = {{"command", "verify"},
              {"suite", a.suite},
              {"n_max", std::to_string(opts.n_max)},
              {"seed", std::to_string(opts.seed)},
              {"checks", std::to_string(results.size())},
              {"passed", std::to_string(passed)},
              {"failed", std::to_string(results.size() - passed)}};
    err << passed << " of " << results.size() << " checks passed, " << (results.size() - passed) << " failed\n";
    return r;
}

struct TableArgs {
    std::string family = "fhp";
    int n_max = 4;
    double alpha = 0.5;
    double beta = 1.0;
};

Record table(const TableArgs& a) {
    require(a.n_max >= 0, "--n-max must be nonnegative");
    Record r;
    r.meta = {{"command", "table"}, {"family", a.family}, {"alpha", num(a.alpha)}};
    r.columns = {"n", "x_power", "y_power", "coefficient"};
    if (a.family == "fhp") {
        check_alpha_unit(a.alpha);
        for (int n = 0; n <= a.n_max; ++n) {
            const FracPoly2 h = fhp_bivariate(n, a.alpha, 1.0);
            for (const Monomial2& t : h.terms()) {
                r.rows.push_back({static_cast<long long>(n), t.ex, t.ey, t.coeff});
            }
        }
        return r;
    }
    require(a.alpha > 0.0, "--alpha must be positive");
    require(a.beta > 0.0, "--beta must be positive");
    r.meta.emplace_back("beta", num(a.beta));
    for (int n = 0; n <= a.n_max; ++n) {
        const FracPoly p = mlp_coeffs_x(n, a.alpha, a.beta, 1.0);
        for (const Monomial& t : p.terms()) {
            r.rows.push_back({static_cast<long long>(n), t.exponent, static_cast<double>(n) - t.exponent, t.coeff});
        }
    }
    return r;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
    if (output.empty() || output == "-") {
        out << text;
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError("--output: cannot open '" + output + "' for writing");
    file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional Hermite and Mittag-Leffler polynomial toolkit", "mlpoly"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::optional<std::string> format;
    std::string output;
    std::optional<std::size_t> max_terms;
    std::optional<double> stop_tol;
    std::optional<double> accept_rel;
    std::optional<double> accept_abs;
    app.add_option("--config", config_path, "key = value settings file (default: $MLPOLY_CONFIG)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", output, "Write to a file instead of stdout");
    app.add_option("--max-terms", max_terms, "Series term budget")->check(CLI::PositiveNumber);
    app.add_option("--stop-tol", stop_tol, "Series stopping tolerance")->check(CLI::PositiveNumber);
    app.add_option("--accept-rel", accept_rel, "Relative error accepted from a series")->check(CLI::PositiveNumber);
    app.add_option("--accept-abs", accept_abs, "Absolute error accepted from a series")->check(CLI::PositiveNumber);

    EvalMlArgs ml;
    auto* cmd_ml = app.add_subcommand("eval-ml", "Mittag-Leffler, Wright and relaxation functions");
    cmd_ml->add_option("--func", ml.func)->check(CLI::IsMember({"ml", "wright", "cole-cole", "havriliak-negami"}));
    cmd_ml->add_option("--alpha", ml.alpha)->required();
    cmd_ml->add_option("--beta", ml.beta, "Second parameter (mu for wright)");
    cmd_ml->add_option("--gamma", ml.gamma, "Prabhakar parameter");
    cmd_ml->add_option("--z", ml.z);
    cmd_ml->add_option("--tau", ml.tau);
    cmd_ml->add_option("--t", ml.t);

    PolyArgs fhp;
    auto* cmd_fhp = app.add_subcommand("eval-fhp", "Fractional Hermite polynomial");
    cmd_fhp->add_option("--n", fhp.n)->required();
    cmd_fhp->add_option("--alpha", fhp.alpha)->required();
    cmd_fhp->add_option("--x", fhp.x);
    cmd_fhp->add_option("--y", fhp.y);
    cmd_fhp->add_flag("--coeffs", fhp.coeffs, "Print the polynomial in x instead of a value");

    PolyArgs mlp;
    auto* cmd_mlp = app.add_subcommand("eval-mlp", "Mittag-Leffler polynomial");
    cmd_mlp->add_option("--n", mlp.n)->required();
    cmd_mlp->add_option("--alpha", mlp.alpha)->required();
    cmd_mlp->add_option("--beta", mlp.beta);
    cmd_mlp->add_option("--x", mlp.x);
    cmd_mlp->add_option("--y", mlp.y);
    cmd_mlp->add_flag("--coeffs", mlp.coeffs, "Print the polynomial in x instead of a value");
    cmd_mlp->add_flag("--konhauser", mlp.konhauser, "Konhauser normalization, argument x^alpha");

    SolveArgs sv;
    auto* cmd_solve = app.add_subcommand("solve", "Evaluate a Cauchy problem solution on a grid");
    cmd_solve->add_option("--problem", sv.problem)
        ->required()
        ->check(CLI::IsMember({"tf-monomial", "case-i", "case-ii", "tf-series", "laguerre-monomial", "laguerre-wright"}));
    cmd_solve->add_option("--n", sv.n);
    cmd_solve->add_option("--alpha", sv.alpha);
    cmd_solve->add_option("--beta", sv.beta);
    cmd_solve->add_option("--k", sv.k);
    cmd_solve->add_option("--a", sv.a);
    cmd_solve->add_option("--b", sv.b);
    cmd_solve->add_option("--y", sv.y, "Wright initial-datum parameter");
    cmd_solve->add_option("--coeffs", sv.coeffs, "Comma-separated series coefficients");
    cmd_solve->add_option("--truncation", sv.truncation);
    cmd_solve->add_option("--var", sv.var, "Grid variable")->check(CLI::IsMember({"x", "t"}));
    cmd_solve->add_option("--at", sv.at, "Value of the other variable");
    cmd_solve->add_option("--from", sv.from);
    cmd_solve->add_option("--to", sv.to);
    cmd_solve->add_option("--points", sv.points);

    VerifyArgs va;
    auto* cmd_verify = app.add_subcommand("verify", "Run identity verification suites");
    cmd_verify->add_option("--suite", va.suite)
        ->check(CLI::IsMember({"all", "identities", "fhp-identities", "mlp-gf", "caputo", "pde-residuals",
                               "sheffer-ladder"}));
    cmd_verify->add_option("--n-max", va.n_max);
    cmd_verify->add_option("--seed", va.seed);
    cmd_verify->add_flag("--serial", va.serial, "Run suites on one thread");

    TableArgs ta;
    auto* cmd_table = app.add_subcommand("table", "Low-order coefficient tables");
    cmd_table->add_option("--family", ta.family)->check(CLI::IsMember({"fhp", "mlp"}));
    cmd_table->add_option("--n-max", ta.n_max);
    cmd_table->add_option("--alpha", ta.alpha);
    cmd_table->add_option("--beta", ta.beta);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        Settings settings;
        if (config_path.empty()) {
            if (const char* env = std::getenv("MLPOLY_CONFIG"); env != nullptr && *env != '\0') config_path = env;
        }
        if (!config_path.empty()) {
            try {
                apply_config(load_config(config_path), settings);
            } catch (const std::runtime_error& e) {
                throw UsageError(std::string("--config: ") + e.what());
            }
        }
        if (format) settings.format = *format;
        if (max_terms) settings.series.max_terms = *max_terms;
        if (stop_tol) settings.series.stop_tol = *stop_tol;
        if (accept_rel) settings.series.accept_rel = *accept_rel;
        if (accept_abs) settings.series.accept_abs = *accept_abs;

        if (cmd_ml->parsed()) {
            emit(render(eval_ml(ml, settings), settings.format), output, out);
        } else if (cmd_fhp->parsed()) {
            emit(eval_fhp(fhp, settings), output, out);
        } else if (cmd_mlp->parsed()) {
            emit(eval_mlp(mlp, settings), output, out);
        } else if (cmd_solve->parsed()) {
            emit(render(solve(sv, settings), settings.format), output, out);
        } else if (cmd_verify->parsed()) {
            bool all_passed = false;
            const Record report = verify_report(va, settings, all_passed, err);
            emit(render(report, settings.format), output, out);
            return all_passed ? exit_ok : exit_numerical;
        } else if (cmd_table->parsed()) {
            emit(render(table(ta), settings.format), output, out);
        }
        return exit_ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: invalid arguments: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConvergenceError& e) {
        const EvalResult& p = e.partial();
        err << "error: " << e.what() << '\n'
            << "partial value: " << format_number(p.value)
            << "\nerror estimate: " << format_number(p.abs_error_estimate) << "\nterms used: " << p.terms_used
            << '\n';
        return exit_numerical;
    } catch (const PostconditionError& e) {
        err << "error: numerical check failed: " << e.what() << '\n';
        return exit_numerical;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace mlpoly::cli
