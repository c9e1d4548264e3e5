#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlpoly/config.hpp"

namespace mlpoly::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    std::size_t cases = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;  ///< set when a case threw instead of producing a number
};

struct Options {
    int n_max = 10;
    std::uint64_t seed = 42;
    SeriesConfig series{};
    /// Run suites on worker threads. Output order does not depend on this.
    bool parallel = true;
};

/// fhp-identities, mlp-gf, caputo, pde-residuals, sheffer-ladder
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". "identities" is accepted
/// as an alias of "fhp-identities". Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run(std::string_view suite, const Options& opts);

std::vector<CheckResult> fhp_identities(const Options& opts);
std::vector<CheckResult> mlp_generating_functions(const Options& opts);
std::vector<CheckResult> caputo_checks(const Options& opts);
std::vector<CheckResult> pde_residuals(const Options& opts);
std::vector<CheckResult> sheffer_ladder(const Options& opts);

/// |a - b| <= max(rel * max(|a|, |b|), abs_floor)
bool close(double a, double b, double rel, double abs_floor = defaults::identity_abs_floor);
/// |a - b| / max(|a|, |b|, abs_floor)
double rel_error(double a, double b, double abs_floor = defaults::identity_abs_floor);

}  // namespace mlpoly::verify
