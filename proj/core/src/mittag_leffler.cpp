#include "mlpoly/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mlpoly/gamma.hpp"
#include "mlpoly/summation.hpp"

namespace mlpoly {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Term {
    double value;
    double rel_error;  // first-order relative evaluation error
};

// z^r * weight / (Γ(arg) * (with_factorial ? r! : 1)), with its relative error.
// pow and tgamma for Γ arguments below 170, log-gamma above.
Term series_term(double z, int r, double weight, double arg, bool with_factorial) {
    if (weight == 0.0) return {0.0, 0.0};
    double sign = (weight < 0.0) ? -1.0 : 1.0;
    if (z < 0.0 && (r % 2) != 0) sign = -sign;
    if (arg > 0.0 && arg < 170.0 && (!with_factorial || r <= 170)) {
        const double power = std::pow(std::fabs(z), r);
        if (std::isnormal(power) && power < 1e300) {
            double v = power * std::fabs(weight) / std::tgamma(arg);
            if (with_factorial) v /= factorial(r);
            return {sign * v, kEps * (4.0 + 0.1 * r)};
        }
    }
    if (arg > 0.0) {
        const double log_abs_z = std::log(std::fabs(z));
        const double lg = ln_gamma(arg);
        const double lf = with_factorial ? ln_gamma(r + 1.0) : 0.0;
        const double exponent = r * log_abs_z + std::log(std::fabs(weight)) - lg - lf;
        const double magnitude_budget = std::fabs(r * log_abs_z) + std::fabs(lg) + lf;
        return {sign * std::exp(exponent), kEps * (8.0 + r + magnitude_budget)};
    }
    double v = std::pow(z, r) * weight * rgamma(arg);
    if (with_factorial) v /= factorial(r);
    return {v, kEps * (16.0 + 2.0 * r)};
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

// Shared engine for the Prabhakar family and the Wright function.
// The Pochhammer weight (γ)_r / r! is generated recursively; for a
// nonpositive integer γ = -n it vanishes identically beyond r = n.
EvalResult sum_series(double alpha, double beta, double gamma, bool wright_kind, double z,
                      const SeriesConfig& cfg, const char* name) {
    if (z == 0.0) {
        return {rgamma(beta), 0.0, 1};
    }

    const bool terminating = !wright_kind && gamma <= 0.0 && std::floor(gamma) == gamma;
    const std::size_t last_index =
        terminating ? static_cast<std::size_t>(-gamma) : std::numeric_limits<std::size_t>::max();

    CompensatedSum sum;
    double rounding = 0.0;
    double weight = 1.0;
    double prev_abs = std::numeric_limits<double>::infinity();
    double last_abs = 0.0;
    std::size_t used = 0;
    bool converged = false;

    for (std::size_t r = 0; r < cfg.max_terms; ++r) {
        if (r > 0 && !wright_kind) {
            weight *= (gamma + static_cast<double>(r) - 1.0) / static_cast<double>(r);
        }
        const Term t = series_term(z, static_cast<int>(r), weight, beta + alpha * static_cast<double>(r),
                                   wright_kind);
        sum += t.value;
        ++used;
        const double abs_t = std::fabs(t.value);
        rounding += abs_t * t.rel_error;
        if (!std::isfinite(sum.value())) {
            throw ConvergenceError(std::string(name) + ": overflow while summing the series",
                                   {sum.value(), std::numeric_limits<double>::infinity(), used});
        }
        if (r == last_index) {
            last_abs = 0.0;
            converged = true;
            break;
        }
        const double scale = cfg.stop_tol * std::fabs(sum.value());
        if (r > 0 && abs_t <= scale && prev_abs <= scale) {
            last_abs = abs_t;
            converged = true;
            break;
        }
        prev_abs = abs_t;
        last_abs = abs_t;
    }

    const double value = sum.value();
    EvalResult result{value, last_abs + rounding + kEps * std::fabs(value), used};
    if (!converged) {
        throw ConvergenceError(std::string(name) + ": term budget of " + std::to_string(cfg.max_terms) +
                                   " exhausted before convergence",
                               result);
    }
    const double allowed = std::max(cfg.accept_rel * std::fabs(value), cfg.accept_abs);
    if (result.abs_error_estimate > allowed) {
        throw ConvergenceError(std::string(name) + ": cancellation leaves error estimate " +
                                   std::to_string(result.abs_error_estimate) + " above the accepted bound",
                               result);
    }
    return result;
}

}  // namespace

void MLParams::validate() const {
    require_finite(alpha, "alpha");
    require_finite(beta, "beta");
    require_finite(gamma, "gamma");
    if (!(alpha > 0.0)) throw DomainError("Mittag-Leffler: alpha must be positive");
    if (beta < 0.0) throw DomainError("Mittag-Leffler: beta must be nonnegative");
}

EvalResult ml_three(const MLParams& p, double z, const SeriesConfig& cfg) {
    p.validate();
    require_finite(z, "z");
    return sum_series(p.alpha, p.beta, p.gamma, false, z, cfg, "ml_three");
}

EvalResult ml_three(double alpha, double beta, double gamma, double z, const SeriesConfig& cfg) {
    return ml_three(MLParams{alpha, beta, gamma}, z, cfg);
}

EvalResult ml_two(double alpha, double beta, double z, const SeriesConfig& cfg) {
    const MLParams p{alpha, beta, 1.0};
    p.validate();
    require_finite(z, "z");
    return sum_series(alpha, beta, 1.0, false, z, cfg, "ml_two");
}

EvalResult ml_one(double alpha, double z, const SeriesConfig& cfg) {
    const MLParams p{alpha, 1.0, 1.0};
    p.validate();
    require_finite(z, "z");
    return sum_series(alpha, 1.0, 1.0, false, z, cfg, "ml_one");
}

std::vector<double> ml_three_polynomial_coeffs(double alpha, double beta, int n) {
    MLParams{alpha, beta, -static_cast<double>(n)}.validate();
    if (n < 0) throw DomainError("ml_three_polynomial_coeffs: n must be nonnegative");
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    double weight = 1.0;
    for (int r = 0; r <= n; ++r) {
        if (r > 0) weight *= (-static_cast<double>(n) + r - 1.0) / r;
        c[static_cast<std::size_t>(r)] = weight * rgamma(beta + alpha * r);
    }
    return c;
}

EvalResult wright(double alpha, double mu, double z, const SeriesConfig& cfg) {
    require_finite(alpha, "alpha");
    require_finite(mu, "mu");
    require_finite(z, "z");
    if (!(alpha > 0.0)) throw DomainError("wright: alpha must be positive");
    return sum_series(alpha, mu, 1.0, true, z, cfg, "wright");
}

namespace {

void check_relaxation_args(double alpha, double tau, double t) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("relaxation: alpha must lie in (0, 1]");
    if (!(tau > 0.0)) throw DomainError("relaxation: tau must be positive");
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("relaxation: t must be finite and nonnegative");
}

}  // namespace

double relaxation_cole_cole(double alpha, double tau, double t, const SeriesConfig& cfg) {
    check_relaxation_args(alpha, tau, t);
    if (t == 0.0) return 1.0;
    return ml_one(alpha, -std::pow(t / tau, alpha), cfg).value;
}

double relaxation_hn(double alpha, double beta, double tau, double t, const SeriesConfig& cfg) {
    check_relaxation_args(alpha, tau, t);
    if (!(beta > 0.0)) throw DomainError("relaxation_hn: beta must be positive");
    if (t == 0.0) return 1.0;
    const double ratio = t / tau;
    const double u = std::pow(ratio, alpha);
    const double e = ml_three(alpha, 1.0 + alpha * beta, beta, -u, cfg).value;
    return 1.0 - std::pow(ratio, alpha * beta) * e;
}

}  // namespace mlpoly
