#pragma once

#include <vector>

#include "mlpoly/config.hpp"
#include "mlpoly/errors.hpp"

namespace mlpoly {

/// Parameters of the three-parameter (Prabhakar) Mittag-Leffler function.
/// beta = 0 is accepted (Wiman function E_{α,0}); a nonpositive integer gamma
/// turns the series into a polynomial.
struct MLParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;

    /// Throws DomainError unless alpha > 0, beta >= 0 and all entries are finite.
    void validate() const;
};

// Series evaluators. All of them sum with compensated arithmetic under the
// given budget and either return an EvalResult whose error estimate is within
// the configured acceptance bound or throw ConvergenceError carrying the
// partial result. The truncation part of abs_error_estimate is the magnitude
// of the last term added (a heuristic, exact only for geometric tails); the
// rounding part is a first-order bound on the per-term evaluation error.

/// E_α(z) = Σ z^r / Γ(1+αr)
EvalResult ml_one(double alpha, double z, const SeriesConfig& cfg = {});

/// E_{α,β}(z) = Σ z^r / Γ(β+αr); β = 0 drops the r = 0 term.
EvalResult ml_two(double alpha, double beta, double z, const SeriesConfig& cfg = {});

/// E^γ_{α,β}(z) = Σ (γ)_r / r! · z^r / Γ(β+αr)
EvalResult ml_three(double alpha, double beta, double gamma, double z, const SeriesConfig& cfg = {});
EvalResult ml_three(const MLParams& p, double z, const SeriesConfig& cfg = {});

/// Coefficients c_r of E^{-n}_{α,β}(z) = Σ_{r<=n} c_r z^r, i.e. (-n)_r / (r! Γ(β+αr)).
std::vector<double> ml_three_polynomial_coeffs(double alpha, double beta, int n);

/// Wright function W_{α,μ}(z) = Σ z^r / [r! Γ(μ+αr)].
EvalResult wright(double alpha, double mu, double z, const SeriesConfig& cfg = {});

/// Cole-Cole relaxation ψ(t) = E_α[-(t/τ)^α], 0 < α <= 1.
double relaxation_cole_cole(double alpha, double tau, double t, const SeriesConfig& cfg = {});

/// Havriliak-Negami relaxation ψ(t) = 1 - (t/τ)^{αβ} E^β_{α,1+αβ}[-(t/τ)^α].
double relaxation_hn(double alpha, double beta, double tau, double t, const SeriesConfig& cfg = {});

}  // namespace mlpoly
