#pragma once

#include <span>
#include <vector>

#include "mlpoly/config.hpp"
#include "mlpoly/frac_poly.hpp"

namespace mlpoly {

/// Degree and parameters of a Mittag-Leffler polynomial E^{-n}_{α,β}(x, y).
struct MLPSpec {
    int n = 0;
    double alpha = 1.0;
    double beta = 1.0;

    void validate() const;
};

/// E^{-n}_{α,β}(x, y) = Σ_{r<=n} C(n,r) (-x)^r y^{n-r} / Γ(β+αr)
double mlp_eval(int n, double alpha, double beta, double x, double y);

/// The same polynomial in x (y fixed) and in y (x fixed).
FracPoly mlp_coeffs_x(int n, double alpha, double beta, double y);
FracPoly mlp_coeffs_y(int n, double alpha, double beta, double x);

/// y^n E^{-n}_{α,β}(x/y, 1). Throws DomainError at y = 0.
double mlp_one_var_reduction(int n, double alpha, double beta, double x, double y);

/// Generalized Konhauser polynomial Γ(β+αn) E^{-n}_{α,β}(x^α, y) / n!.
/// x must be nonnegative unless α is an integer.
double konhauser(int n, double alpha, double beta, double x, double y);

/// Σ_n λ^n E^{-n}_{α,β}(x, y) = (1-λy)^{-1} E_{α,β}(-λx / (1-λy)), |λy| < 1.
double mlp_ogf_closed(double lambda, double alpha, double beta, double x, double y, const SeriesConfig& cfg = {});

/// Σ_n λ^n/n! E^{-n}_{α,β}(x, y) = e^{λy} W_{α,β}(-λx)
double mlp_egf_closed(double lambda, double alpha, double beta, double x, double y, const SeriesConfig& cfg = {});

/// One application of the composite operator ^C D^α_x (x ∂_x):
/// x^γ ↦ γ Γ(1+γ)/Γ(1+γ-α) x^{γ-α}; constants are annihilated.
/// Throws DomainError when some exponent lies in (0, α).
FracPoly frac_laguerre_apply(const FracPoly& p, double alpha);
Monomial frac_laguerre_monomial(const Monomial& m, double alpha);

/// r-fold coefficient of [^C D^α_x x ∂_x]^r x^γ, by direct telescoping:
/// Π_{j<r} (γ - jα) · Γ(1+γ)/Γ(1+γ-rα).
double frac_laguerre_power_coeff(double gamma, double alpha, int r);

struct OperationalCheck {
    std::vector<double> grid;
    std::vector<double> lhs;
    std::vector<double> rhs;
    double max_abs_diff = 0.0;
};

/// Compares E^{-n}_{α,1}(x^α, y) with exp[-(y/α) ^C D^α_x x ∂_x] (-1)^n x^{αn}/Γ(1+αn),
/// the exponential truncated after `terms` applications (exact once terms >= n).
/// Throws PostconditionError when max |lhs - rhs| exceeds `tol`.
OperationalCheck mlp_operational_check(int n, double alpha, double y, int terms, std::span<const double> grid,
                                       double tol = 1e-10);

}  // namespace mlpoly
