#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mlpoly/config.hpp"
#include "mlpoly/frac_poly.hpp"

namespace mlpoly {

/// Truncated formal power series Σ_{k<=N} c_k λ^k.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<double> coeffs);

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
    std::size_t order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    double evaluate(double lambda) const;
    PowerSeries derivative() const;
    /// Product truncated at the smaller order of the two factors.
    PowerSeries operator*(const PowerSeries& other) const;

private:
    std::vector<double> coeffs_;
};

/// 1/s to the order of s. Throws DomainError if s[0] == 0.
PowerSeries series_reciprocal(const PowerSeries& s);

/// s'/s, of order N-1. Throws DomainError if s[0] == 0.
PowerSeries series_log_derivative(const PowerSeries& s);

/// A(λ; y) = E_α(yλ²) for the fractional Hermite family (Appell in x).
PowerSeries appell_A_fhp(double alpha, double y, std::size_t order);

/// A'(λ; y) through the Wiman function, (2/(αλ)) E_{α,0}(yλ²).
PowerSeries appell_A_fhp_derivative_wiman(double alpha, double y, std::size_t order);

/// A(λ; x) = W_{α,β}(-λx) for the Mittag-Leffler polynomials (Appell in y).
PowerSeries appell_A_mlp(double alpha, double beta, double x, std::size_t order);

/// Auxiliary functions of the exponential operator exp{λ[q(x) d/dx + v(x)]}
/// for a Sheffer generating function A(λ) e^{x B(λ)}:
///   q = B'(B⁻¹(x-1)),  v = A'/A at B⁻¹(x-1),
///   T = B(λ + B⁻¹(x-1)) + 1,  h = A(λ + B⁻¹(x-1)) / A(B⁻¹(x-1)).
/// Only the Appell case B(λ) = λ is supported.
class AppellAuxiliary {
public:
    using Fn = std::function<double(double)>;

    AppellAuxiliary(Fn a, Fn a_prime);

    double q(double x) const;
    double v(double x) const;
    double T(double lambda, double x) const;
    double h(double lambda, double x) const;

private:
    Fn a_;
    Fn a_prime_;
    Fn b_;
    Fn b_prime_;
    Fn b_inverse_;
};

struct AuxValues {
    double v;
    double h;
};

/// v and h for the fHP: A(λ) = E_α(yλ²). x = 1 is a hard error (pole of v).
AuxValues aux_v_h_fhp(double lambda, double x, double alpha, double y, const SeriesConfig& cfg = {});

/// v and h for the MLP in the y variable: A(λ) = W_{α,β}(-λx).
AuxValues aux_v_h_mlp(double lambda, double y, double alpha, double beta, double x, const SeriesConfig& cfg = {});

/// Lowering operator P = d/dx on a polynomial with integer exponents.
FracPoly lowering_apply(const FracPoly& p);

/// Raising operator M = X - g'(D)/g(D) with `log_deriv_g` the series of g'/g.
/// Requires the series order to reach the degree of p.
FracPoly raising_apply(const FracPoly& p, const PowerSeries& log_deriv_g);

}  // namespace mlpoly
