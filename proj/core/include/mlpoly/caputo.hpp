#pragma once

#include <span>

#include "mlpoly/frac_poly.hpp"

namespace mlpoly {

/// Order of a Caputo derivative, restricted to 0 < α < 1.
class CaputoOrder {
public:
    explicit CaputoOrder(double alpha);
    double value() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Exact Caputo derivative of x^γ: Γ(1+γ)/Γ(1+γ-α) x^{γ-α}, and 0 for γ = 0.
/// Throws DomainError for γ in (0, α).
Monomial caputo_monomial(double gamma, CaputoOrder alpha);
Monomial caputo_monomial(double gamma, double alpha);

/// Term-wise Caputo derivative of a generalized polynomial.
FracPoly caputo_poly(const FracPoly& p, CaputoOrder alpha);
FracPoly caputo_poly(const FracPoly& p, double alpha);

/// L1 finite-difference approximation of the Caputo derivative at
/// t = t_index * h from samples g(0), g(h), ..., g(t_index * h).
/// Convergence is O(h^{2-α}) for C² integrands.
double caputo_l1(std::span<const double> samples, double h, double alpha, std::size_t t_index);

/// Riemann-Liouville derivative from the Caputo one:
/// RL = Caputo + t^{-α} g(0) / Γ(1-α).
double rl_from_caputo(double caputo_value, double g0, double t, double alpha);

/// N-term truncation Σ_{r<N} a^r t^{αr} / Γ(1+αr) of E_α(a t^α) as a polynomial in t.
FracPoly ml_exponential_truncation(double alpha, double a, int terms);

}  // namespace mlpoly
