#pragma once

#include "mlpoly/frac_poly.hpp"

namespace mlpoly {

/// Degree, order and second argument of a fractional Hermite polynomial _αH_n(x, y).
struct HermiteSpec {
    int n = 0;
    double alpha = 1.0;
    double y = 0.0;

    /// Throws DomainError unless n >= 0 and 0 < α <= 1.
    void validate() const;
};

// _αH_n(x, y) = n! Σ_{r<=n/2} x^{n-2r} y^r / [(n-2r)! Γ(1+αr)].
// At α = 1 this is the two-variable Hermite polynomial H_n(x, y).

/// Polynomial in x; leading coefficient 1, floor(n/2)+1 monomials when y != 0.
FracPoly fhp_coeffs(int n, double alpha, double y);
FracPoly fhp_coeffs(const HermiteSpec& spec);

/// _αH_n(x, k·s^α) as a bivariate polynomial in (x, s). With s = y this is
/// _αH_n(x, y^α); with s = t it is the time-fractional diffusion solution.
FracPoly2 fhp_bivariate(int n, double alpha, double k);

double fhp_eval(int n, double alpha, double x, double y);

/// Classical two-variable Hermite H_n(x, y) = _1H_n(x, y).
double hermite2(int n, double x, double y);

/// _αH_n(0, y): zero for odd n, n! y^{n/2} / Γ(1 + αn/2) for even n.
double fhp_at_zero(int n, double alpha, double y);

/// (x ⊕_α y)^n = Σ_r (n r)_α x^{n-r} y^r
double oplus_power(double x, double y, int n, double alpha);

/// H_n(x, a + w d_ρ) M_α(-αρ)|_{ρ=0}: the classical Hermite polynomial whose
/// second argument carries the umbral shift, realized through the Stieltjes
/// moments M_α(-α j) = j!/Γ(1+αj). Requires 0 < α < 1.
double umbral_hermite_shift(int n, double x, double a, double w, double alpha);

/// n! Σ_r a^r _αH_{n-2r}(x, w) / [r! (n-2r)!]
double convolution_identity_i_rhs(int n, double x, double a, double w, double alpha);

/// n! Σ_r _αH_{n-2r}(x, w) a^r / [(n-2r)! Γ(1+αr)]
double convolution_identity_ii_rhs(int n, double x, double a, double w, double alpha);

/// _αH_n(x, w ⊕_α a) = n! Σ_r x^{n-2r} (w ⊕_α a)^r / [(n-2r)! Γ(1+αr)]
double fhp_oplus_eval(int n, double x, double w, double a, double alpha);

}  // namespace mlpoly
