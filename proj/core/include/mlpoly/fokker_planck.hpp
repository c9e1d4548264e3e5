#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mlpoly/config.hpp"
#include "mlpoly/frac_poly.hpp"

namespace mlpoly {

// Initial data for the time-fractional diffusion equation
//   ^C D^α_t F = k ∂²_x F,  F(x, 0) = f(x).
namespace initial {
struct Monomial { int n = 0; };                   ///< f = x^n
struct Hermite { int n = 0; double a = 0.0; };    ///< f = H_n(x, a)
struct Fhp { int n = 0; double a = 0.0; };        ///< f = _αH_n(x, a)
struct Series { std::vector<double> coeffs; };    ///< f = Σ c_r x^r
}  // namespace initial

using DiffusionInitial = std::variant<initial::Monomial, initial::Hermite, initial::Fhp, initial::Series>;

struct DiffusionProblem {
    double alpha = 0.5;
    double k = 1.0;
    DiffusionInitial initial;

    void validate() const;
};

// Initial data for the Laguerre-type equation
//   ^C D^β_t G = -(b/α) ^C D^α_x x ∂_x G,  G(x, 0) = γ(x),
// with β = 1 meaning the ordinary time derivative.
namespace initial {
struct LaguerreMonomial { int n = 0; };           ///< γ = (-x^α)^n / Γ(1+αn)
struct Wright { double y = 0.0; };                ///< γ = W_{α,1}(-y x^α)
}  // namespace initial

using LaguerreInitial = std::variant<initial::LaguerreMonomial, initial::Wright>;

struct LaguerreProblem {
    double alpha = 0.5;
    double beta = 1.0;
    double b = 1.0;
    LaguerreInitial initial;

    void validate() const;
};

/// Values of a solution on a grid of x (or t), plus a description of the problem.
struct SolutionProfile {
    std::vector<double> grid;
    std::vector<double> values;
    std::map<std::string, std::string> meta;

    /// Throws DomainError unless lengths match and the grid is strictly increasing.
    void validate() const;
};

/// F(x, t) = Σ_{r<=N} c_r _αH_r(x, k t^α) for series initial data.
double solve_tf_diffusion(const DiffusionProblem& prob, double x, double t, int truncation);

/// Dispatches on the initial datum. For series data all coefficients are used.
double solve_diffusion(const DiffusionProblem& prob, double x, double t);

/// Case (i), f = H_n(x, a): n! Σ_r a^r _αH_{n-2r}(x, k t^α) / [r! (n-2r)!]
double solve_case_i(int n, double a, double alpha, double k, double x, double t);

struct CaseIIForms {
    double series_form;  ///< n! Σ_r _αH_{n-2r}(x, k t^α) a^r / [(n-2r)! Γ(1+αr)]
    double oplus_form;   ///< _αH_n(x, k t^α ⊕_α a)
};

/// Case (ii), f = _αH_n(x, a). Both forms are computed; PostconditionError if
/// they disagree beyond 1e-9 relative (absolute floor 1e-12).
CaseIIForms solve_case_ii_forms(int n, double a, double alpha, double k, double x, double t);
double solve_case_ii(int n, double a, double alpha, double k, double x, double t);

/// Case (iii): Σ_r (n!/r!) (-x^α)^r (b t^β)^{n-r} / [Γ(1+αr) Γ(1+β(n-r))]
double solve_laguerre_monomial(int n, double alpha, double beta, double b, double x, double t);

/// Individual summands of case (iii), direct double-Γ form.
std::vector<double> laguerre_monomial_terms(int n, double alpha, double beta, double b, double x, double t);

/// Individual summands of case (iii) via the subordination moments:
/// C(n,r) (-x^α)^r b^{n-r} / Γ(1+αr) · ∫ n_β(s,t) s^{n-r} ds.
std::vector<double> laguerre_monomial_moment_terms(int n, double alpha, double beta, double b, double x, double t);

/// Case (iv): W_{α,1}(-y x^α) E_β(b y t^β)
double solve_laguerre_wright(double y, double alpha, double beta, double b, double x, double t,
                             const SeriesConfig& cfg = {});

/// Evaluates a Laguerre problem at (x, t).
double solve_laguerre(const LaguerreProblem& prob, double x, double t, const SeriesConfig& cfg = {});

/// Exact bivariate tables in (x, t).
FracPoly2 tf_diffusion_table(int n, double alpha, double k);
FracPoly2 laguerre_monomial_table(int n, double alpha, double beta, double b);

/// Residuals are max |coefficient| of LHS - RHS divided by max(1, max |coefficient|
/// of either side); below 1 this is the absolute coefficient residual.
struct Residual {
    double scaled;
    double absolute;
};

/// ^C D^α_t F - k ∂²_x F for F = _αH_n(x, k t^α).
double residual_tf_diffusion(int n, double alpha, double k);
Residual residual_tf_diffusion_detail(int n, double alpha, double k);

/// ^C D^β_t G + (b/α) ^C D^α_x x ∂_x G for the case (iii) solution.
double residual_laguerre(int n, double alpha, double beta, double b);
Residual residual_laguerre_detail(int n, double alpha, double beta, double b);

}  // namespace mlpoly
