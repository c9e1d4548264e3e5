#include "mlpoly/fokker_planck.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlpoly/caputo.hpp"
#include "mlpoly/errors.hpp"
#include "mlpoly/fractional_hermite.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"
#include "mlpoly/ml_polynomials.hpp"
#include "mlpoly/summation.hpp"

namespace mlpoly {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_diffusion(double alpha, double k) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("diffusion: alpha must lie in (0, 1)");
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("diffusion: k must be positive");
}

void check_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("diffusion: t must be finite and nonnegative");
}

void check_laguerre(double alpha, double beta, double b) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("laguerre: alpha must lie in (0, 1)");
    if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("laguerre: beta must lie in (0, 1]");
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("laguerre: b must be positive");
}

void check_laguerre_point(double x, double t) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("laguerre: x must be finite and nonnegative");
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("laguerre: t must be positive");
}

void check_degree(int n) {
    if (n < 0) throw DomainError("degree n must be nonnegative");
}

// Time derivative of order β on the t-factor; β = 1 is the ordinary derivative.
Monomial time_derivative(const Monomial& m, double beta) {
    if (beta == 1.0) {
        if (m.exponent == 0.0) return {0.0, 0.0};
        return {m.coeff * m.exponent, m.exponent - 1.0};
    }
    const Monomial d = caputo_monomial(m.exponent, beta);
    return {m.coeff * d.coeff, d.exponent};
}

}  // namespace

void DiffusionProblem::validate() const {
    check_diffusion(alpha, k);
    std::visit(overloaded{
                   [](const initial::Monomial& m) { check_degree(m.n); },
                   [](const initial::Hermite& h) { check_degree(h.n); },
                   [](const initial::Fhp& f) { check_degree(f.n); },
                   [](const initial::Series& s) {
                       if (s.coeffs.empty()) throw DomainError("diffusion: empty series initial datum");
                   },
               },
               initial);
}

void LaguerreProblem::validate() const {
    check_laguerre(alpha, beta, b);
    if (const auto* m = std::get_if<initial::LaguerreMonomial>(&initial)) check_degree(m->n);
}

void SolutionProfile::validate() const {
    if (grid.size() != values.size()) throw DomainError("SolutionProfile: grid and values differ in length");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw DomainError("SolutionProfile: grid must be strictly increasing");
    }
}

double solve_tf_diffusion(const DiffusionProblem& prob, double x, double t, int truncation) {
    prob.validate();
    check_time(t);
    const auto* series = std::get_if<initial::Series>(&prob.initial);
    if (series == nullptr) throw DomainError("solve_tf_diffusion: expects series initial data");
    if (truncation < 0 || static_cast<std::size_t>(truncation) >= series->coeffs.size()) {
        throw DomainError("solve_tf_diffusion: truncation outside the coefficient list");
    }
    const double y = prob.k * std::pow(t, prob.alpha);
    CompensatedSum s;
    for (int r = 0; r <= truncation; ++r) {
        const double c = series->coeffs[static_cast<std::size_t>(r)];
        if (c != 0.0) s += c * fhp_eval(r, prob.alpha, x, y);
    }
    return s.value();
}

double solve_diffusion(const DiffusionProblem& prob, double x, double t) {
    prob.validate();
    check_time(t);
    return std::visit(
        overloaded{
            [&](const initial::Monomial& m) { return fhp_eval(m.n, prob.alpha, x, prob.k * std::pow(t, prob.alpha)); },
            [&](const initial::Hermite& h) { return solve_case_i(h.n, h.a, prob.alpha, prob.k, x, t); },
            [&](const initial::Fhp& f) { return solve_case_ii(f.n, f.a, prob.alpha, prob.k, x, t); },
            [&](const initial::Series& s) {
                return solve_tf_diffusion(prob, x, t, static_cast<int>(s.coeffs.size()) - 1);
            },
        },
        prob.initial);
}

double solve_case_i(int n, double a, double alpha, double k, double x, double t) {
    check_diffusion(alpha, k);
    check_time(t);
    check_degree(n);
    return convolution_identity_i_rhs(n, x, a, k * std::pow(t, alpha), alpha);
}

CaseIIForms solve_case_ii_forms(int n, double a, double alpha, double k, double x, double t) {
    check_diffusion(alpha, k);
    check_time(t);
    check_degree(n);
    const double w = k * std::pow(t, alpha);
    const CaseIIForms forms{convolution_identity_ii_rhs(n, x, a, w, alpha), fhp_oplus_eval(n, x, w, a, alpha)};
    const double scale =
        std::max({std::fabs(forms.series_form), std::fabs(forms.oplus_form), defaults::identity_abs_floor});
    if (std::fabs(forms.series_form - forms.oplus_form) > defaults::identity_rel_tol * scale) {
        throw PostconditionError("solve_case_ii: series and oplus forms disagree");
    }
    return forms;
}

double solve_case_ii(int n, double a, double alpha, double k, double x, double t) {
    return solve_case_ii_forms(n, a, alpha, k, x, t).series_form;
}

std::vector<double> laguerre_monomial_terms(int n, double alpha, double beta, double b, double x, double t) {
    check_laguerre(alpha, beta, b);
    check_laguerre_point(x, t);
    check_degree(n);
    const double xa = std::pow(x, alpha);
    const double bt = b * std::pow(t, beta);
    std::vector<double> terms;
    for (int r = 0; r <= n; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        terms.push_back(sign * falling_factorial(n, n - r) * std::pow(xa, r) * std::pow(bt, n - r) *
                        rgamma(1.0 + alpha * r) * rgamma(1.0 + beta * (n - r)));
    }
    return terms;
}

std::vector<double> laguerre_monomial_moment_terms(int n, double alpha, double beta, double b, double x,
                                                   double t) {
    check_laguerre(alpha, beta, b);
    check_laguerre_point(x, t);
    check_degree(n);
    if (beta == 1.0) {
        throw DomainError("laguerre_monomial_moment_terms: subordination needs 0 < beta < 1");
    }
    const double xa = std::pow(x, alpha);
    std::vector<double> terms;
    for (int r = 0; r <= n; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        terms.push_back(binomial(n, r) * sign * std::pow(xa, r) * std::pow(b, n - r) * rgamma(1.0 + alpha * r) *
                        levy_subordination_moment(beta, n - r, t));
    }
    return terms;
}

double solve_laguerre_monomial(int n, double alpha, double beta, double b, double x, double t) {
    CompensatedSum s;
    for (double term : laguerre_monomial_terms(n, alpha, beta, b, x, t)) s += term;
    return s.value();
}

double solve_laguerre_wright(double y, double alpha, double beta, double b, double x, double t,
                             const SeriesConfig& cfg) {
    check_laguerre(alpha, beta, b);
    check_laguerre_point(x, t);
    const double w = wright(alpha, 1.0, -y * std::pow(x, alpha), cfg).value;
    return w * ml_one(beta, b * y * std::pow(t, beta), cfg).value;
}

double solve_laguerre(const LaguerreProblem& prob, double x, double t, const SeriesConfig& cfg) {
    prob.validate();
    return std::visit(overloaded{
                          [&](const initial::LaguerreMonomial& m) {
                              return solve_laguerre_monomial(m.n, prob.alpha, prob.beta, prob.b, x, t);
                          },
                          [&](const initial::Wright& w) {
                              return solve_laguerre_wright(w.y, prob.alpha, prob.beta, prob.b, x, t, cfg);
                          },
                      },
                      prob.initial);
}

FracPoly2 tf_diffusion_table(int n, double alpha, double k) {
    check_diffusion(alpha, k);
    check_degree(n);
    return fhp_bivariate(n, alpha, k);
}

FracPoly2 laguerre_monomial_table(int n, double alpha, double beta, double b) {
    check_laguerre(alpha, beta, b);
    check_degree(n);
    std::vector<Monomial2> terms;
    for (int r = 0; r <= n; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        terms.push_back({sign * falling_factorial(n, n - r) * std::pow(b, n - r) * rgamma(1.0 + alpha * r) *
                             rgamma(1.0 + beta * (n - r)),
                         alpha * r, beta * (n - r)});
    }
    return FracPoly2(std::move(terms));
}

namespace {

Residual compare(const FracPoly2& lhs, const FracPoly2& rhs) {
    const double absolute = max_coeff_diff(lhs, rhs);
    return {absolute / std::max({1.0, max_abs_coeff(lhs), max_abs_coeff(rhs)}), absolute};
}

}  // namespace

double residual_tf_diffusion(int n, double alpha, double k) { return residual_tf_diffusion_detail(n, alpha, k).scaled; }

double residual_laguerre(int n, double alpha, double beta, double b) {
    return residual_laguerre_detail(n, alpha, beta, b).scaled;
}

Residual residual_tf_diffusion_detail(int n, double alpha, double k) {
    const FracPoly2 f = tf_diffusion_table(n, alpha, k);
    const CaputoOrder order(alpha);
    const FracPoly2 lhs = f.map_y([&order](const Monomial& m) -> Monomial {
        const Monomial d = caputo_monomial(m.exponent, order);
        return {m.coeff * d.coeff, d.exponent};
    });
    const FracPoly2 rhs = k * f.map_x([](const Monomial& m) -> Monomial {
        if (m.exponent < 2.0) return {0.0, 0.0};
        return {m.coeff * m.exponent * (m.exponent - 1.0), m.exponent - 2.0};
    });
    return compare(lhs, rhs);
}

Residual residual_laguerre_detail(int n, double alpha, double beta, double b) {
    const FracPoly2 g = laguerre_monomial_table(n, alpha, beta, b);
    const FracPoly2 lhs = g.map_y([beta](const Monomial& m) { return time_derivative(m, beta); });
    const FracPoly2 rhs = (-b / alpha) * g.map_x([alpha](const Monomial& m) { return frac_laguerre_monomial(m, alpha); });
    return compare(lhs, rhs);
}

}  // namespace mlpoly
