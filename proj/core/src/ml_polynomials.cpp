#include "mlpoly/ml_polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlpoly/caputo.hpp"
#include "mlpoly/errors.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"
#include "mlpoly/summation.hpp"

namespace mlpoly {

void MLPSpec::validate() const {
    if (n < 0) throw DomainError("MLP: n must be nonnegative");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("MLP: alpha must be positive");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("MLP: beta must be positive");
}

double mlp_eval(int n, double alpha, double beta, double x, double y) {
    MLPSpec{n, alpha, beta}.validate();
    CompensatedSum s;
    for (int r = 0; r <= n; ++r) {
        s += binomial(n, r) * std::pow(-x, r) * std::pow(y, n - r) * rgamma(beta + alpha * r);
    }
    return s.value();
}

FracPoly mlp_coeffs_x(int n, double alpha, double beta, double y) {
    MLPSpec{n, alpha, beta}.validate();
    std::vector<Monomial> terms;
    for (int r = 0; r <= n; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        terms.push_back({sign * binomial(n, r) * std::pow(y, n - r) * rgamma(beta + alpha * r), static_cast<double>(r)});
    }
    return FracPoly(std::move(terms));
}

FracPoly mlp_coeffs_y(int n, double alpha, double beta, double x) {
    MLPSpec{n, alpha, beta}.validate();
    std::vector<Monomial> terms;
    for (int r = 0; r <= n; ++r) {
        terms.push_back({binomial(n, r) * std::pow(-x, r) * rgamma(beta + alpha * r), static_cast<double>(n - r)});
    }
    return FracPoly(std::move(terms));
}

double mlp_one_var_reduction(int n, double alpha, double beta, double x, double y) {
    if (y == 0.0) throw DomainError("mlp_one_var_reduction: y = 0, use mlp_eval directly");
    return std::pow(y, n) * mlp_eval(n, alpha, beta, x / y, 1.0);
}

double konhauser(int n, double alpha, double beta, double x, double y) {
    MLPSpec{n, alpha, beta}.validate();
    if (x < 0.0 && std::floor(alpha) != alpha) {
        throw DomainError("konhauser: x^alpha is not real for x < 0 and non-integer alpha");
    }
    const double norm = gamma_ratio(beta + alpha * n, n + 1.0);
    return norm * mlp_eval(n, alpha, beta, std::pow(x, alpha), y);
}

double mlp_ogf_closed(double lambda, double alpha, double beta, double x, double y, const SeriesConfig& cfg) {
    MLPSpec{0, alpha, beta}.validate();
    const double ly = lambda * y;
    if (!(std::fabs(ly) < 1.0)) throw DomainError("mlp_ogf_closed: requires |lambda*y| < 1");
    const double denom = 1.0 - ly;
    return ml_two(alpha, beta, -lambda * x / denom, cfg).value / denom;
}

double mlp_egf_closed(double lambda, double alpha, double beta, double x, double y, const SeriesConfig& cfg) {
    MLPSpec{0, alpha, beta}.validate();
    return std::exp(lambda * y) * wright(alpha, beta, -lambda * x, cfg).value;
}

Monomial frac_laguerre_monomial(const Monomial& m, double alpha) {
    // x ∂_x multiplies x^γ by γ, then the Caputo rule lowers the exponent.
    const Monomial d = caputo_monomial(m.exponent, alpha);
    return {m.coeff * m.exponent * d.coeff, d.exponent};
}

FracPoly frac_laguerre_apply(const FracPoly& p, double alpha) {
    const CaputoOrder order(alpha);
    return p.map_terms([&order](const Monomial& m) { return frac_laguerre_monomial(m, order.value()); });
}

double frac_laguerre_power_coeff(double gamma, double alpha, int r) {
    if (r < 0) throw DomainError("frac_laguerre_power_coeff: r must be nonnegative");
    double prod = 1.0;
    for (int j = 0; j < r; ++j) prod *= gamma - j * alpha;
    if (prod == 0.0) return 0.0;
    return prod * gamma_ratio(1.0 + gamma, 1.0 + gamma - r * alpha);
}

OperationalCheck mlp_operational_check(int n, double alpha, double y, int terms, std::span<const double> grid,
                                       double tol) {
    if (n < 0) throw DomainError("mlp_operational_check: n must be nonnegative");
    if (terms < n) throw DomainError("mlp_operational_check: need terms >= n");
    const CaputoOrder order(alpha);
    for (double x : grid) {
        if (x < 0.0) throw DomainError("mlp_operational_check: grid must be nonnegative");
    }

    // Σ_k (-y/α)^k / k! · L^k p0, with L^k p0 generated by repeated application.
    FracPoly power = FracPoly::monomial((n % 2 == 0 ? 1.0 : -1.0) * rgamma(1.0 + alpha * n), alpha * n);
    FracPoly series;
    double scale = 1.0;
    for (int k = 0; k <= terms; ++k) {
        if (k > 0) {
            power = frac_laguerre_apply(power, order.value());
            scale *= -y / alpha / k;
        }
        series += power * scale;
        if (power.empty()) break;
    }

    OperationalCheck out;
    out.grid.assign(grid.begin(), grid.end());
    for (double x : grid) {
        const double l = mlp_eval(n, alpha, 1.0, std::pow(x, alpha), y);
        const double r = series.evaluate(x);
        out.lhs.push_back(l);
        out.rhs.push_back(r);
        out.max_abs_diff = std::max(out.max_abs_diff, std::fabs(l - r));
    }
    if (!(out.max_abs_diff <= tol)) {
        throw PostconditionError("mlp_operational_check: operator form deviates by " +
                                 std::to_string(out.max_abs_diff));
    }
    return out;
}

}  // namespace mlpoly
