#include "mlpoly/sheffer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlpoly/errors.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"
#include "mlpoly/summation.hpp"

namespace mlpoly {

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw DomainError("PowerSeries: coefficients must be finite");
    }
}

double PowerSeries::evaluate(double lambda) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
    return acc;
}

PowerSeries PowerSeries::derivative() const {
    if (coeffs_.size() <= 1) return PowerSeries({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return PowerSeries();
    const std::size_t n = std::min(coeffs_.size(), other.coeffs_.size());
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        CompensatedSum s;
        for (std::size_t i = 0; i <= k; ++i) s += coeffs_[i] * other.coeffs_[k - i];
        out[k] = s.value();
    }
    return PowerSeries(std::move(out));
}

PowerSeries series_reciprocal(const PowerSeries& s) {
    if (s.coeffs().empty() || s[0] == 0.0) {
        throw DomainError("series_reciprocal: constant term must be nonzero");
    }
    const std::size_t n = s.coeffs().size();
    std::vector<double> g(n, 0.0);
    g[0] = 1.0 / s[0];
    for (std::size_t k = 1; k < n; ++k) {
        CompensatedSum acc;
        for (std::size_t i = 1; i <= k; ++i) acc += s[i] * g[k - i];
        g[k] = -acc.value() / s[0];
    }
    return PowerSeries(std::move(g));
}

PowerSeries series_log_derivative(const PowerSeries& s) {
    if (s.coeffs().empty() || s[0] == 0.0) {
        throw DomainError("series_log_derivative: constant term must be nonzero");
    }
    const PowerSeries d = s.derivative();
    // Solve s · q = s' for q, order N-1.
    const std::size_t n = d.coeffs().size();
    std::vector<double> q(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        CompensatedSum acc;
        acc += d[k];
        for (std::size_t i = 1; i <= k; ++i) acc += -s[i] * q[k - i];
        q[k] = acc.value() / s[0];
    }
    return PowerSeries(std::move(q));
}

PowerSeries appell_A_fhp(double alpha, double y, std::size_t order) {
    if (order < 2) throw DomainError("appell_A_fhp: order must be at least 2");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("appell_A_fhp: alpha must lie in (0, 1]");
    std::vector<double> c(order + 1, 0.0);
    for (std::size_t k = 0; k <= order; k += 2) {
        const double r = static_cast<double>(k / 2);
        c[k] = std::pow(y, r) * rgamma(1.0 + alpha * r);
    }
    return PowerSeries(std::move(c));
}

PowerSeries appell_A_fhp_derivative_wiman(double alpha, double y, std::size_t order) {
    if (order < 2) throw DomainError("appell_A_fhp_derivative_wiman: order must be at least 2");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("appell_A_fhp_derivative_wiman: alpha must lie in (0, 1]");
    // E_{α,0}(yλ²) = Σ_r y^r λ^{2r} / Γ(αr); the r = 0 term vanishes.
    std::vector<double> c(order, 0.0);
    for (std::size_t k = 2; k <= order; k += 2) {
        const double r = static_cast<double>(k / 2);
        c[k - 1] = 2.0 / alpha * std::pow(y, r) * rgamma(alpha * r);
    }
    return PowerSeries(std::move(c));
}

PowerSeries appell_A_mlp(double alpha, double beta, double x, std::size_t order) {
    if (order < 1) throw DomainError("appell_A_mlp: order must be at least 1");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("appell_A_mlp: alpha and beta must be positive");
    std::vector<double> c(order + 1, 0.0);
    for (std::size_t k = 0; k <= order; ++k) {
        const double r = static_cast<double>(k);
        c[k] = std::pow(-x, r) / factorial(static_cast<int>(k)) * rgamma(beta + alpha * r);
    }
    return PowerSeries(std::move(c));
}

AppellAuxiliary::AppellAuxiliary(Fn a, Fn a_prime)
    : a_(std::move(a)),
      a_prime_(std::move(a_prime)),
      b_([](double l) { return l; }),
      b_prime_([](double) { return 1.0; }),
      b_inverse_([](double u) { return u; }) {}

double AppellAuxiliary::q(double x) const { return b_prime_(b_inverse_(x - 1.0)); }

double AppellAuxiliary::v(double x) const {
    const double u = b_inverse_(x - 1.0);
    const double denom = a_(u);
    if (denom == 0.0) throw DomainError("AppellAuxiliary::v: A vanishes at the base point");
    return a_prime_(u) / denom;
}

double AppellAuxiliary::T(double lambda, double x) const { return b_(lambda + b_inverse_(x - 1.0)) + 1.0; }

double AppellAuxiliary::h(double lambda, double x) const {
    const double u = b_inverse_(x - 1.0);
    const double denom = a_(u);
    if (denom == 0.0) throw DomainError("AppellAuxiliary::h: A vanishes at the base point");
    return a_(lambda + u) / denom;
}

AuxValues aux_v_h_fhp(double lambda, double x, double alpha, double y, const SeriesConfig& cfg) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("aux_v_h_fhp: alpha must lie in (0, 1]");
    if (x == 1.0) throw DomainError("aux_v_h_fhp: v has a pole at x = 1");
    const AppellAuxiliary aux(
        [&](double u) { return ml_one(alpha, y * u * u, cfg).value; },
        [&](double u) { return 2.0 / (alpha * u) * ml_two(alpha, 0.0, y * u * u, cfg).value; });
    return {aux.v(x), aux.h(lambda, x)};
}

AuxValues aux_v_h_mlp(double lambda, double y, double alpha, double beta, double x, const SeriesConfig& cfg) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("aux_v_h_mlp: alpha and beta must be positive");
    const AppellAuxiliary aux(
        [&](double u) { return wright(alpha, beta, -x * u, cfg).value; },
        [&](double u) { return -x * wright(alpha, beta + alpha, -x * u, cfg).value; });
    return {aux.v(y), aux.h(lambda, y)};
}

FracPoly lowering_apply(const FracPoly& p) {
    if (!p.has_integer_exponents()) throw DomainError("lowering_apply: exponents must be integers");
    return p.derivative();
}

FracPoly raising_apply(const FracPoly& p, const PowerSeries& log_deriv_g) {
    if (!p.has_integer_exponents()) throw DomainError("raising_apply: exponents must be integers");
    const auto degree = static_cast<std::size_t>(p.degree());
    if (log_deriv_g.coeffs().size() <= degree) {
        throw DomainError("raising_apply: series order " + std::to_string(log_deriv_g.order()) +
                          " below polynomial degree " + std::to_string(degree));
    }
    FracPoly out = p.times_x();
    FracPoly dk = p;
    for (std::size_t k = 0; k <= degree && !dk.empty(); ++k) {
        if (k > 0) dk = dk.derivative();
        out -= dk * log_deriv_g[k];
    }
    return out;
}

}  // namespace mlpoly
