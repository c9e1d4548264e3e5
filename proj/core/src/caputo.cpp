#include "mlpoly/caputo.hpp"

#include <cmath>
#include <string>

#include "mlpoly/errors.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/summation.hpp"

namespace mlpoly {

CaputoOrder::CaputoOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("Caputo order must lie in (0, 1), got " + std::to_string(alpha));
    }
}

Monomial caputo_monomial(double gamma, CaputoOrder order) {
    const double alpha = order.value();
    if (gamma == 0.0) return {0.0, 0.0};
    // Snap γ to α within the exponent merge tolerance.
    if (same_exponent(gamma, alpha)) return {gamma_ratio(1.0 + alpha, 1.0), 0.0};
    if (!(gamma >= alpha) || !std::isfinite(gamma)) {
        throw DomainError("caputo_monomial: exponent " + std::to_string(gamma) +
                          " lies in (0, alpha) or is invalid");
    }
    return {gamma_ratio(1.0 + gamma, 1.0 + gamma - alpha), gamma - alpha};
}

Monomial caputo_monomial(double gamma, double alpha) { return caputo_monomial(gamma, CaputoOrder(alpha)); }

FracPoly caputo_poly(const FracPoly& p, CaputoOrder order) {
    return p.map_terms([order](const Monomial& m) -> Monomial {
        const Monomial d = caputo_monomial(m.exponent, order);
        return {m.coeff * d.coeff, d.exponent};
    });
}

FracPoly caputo_poly(const FracPoly& p, double alpha) { return caputo_poly(p, CaputoOrder(alpha)); }

double caputo_l1(std::span<const double> samples, double h, double alpha, std::size_t t_index) {
    const CaputoOrder order(alpha);
    if (!(h > 0.0)) throw DomainError("caputo_l1: grid spacing must be positive");
    if (t_index < 2) throw DomainError("caputo_l1: need at least two grid points before t_index");
    if (t_index >= samples.size()) throw DomainError("caputo_l1: t_index outside the sample grid");

    const double one_minus = 1.0 - order.value();
    CompensatedSum acc;
    for (std::size_t j = 0; j < t_index; ++j) {
        const double jd = static_cast<double>(j);
        const double weight = std::pow(jd + 1.0, one_minus) - std::pow(jd, one_minus);
        acc += weight * (samples[t_index - j] - samples[t_index - j - 1]);
    }
    return acc.value() * std::pow(h, -order.value()) * rgamma(2.0 - order.value());
}

double rl_from_caputo(double caputo_value, double g0, double t, double alpha) {
    const CaputoOrder order(alpha);
    if (!(t > 0.0)) throw DomainError("rl_from_caputo: t must be positive");
    return caputo_value + std::pow(t, -order.value()) * g0 * rgamma(1.0 - order.value());
}

FracPoly ml_exponential_truncation(double alpha, double a, int terms) {
    if (terms < 0) throw DomainError("ml_exponential_truncation: negative term count");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(terms));
    for (int r = 0; r < terms; ++r) {
        out.push_back({std::pow(a, r) * rgamma(1.0 + alpha * r), alpha * r});
    }
    return FracPoly(std::move(out));
}

}  // namespace mlpoly
