#include "mlpoly/fractional_hermite.hpp"

#include <cmath>

#include "mlpoly/errors.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/summation.hpp"

namespace mlpoly {
namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("fractional Hermite: alpha must lie in (0, 1]");
}

void check_n(int n) {
    if (n < 0) throw DomainError("fractional Hermite: n must be nonnegative");
}

// n! / (n-2r)! / Γ(1+αr); the integer part is formed exactly.
double weight(int n, int r, double alpha) {
    return falling_factorial(n, 2 * r) * rgamma(1.0 + alpha * r);
}

}  // namespace

void HermiteSpec::validate() const {
    check_n(n);
    check_alpha(alpha);
    if (!std::isfinite(y)) throw DomainError("fractional Hermite: y must be finite");
}

FracPoly fhp_coeffs(const HermiteSpec& spec) {
    spec.validate();
    std::vector<Monomial> terms;
    for (int r = 0; 2 * r <= spec.n; ++r) {
        terms.push_back({weight(spec.n, r, spec.alpha) * std::pow(spec.y, r), static_cast<double>(spec.n - 2 * r)});
    }
    return FracPoly(std::move(terms));
}

FracPoly fhp_coeffs(int n, double alpha, double y) { return fhp_coeffs(HermiteSpec{n, alpha, y}); }

FracPoly2 fhp_bivariate(int n, double alpha, double k) {
    HermiteSpec{n, alpha, k}.validate();
    std::vector<Monomial2> terms;
    for (int r = 0; 2 * r <= n; ++r) {
        terms.push_back({weight(n, r, alpha) * std::pow(k, r), static_cast<double>(n - 2 * r), alpha * r});
    }
    return FracPoly2(std::move(terms));
}

double fhp_eval(int n, double alpha, double x, double y) {
    HermiteSpec{n, alpha, y}.validate();
    CompensatedSum s;
    for (int r = 0; 2 * r <= n; ++r) {
        s += weight(n, r, alpha) * std::pow(x, n - 2 * r) * std::pow(y, r);
    }
    return s.value();
}

double hermite2(int n, double x, double y) { return fhp_eval(n, 1.0, x, y); }

double fhp_at_zero(int n, double alpha, double y) {
    HermiteSpec{n, alpha, y}.validate();
    if (n % 2 != 0) return 0.0;
    const int half = n / 2;
    return factorial(n) * std::pow(y, half) * rgamma(1.0 + alpha * half);
}

double oplus_power(double x, double y, int n, double alpha) {
    check_n(n);
    check_alpha(alpha);
    CompensatedSum s;
    for (int r = 0; r <= n; ++r) {
        s += frac_binom(n, r, alpha) * std::pow(x, n - r) * std::pow(y, r);
    }
    return s.value();
}

double umbral_hermite_shift(int n, double x, double a, double w, double alpha) {
    check_n(n);
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("umbral_hermite_shift: the Levy moment representation needs 0 < alpha < 1");
    }
    CompensatedSum outer;
    for (int r = 0; 2 * r <= n; ++r) {
        // (a + w d_ρ)^r expanded binomially; d_ρ^j acts on M_α(-αρ) at ρ = 0.
        CompensatedSum inner;
        for (int k = 0; k <= r; ++k) {
            const int j = r - k;
            inner += binomial(r, k) * std::pow(a, k) * std::pow(w, j) * stieltjes_moment(alpha, -alpha * j);
        }
        outer += falling_factorial(n, 2 * r) / factorial(r) * std::pow(x, n - 2 * r) * inner.value();
    }
    return outer.value();
}

double convolution_identity_i_rhs(int n, double x, double a, double w, double alpha) {
    check_n(n);
    check_alpha(alpha);
    CompensatedSum s;
    for (int r = 0; 2 * r <= n; ++r) {
        s += falling_factorial(n, 2 * r) / factorial(r) * std::pow(a, r) * fhp_eval(n - 2 * r, alpha, x, w);
    }
    return s.value();
}

double convolution_identity_ii_rhs(int n, double x, double a, double w, double alpha) {
    check_n(n);
    check_alpha(alpha);
    CompensatedSum s;
    for (int r = 0; 2 * r <= n; ++r) {
        s += weight(n, r, alpha) * std::pow(a, r) * fhp_eval(n - 2 * r, alpha, x, w);
    }
    return s.value();
}

double fhp_oplus_eval(int n, double x, double w, double a, double alpha) {
    check_n(n);
    check_alpha(alpha);
    CompensatedSum s;
    for (int r = 0; 2 * r <= n; ++r) {
        s += weight(n, r, alpha) * std::pow(x, n - 2 * r) * oplus_power(w, a, r, alpha);
    }
    return s.value();
}

}  // namespace mlpoly
