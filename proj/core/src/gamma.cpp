#include "mlpoly/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mlpoly/errors.hpp"

namespace mlpoly {
namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::floor(x) == x;
}

double lgamma_reentrant(double x) {
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma: argument must be positive and finite, got " + std::to_string(x));
    }
    return lgamma_reentrant(x);
}

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    // Reduce to [-1, 1] exactly; fmod is exact for doubles.
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    // Fold into [-1/2, 1/2] before calling sin.
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

double rgamma(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("rgamma: argument must be finite");
    }
    if (is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) {
        // 1/Γ(x) = Γ(1-x) sin(πx) / π
        return sin_pi(x) * std::exp(lgamma_reentrant(1.0 - x)) / std::numbers::pi;
    }
    return std::exp(-lgamma_reentrant(x));
}

double gamma_ratio(double a, double b) {
    const bool pole_a = is_nonpositive_integer(a);
    const bool pole_b = is_nonpositive_integer(b);
    if (pole_a && pole_b) {
        throw DomainError("gamma_ratio: indeterminate form, both arguments are poles of Gamma");
    }
    if (pole_a) {
        throw DomainError("gamma_ratio: numerator Gamma(" + std::to_string(a) + ") has a pole");
    }
    if (pole_b) return 0.0;
    if (a > 0.0 && b > 0.0) {
        return std::exp(lgamma_reentrant(a) - lgamma_reentrant(b));
    }
    return rgamma(b) / rgamma(a);
}

double factorial(int n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double falling_factorial(int n, int k) {
    double f = 1.0;
    for (int i = 0; i < k; ++i) f *= static_cast<double>(n - i);
    return f;
}

double binomial(int n, int r) {
    if (r < 0 || r > n) throw DomainError("binomial: need 0 <= r <= n");
    if (r > n - r) r = n - r;
    // Each partial product is itself a binomial coefficient, so the division is exact.
    double c = 1.0;
    for (int i = 1; i <= r; ++i) {
        c = c * static_cast<double>(n - r + i) / static_cast<double>(i);
    }
    return c;
}

double frac_binom(int n, int r, double alpha) {
    if (n < 0 || r < 0 || r > n) {
        throw DomainError("frac_binom: need 0 <= r <= n");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("frac_binom: alpha must lie in (0, 1]");
    }
    if (alpha == 1.0) return binomial(n, r);
    const double top = lgamma_reentrant(1.0 + alpha * n);
    // Symmetric in r <-> n-r: the two denominator logs are added first.
    const double bottom = lgamma_reentrant(1.0 + alpha * r) + lgamma_reentrant(1.0 + alpha * (n - r));
    return std::exp(top - bottom);
}

double stieltjes_moment(double alpha, double sigma) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("stieltjes_moment: alpha must lie in (0, 1)");
    }
    if (!std::isfinite(sigma)) throw DomainError("stieltjes_moment: sigma must be finite");
    return gamma_ratio(1.0 - sigma / alpha, 1.0 - sigma);
}

double levy_subordination_moment(double beta, int m, double t) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw DomainError("levy_subordination_moment: beta must lie in (0, 1)");
    }
    if (m < 0) throw DomainError("levy_subordination_moment: m must be nonnegative");
    if (!(t > 0.0)) throw DomainError("levy_subordination_moment: t must be positive");
    const double unit = std::exp(lgamma_reentrant(1.0 + m) - lgamma_reentrant(1.0 + beta * m));
    return unit * std::pow(t, beta * m);
}

}  // namespace mlpoly
