#pragma once

namespace mlpoly {

/// ln Γ(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// 1/Γ(x), entire. Returns exactly 0.0 at x = 0, -1, -2, ...
double rgamma(double x);

/// Γ(a)/Γ(b) through log-gamma differences when both arguments are positive,
/// and through reciprocal gammas otherwise. Throws DomainError when Γ(a) has a
/// pole and Γ(b) does not (the ratio is unbounded).
double gamma_ratio(double a, double b);

/// sin(πx) with exact zeros at the integers.
double sin_pi(double x);

/// Γ(1+αn) / [Γ(1+αr) Γ(1+α(n-r))]; the ordinary binomial coefficient at α = 1.
double frac_binom(int n, int r, double alpha);

/// Ordinary binomial coefficient C(n, r), exact while representable.
double binomial(int n, int r);

/// n! as a double (exact up to 22!).
double factorial(int n);

/// n (n-1) ... (n-k+1), k factors.
double falling_factorial(int n, int k);

/// Stieltjes moment M_α(σ) = Γ(1 - σ/α) / Γ(1 - σ) of the one-sided Lévy
/// stable law, 0 < α < 1. M_α(-ασ) = Γ(1+σ)/Γ(1+ασ).
///
/// Throws DomainError when both Γ arguments sit on poles (0/0) or when only
/// the numerator does (divergent moment).
double stieltjes_moment(double alpha, double sigma);

/// ∫ n_β(s,t) s^m ds = m! t^{βm} / Γ(1+βm), 0 < β < 1, t > 0.
double levy_subordination_moment(double beta, int m, double t);

}  // namespace mlpoly
