#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "mlpoly/config.hpp"

namespace mlpoly {

/// c · x^μ with μ >= 0.
struct Monomial {
    double coeff = 0.0;
    double exponent = 0.0;
};

/// Finite sum Σ c_i x^{μ_i} with real exponents μ_i >= 0.
///
/// Terms are kept sorted by strictly increasing exponent. Exponents closer
/// than `defaults::exponent_merge_tol` are merged, exponents within that
/// distance of zero are snapped to zero, and zero coefficients are removed.
class FracPoly {
public:
    FracPoly() = default;
    FracPoly(std::initializer_list<Monomial> terms);
    explicit FracPoly(std::vector<Monomial> terms);

    static FracPoly constant(double c);
    static FracPoly monomial(double coeff, double exponent);

    std::span<const Monomial> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Coefficient of x^μ (0 if absent).
    double coeff(double exponent) const;
    /// Largest exponent, 0 for the zero polynomial.
    double degree() const noexcept;
    bool has_integer_exponents() const noexcept;

    /// Throws DomainError for x < 0 when some exponent is not an integer.
    double evaluate(double x) const;

    /// Removes terms whose |coeff| <= drop_tol.
    FracPoly& drop_small(double drop_tol);

    /// Term-wise image under a monomial map; results are renormalized.
    FracPoly map_terms(const std::function<Monomial(const Monomial&)>& f) const;

    /// Ordinary derivative d/dx. Requires every exponent to be 0 or >= 1.
    FracPoly derivative() const;
    /// x · p(x)
    FracPoly times_x() const;

    FracPoly& operator+=(const FracPoly& other);
    FracPoly& operator-=(const FracPoly& other);
    FracPoly& operator*=(double s);

    friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
    friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
    friend FracPoly operator*(FracPoly a, double s) { return a *= s; }
    friend FracPoly operator*(double s, FracPoly a) { return a *= s; }
    FracPoly operator*(const FracPoly& other) const;

private:
    void normalize();

    std::vector<Monomial> terms_;
};

/// Largest coefficient-wise |a - b| over the union of exponents.
double max_coeff_diff(const FracPoly& a, const FracPoly& b);

/// Largest coefficient-wise |a - b| / max(|a|, |b|, floor).
double max_coeff_rel_diff(const FracPoly& a, const FracPoly& b, double floor = defaults::identity_abs_floor);

/// c · x^μ · y^ν
struct Monomial2 {
    double coeff = 0.0;
    double ex = 0.0;
    double ey = 0.0;
};

/// Bivariate generalized polynomial Σ c_i x^{μ_i} y^{ν_i}, sorted by (μ, ν).
/// Used for solution tables in (x, t).
class FracPoly2 {
public:
    FracPoly2() = default;
    explicit FracPoly2(std::vector<Monomial2> terms);

    std::span<const Monomial2> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    double coeff(double ex, double ey) const;
    double evaluate(double x, double y) const;

    /// Applies a univariate monomial map to the x (resp. y) factor of every term.
    FracPoly2 map_x(const std::function<Monomial(const Monomial&)>& f) const;
    FracPoly2 map_y(const std::function<Monomial(const Monomial&)>& f) const;

    /// Collects the terms as a polynomial in y, for fixed x-exponent.
    FracPoly slice_x(double ex) const;

    FracPoly2& operator+=(const FracPoly2& other);
    FracPoly2& operator-=(const FracPoly2& other);
    FracPoly2& operator*=(double s);

    friend FracPoly2 operator-(FracPoly2 a, const FracPoly2& b) { return a -= b; }
    friend FracPoly2 operator*(double s, FracPoly2 a) { return a *= s; }

private:
    void normalize();

    std::vector<Monomial2> terms_;
};

double max_coeff_diff(const FracPoly2& a, const FracPoly2& b);
/// max |c_i| over all terms, 0 for the zero polynomial.
double max_abs_coeff(const FracPoly2& p);

/// True when |a - b| <= defaults::exponent_merge_tol · max(1, |a|, |b|).
bool same_exponent(double a, double b) noexcept;

}  // namespace mlpoly
