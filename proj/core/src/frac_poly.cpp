#include "mlpoly/frac_poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlpoly/errors.hpp"

namespace mlpoly {
namespace {

constexpr double kTol = defaults::exponent_merge_tol;

double canonical_exponent(double mu) {
    if (!std::isfinite(mu)) throw DomainError("FracPoly: exponent must be finite");
    const double nearest = std::round(mu);
    if (std::fabs(mu - nearest) <= kTol * std::max(1.0, std::fabs(mu))) mu = nearest;
    if (mu < 0.0) {
        throw DomainError("FracPoly: negative exponent " + std::to_string(mu));
    }
    return mu;
}

bool is_integer(double mu) { return std::floor(mu) == mu; }

}  // namespace

bool same_exponent(double a, double b) noexcept {
    return std::fabs(a - b) <= kTol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

FracPoly::FracPoly(std::initializer_list<Monomial> terms) : terms_(terms) { normalize(); }

FracPoly::FracPoly(std::vector<Monomial> terms) : terms_(std::move(terms)) { normalize(); }

FracPoly FracPoly::constant(double c) { return FracPoly{{c, 0.0}}; }

FracPoly FracPoly::monomial(double coeff, double exponent) { return FracPoly{{coeff, exponent}}; }

void FracPoly::normalize() {
    std::vector<Monomial> merged;
    merged.reserve(terms_.size());
    for (const Monomial& m : terms_) {
        if (!std::isfinite(m.coeff)) throw DomainError("FracPoly: coefficient must be finite");
        const double mu = canonical_exponent(m.exponent);
        auto it = std::find_if(merged.begin(), merged.end(),
                               [mu](const Monomial& o) { return same_exponent(o.exponent, mu); });
        if (it == merged.end()) {
            merged.push_back({m.coeff, mu});
        } else {
            it->coeff += m.coeff;
        }
    }
    std::erase_if(merged, [](const Monomial& m) { return m.coeff == 0.0; });
    std::sort(merged.begin(), merged.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponent < b.exponent; });
    terms_ = std::move(merged);
}

double FracPoly::coeff(double exponent) const {
    for (const Monomial& m : terms_) {
        if (same_exponent(m.exponent, exponent)) return m.coeff;
    }
    return 0.0;
}

double FracPoly::degree() const noexcept { return terms_.empty() ? 0.0 : terms_.back().exponent; }

bool FracPoly::has_integer_exponents() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const Monomial& m) { return is_integer(m.exponent); });
}

double FracPoly::evaluate(double x) const {
    double s = 0.0;
    for (const Monomial& m : terms_) {
        if (x < 0.0 && !is_integer(m.exponent)) {
            throw DomainError("FracPoly::evaluate: x < 0 with non-integer exponent");
        }
        s += m.coeff * std::pow(x, m.exponent);
    }
    return s;
}

FracPoly& FracPoly::drop_small(double drop_tol) {
    std::erase_if(terms_, [drop_tol](const Monomial& m) { return std::fabs(m.coeff) <= drop_tol; });
    return *this;
}

FracPoly FracPoly::map_terms(const std::function<Monomial(const Monomial&)>& f) const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const Monomial& m : terms_) out.push_back(f(m));
    return FracPoly(std::move(out));
}

FracPoly FracPoly::derivative() const {
    return map_terms([](const Monomial& m) -> Monomial {
        if (m.exponent == 0.0) return {0.0, 0.0};
        if (m.exponent < 1.0) {
            throw DomainError("FracPoly::derivative: exponent " + std::to_string(m.exponent) +
                              " would become negative");
        }
        return {m.coeff * m.exponent, m.exponent - 1.0};
    });
}

FracPoly FracPoly::times_x() const {
    return map_terms([](const Monomial& m) -> Monomial { return {m.coeff, m.exponent + 1.0}; });
}

FracPoly& FracPoly::operator+=(const FracPoly& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& other) {
    for (const Monomial& m : other.terms_) terms_.push_back({-m.coeff, m.exponent});
    normalize();
    return *this;
}

FracPoly& FracPoly::operator*=(double s) {
    for (Monomial& m : terms_) m.coeff *= s;
    normalize();
    return *this;
}

FracPoly FracPoly::operator*(const FracPoly& other) const {
    std::vector<Monomial> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const Monomial& a : terms_) {
        for (const Monomial& b : other.terms_) out.push_back({a.coeff * b.coeff, a.exponent + b.exponent});
    }
    return FracPoly(std::move(out));
}

double max_coeff_diff(const FracPoly& a, const FracPoly& b) {
    const FracPoly d = a - b;
    double worst = 0.0;
    for (const Monomial& m : d.terms()) worst = std::max(worst, std::fabs(m.coeff));
    return worst;
}

double max_coeff_rel_diff(const FracPoly& a, const FracPoly& b, double floor) {
    double worst = 0.0;
    auto visit = [&](double mu) {
        const double ca = a.coeff(mu);
        const double cb = b.coeff(mu);
        const double scale = std::max({std::fabs(ca), std::fabs(cb), floor});
        worst = std::max(worst, std::fabs(ca - cb) / scale);
    };
    for (const Monomial& m : a.terms()) visit(m.exponent);
    for (const Monomial& m : b.terms()) visit(m.exponent);
    return worst;
}

// ---------------------------------------------------------------------------

FracPoly2::FracPoly2(std::vector<Monomial2> terms) : terms_(std::move(terms)) { normalize(); }

void FracPoly2::normalize() {
    std::vector<Monomial2> merged;
    merged.reserve(terms_.size());
    for (const Monomial2& m : terms_) {
        if (!std::isfinite(m.coeff)) throw DomainError("FracPoly2: coefficient must be finite");
        const double ex = canonical_exponent(m.ex);
        const double ey = canonical_exponent(m.ey);
        auto it = std::find_if(merged.begin(), merged.end(), [&](const Monomial2& o) {
            return same_exponent(o.ex, ex) && same_exponent(o.ey, ey);
        });
        if (it == merged.end()) {
            merged.push_back({m.coeff, ex, ey});
        } else {
            it->coeff += m.coeff;
        }
    }
    std::erase_if(merged, [](const Monomial2& m) { return m.coeff == 0.0; });
    std::sort(merged.begin(), merged.end(), [](const Monomial2& a, const Monomial2& b) {
        return a.ex != b.ex ? a.ex < b.ex : a.ey < b.ey;
    });
    terms_ = std::move(merged);
}

double FracPoly2::coeff(double ex, double ey) const {
    for (const Monomial2& m : terms_) {
        if (same_exponent(m.ex, ex) && same_exponent(m.ey, ey)) return m.coeff;
    }
    return 0.0;
}

double FracPoly2::evaluate(double x, double y) const {
    double s = 0.0;
    for (const Monomial2& m : terms_) {
        if ((x < 0.0 && !is_integer(m.ex)) || (y < 0.0 && !is_integer(m.ey))) {
            throw DomainError("FracPoly2::evaluate: negative base with non-integer exponent");
        }
        s += m.coeff * std::pow(x, m.ex) * std::pow(y, m.ey);
    }
    return s;
}

FracPoly2 FracPoly2::map_x(const std::function<Monomial(const Monomial&)>& f) const {
    std::vector<Monomial2> out;
    out.reserve(terms_.size());
    for (const Monomial2& m : terms_) {
        const Monomial img = f({m.coeff, m.ex});
        out.push_back({img.coeff, img.exponent, m.ey});
    }
    return FracPoly2(std::move(out));
}

FracPoly2 FracPoly2::map_y(const std::function<Monomial(const Monomial&)>& f) const {
    std::vector<Monomial2> out;
    out.reserve(terms_.size());
    for (const Monomial2& m : terms_) {
        const Monomial img = f({m.coeff, m.ey});
        out.push_back({img.coeff, m.ex, img.exponent});
    }
    return FracPoly2(std::move(out));
}

FracPoly FracPoly2::slice_x(double ex) const {
    std::vector<Monomial> out;
    for (const Monomial2& m : terms_) {
        if (same_exponent(m.ex, ex)) out.push_back({m.coeff, m.ey});
    }
    return FracPoly(std::move(out));
}

FracPoly2& FracPoly2::operator+=(const FracPoly2& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

FracPoly2& FracPoly2::operator-=(const FracPoly2& other) {
    for (const Monomial2& m : other.terms_) terms_.push_back({-m.coeff, m.ex, m.ey});
    normalize();
    return *this;
}

FracPoly2& FracPoly2::operator*=(double s) {
    for (Monomial2& m : terms_) m.coeff *= s;
    normalize();
    return *this;
}

double max_abs_coeff(const FracPoly2& p) {
    double worst = 0.0;
    for (const Monomial2& m : p.terms()) worst = std::max(worst, std::fabs(m.coeff));
    return worst;
}

double max_coeff_diff(const FracPoly2& a, const FracPoly2& b) { return max_abs_coeff(a - b); }

}  // namespace mlpoly
