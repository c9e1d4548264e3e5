#pragma once

#include <cmath>

namespace mlpoly {

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures the error when the incoming term is larger than the sum.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double term) noexcept {
        const double t = sum_ + term;
        if (std::fabs(sum_) >= std::fabs(term)) {
            compensation_ += (sum_ - t) + term;
        } else {
            compensation_ += (term - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace mlpoly
