#pragma once

#include <cmath>

namespace ringdecay::detail {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double value)
    {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value))
            carry_ += (sum_ - t) + value;
        else
            carry_ += (value - t) + sum_;
        sum_ = t;
    }

    void scale(double factor)
    {
        sum_ *= factor;
        carry_ *= factor;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace ringdecay::detail
