#ifndef MSET_SUMMATION_HPP
#define MSET_SUMMATION_HPP

#include <cmath>

namespace mset {

/// Kahan-Babuska (Neumaier) compensated accumulator. Deterministic for a
/// fixed insertion order; used for all pair-energy and moment sums.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace mset

#endif  // MSET_SUMMATION_HPP
