#ifndef MSET_POTENTIAL_HPP
#define MSET_POTENTIAL_HPP

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace mset {

/// Real interval, possibly unbounded, with independently open endpoints.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    bool contains(double x) const noexcept {
        if (lo_open ? !(x > lo) : !(x >= lo)) return false;
        if (hi_open ? !(x < hi) : !(x <= hi)) return false;
        return true;
    }

    static Interval all() { return {}; }
    static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }
};

/// An evaluable potential f together with caller-declared monotonicity and
/// convexity metadata. The majorization and bound theorems require their
/// hypotheses; the flags record what the caller asserts about f, and
/// sanity_warnings() spot-checks those assertions on a grid.
class PotentialFunction {
public:
    using Evaluator = std::function<double(double)>;

    PotentialFunction(Evaluator f, Interval domain, bool decreasing, bool convex,
                      bool strictly_convex, std::string description);

    /// Evaluates f(x). Throws DomainError if x is outside the declared domain.
    double operator()(double x) const;

    const Interval& domain() const noexcept { return domain_; }
    bool is_decreasing() const noexcept { return decreasing_; }
    bool is_convex() const noexcept { return convex_; }
    bool is_strictly_convex() const noexcept { return strictly_convex_; }
    const std::string& description() const noexcept { return description_; }

    /// Spot-checks the declared flags on a 100-point grid (first differences
    /// for monotonicity, second differences for convexity). Returns one
    /// message per detected inconsistency; empty means the metadata survived.
    std::vector<std::string> sanity_warnings() const;

    /// r -> r^{-t} for t > 0, r -> log(1/r) for t = 0, over Euclidean distance.
    static PotentialFunction riesz(double t);

    /// q -> q^{-t/2}: the same kernel as a function of squared distance.
    static PotentialFunction riesz_squared(double t);

    /// Polynomial in the argument, monomial coefficients low-to-high.
    static PotentialFunction polynomial(std::vector<double> coeffs, Interval domain,
                                        bool decreasing, bool convex, bool strictly_convex);

    static PotentialFunction constant(double c);

private:
    Evaluator eval_;
    Interval domain_;
    bool decreasing_;
    bool convex_;
    bool strictly_convex_;
    std::string description_;
};

}  // namespace mset

#endif  // MSET_POTENTIAL_HPP
