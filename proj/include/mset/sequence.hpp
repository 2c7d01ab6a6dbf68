#ifndef MSET_SEQUENCE_HPP
#define MSET_SEQUENCE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mset/potential.hpp"

namespace mset {

/// Relative tolerance for prefix-sum comparisons, scaled by the largest
/// absolute prefix sum of either operand.
inline constexpr double kCompareRelTol = 1e-9;
/// Absolute floor for the comparison slack.
inline constexpr double kCompareAbsFloor = 1e-12;

/// Outcome of the weak-majorization comparison between two sequences.
enum class MajorizationOrder { Dominates, Dominated, Equal, Incomparable };

const char* to_string(MajorizationOrder order);

/// A finite sequence of real values. Construction validates finiteness and
/// precomputes the non-decreasing sorted view together with its prefix sums
/// (prefix k = sum of the k smallest values). Immutable after construction.
class RealSequence {
public:
    explicit RealSequence(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<double>& sorted_view() const noexcept { return sorted_; }

    /// prefix_sums()[k-1] = sum of the k smallest values, k = 1..size().
    const std::vector<double>& prefix_sums() const noexcept { return prefix_; }
    double prefix_sum(std::size_t k) const;

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
    std::vector<double> prefix_;
};

/// Non-decreasing bounds T_1 <= ... <= T_m on ascending prefix sums.
class ConstraintVector {
public:
    explicit ConstraintVector(std::vector<double> bounds);

    std::size_t size() const noexcept { return bounds_.size(); }
    const std::vector<double>& bounds() const noexcept { return bounds_; }

private:
    std::vector<double> bounds_;
};

/// Weak-majorization comparison: a Dominates b when every ascending prefix
/// sum of a is >= the corresponding prefix sum of b (up to slack). Equality
/// of the sorted views is decided first, so Equal never reports as
/// Dominates. Prefix sums that coincide within slack in both directions also
/// classify as Equal, which keeps the order antisymmetric under swaps.
MajorizationOrder compare(const RealSequence& a, const RealSequence& b,
                          double rel_tol = kCompareRelTol);

/// The iterated-minimum extremal sequence of a constraint vector:
///   y_i = min over k >= i of (T_k - y_1 - ... - y_{i-1}) / (k - i + 1).
/// The result is a member of the constraint set that weakly majorizes every
/// other member. When several k attain the minimum only the value matters,
/// so no tie-breaking rule is needed.
RealSequence extremal_sequence(const ConstraintVector& t);

/// True iff every ascending prefix sum of a is <= the matching bound.
bool is_in_constraint_set(const RealSequence& a, const ConstraintVector& t,
                          double rel_tol = kCompareRelTol);

struct KaramataReport {
    MajorizationOrder order;
    double sum_a;
    double sum_b;
    /// sum_a <= sum_b + slack. Meaningful as the majorization inequality
    /// when order is Dominates and f is convex decreasing.
    bool inequality_holds;
};

/// Evaluates both sums of f over the sequences and reports whether the
/// majorization inequality holds. Values outside f's domain raise
/// DomainError.
KaramataReport karamata_check(const RealSequence& a, const RealSequence& b,
                              const PotentialFunction& f,
                              double rel_tol = kCompareRelTol);

}  // namespace mset

#endif  // MSET_SEQUENCE_HPP
