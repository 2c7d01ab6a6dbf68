#include "mset/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mset/errors.hpp"
#include "mset/summation.hpp"

namespace mset {

namespace {

double comparison_slack(const std::vector<double>& sa, const std::vector<double>& sb,
                        double rel_tol) {
    double scale = 0.0;
    for (double v : sa) scale = std::max(scale, std::abs(v));
    for (double v : sb) scale = std::max(scale, std::abs(v));
    return std::max(kCompareAbsFloor, rel_tol * scale);
}

}  // namespace

const char* to_string(MajorizationOrder order) {
    switch (order) {
        case MajorizationOrder::Dominates: return "DOMINATES";
        case MajorizationOrder::Dominated: return "DOMINATED";
        case MajorizationOrder::Equal: return "EQUAL";
        case MajorizationOrder::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

RealSequence::RealSequence(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw DomainError("sequence must contain at least one value");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            std::ostringstream msg;
            msg << "sequence value at index " << i << " is not finite";
            throw DomainError(msg.str());
        }
    }
    sorted_ = values_;
    std::sort(sorted_.begin(), sorted_.end());
    prefix_.resize(sorted_.size());
    CompensatedSum acc;
    for (std::size_t i = 0; i < sorted_.size(); ++i) {
        acc.add(sorted_[i]);
        prefix_[i] = acc.value();
    }
}

double RealSequence::prefix_sum(std::size_t k) const {
    if (k < 1 || k > prefix_.size()) {
        std::ostringstream msg;
        msg << "prefix index " << k << " outside 1.." << prefix_.size();
        throw RangeError(msg.str());
    }
    return prefix_[k - 1];
}

ConstraintVector::ConstraintVector(std::vector<double> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.empty()) {
        throw DomainError("constraint vector must contain at least one bound");
    }
    double scale = 0.0;
    for (double v : bounds_) {
        if (!std::isfinite(v)) {
            throw DomainError("constraint bounds must be finite");
        }
        scale = std::max(scale, std::abs(v));
    }
    const double slack = std::max(kCompareAbsFloor, kCompareRelTol * scale);
    for (std::size_t i = 1; i < bounds_.size(); ++i) {
        if (bounds_[i] < bounds_[i - 1] - slack) {
            std::ostringstream msg;
            msg << "constraint bounds must be non-decreasing: T[" << i << "] = " << bounds_[i]
                << " < T[" << i - 1 << "] = " << bounds_[i - 1];
            throw DomainError(msg.str());
        }
    }
}

MajorizationOrder compare(const RealSequence& a, const RealSequence& b, double rel_tol) {
    if (a.size() != b.size()) {
        std::ostringstream msg;
        msg << "cannot compare sequences of lengths " << a.size() << " and " << b.size();
        throw DimensionError(msg.str());
    }
    if (rel_tol < 0.0) {
        throw DomainError("comparison tolerance must be nonnegative");
    }
    const auto& sa = a.prefix_sums();
    const auto& sb = b.prefix_sums();
    const double slack = comparison_slack(sa, sb, rel_tol);

    // Sorted-view agreement is decided before domination.
    bool entrywise_equal = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.sorted_view()[i] - b.sorted_view()[i]) > slack) {
            entrywise_equal = false;
            break;
        }
    }
    if (entrywise_equal) return MajorizationOrder::Equal;

    bool ge_all = true;
    bool le_all = true;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        const double d = sa[k] - sb[k];
        if (d < -slack) ge_all = false;
        if (d > slack) le_all = false;
        if (!ge_all && !le_all) return MajorizationOrder::Incomparable;
    }
    if (ge_all && le_all) return MajorizationOrder::Equal;
    return ge_all ? MajorizationOrder::Dominates : MajorizationOrder::Dominated;
}

RealSequence extremal_sequence(const ConstraintVector& t) {
    const auto& bounds = t.bounds();
    const std::size_t m = bounds.size();
    std::vector<double> y(m);
    double used = 0.0;  // y_1 + ... + y_{i-1}
    for (std::size_t i = 0; i < m; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = i; k < m; ++k) {
            best = std::min(best, (bounds[k] - used) / static_cast<double>(k - i + 1));
        }
        y[i] = best;
        used += best;
    }
    return RealSequence(std::move(y));
}

bool is_in_constraint_set(const RealSequence& a, const ConstraintVector& t, double rel_tol) {
    if (a.size() != t.size()) {
        std::ostringstream msg;
        msg << "sequence of length " << a.size() << " against " << t.size() << " bounds";
        throw DimensionError(msg.str());
    }
    const auto& prefix = a.prefix_sums();
    const double slack = comparison_slack(prefix, t.bounds(), rel_tol);
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        if (prefix[k] > t.bounds()[k] + slack) return false;
    }
    return true;
}

KaramataReport karamata_check(const RealSequence& a, const RealSequence& b,
                              const PotentialFunction& f, double rel_tol) {
    const MajorizationOrder order = compare(a, b, rel_tol);
    CompensatedSum sum_a;
    for (double v : a.values()) sum_a.add(f(v));
    CompensatedSum sum_b;
    for (double v : b.values()) sum_b.add(f(v));
    const double sa = sum_a.value();
    const double sb = sum_b.value();
    const double slack =
        std::max(kCompareAbsFloor, rel_tol * std::max({std::abs(sa), std::abs(sb), 1.0}));
    return KaramataReport{order, sa, sb, sa <= sb + slack};
}

}  // namespace mset
