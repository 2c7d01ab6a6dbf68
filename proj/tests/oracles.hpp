// Test-only oracles, independent of the library implementation paths they
// check.

#ifndef MSET_TEST_ORACLES_HPP
#define MSET_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

enum class Order { Dominates, Dominated, Equal, Incomparable };

/// Hand prefix-sum comparator: sorts, accumulates with plain sums, compares
/// with a fixed absolute epsilon.
inline Order naive_compare(std::vector<double> a, std::vector<double> b, double eps = 1e-12) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    bool ge = true, le = true;
    double sa = 0.0, sb = 0.0;
    bool entrywise = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > eps) entrywise = false;
        sa += a[i];
        sb += b[i];
        if (sa < sb - eps) ge = false;
        if (sa > sb + eps) le = false;
    }
    if (entrywise || (ge && le)) return Order::Equal;
    if (ge) return Order::Dominates;
    if (le) return Order::Dominated;
    return Order::Incomparable;
}

/// Adaptive Simpson quadrature.
inline double adaptive_simpson_impl(const std::function<double(double)>& f, double a, double b,
                                    double fa, double fm, double fb, double whole, double tol,
                                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson_impl(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_impl(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-11, int depth = 40) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_impl(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Legendre P_k by the Bonnet recurrence (normalized so P_k(1) = 1).
inline double legendre(std::size_t k, double t) {
    if (k == 0) return 1.0;
    if (k == 1) return t;
    double prev2 = 1.0, prev1 = t;
    for (std::size_t j = 2; j <= k; ++j) {
        const double curr =
            ((2.0 * j - 1.0) * t * prev1 - (j - 1.0) * prev2) / static_cast<double>(j);
        prev2 = prev1;
        prev1 = curr;
    }
    return prev1;
}

/// Chebyshev T_k(cos x) = cos(k x).
inline double chebyshev(std::size_t k, double t) {
    return std::cos(static_cast<double>(k) * std::acos(std::clamp(t, -1.0, 1.0)));
}

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t len, double lo,
                                         double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> out(len);
    for (double& v : out) v = u(rng);
    return out;
}

}  // namespace oracles

#endif  // MSET_TEST_ORACLES_HPP
