#ifndef MSET_HARMONIC_HPP
#define MSET_HARMONIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mset/configuration.hpp"
#include "mset/sequence.hpp"

namespace mset {

/// Moment-zero tolerance: |M_k| <= tol * m^2 counts as vanishing.
inline constexpr double kDesignTol = 1e-8;
/// Default maximum polynomial degree for the basis change.
inline constexpr std::size_t kMaxExpansionDegree = 64;

/// Real polynomial in t, monomial coefficients low-to-high. Trailing zero
/// coefficients are trimmed so the leading coefficient is nonzero (the zero
/// polynomial keeps a single zero coefficient).
class PolynomialInT {
public:
    explicit PolynomialInT(std::vector<double> coeffs);

    double operator()(double t) const;  // Horner evaluation
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    PolynomialInT operator*(const PolynomialInT& other) const;

private:
    std::vector<double> coeffs_;
};

/// Gegenbauer polynomial G_k for S^{n-1}, normalized so G_k(1) = 1, via the
/// three-term recurrence
///   G_k = ((2k+n-4) t G_{k-1} - (k-1) G_{k-2}) / (k+n-3),
/// with G_0 = 1, G_1 = t. Requires n >= 2.
double gegenbauer_eval(std::size_t n, std::size_t k, double t);

/// All of G_0(t)..G_kmax(t) in one recurrence pass.
std::vector<double> gegenbauer_all(std::size_t n, std::size_t kmax, double t);

/// Monomial coefficients of G_k (computed exactly, rounded once to double).
std::vector<double> gegenbauer_monomial_coeffs(std::size_t n, std::size_t k);

/// Coefficients f_0..f_d of a function in the Gegenbauer basis for a fixed
/// dimension.
class GegenbauerExpansion {
public:
    GegenbauerExpansion(std::size_t dimension, std::vector<double> coeffs);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    double coefficient(std::size_t k) const;
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    double evaluate(double t) const;

private:
    std::size_t dim_;
    std::vector<double> coeffs_;
};

/// Change of basis monomial -> Gegenbauer by back-substitution against the
/// recurrence-generated monomial forms of G_k. Every finite double is a
/// rational number, so the computation runs in exact rational arithmetic and
/// rounds once on output.
GegenbauerExpansion to_gegenbauer(const PolynomialInT& p, std::size_t n,
                                  std::size_t max_degree = kMaxExpansionDegree);
PolynomialInT from_gegenbauer(const GegenbauerExpansion& e);

/// Moments M_k(P) = sum over all ordered pairs (diagonal included) of
/// G_k at the Gram entries. M_0 = m^2 by definition.
class MomentVector {
public:
    MomentVector(std::vector<double> m1_to_kmax, std::size_t configuration_size);

    std::size_t kmax() const noexcept { return values_.size(); }
    std::size_t configuration_size() const noexcept { return m_; }

    /// M_k for k = 0..kmax; k = 0 returns m^2 exactly.
    double moment(std::size_t k) const;
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::vector<double> values_;  // M_1..M_kmax
    std::size_t m_;
};

MomentVector moments(const SphericalConfiguration& p, std::size_t kmax);

/// Real roots of f in [-1, 1): sign-change bisection on a uniform grid.
/// Roots of even multiplicity are invisible to the sign scan; design
/// certification therefore also admits clustered inner products verified
/// directly by |f| <= tol.
std::vector<double> zf_roots(const PolynomialInT& f, std::size_t grid = 4096);

struct DesignCertificate {
    enum class Kind { FDesign, TauDesign, HarmonicIndex };

    Kind kind;
    bool passed;
    /// Per-k residuals: (k, |f_k * M_k|) for f-design checks, (k, |M_k|)
    /// for the moment-only kinds. Vanishing means residual <= tol * m^2
    /// (times |f_k| where applicable).
    std::vector<std::pair<std::size_t, double>> condition_1_residuals;
    /// Inner products d in D(P) with |f(d)| > tol.
    std::vector<double> condition_2_violations;
    /// {f(1), m * f_0}; present for f-design certificates only.
    std::optional<std::pair<double, double>> consistency;
    bool consistency_ok;
};

/// Certifies P as an f-design: (1) M_k(P) = 0 for every k > 0 carried by f,
/// and (2) every distinct inner product of P is a root of f. Also records
/// the f(1) = m * f_0 consistency identity. Coincident points are rejected.
/// All failures are reported in the certificate, never thrown.
DesignCertificate certify_f_design(const SphericalConfiguration& p, const PolynomialInT& f,
                                   double tol = kDesignTol);

/// M_k(P) = 0 for k = 1..tau.
DesignCertificate certify_tau_design(const SphericalConfiguration& p, std::size_t tau,
                                     double tol = kDesignTol);

/// M_k(P) = 0 for every k in the index set K.
DesignCertificate harmonic_index_check(const SphericalConfiguration& p,
                                       const std::vector<std::size_t>& k_set,
                                       double tol = kDesignTol);

/// Allowed inner products for the Delsarte bound: a finite set or a closed
/// interval within [-1, 1).
using InnerProductSet = std::variant<std::vector<double>, std::pair<double, double>>;

struct DelsarteReport {
    std::optional<double> bound;  // f(1)/f_0, absent when hypotheses fail
    bool hypotheses_ok;
    std::vector<std::string> diagnostics;
    double f0;
    double f_at_1;
};

/// The linear-programming cardinality bound m <= f(1)/f_0 for configurations
/// whose inner products lie in T. Hypotheses (all Gegenbauer coefficients
/// >= 0, f <= 0 on T) are checked on the set elements or a sampled grid plus
/// endpoints and the roots of f; the bound is withheld when they fail.
/// f_0 <= 0 raises DomainError.
DelsarteReport delsarte_bound(const PolynomialInT& f, std::size_t n, const InnerProductSet& t_set,
                              double tol = 1e-9);

struct TwoDistanceReport {
    bool is_two_distance;
    std::size_t distinct_count;
    double a;  // larger inner product (when two-distance)
    double b;  // smaller inner product
    int a_plus_b_sign;  // -1, 0, +1 with |a+b| <= tol counting as 0
    bool is_equiangular;
    /// n(1-a^2)/(1-n a^2); present for equiangular sets with a^2 < 1/n.
    std::optional<double> relative_bound;
    std::size_t absolute_bound;  // n(n+1)/2
    /// a+b >= 0 (so the absolute bound applies) and m attains it.
    bool meets_absolute;
};

TwoDistanceReport two_distance_analysis(const SphericalConfiguration& p,
                                        double cluster_tol = kDefaultClusterTol);

/// g(t) times the product of (t - x) over the distinct inner products of P.
/// Certifying the result against P realizes the design property whenever P
/// is a tau-design with tau >= |D(P)| + deg g.
PolynomialInT build_annihilator(const SphericalConfiguration& p, const PolynomialInT& g,
                                double cluster_tol = kDefaultClusterTol);

struct FDesignGapReport {
    double gap;  // (m f(1) - S_f(Y)) / 2, nonpositive up to rounding
    MajorizationOrder order;  // compare(zero profile of P, profile of Y)
    bool dominated;           // order is Dominates or Equal
};

/// For P certified as an f-design with nonnegative Gegenbauer coefficients
/// and any same-size Y: the energy gap under rho(x,y) = -f(x.y) is
/// nonpositive and P's all-zero profile weakly majorizes Y's. Hypothesis
/// failures (negative coefficient, certification failure) raise DomainError
/// with a diagnostic.
FDesignGapReport fdesign_mset_gap(const SphericalConfiguration& p, const PolynomialInT& f,
                                  const SphericalConfiguration& y, double tol = kDesignTol);

}  // namespace mset

#endif  // MSET_HARMONIC_HPP
