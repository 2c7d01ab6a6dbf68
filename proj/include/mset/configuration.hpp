#ifndef MSET_CONFIGURATION_HPP
#define MSET_CONFIGURATION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mset/sequence.hpp"

namespace mset {

/// Unit-norm validation tolerance for configuration points.
inline constexpr double kUnitNormTol = 1e-9;
/// Pairs closer than this are treated as coincident by singular kernels.
inline constexpr double kCoincidenceTol = 1e-12;
/// Default single-linkage tolerance for clustering inner products.
inline constexpr double kDefaultClusterTol = 1e-6;

/// m unit vectors in R^n (points of the sphere S^{n-1}), stored row-major.
/// Immutable after construction; every point is validated to unit norm
/// within kUnitNormTol.
class SphericalConfiguration {
public:
    SphericalConfiguration(std::size_t dimension, const std::vector<std::vector<double>>& points);

    /// Builds from a flat row-major coordinate array. With normalize=true,
    /// each point is rescaled to unit norm first (zero points are an error).
    static SphericalConfiguration from_flat(std::size_t dimension, std::vector<double> coords,
                                            bool normalize = false);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return count_; }
    std::size_t pair_count() const noexcept { return count_ * (count_ - 1) / 2; }

    std::span<const double> point(std::size_t i) const;
    double inner_product(std::size_t i, std::size_t j) const;
    double distance(std::size_t i, std::size_t j) const;

    const std::vector<double>& flat() const noexcept { return coords_; }

private:
    SphericalConfiguration(std::size_t dimension, std::vector<double> coords, int);

    std::size_t dim_;
    std::size_t count_;
    std::vector<double> coords_;
};

/// The distance functionals rho the profiles are taken under: Euclidean r,
/// squared Euclidean r^2, angular phi = 2*asin(r/2), and the scale family
///   r_s = r^s (s > 0), log r (s = 0), -r^s (s < 0),
/// all symmetric functions of the pair.
class DistanceFunctional {
public:
    enum class Kind { Euclidean, SquaredEuclidean, Angular, Scale };

    static DistanceFunctional euclidean() { return DistanceFunctional(Kind::Euclidean, 0.0); }
    static DistanceFunctional squared_euclidean() { return DistanceFunctional(Kind::SquaredEuclidean, 0.0); }
    static DistanceFunctional angular() { return DistanceFunctional(Kind::Angular, 0.0); }
    static DistanceFunctional scale(double s) { return DistanceFunctional(Kind::Scale, s); }

    Kind kind() const noexcept { return kind_; }
    /// The exponent s; only meaningful for the scale family.
    double exponent() const noexcept { return s_; }

    /// True when the functional is singular at coincident points (s <= 0).
    bool singular_at_coincidence() const noexcept {
        return kind_ == Kind::Scale && s_ <= 0.0;
    }

    double from_euclidean(double r) const;
    std::string name() const;

private:
    DistanceFunctional(Kind k, double s) : kind_(k), s_(s) {}

    Kind kind_;
    double s_;
};

/// The multiset of rho-values over all unordered point pairs, in (i<j)
/// storage order; the sorted view and prefix sums come with RealSequence.
/// Coincident pairs under a singular functional raise SingularityError
/// naming the offending pair.
RealSequence distance_profile(const SphericalConfiguration& x, const DistanceFunctional& rho);

double min_pair_distance(const SphericalConfiguration& x);

/// Membership in the minimum-distance-constrained family: every pair at
/// Euclidean distance >= q0, within tolerance.
bool omega_member(const SphericalConfiguration& x, double q0, double tol = 1e-9);

struct InnerProductCluster {
    double representative;     // cluster mean
    std::size_t multiplicity;  // number of unordered pairs in the cluster
};

/// Gram matrix of a configuration plus the clustered set of distinct
/// off-diagonal inner products (single-linkage, split at gaps larger than
/// the cluster tolerance). Clusters are reported ascending.
class GramSpectrum {
public:
    GramSpectrum(const SphericalConfiguration& x, double cluster_tol);

    std::size_t size() const noexcept { return m_; }
    double entry(std::size_t i, std::size_t j) const;
    const std::vector<InnerProductCluster>& inner_product_set() const noexcept { return clusters_; }
    double cluster_tolerance() const noexcept { return cluster_tol_; }

private:
    std::size_t m_;
    double cluster_tol_;
    std::vector<double> gram_;
    std::vector<InnerProductCluster> clusters_;
};

GramSpectrum gram_spectrum(const SphericalConfiguration& x, double cluster_tol = kDefaultClusterTol);

/// Partition of a configuration into mutually near-orthogonal factors:
/// points i, j join a cluster iff |<p_i, p_j>| > ortho_tol. Each factor
/// reports its cardinality and rank d_i; the decomposition is valid when
/// |S_i| = d_i + 1 for every factor and the ranks sum to the ambient
/// dimension. Invalid decompositions carry the failed condition in
/// `failure` instead of throwing.
struct KuperbergDecomposition {
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<std::size_t> dims;
    bool is_valid;
    std::string failure;
};

KuperbergDecomposition kuperberg_decompose(const SphericalConfiguration& x, double ortho_tol = 1e-6);

}  // namespace mset

#endif  // MSET_CONFIGURATION_HPP
