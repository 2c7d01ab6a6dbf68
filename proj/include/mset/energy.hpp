#ifndef MSET_ENERGY_HPP
#define MSET_ENERGY_HPP

#include <cstddef>

#include "mset/configuration.hpp"
#include "mset/potential.hpp"
#include "mset/sequence.hpp"

namespace mset {

/// Sum of f over the rho-values of all unordered pairs, accumulated with
/// compensated summation. A rho-value outside f's domain raises DomainError
/// naming the pair.
double pair_energy(const SphericalConfiguration& x, const DistanceFunctional& rho,
                   const PotentialFunction& f);

/// Riesz t-energy, t >= 0: sum of ||p_i - p_j||^{-t} over pairs, with the
/// logarithmic kernel sum log(1/||p_i - p_j||) at t = 0. Coincident points
/// raise SingularityError.
double riesz_energy(const SphericalConfiguration& x, double t);

/// Sum of f over the extremal sequence of T. For f convex decreasing this
/// lower-bounds the pair energy of every configuration whose ascending
/// profile prefix sums are bounded by T.
double lower_bound_from_constraints(const ConstraintVector& t, const PotentialFunction& f);

/// C(m,2) * f(2m/(m-1)): a lower bound on the sum of f over squared pair
/// distances for any m points on any unit sphere, attained by the regular
/// simplex when it fits. f is a convex decreasing function of squared
/// distance; m >= 2.
double simplex_energy_bound(std::size_t m, const PotentialFunction& f);

struct CircleProfileReport {
    /// compare(angular profile of the regular m-gon, angular profile of X).
    MajorizationOrder dominated_by_polygon;
    RealSequence polygon_profile;
    RealSequence configuration_profile;
};

/// For a configuration on the unit circle (ambient dimension 2): compares
/// the regular polygon's angular profile against the configuration's. The
/// result is always Dominates or Equal.
CircleProfileReport circle_profile_bound(const SphericalConfiguration& x);

}  // namespace mset

#endif  // MSET_ENERGY_HPP
