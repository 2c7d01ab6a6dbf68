#ifndef MSET_GENERATORS_HPP
#define MSET_GENERATORS_HPP

#include <cstddef>
#include <vector>

#include "mset/configuration.hpp"

namespace mset {

// Canonical generators. Closed-form coordinates throughout: polygons sit in
// the x-y plane starting at angle 0, and constructions with a distinguished
// point put it at the north pole (last coordinate 1).

/// Vertices of the regular m-gon on the unit circle, m >= 2.
SphericalConfiguration regular_polygon(std::size_t m);

/// Regular simplex on S^{n-1}: n+1 unit vectors with pairwise inner
/// product -1/n.
SphericalConfiguration regular_simplex(std::size_t n);

/// The 2n points +-e_i on S^{n-1}.
SphericalConfiguration cross_polytope(std::size_t n);

/// Triangular bipyramid on S^2: both poles plus an equatorial equilateral
/// triangle.
SphericalConfiguration triangular_bipyramid();

/// The 24 vertices (+-e_i +- e_j)/sqrt(2) on S^3.
SphericalConfiguration cell24();

/// The n(n+1)/2 points {e_i + e_j : i < j} of R^{n+1}, centered and rescaled
/// onto S^{n-1} (coordinates taken in an orthonormal basis of the sum-zero
/// hyperplane). A two-distance set with inner products (n-3)/(2(n-1)) and
/// -2/(n-1) for n >= 3.
SphericalConfiguration lambda_design(std::size_t n);

/// Triangle on the unit circle with angular side lengths
/// alpha, alpha, 2*pi - 2*alpha; alpha in (0, pi].
SphericalConfiguration isoceles_triangle(double alpha);

/// Quadrilateral on the unit circle with angular side lengths
/// alpha, alpha, alpha, 2*pi - 3*alpha; alpha in (0, 2*pi/3]. The endpoint
/// alpha = 2*pi/3 collapses two vertices.
SphericalConfiguration quadrilateral(double alpha);

/// Tetrahedron on S^2 with opposite edges AC, BD of equal length, midpoints
/// at height +-a on a common axis through the center, and angle theta
/// between the two edges. a in [0, 1], theta in (0, pi].
/// a = 1/sqrt(3), theta = pi/2 is the regular tetrahedron; a = 0,
/// theta = pi/2 is a square in a great circle.
SphericalConfiguration delta_tetrahedron(double a, double theta);

/// Product of mutually orthogonal regular simplices: factor i is a regular
/// d_i-simplex in its own d_i-dimensional coordinate block. Yields
/// sum(d_i) + k points on S^{n-1} with n = sum(d_i); every cross-factor
/// inner product is 0.
SphericalConfiguration simplex_product(const std::vector<std::size_t>& dims);

}  // namespace mset

#endif  // MSET_GENERATORS_HPP
