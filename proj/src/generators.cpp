#include "mset/generators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mset/errors.hpp"

namespace mset {

namespace {

constexpr double kPi = std::numbers::pi;

/// Component i of the k-th Helmert vector h_k = (1,..,1,-k,0,..,0)/sqrt(k(k+1)),
/// k ones. The h_k for k = 1..n form an orthonormal basis of the sum-zero
/// hyperplane of R^{n+1}.
double helmert(std::size_t k, std::size_t i) {
    const double s = std::sqrt(static_cast<double>(k) * static_cast<double>(k + 1));
    if (i < k) return 1.0 / s;
    if (i == k) return -static_cast<double>(k) / s;
    return 0.0;
}

std::vector<double> circle_points(const std::vector<double>& angles) {
    std::vector<double> flat;
    flat.reserve(2 * angles.size());
    for (double a : angles) {
        flat.push_back(std::cos(a));
        flat.push_back(std::sin(a));
    }
    return flat;
}

}  // namespace

SphericalConfiguration regular_polygon(std::size_t m) {
    if (m < 2) throw RangeError("regular polygon requires m >= 2");
    std::vector<double> angles(m);
    for (std::size_t k = 0; k < m; ++k) {
        angles[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
    }
    return SphericalConfiguration::from_flat(2, circle_points(angles));
}

SphericalConfiguration regular_simplex(std::size_t n) {
    if (n < 1) throw RangeError("regular simplex requires ambient dimension >= 1");
    const std::size_t m = n + 1;
    // Vertex i is e_i of R^{n+1} minus the centroid, rescaled to unit norm,
    // expressed in the Helmert basis of the sum-zero hyperplane; pairwise
    // inner products are exactly -1/n.
    const double scale = std::sqrt(static_cast<double>(m) / static_cast<double>(n));
    std::vector<double> flat(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 1; k <= n; ++k) {
            flat[i * n + (k - 1)] = helmert(k, i) * scale;
        }
    }
    return SphericalConfiguration::from_flat(n, std::move(flat));
}

SphericalConfiguration cross_polytope(std::size_t n) {
    if (n < 1) throw RangeError("cross-polytope requires ambient dimension >= 1");
    std::vector<double> flat(2 * n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        flat[(2 * i) * n + i] = 1.0;
        flat[(2 * i + 1) * n + i] = -1.0;
    }
    return SphericalConfiguration::from_flat(n, std::move(flat));
}

SphericalConfiguration triangular_bipyramid() {
    std::vector<double> flat = {0.0, 0.0, 1.0, 0.0, 0.0, -1.0};
    for (std::size_t k = 0; k < 3; ++k) {
        const double a = 2.0 * kPi * static_cast<double>(k) / 3.0;
        flat.push_back(std::cos(a));
        flat.push_back(std::sin(a));
        flat.push_back(0.0);
    }
    return SphericalConfiguration::from_flat(3, std::move(flat));
}

SphericalConfiguration cell24() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<double> flat;
    flat.reserve(24 * 4);
    for (std::size_t c1 = 0; c1 < 4; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < 4; ++c2) {
            for (int s1 : {1, -1}) {
                for (int s2 : {1, -1}) {
                    double p[4] = {0.0, 0.0, 0.0, 0.0};
                    p[c1] = s1 * inv_sqrt2;
                    p[c2] = s2 * inv_sqrt2;
                    flat.insert(flat.end(), p, p + 4);
                }
            }
        }
    }
    return SphericalConfiguration::from_flat(4, std::move(flat));
}

SphericalConfiguration lambda_design(std::size_t n) {
    if (n < 2) throw RangeError("lambda design requires ambient dimension >= 2");
    const std::size_t big = n + 1;
    // |e_i + e_j - centroid| = sqrt(2(n-1)/(n+1)); centroid components 2/(n+1).
    const double inv_norm = std::sqrt(static_cast<double>(big) / (2.0 * static_cast<double>(n - 1)));
    std::vector<double> flat;
    flat.reserve(n * n * (n + 1) / 2);
    for (std::size_t i = 0; i < big; ++i) {
        for (std::size_t j = i + 1; j < big; ++j) {
            for (std::size_t k = 1; k <= n; ++k) {
                flat.push_back((helmert(k, i) + helmert(k, j)) * inv_norm);
            }
        }
    }
    return SphericalConfiguration::from_flat(n, std::move(flat));
}

SphericalConfiguration isoceles_triangle(double alpha) {
    if (!(alpha > 0.0) || alpha > kPi) {
        std::ostringstream msg;
        msg << "isoceles triangle requires alpha in (0, pi], got " << alpha;
        throw RangeError(msg.str());
    }
    return SphericalConfiguration::from_flat(2, circle_points({0.0, alpha, 2.0 * alpha}));
}

SphericalConfiguration quadrilateral(double alpha) {
    if (!(alpha > 0.0) || alpha > 2.0 * kPi / 3.0 + 1e-15) {
        std::ostringstream msg;
        msg << "quadrilateral requires alpha in (0, 2*pi/3], got " << alpha;
        throw RangeError(msg.str());
    }
    return SphericalConfiguration::from_flat(2, circle_points({0.0, alpha, 2.0 * alpha, 3.0 * alpha}));
}

SphericalConfiguration delta_tetrahedron(double a, double theta) {
    if (!(a >= 0.0) || a > 1.0) {
        std::ostringstream msg;
        msg << "delta tetrahedron requires a in [0, 1], got " << a;
        throw RangeError(msg.str());
    }
    if (!(theta > 0.0) || theta > kPi) {
        std::ostringstream msg;
        msg << "delta tetrahedron requires theta in (0, pi], got " << theta;
        throw RangeError(msg.str());
    }
    // Edge AC along the x-axis at height +a, edge BD along (cos theta,
    // sin theta, 0) at height -a; both midpoints on the z-axis.
    const double q = std::sqrt(std::max(0.0, 1.0 - a * a));
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    std::vector<double> flat = {
        q,       0.0,     a,   // A
        q * ct,  q * st,  -a,  // B
        -q,      0.0,     a,   // C
        -q * ct, -q * st, -a,  // D
    };
    return SphericalConfiguration::from_flat(3, std::move(flat));
}

SphericalConfiguration simplex_product(const std::vector<std::size_t>& dims) {
    if (dims.size() < 1) throw RangeError("simplex product requires at least one factor");
    std::size_t n = 0;
    for (std::size_t d : dims) {
        if (d < 1) throw RangeError("simplex product factors must have dimension >= 1");
        n += d;
    }
    std::vector<std::vector<double>> points;
    std::size_t offset = 0;
    for (std::size_t d : dims) {
        const SphericalConfiguration factor = regular_simplex(d);
        for (std::size_t i = 0; i < factor.size(); ++i) {
            std::vector<double> p(n, 0.0);
            auto src = factor.point(i);
            for (std::size_t c = 0; c < d; ++c) p[offset + c] = src[c];
            points.push_back(std::move(p));
        }
        offset += d;
    }
    return SphericalConfiguration(n, points);
}

}  // namespace mset
