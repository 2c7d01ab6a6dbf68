#include "mset/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mset/errors.hpp"
#include "mset/summation.hpp"

namespace mset {

namespace {

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

SphericalConfiguration::SphericalConfiguration(std::size_t dimension,
                                               const std::vector<std::vector<double>>& points)
    : dim_(dimension), count_(points.size()) {
    if (dimension < 1) throw DomainError("ambient dimension must be >= 1");
    if (points.empty()) throw DomainError("configuration must contain at least one point");
    coords_.reserve(dimension * points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dimension) {
            std::ostringstream msg;
            msg << "point " << i << " has " << points[i].size() << " coordinates, expected "
                << dimension;
            throw DimensionError(msg.str());
        }
        coords_.insert(coords_.end(), points[i].begin(), points[i].end());
    }
    for (std::size_t i = 0; i < count_; ++i) {
        const double n = norm(point(i));
        if (std::abs(n - 1.0) > kUnitNormTol) {
            std::ostringstream msg;
            msg << "point " << i << " has norm " << n << ", not unit within " << kUnitNormTol;
            throw DomainError(msg.str());
        }
    }
}

SphericalConfiguration::SphericalConfiguration(std::size_t dimension, std::vector<double> coords,
                                               int)
    : dim_(dimension), count_(coords.size() / dimension), coords_(std::move(coords)) {}

SphericalConfiguration SphericalConfiguration::from_flat(std::size_t dimension,
                                                         std::vector<double> coords,
                                                         bool normalize) {
    if (dimension < 1) throw DomainError("ambient dimension must be >= 1");
    if (coords.empty() || coords.size() % dimension != 0) {
        throw DimensionError("flat coordinate array size must be a positive multiple of the dimension");
    }
    const std::size_t m = coords.size() / dimension;
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < dimension; ++c) s += coords[i * dimension + c] * coords[i * dimension + c];
        const double n = std::sqrt(s);
        if (normalize) {
            if (n < 1e-300) {
                std::ostringstream msg;
                msg << "point " << i << " is zero and cannot be normalized";
                throw DomainError(msg.str());
            }
            for (std::size_t c = 0; c < dimension; ++c) coords[i * dimension + c] /= n;
        } else if (std::abs(n - 1.0) > kUnitNormTol) {
            std::ostringstream msg;
            msg << "point " << i << " has norm " << n << ", not unit within " << kUnitNormTol;
            throw DomainError(msg.str());
        }
    }
    return SphericalConfiguration(dimension, std::move(coords), 0);
}

std::span<const double> SphericalConfiguration::point(std::size_t i) const {
    return std::span<const double>(coords_.data() + i * dim_, dim_);
}

double SphericalConfiguration::inner_product(std::size_t i, std::size_t j) const {
    const double* a = coords_.data() + i * dim_;
    const double* b = coords_.data() + j * dim_;
    double s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) s += a[c] * b[c];
    return s;
}

double SphericalConfiguration::distance(std::size_t i, std::size_t j) const {
    const double* a = coords_.data() + i * dim_;
    const double* b = coords_.data() + j * dim_;
    double s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
        const double d = a[c] - b[c];
        s += d * d;
    }
    return std::sqrt(s);
}

double DistanceFunctional::from_euclidean(double r) const {
    switch (kind_) {
        case Kind::Euclidean:
            return r;
        case Kind::SquaredEuclidean:
            return r * r;
        case Kind::Angular:
            return 2.0 * std::asin(std::clamp(0.5 * r, 0.0, 1.0));
        case Kind::Scale:
            if (s_ > 0.0) return std::pow(r, s_);
            if (s_ == 0.0) return std::log(r);
            return -std::pow(r, s_);
    }
    return 0.0;
}

std::string DistanceFunctional::name() const {
    switch (kind_) {
        case Kind::Euclidean: return "r";
        case Kind::SquaredEuclidean: return "r2";
        case Kind::Angular: return "phi";
        case Kind::Scale: {
            std::ostringstream s;
            s << "r_s(s=" << s_ << ")";
            return s.str();
        }
    }
    return "?";
}

RealSequence distance_profile(const SphericalConfiguration& x, const DistanceFunctional& rho) {
    if (x.size() < 2) throw DomainError("distance profile requires at least two points");
    std::vector<double> values;
    values.reserve(x.pair_count());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double r = x.distance(i, j);
            if (rho.singular_at_coincidence() && r < kCoincidenceTol) {
                std::ostringstream msg;
                msg << "points " << i << " and " << j << " coincide; " << rho.name()
                    << " is singular at distance 0";
                throw SingularityError(msg.str());
            }
            values.push_back(rho.from_euclidean(r));
        }
    }
    return RealSequence(std::move(values));
}

double min_pair_distance(const SphericalConfiguration& x) {
    if (x.size() < 2) throw DomainError("minimum pair distance requires at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            best = std::min(best, x.distance(i, j));
        }
    }
    return best;
}

bool omega_member(const SphericalConfiguration& x, double q0, double tol) {
    return min_pair_distance(x) >= q0 - tol;
}

GramSpectrum::GramSpectrum(const SphericalConfiguration& x, double cluster_tol)
    : m_(x.size()), cluster_tol_(cluster_tol) {
    if (cluster_tol <= 0.0) throw DomainError("cluster tolerance must be positive");
    gram_.resize(m_ * m_);
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = i; j < m_; ++j) {
            const double t = x.inner_product(i, j);
            gram_[i * m_ + j] = t;
            gram_[j * m_ + i] = t;
        }
    }
    std::vector<double> off;
    off.reserve(x.pair_count());
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = i + 1; j < m_; ++j) off.push_back(gram_[i * m_ + j]);
    }
    std::sort(off.begin(), off.end());
    std::size_t start = 0;
    for (std::size_t i = 1; i <= off.size(); ++i) {
        if (i == off.size() || off[i] - off[i - 1] > cluster_tol_) {
            CompensatedSum mean;
            for (std::size_t k = start; k < i; ++k) mean.add(off[k]);
            clusters_.push_back({mean.value() / static_cast<double>(i - start), i - start});
            start = i;
        }
    }
}

double GramSpectrum::entry(std::size_t i, std::size_t j) const {
    if (i >= m_ || j >= m_) throw RangeError("Gram index out of range");
    return gram_[i * m_ + j];
}

GramSpectrum gram_spectrum(const SphericalConfiguration& x, double cluster_tol) {
    return GramSpectrum(x, cluster_tol);
}

namespace {

/// Rank of the cluster's point set by Gaussian elimination with partial
/// pivoting; pivots below tol * (largest entry) count as zero.
std::size_t point_rank(const SphericalConfiguration& x, const std::vector<std::size_t>& idx,
                       double tol = 1e-8) {
    const std::size_t rows = idx.size();
    const std::size_t cols = x.dimension();
    std::vector<double> a(rows * cols);
    double scale = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        auto p = x.point(idx[r]);
        for (std::size_t c = 0; c < cols; ++c) {
            a[r * cols + c] = p[c];
            scale = std::max(scale, std::abs(p[c]));
        }
    }
    const double threshold = tol * std::max(scale, 1e-300);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (std::abs(a[r * cols + c]) > std::abs(a[pivot * cols + c])) pivot = r;
        }
        if (std::abs(a[pivot * cols + c]) <= threshold) continue;
        if (pivot != rank) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const double factor = a[r * cols + c] / a[rank * cols + c];
            for (std::size_t k = c; k < cols; ++k) a[r * cols + k] -= factor * a[rank * cols + k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

KuperbergDecomposition kuperberg_decompose(const SphericalConfiguration& x, double ortho_tol) {
    const std::size_t m = x.size();
    std::vector<int> label(m, -1);
    KuperbergDecomposition out;
    out.is_valid = true;

    // Connected components of the graph with edges |<p_i,p_j>| > ortho_tol.
    for (std::size_t i = 0; i < m; ++i) {
        if (label[i] >= 0) continue;
        const int id = static_cast<int>(out.clusters.size());
        std::vector<std::size_t> stack{i};
        std::vector<std::size_t> members;
        label[i] = id;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (std::size_t v = 0; v < m; ++v) {
                if (label[v] < 0 && std::abs(x.inner_product(u, v)) > ortho_tol) {
                    label[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.clusters.push_back(std::move(members));
    }

    std::size_t dim_sum = 0;
    for (std::size_t c = 0; c < out.clusters.size(); ++c) {
        const std::size_t rank = point_rank(x, out.clusters[c]);
        out.dims.push_back(rank);
        dim_sum += rank;
        if (out.clusters[c].size() != rank + 1 && out.is_valid) {
            std::ostringstream msg;
            msg << "cluster " << c << " has " << out.clusters[c].size() << " points but rank "
                << rank << " (expected rank + 1 points)";
            out.is_valid = false;
            out.failure = msg.str();
        }
    }
    if (out.is_valid && dim_sum != x.dimension()) {
        std::ostringstream msg;
        msg << "cluster ranks sum to " << dim_sum << ", ambient dimension is " << x.dimension();
        out.is_valid = false;
        out.failure = msg.str();
    }
    return out;
}

}  // namespace mset
