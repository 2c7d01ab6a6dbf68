#include "mset/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "mset/errors.hpp"
#include "mset/summation.hpp"

namespace mset {

namespace {

using Rational = boost::multiprecision::cpp_rational;

/// Monomial coefficient rows of G_0..G_kmax in exact rational arithmetic.
std::vector<std::vector<Rational>> gegenbauer_monomials(std::size_t n, std::size_t kmax) {
    std::vector<std::vector<Rational>> g(kmax + 1);
    g[0] = {Rational(1)};
    if (kmax >= 1) g[1] = {Rational(0), Rational(1)};
    for (std::size_t k = 2; k <= kmax; ++k) {
        const Rational a(2 * k + n - 4);
        const Rational b(k - 1);
        const Rational c(k + n - 3);
        std::vector<Rational> row(k + 1, Rational(0));
        for (std::size_t i = 0; i < g[k - 1].size(); ++i) row[i + 1] += a * g[k - 1][i];
        for (std::size_t i = 0; i < g[k - 2].size(); ++i) row[i] -= b * g[k - 2][i];
        for (auto& r : row) r /= c;
        g[k] = std::move(row);
    }
    return g;
}

void require_dimension(std::size_t n) {
    if (n < 2) throw DomainError("Gegenbauer basis requires ambient dimension >= 2");
}

constexpr double kCoincidentInner = 1.0 - 1e-12;

void reject_coincident(const GramSpectrum& spec) {
    for (std::size_t i = 0; i < spec.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.size(); ++j) {
            if (spec.entry(i, j) > kCoincidentInner) {
                std::ostringstream msg;
                msg << "points " << i << " and " << j
                    << " coincide; design certification requires distinct points";
                throw DomainError(msg.str());
            }
        }
    }
}

}  // namespace

PolynomialInT::PolynomialInT(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw DomainError("polynomial coefficients must be finite");
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double PolynomialInT::operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

PolynomialInT PolynomialInT::operator*(const PolynomialInT& other) const {
    std::vector<double> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return PolynomialInT(std::move(out));
}

double gegenbauer_eval(std::size_t n, std::size_t k, double t) {
    require_dimension(n);
    if (k == 0) return 1.0;
    if (k == 1) return t;
    double prev2 = 1.0;
    double prev1 = t;
    for (std::size_t j = 2; j <= k; ++j) {
        const double a = static_cast<double>(2 * j + n - 4);
        const double b = static_cast<double>(j - 1);
        const double c = static_cast<double>(j + n - 3);
        const double current = (a * t * prev1 - b * prev2) / c;
        prev2 = prev1;
        prev1 = current;
    }
    return prev1;
}

std::vector<double> gegenbauer_all(std::size_t n, std::size_t kmax, double t) {
    require_dimension(n);
    std::vector<double> out(kmax + 1);
    out[0] = 1.0;
    if (kmax >= 1) out[1] = t;
    for (std::size_t k = 2; k <= kmax; ++k) {
        const double a = static_cast<double>(2 * k + n - 4);
        const double b = static_cast<double>(k - 1);
        const double c = static_cast<double>(k + n - 3);
        out[k] = (a * t * out[k - 1] - b * out[k - 2]) / c;
    }
    return out;
}

std::vector<double> gegenbauer_monomial_coeffs(std::size_t n, std::size_t k) {
    require_dimension(n);
    const auto table = gegenbauer_monomials(n, k);
    std::vector<double> out(k + 1);
    for (std::size_t i = 0; i <= k; ++i) out[i] = table[k][i].convert_to<double>();
    return out;
}

GegenbauerExpansion::GegenbauerExpansion(std::size_t dimension, std::vector<double> coeffs)
    : dim_(dimension), coeffs_(std::move(coeffs)) {
    require_dimension(dim_);
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double GegenbauerExpansion::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
}

double GegenbauerExpansion::evaluate(double t) const {
    const std::vector<double> g = gegenbauer_all(dim_, coeffs_.size() - 1, t);
    CompensatedSum acc;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) acc.add(coeffs_[k] * g[k]);
    return acc.value();
}

GegenbauerExpansion to_gegenbauer(const PolynomialInT& p, std::size_t n, std::size_t max_degree) {
    require_dimension(n);
    const std::size_t d = p.degree();
    if (d > max_degree) {
        std::ostringstream msg;
        msg << "polynomial degree " << d << " exceeds the basis-change limit " << max_degree;
        throw DomainError(msg.str());
    }
    const auto table = gegenbauer_monomials(n, d);
    std::vector<Rational> residual(d + 1);
    for (std::size_t i = 0; i <= d; ++i) residual[i] = Rational(p.coefficients()[i]);

    // Back-substitution against the triangular monomial table; the leading
    // coefficient of every G_k is positive, so each pivot is nonzero.
    std::vector<Rational> f(d + 1);
    for (std::size_t k = d + 1; k-- > 0;) {
        f[k] = residual[k] / table[k][k];
        for (std::size_t i = 0; i <= k; ++i) residual[i] -= f[k] * table[k][i];
    }
    std::vector<double> out(d + 1);
    for (std::size_t k = 0; k <= d; ++k) out[k] = f[k].convert_to<double>();
    return GegenbauerExpansion(n, std::move(out));
}

PolynomialInT from_gegenbauer(const GegenbauerExpansion& e) {
    const std::size_t d = e.degree();
    const auto table = gegenbauer_monomials(e.dimension(), d);
    std::vector<Rational> monomial(d + 1, Rational(0));
    for (std::size_t k = 0; k <= d; ++k) {
        const Rational fk(e.coefficients()[k]);
        for (std::size_t i = 0; i <= k; ++i) monomial[i] += fk * table[k][i];
    }
    std::vector<double> out(d + 1);
    for (std::size_t i = 0; i <= d; ++i) out[i] = monomial[i].convert_to<double>();
    return PolynomialInT(std::move(out));
}

MomentVector::MomentVector(std::vector<double> m1_to_kmax, std::size_t configuration_size)
    : values_(std::move(m1_to_kmax)), m_(configuration_size) {}

double MomentVector::moment(std::size_t k) const {
    if (k == 0) return static_cast<double>(m_) * static_cast<double>(m_);
    if (k > values_.size()) {
        std::ostringstream msg;
        msg << "moment index " << k << " outside 0.." << values_.size();
        throw RangeError(msg.str());
    }
    return values_[k - 1];
}

MomentVector moments(const SphericalConfiguration& p, std::size_t kmax) {
    require_dimension(p.dimension());
    if (kmax < 1) throw DomainError("moment vector requires kmax >= 1");
    const std::size_t m = p.size();
    std::vector<CompensatedSum> acc(kmax);
    // Diagonal terms contribute G_k(1) = 1 each.
    for (std::size_t k = 0; k < kmax; ++k) acc[k].add(static_cast<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::vector<double> g = gegenbauer_all(p.dimension(), kmax, p.inner_product(i, j));
            for (std::size_t k = 0; k < kmax; ++k) acc[k].add(2.0 * g[k + 1]);
        }
    }
    std::vector<double> values(kmax);
    for (std::size_t k = 0; k < kmax; ++k) values[k] = acc[k].value();
    return MomentVector(std::move(values), m);
}

std::vector<double> zf_roots(const PolynomialInT& f, std::size_t grid) {
    if (grid < 2) throw DomainError("root grid requires at least two nodes");
    std::vector<double> nodes(grid + 1);
    for (std::size_t i = 0; i < grid; ++i) {
        nodes[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid);
    }
    nodes[grid] = 1.0 - 1e-12;  // the interval is half-open at 1

    std::vector<double> roots;
    auto push_root = [&roots](double r) {
        for (double existing : roots) {
            if (std::abs(existing - r) <= 1e-12) return;
        }
        roots.push_back(r);
    };

    double prev = f(nodes[0]);
    if (prev == 0.0) push_root(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        double curr = f(nodes[i]);
        if (curr == 0.0) {
            push_root(nodes[i]);
        } else if (prev != 0.0 && ((prev < 0.0) != (curr < 0.0))) {
            double lo = nodes[i - 1];
            double hi = nodes[i];
            double flo = prev;
            for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((flo < 0.0) == (fm < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            push_root(0.5 * (lo + hi));
        }
        prev = curr;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

DesignCertificate moment_only_certificate(DesignCertificate::Kind kind,
                                          const SphericalConfiguration& p,
                                          const std::vector<std::size_t>& ks, double tol) {
    if (tol <= 0.0) throw DomainError("design tolerance must be positive");
    std::size_t kmax = 0;
    for (std::size_t k : ks) {
        if (k < 1) throw DomainError("moment indices must be >= 1");
        kmax = std::max(kmax, k);
    }
    const MomentVector mom = moments(p, kmax);
    const double m2 = mom.moment(0);

    DesignCertificate cert;
    cert.kind = kind;
    cert.passed = true;
    cert.consistency = std::nullopt;
    cert.consistency_ok = true;
    for (std::size_t k : ks) {
        const double residual = std::abs(mom.moment(k));
        cert.condition_1_residuals.emplace_back(k, residual);
        if (residual > tol * m2) cert.passed = false;
    }
    return cert;
}

}  // namespace

DesignCertificate certify_f_design(const SphericalConfiguration& p, const PolynomialInT& f,
                                   double tol) {
    if (tol <= 0.0) throw DomainError("design tolerance must be positive");
    require_dimension(p.dimension());
    const GramSpectrum spec = gram_spectrum(p);
    if (p.size() > 1) reject_coincident(spec);

    const GegenbauerExpansion expansion = to_gegenbauer(f, p.dimension());
    const std::size_t d = expansion.degree();
    double coeff_scale = 0.0;
    for (double c : expansion.coefficients()) coeff_scale = std::max(coeff_scale, std::abs(c));
    const double carried = 1e-12 * std::max(coeff_scale, 1.0);

    DesignCertificate cert;
    cert.kind = DesignCertificate::Kind::FDesign;
    cert.passed = true;

    const double m = static_cast<double>(p.size());
    if (d >= 1) {
        const MomentVector mom = moments(p, d);
        const double m2 = mom.moment(0);
        for (std::size_t k = 1; k <= d; ++k) {
            const double fk = expansion.coefficient(k);
            if (std::abs(fk) <= carried) continue;  // k not carried by f
            const double mk = mom.moment(k);
            cert.condition_1_residuals.emplace_back(k, std::abs(fk * mk));
            if (std::abs(mk) > tol * m2) cert.passed = false;
        }
    }

    for (const auto& cluster : spec.inner_product_set()) {
        if (std::abs(f(cluster.representative)) > tol) {
            cert.condition_2_violations.push_back(cluster.representative);
            cert.passed = false;
        }
    }

    const double f1 = f(1.0);
    const double mf0 = m * expansion.coefficient(0);
    cert.consistency = std::make_pair(f1, mf0);
    cert.consistency_ok = std::abs(f1 - mf0) <= tol * std::max({std::abs(f1), std::abs(mf0), 1.0});
    return cert;
}

DesignCertificate certify_tau_design(const SphericalConfiguration& p, std::size_t tau,
                                     double tol) {
    if (tau < 1) throw DomainError("tau-design certification requires tau >= 1");
    const GramSpectrum spec = gram_spectrum(p);
    if (p.size() > 1) reject_coincident(spec);
    std::vector<std::size_t> ks(tau);
    for (std::size_t k = 1; k <= tau; ++k) ks[k - 1] = k;
    return moment_only_certificate(DesignCertificate::Kind::TauDesign, p, ks, tol);
}

DesignCertificate harmonic_index_check(const SphericalConfiguration& p,
                                       const std::vector<std::size_t>& k_set, double tol) {
    if (k_set.empty()) throw DomainError("harmonic index check requires a nonempty index set");
    const GramSpectrum spec = gram_spectrum(p);
    if (p.size() > 1) reject_coincident(spec);
    return moment_only_certificate(DesignCertificate::Kind::HarmonicIndex, p, k_set, tol);
}

DelsarteReport delsarte_bound(const PolynomialInT& f, std::size_t n, const InnerProductSet& t_set,
                              double tol) {
    if (tol <= 0.0) throw DomainError("tolerance must be positive");
    const GegenbauerExpansion expansion = to_gegenbauer(f, n);

    DelsarteReport report;
    report.f0 = expansion.coefficient(0);
    report.f_at_1 = f(1.0);
    report.hypotheses_ok = true;

    if (report.f0 <= 0.0) {
        std::ostringstream msg;
        msg << "the bound f(1)/f_0 is undefined: f_0 = " << report.f0 << " <= 0";
        throw DomainError(msg.str());
    }

    double coeff_scale = 0.0;
    for (double c : expansion.coefficients()) coeff_scale = std::max(coeff_scale, std::abs(c));
    for (std::size_t k = 0; k <= expansion.degree(); ++k) {
        const double fk = expansion.coefficient(k);
        if (fk < -tol * std::max(coeff_scale, 1.0)) {
            std::ostringstream msg;
            msg << "Gegenbauer coefficient f_" << k << " = " << fk << " is negative";
            report.diagnostics.push_back(msg.str());
            report.hypotheses_ok = false;
        }
    }

    auto check_point = [&](double t) {
        const double value = f(t);
        if (value > tol) {
            std::ostringstream msg;
            msg << "f(" << t << ") = " << value << " > 0 on the allowed set";
            report.diagnostics.push_back(msg.str());
            report.hypotheses_ok = false;
            return false;
        }
        return true;
    };

    if (const auto* points = std::get_if<std::vector<double>>(&t_set)) {
        if (points->empty()) throw DomainError("the allowed inner-product set is empty");
        for (double t : *points) {
            if (t < -1.0 - 1e-12 || t >= 1.0) {
                std::ostringstream msg;
                msg << "allowed inner product " << t << " outside [-1, 1)";
                throw DomainError(msg.str());
            }
            if (!check_point(t)) break;
        }
    } else {
        const auto& interval = std::get<std::pair<double, double>>(t_set);
        if (interval.first > interval.second || interval.first < -1.0 - 1e-12 ||
            interval.second >= 1.0) {
            throw DomainError("the allowed interval must sit inside [-1, 1)");
        }
        constexpr std::size_t kGrid = 2048;
        bool ok = true;
        for (std::size_t i = 0; i <= kGrid && ok; ++i) {
            const double t = interval.first + (interval.second - interval.first) *
                                                  static_cast<double>(i) /
                                                  static_cast<double>(kGrid);
            ok = check_point(t);
        }
        if (ok) {
            for (double root : zf_roots(f)) {
                if (root >= interval.first && root <= interval.second && !check_point(root)) break;
            }
        }
    }

    if (report.hypotheses_ok) report.bound = report.f_at_1 / report.f0;
    return report;
}

TwoDistanceReport two_distance_analysis(const SphericalConfiguration& p, double cluster_tol) {
    if (p.size() < 2) throw DomainError("two-distance analysis requires at least two points");
    const GramSpectrum spec = gram_spectrum(p, cluster_tol);
    const auto& clusters = spec.inner_product_set();

    TwoDistanceReport report{};
    report.distinct_count = clusters.size();
    report.is_two_distance = clusters.size() == 2;
    const std::size_t n = p.dimension();
    report.absolute_bound = n * (n + 1) / 2;
    if (!report.is_two_distance) return report;

    report.b = clusters.front().representative;  // ascending clusters
    report.a = clusters.back().representative;
    const double sum = report.a + report.b;
    report.a_plus_b_sign = std::abs(sum) <= cluster_tol ? 0 : (sum > 0.0 ? 1 : -1);
    report.is_equiangular = report.a_plus_b_sign == 0;
    if (report.is_equiangular) {
        const double a2 = report.a * report.a;
        if (1.0 - static_cast<double>(n) * a2 > 0.0) {
            report.relative_bound =
                static_cast<double>(n) * (1.0 - a2) / (1.0 - static_cast<double>(n) * a2);
        }
    }
    report.meets_absolute = report.a_plus_b_sign >= 0 && p.size() == report.absolute_bound;
    return report;
}

PolynomialInT build_annihilator(const SphericalConfiguration& p, const PolynomialInT& g,
                                double cluster_tol) {
    if (p.size() < 2) throw DomainError("annihilator construction requires at least two points");
    const GramSpectrum spec = gram_spectrum(p, cluster_tol);
    PolynomialInT out = g;
    for (const auto& cluster : spec.inner_product_set()) {
        out = out * PolynomialInT({-cluster.representative, 1.0});
    }
    return out;
}

FDesignGapReport fdesign_mset_gap(const SphericalConfiguration& p, const PolynomialInT& f,
                                  const SphericalConfiguration& y, double tol) {
    if (y.size() != p.size()) {
        std::ostringstream msg;
        msg << "gap check requires |Y| = |P|, got " << y.size() << " and " << p.size();
        throw DimensionError(msg.str());
    }
    if (y.dimension() != p.dimension()) {
        throw DimensionError("gap check requires Y and P on the same sphere");
    }
    const GegenbauerExpansion expansion = to_gegenbauer(f, p.dimension());
    double coeff_scale = 0.0;
    for (double c : expansion.coefficients()) coeff_scale = std::max(coeff_scale, std::abs(c));
    for (std::size_t k = 0; k <= expansion.degree(); ++k) {
        if (expansion.coefficient(k) < -1e-12 * std::max(coeff_scale, 1.0)) {
            std::ostringstream msg;
            msg << "hypothesis failure: Gegenbauer coefficient f_" << k << " = "
                << expansion.coefficient(k) << " is negative";
            throw DomainError(msg.str());
        }
    }
    const DesignCertificate cert = certify_f_design(p, f, tol);
    if (!cert.passed) {
        throw DomainError("hypothesis failure: P does not certify as a design for the supplied f");
    }

    const double m = static_cast<double>(p.size());
    // S_f(Y) over all ordered pairs, diagonal included.
    CompensatedSum s_f;
    s_f.add(m * f(1.0));
    std::vector<double> rho_values;
    rho_values.reserve(y.pair_count());
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = i + 1; j < y.size(); ++j) {
            const double value = f(y.inner_product(i, j));
            s_f.add(2.0 * value);
            rho_values.push_back(-value);
        }
    }

    FDesignGapReport report;
    report.gap = 0.5 * (m * f(1.0) - s_f.value());
    const RealSequence zero_profile(std::vector<double>(p.pair_count(), 0.0));
    report.order = compare(zero_profile, RealSequence(std::move(rho_values)));
    report.dominated =
        report.order == MajorizationOrder::Dominates || report.order == MajorizationOrder::Equal;
    return report;
}

}  // namespace mset
