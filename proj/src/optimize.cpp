#include "mset/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mset/energy.hpp"
#include "mset/errors.hpp"
#include "mset/summation.hpp"

namespace mset {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// One RNG stream per (seed, stream index) pair.
std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream + 1)));
}

void validate_config(const OptimizerConfig& cfg) {
    if (cfg.restarts < 1) throw DomainError("optimizer requires at least one restart");
    if (cfg.max_iterations < 1) throw DomainError("optimizer requires at least one iteration");
    if (!(cfg.gradient_tolerance > 0.0)) throw DomainError("gradient tolerance must be positive");
    if (!(cfg.initial_step > 0.0)) throw DomainError("initial step must be positive");
    if (!(cfg.step_shrink > 0.0 && cfg.step_shrink < 1.0)) {
        throw DomainError("step shrink factor must lie in (0, 1)");
    }
    if (!(cfg.sufficient_decrease > 0.0 && cfg.sufficient_decrease < 1.0)) {
        throw DomainError("sufficient decrease constant must lie in (0, 1)");
    }
}

double min_pair_r2(const std::vector<double>& q, std::size_t n, std::size_t m) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            double r2 = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                const double d = q[i * n + c] - q[j * n + c];
                r2 += d * d;
            }
            best = std::min(best, r2);
        }
    }
    return best;
}

/// Riesz t-energy of flat coordinates; +infinity at coincident pairs.
double flat_energy(const std::vector<double>& q, std::size_t n, std::size_t m, double t) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            double r2 = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                const double d = q[i * n + c] - q[j * n + c];
                r2 += d * d;
            }
            if (r2 <= 0.0) return std::numeric_limits<double>::infinity();
            acc.add(t == 0.0 ? -0.5 * std::log(r2) : std::pow(r2, -0.5 * t));
        }
    }
    return acc.value();
}

/// Ambient gradient of the Riesz energy, then projected to the tangent
/// space at every point.
void flat_projected_gradient(const std::vector<double>& q, std::size_t n, std::size_t m, double t,
                             std::vector<double>& g) {
    g.assign(n * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            double r2 = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                const double d = q[i * n + c] - q[j * n + c];
                r2 += d * d;
            }
            // d/dp_i of r^{-t} (or -log r at t = 0) along (p_i - p_j).
            const double coeff = (t == 0.0) ? -1.0 / r2 : -t * std::pow(r2, -0.5 * (t + 2.0));
            for (std::size_t c = 0; c < n; ++c) {
                const double d = q[i * n + c] - q[j * n + c];
                g[i * n + c] += coeff * d;
                g[j * n + c] -= coeff * d;
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        double radial = 0.0;
        for (std::size_t c = 0; c < n; ++c) radial += g[i * n + c] * q[i * n + c];
        for (std::size_t c = 0; c < n; ++c) g[i * n + c] -= radial * q[i * n + c];
    }
}

double flat_norm(const std::vector<double>& g) {
    double s = 0.0;
    for (double v : g) s += v * v;
    return std::sqrt(s);
}

/// candidate = normalize(q - alpha * g), row by row. False when a row
/// collapses to (numerical) zero.
bool retract(const std::vector<double>& q, const std::vector<double>& g, double alpha,
             std::size_t n, std::size_t m, std::vector<double>& candidate) {
    candidate.resize(q.size());
    for (std::size_t i = 0; i < m; ++i) {
        double norm2 = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            const double v = q[i * n + c] - alpha * g[i * n + c];
            candidate[i * n + c] = v;
            norm2 += v * v;
        }
        if (norm2 < 1e-24) return false;
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t c = 0; c < n; ++c) candidate[i * n + c] *= inv;
    }
    return true;
}

struct DescentOutcome {
    std::vector<double> coords;
    double energy;
    bool converged;
    double gradient_norm;
    std::vector<double> trace;
};

DescentOutcome descend(std::vector<double> q, std::size_t n, std::size_t m, double t,
                       const OptimizerConfig& cfg) {
    DescentOutcome out;
    double energy = flat_energy(q, n, m, t);
    if (cfg.record_trace) out.trace.push_back(energy);

    std::vector<double> grad, candidate;
    double alpha = cfg.initial_step;
    double gnorm = 0.0;
    bool converged = false;

    for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
        flat_projected_gradient(q, n, m, t, grad);
        gnorm = flat_norm(grad);
        if (gnorm < cfg.gradient_tolerance) {
            converged = true;
            break;
        }
        alpha = std::min(alpha * 2.0, cfg.initial_step);
        bool accepted = false;
        double candidate_energy = 0.0;
        while (alpha > 1e-18) {
            if (retract(q, grad, alpha, n, m, candidate) &&
                min_pair_r2(candidate, n, m) > kCoincidenceTol * kCoincidenceTol) {
                candidate_energy = flat_energy(candidate, n, m, t);
                if (candidate_energy <= energy - cfg.sufficient_decrease * alpha * gnorm * gnorm) {
                    accepted = true;
                    break;
                }
            }
            alpha *= cfg.step_shrink;
        }
        if (!accepted) break;  // line search exhausted
        q.swap(candidate);
        energy = candidate_energy;
        if (cfg.record_trace) out.trace.push_back(energy);
    }

    flat_projected_gradient(q, n, m, t, grad);
    out.gradient_norm = flat_norm(grad);
    out.converged = converged || out.gradient_norm < cfg.gradient_tolerance;
    out.energy = energy;
    out.coords = std::move(q);
    return out;
}

}  // namespace

SphericalConfiguration random_configuration(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    if (n < 1 || m < 1) throw DomainError("random configuration requires n >= 1, m >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> flat(n * m);
    for (std::size_t i = 0; i < m; ++i) {
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                const double v = gauss(rng);
                flat[i * n + c] = v;
                norm2 += v * v;
            }
        } while (norm2 < 1e-12);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t c = 0; c < n; ++c) flat[i * n + c] *= inv;
    }
    return SphericalConfiguration::from_flat(n, std::move(flat));
}

std::vector<double> riesz_projected_gradient(const SphericalConfiguration& x, double t) {
    if (t < 0.0) throw DomainError("Riesz gradient requires t >= 0");
    std::vector<double> g;
    flat_projected_gradient(x.flat(), x.dimension(), x.size(), t, g);
    return g;
}

MinimizationResult minimize_riesz(std::size_t n, std::size_t m, double t,
                                  const OptimizerConfig& cfg) {
    if (n < 2) throw DomainError("minimization requires ambient dimension >= 2");
    if (m < 2) throw DomainError("minimization requires at least two points");
    if (t < 0.0) throw DomainError("Riesz energy requires t >= 0");
    validate_config(cfg);

    std::optional<DescentOutcome> best;
    std::size_t best_index = 0;
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        std::mt19937_64 rng = derived_rng(cfg.rng_seed, r);
        SphericalConfiguration start = random_configuration(n, m, rng);
        DescentOutcome outcome = descend(start.flat(), n, m, t, cfg);
        if (!best || outcome.energy < best->energy) {
            best = std::move(outcome);
            best_index = r;
        }
    }

    SphericalConfiguration configuration =
        SphericalConfiguration::from_flat(n, std::move(best->coords));
    // Recomputing through the public energy path pins the reported value to
    // riesz_energy(configuration, t) exactly.
    const double energy = riesz_energy(configuration, t);
    return MinimizationResult{std::move(configuration), energy,          best->converged,
                              best->gradient_norm,      best_index,      std::move(best->trace)};
}

namespace {

/// Margin machinery for the falsification search: profile values of the
/// candidate in pair order, with prefix-sum gaps against the target.
struct MarginScratch {
    std::vector<double> values;  // rho value per (i<j) pair
    std::vector<double> sorted;
};

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t m) {
    // i < j
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

double profile_margin(const std::vector<double>& values, const std::vector<double>& target_prefix,
                      std::vector<double>& sorted_scratch) {
    sorted_scratch = values;
    std::sort(sorted_scratch.begin(), sorted_scratch.end());
    double margin = std::numeric_limits<double>::infinity();
    CompensatedSum acc;
    for (std::size_t k = 0; k < sorted_scratch.size(); ++k) {
        acc.add(sorted_scratch[k]);
        margin = std::min(margin, acc.value() - target_prefix[k]);
    }
    return margin;
}

bool rho_value_of(const DistanceFunctional& rho, double r, double& out) {
    if (rho.singular_at_coincidence() && r < kCoincidenceTol) return false;
    out = rho.from_euclidean(r);
    return true;
}

}  // namespace

FalsificationResult mset_falsify(const SphericalConfiguration& x, const DistanceFunctional& rho,
                                 std::size_t trials, const OptimizerConfig& cfg) {
    if (trials < 1) throw DomainError("falsification requires at least one trial");
    const std::size_t n = x.dimension();
    const std::size_t m = x.size();
    if (m < 2) throw DomainError("falsification requires at least two points");

    const RealSequence target = distance_profile(x, rho);
    const std::vector<double>& target_prefix = target.prefix_sums();
    double prefix_scale = 1.0;
    for (double v : target_prefix) prefix_scale = std::max(prefix_scale, std::abs(v));
    const double compare_gate = 1e-6 * prefix_scale;

    constexpr std::size_t kSweeps = 200;
    constexpr double kSigmaHi = 1e-1;
    constexpr double kSigmaLo = 1e-4;
    constexpr std::size_t kStallLimit = 10;

    MarginScratch scratch;
    std::vector<double> coords, moved, saved_row;

    auto try_witness = [&](const std::vector<double>& flat) -> std::optional<FalsificationResult> {
        SphericalConfiguration y = SphericalConfiguration::from_flat(n, flat);
        const MajorizationOrder order = compare(distance_profile(y, rho), target);
        if (order == MajorizationOrder::Dominates) {
            return FalsificationResult{true, std::move(y), order, 0};
        }
        return std::nullopt;
    };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng = derived_rng(cfg.rng_seed, trial);
        SphericalConfiguration y = random_configuration(n, m, rng);
        coords = y.flat();

        scratch.values.assign(m * (m - 1) / 2, 0.0);
        bool singular = false;
        for (std::size_t i = 0; i < m && !singular; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                double r = 0.0;
                for (std::size_t c = 0; c < n; ++c) {
                    const double d = coords[i * n + c] - coords[j * n + c];
                    r += d * d;
                }
                if (!rho_value_of(rho, std::sqrt(r), scratch.values[pair_index(i, j, m)])) {
                    singular = true;
                    break;
                }
            }
        }
        if (singular) continue;  // sample hit a kernel singularity; next trial

        double margin = profile_margin(scratch.values, target_prefix, scratch.sorted);
        if (margin >= -compare_gate) {
            if (auto hit = try_witness(coords)) {
                hit->trials_used = trial + 1;
                return std::move(*hit);
            }
        }
        std::size_t stall = 0;

        for (std::size_t sweep = 0; sweep < kSweeps; ++sweep) {
            const double sigma =
                kSigmaHi * std::pow(kSigmaLo / kSigmaHi,
                                    static_cast<double>(sweep) / static_cast<double>(kSweeps - 1));
            bool improved = false;

            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t axis = 0; axis < n; ++axis) {
                    for (int sign : {1, -1}) {
                        // Tangent direction: coordinate axis minus its radial part.
                        const double radial = coords[i * n + axis];
                        const double dir_norm2 = 1.0 - radial * radial;
                        if (dir_norm2 < 1e-16) continue;
                        const double inv_dir = 1.0 / std::sqrt(dir_norm2);

                        moved.assign(coords.begin() + i * n, coords.begin() + (i + 1) * n);
                        double norm2 = 0.0;
                        for (std::size_t c = 0; c < n; ++c) {
                            const double tangent =
                                ((c == axis ? 1.0 : 0.0) - radial * coords[i * n + c]) * inv_dir;
                            moved[c] += sign * sigma * tangent;
                            norm2 += moved[c] * moved[c];
                        }
                        if (norm2 < 1e-24) continue;
                        const double inv = 1.0 / std::sqrt(norm2);
                        for (std::size_t c = 0; c < n; ++c) moved[c] *= inv;

                        // Update the m-1 pair values touched by point i.
                        saved_row.clear();
                        bool ok = true;
                        for (std::size_t j = 0; j < m && ok; ++j) {
                            if (j == i) continue;
                            double r2 = 0.0;
                            for (std::size_t c = 0; c < n; ++c) {
                                const double d = moved[c] - coords[j * n + c];
                                r2 += d * d;
                            }
                            const std::size_t idx =
                                j < i ? pair_index(j, i, m) : pair_index(i, j, m);
                            saved_row.push_back(scratch.values[idx]);
                            ok = rho_value_of(rho, std::sqrt(r2), scratch.values[idx]);
                        }
                        double new_margin = ok ? profile_margin(scratch.values, target_prefix,
                                                                scratch.sorted)
                                               : -std::numeric_limits<double>::infinity();
                        if (ok && new_margin > margin) {
                            margin = new_margin;
                            std::copy(moved.begin(), moved.end(), coords.begin() + i * n);
                            improved = true;
                        } else {
                            // roll back the touched pair values
                            std::size_t w = 0;
                            for (std::size_t j = 0; j < m; ++j) {
                                if (j == i) continue;
                                if (w >= saved_row.size()) break;
                                const std::size_t idx =
                                    j < i ? pair_index(j, i, m) : pair_index(i, j, m);
                                scratch.values[idx] = saved_row[w++];
                            }
                        }
                    }
                }
            }

            if (margin >= -compare_gate) {
                if (auto hit = try_witness(coords)) {
                    hit->trials_used = trial + 1;
                    return std::move(*hit);
                }
            }
            if (improved) {
                stall = 0;
            } else if (++stall >= kStallLimit) {
                break;
            }
        }

        if (margin >= -compare_gate) {
            if (auto hit = try_witness(coords)) {
                hit->trials_used = trial + 1;
                return std::move(*hit);
            }
        }
    }
    return FalsificationResult{false, std::nullopt, MajorizationOrder::Incomparable, trials};
}

double triangle_threshold_s_min() { return std::log(9.0 / 4.0) / std::log(4.0 / 3.0); }

double triangle_threshold_residual(double s, double t) {
    const double z = 0.5 * s;
    return std::pow(1.0 - t, z) + std::pow(2.0, z - 1.0) * std::pow(1.0 - t * t, z) -
           std::pow(1.5, z + 1.0);
}

double triangle_threshold_root(double s) {
    const double s0 = triangle_threshold_s_min();
    constexpr double kSnapBelow = 1e-3;  // CLI-friendly slop under the printed 4-digit s0
    if (s < s0 - kSnapBelow || s > 4.0 + 1e-12) {
        std::ostringstream msg;
        msg << "s = " << s << " outside [" << s0
            << ", 4]: below the threshold only regular triangles are maximal (the equation has "
               "no root besides t = -1/2); at s = 4 and beyond the isoceles family starts at "
               "alpha = 2*pi/3 (root fixed at -1/2)";
        throw RangeError(msg.str());
    }
    if (s <= s0) return -1.0;
    if (s >= 4.0) return -0.5;

    // g is positive at -1, crosses zero at the interior root, and returns to
    // zero at -1/2 from below. Bracket the + -> - transition on a grid first:
    // the residual near -1/2 sits at rounding level, so endpoint sign tests
    // alone are not reliable.
    constexpr double kInset = 1e-9;  // avoids the double roots at the interval ends
    constexpr std::size_t kScan = 8192;
    const double lo_end = -1.0 + kInset;
    const double hi_end = -0.5 - kInset;
    if (triangle_threshold_residual(s, lo_end) <= 0.0) return -1.0;  // merged into the endpoint

    double lo = lo_end;
    double flo = triangle_threshold_residual(s, lo);
    double hi = hi_end;
    bool bracketed = false;
    for (std::size_t i = 1; i <= kScan; ++i) {
        const double t = lo_end + (hi_end - lo_end) * static_cast<double>(i) /
                                      static_cast<double>(kScan);
        const double g = triangle_threshold_residual(s, t);
        if (flo > 0.0 && g < 0.0) {
            hi = t;
            bracketed = true;
            break;
        }
        lo = t;
        flo = g;
    }
    if (!bracketed) return -0.5;  // root numerically merged into -1/2

    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (triangle_threshold_residual(s, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

TriangleClassification classify_triangle_msets(double s) {
    if (!(s > 0.0)) throw DomainError("triangle classification requires s > 0");
    const double s0 = triangle_threshold_s_min();
    const double pi = std::acos(-1.0);
    if (s <= s0) return TriangleClassification{1, std::nullopt};
    if (s < 4.0) {
        const double t = triangle_threshold_root(s);
        return TriangleClassification{2, std::make_pair(std::acos(t), pi)};
    }
    return TriangleClassification{3, std::make_pair(2.0 * pi / 3.0, pi)};
}

}  // namespace mset
