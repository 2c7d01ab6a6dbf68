#ifndef MSET_OPTIMIZE_HPP
#define MSET_OPTIMIZE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mset/configuration.hpp"
#include "mset/sequence.hpp"

namespace mset {

struct OptimizerConfig {
    std::size_t restarts = 20;
    std::size_t max_iterations = 5000;
    double gradient_tolerance = 1e-7;
    double initial_step = 0.5;        // backtracking line search parameters
    double step_shrink = 0.5;
    double sufficient_decrease = 1e-4;
    std::uint64_t rng_seed = 0;
    bool record_trace = false;        // keep the winning restart's energy trace
};

struct MinimizationResult {
    SphericalConfiguration configuration;
    double energy;
    bool converged;
    double final_gradient_norm;
    std::size_t restart_index;
    std::vector<double> energy_trace;  // filled when record_trace is set
};

/// Uniform point sampling via normalized Gaussian vectors.
SphericalConfiguration random_configuration(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// Ambient Riesz gradient projected to the tangent spaces, flattened
/// row-major (one n-block per point).
std::vector<double> riesz_projected_gradient(const SphericalConfiguration& x, double t);

/// Best-of-restarts projected gradient descent for the Riesz t-energy of m
/// points on S^{n-1}. Each step moves along the negative tangent gradient
/// and renormalizes; backtracking enforces sufficient decrease and rejects
/// steps that collapse a pair below coincidence tolerance. Each restart owns
/// an RNG stream derived from (rng_seed, restart index), and the best result
/// is selected by energy with ties broken by restart index, so a fixed seed
/// fully determines the outcome. Non-convergence is reported through
/// converged = false, never thrown.
MinimizationResult minimize_riesz(std::size_t n, std::size_t m, double t,
                                  const OptimizerConfig& cfg = {});

struct FalsificationResult {
    bool found;
    std::optional<SphericalConfiguration> witness;
    MajorizationOrder witness_order;  // Dominates when found
    std::size_t trials_used;
};

/// Searches for a configuration whose rho-profile strictly dominates X's.
/// Each trial samples a random configuration and hill-climbs the margin
/// min_k [S_k(Y) - S_k(X)] (the worst prefix-sum gap) by coordinate-wise
/// tangent perturbations with magnitude decaying from 1e-1 to 1e-4 over 200
/// sweeps. Returns the first witness with compare(R(Y), R(X)) = Dominates,
/// or found = false after exhausting the trials. A found witness is always
/// revalidated through compare before being returned.
FalsificationResult mset_falsify(const SphericalConfiguration& x, const DistanceFunctional& rho,
                                 std::size_t trials, const OptimizerConfig& cfg = {});

/// Lower end of the s-range on which the isoceles-triangle threshold
/// equation has an interior root: log(9/4) / log(4/3) ~ 2.8188.
double triangle_threshold_s_min();

/// Residual g(t) = (1-t)^z + 2^{z-1} (1-t^2)^z - (3/2)^{z+1}, z = s/2, whose
/// zero in (-1, -1/2) marks where the isoceles family enters the maximal
/// set. g also vanishes at t = -1/2 for every s.
double triangle_threshold_residual(double s, double t);

/// Bisection solve of the threshold equation for s in [s_min, 4]; returns
/// -1 at the lower endpoint and -1/2 at s = 4, where the interior root
/// merges with the fixed one. s outside the range (beyond a small snap
/// window below s_min) raises RangeError describing the case structure.
double triangle_threshold_root(double s);

struct TriangleClassification {
    /// 1: only regular triangles are maximal. 2: regular triangles plus the
    /// isoceles family alpha, alpha, 2*pi - 2*alpha with alpha in
    /// (alpha_range.first, pi]. 3: the same family with alpha in
    /// [2*pi/3, pi].
    int case_id;
    std::optional<std::pair<double, double>> alpha_range;
};

/// Classification of the maximal three-point circle configurations under
/// the scale-s distance, s > 0.
TriangleClassification classify_triangle_msets(double s);

}  // namespace mset

#endif  // MSET_OPTIMIZE_HPP
