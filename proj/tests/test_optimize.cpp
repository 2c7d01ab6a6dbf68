#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "mset/energy.hpp"
#include "mset/errors.hpp"
#include "mset/generators.hpp"
#include "mset/optimize.hpp"
#include "oracles.hpp"

using namespace mset;

namespace {

constexpr double kPi = std::numbers::pi;

SphericalConfiguration retract_step(const SphericalConfiguration& x,
                                    const std::vector<double>& direction, double eps) {
    const std::size_t n = x.dimension();
    std::vector<double> flat = x.flat();
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += eps * direction[i];
    for (std::size_t i = 0; i < x.size(); ++i) {
        double norm = 0.0;
        for (std::size_t c = 0; c < n; ++c) norm += flat[i * n + c] * flat[i * n + c];
        norm = std::sqrt(norm);
        for (std::size_t c = 0; c < n; ++c) flat[i * n + c] /= norm;
    }
    return SphericalConfiguration::from_flat(n, std::move(flat));
}

std::vector<double> random_tangent(const SphericalConfiguration& x, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = x.dimension();
    std::vector<double> v(x.flat().size());
    for (double& c : v) c = gauss(rng);
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto p = x.point(i);
        double radial = 0.0;
        for (std::size_t c = 0; c < n; ++c) radial += v[i * n + c] * p[c];
        for (std::size_t c = 0; c < n; ++c) v[i * n + c] -= radial * p[c];
    }
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : v) c /= norm;
    return v;
}

SphericalConfiguration perturbed_pentagon(double delta) {
    std::vector<double> flat;
    for (int k = 0; k < 5; ++k) {
        const double angle = 2.0 * kPi * k / 5.0 + (k == 0 ? delta : 0.0);
        flat.push_back(std::cos(angle));
        flat.push_back(std::sin(angle));
    }
    return SphericalConfiguration::from_flat(2, std::move(flat));
}

}  // namespace

TEST_CASE("projected gradient matches central finite differences") {
    std::mt19937_64 rng(31);
    const double h = 1e-6;
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = 2 + it % 3;
        const std::size_t m = 3 + it % 4;
        auto x = random_configuration(n, m, rng);
        if (min_pair_distance(x) < 0.15) continue;  // keep the quotient well conditioned
        for (double t : {0.0, 1.0, 2.0, 3.0}) {
            auto grad = riesz_projected_gradient(x, t);
            auto v = random_tangent(x, rng);
            double analytic = 0.0;
            for (std::size_t i = 0; i < grad.size(); ++i) analytic += grad[i] * v[i];
            const double fd =
                (riesz_energy(retract_step(x, v, h), t) - riesz_energy(retract_step(x, v, -h), t)) /
                (2.0 * h);
            CHECK(std::abs(analytic - fd) <= 1e-5 * std::max(1.0, std::abs(analytic)));
        }
    }
}

TEST_CASE("minimization is deterministic for a fixed seed") {
    OptimizerConfig cfg;
    cfg.restarts = 4;
    cfg.rng_seed = 42;
    auto a = minimize_riesz(3, 5, 1.0, cfg);
    auto b = minimize_riesz(3, 5, 1.0, cfg);
    CHECK(a.energy == b.energy);
    CHECK(a.restart_index == b.restart_index);
    CHECK(a.configuration.flat() == b.configuration.flat());
}

TEST_CASE("descent trajectories never increase the energy") {
    OptimizerConfig cfg;
    cfg.restarts = 3;
    cfg.rng_seed = 7;
    cfg.record_trace = true;
    auto result = minimize_riesz(3, 6, 1.0, cfg);
    REQUIRE(result.energy_trace.size() > 1);
    for (std::size_t i = 1; i < result.energy_trace.size(); ++i) {
        CHECK(result.energy_trace[i] <= result.energy_trace[i - 1] + 1e-12);
    }
}

TEST_CASE("reported energy is pinned to the public energy path") {
    OptimizerConfig cfg;
    cfg.restarts = 2;
    cfg.rng_seed = 5;
    auto result = minimize_riesz(4, 6, 2.0, cfg);
    CHECK(result.energy == riesz_energy(result.configuration, 2.0));
    for (std::size_t i = 0; i < result.configuration.size(); ++i) {
        double norm = 0.0;
        for (double c : result.configuration.point(i)) norm += c * c;
        CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
    }
}

TEST_CASE("four points at t = 1 settle on the regular tetrahedron") {
    OptimizerConfig cfg;
    cfg.restarts = 5;
    cfg.rng_seed = 1;
    auto result = minimize_riesz(3, 4, 1.0, cfg);
    CHECK(result.converged);
    auto profile = distance_profile(result.configuration, DistanceFunctional::squared_euclidean());
    for (double q : profile.values()) CHECK(std::abs(q - 8.0 / 3.0) <= 1e-6);
}

TEST_CASE("five points at t = 1 settle on the triangular bipyramid spectrum") {
    OptimizerConfig cfg;
    cfg.restarts = 8;
    cfg.rng_seed = 3;
    auto result = minimize_riesz(3, 5, 1.0, cfg);
    std::vector<double> grams;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            grams.push_back(result.configuration.inner_product(i, j));
        }
    }
    std::sort(grams.begin(), grams.end());
    const std::vector<double> expected = {-1.0, -0.5, -0.5, -0.5, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < grams.size(); ++i) {
        CHECK(std::abs(grams[i] - expected[i]) <= 1e-5);
    }
}

TEST_CASE("five points on the circle at t = 0 settle on the regular pentagon") {
    OptimizerConfig cfg;
    cfg.restarts = 6;
    cfg.rng_seed = 11;
    auto result = minimize_riesz(2, 5, 0.0, cfg);
    // the exact pentagon is the oracle for both energy and profile
    const double pentagon_energy = riesz_energy(regular_polygon(5), 0.0);
    CHECK(result.energy <= pentagon_energy + 1e-9);
    auto profile = distance_profile(result.configuration, DistanceFunctional::angular());
    auto target = distance_profile(regular_polygon(5), DistanceFunctional::angular());
    for (std::size_t i = 0; i < profile.size(); ++i) {
        CHECK(std::abs(profile.sorted_view()[i] - target.sorted_view()[i]) <= 1e-6);
    }
}

TEST_CASE("optimizer validates its inputs") {
    OptimizerConfig bad;
    bad.restarts = 0;
    CHECK_THROWS_AS(minimize_riesz(3, 4, 1.0, bad), DomainError);
    CHECK_THROWS_AS(minimize_riesz(1, 4, 1.0), DomainError);
    CHECK_THROWS_AS(minimize_riesz(3, 1, 1.0), DomainError);
    CHECK_THROWS_AS(minimize_riesz(3, 4, -0.5), DomainError);
}

TEST_CASE("falsification finds a dominator for the perturbed pentagon") {
    OptimizerConfig cfg;
    cfg.rng_seed = 0;
    auto x = perturbed_pentagon(0.1);
    auto result = mset_falsify(x, DistanceFunctional::angular(), 1000, cfg);
    REQUIRE(result.found);
    CHECK(result.trials_used <= 1000);
    CHECK(result.witness_order == MajorizationOrder::Dominates);
    // soundness: the witness must survive an independent comparison
    auto witness_profile = distance_profile(*result.witness, DistanceFunctional::angular());
    auto target_profile = distance_profile(x, DistanceFunctional::angular());
    CHECK(compare(witness_profile, target_profile) == MajorizationOrder::Dominates);
}

TEST_CASE("falsification finds the regular triangle over a skewed one") {
    // three circle points with consecutive gaps 0.2 and 0.5
    SphericalConfiguration skewed(2, {{1.0, 0.0},
                                      {std::cos(0.2), std::sin(0.2)},
                                      {std::cos(0.7), std::sin(0.7)}});
    OptimizerConfig cfg;
    cfg.rng_seed = 0;
    auto result = mset_falsify(skewed, DistanceFunctional::angular(), 200, cfg);
    REQUIRE(result.found);
    // the regular triangle profile dominates the witness target directly
    auto triangle = distance_profile(regular_polygon(3), DistanceFunctional::angular());
    auto target = distance_profile(skewed, DistanceFunctional::angular());
    CHECK(compare(triangle, target) == MajorizationOrder::Dominates);
}

TEST_CASE("the quadrilateral family resists falsification under squared distance") {
    OptimizerConfig cfg;
    cfg.rng_seed = 0;
    auto x = quadrilateral(1.8);  // inside [pi/2, 2*pi/3]
    auto result = mset_falsify(x, DistanceFunctional::squared_euclidean(), 200, cfg);
    CHECK_FALSE(result.found);
}

TEST_CASE("falsification returns empty-handed on the regular pentagon") {
    OptimizerConfig cfg;
    cfg.rng_seed = 0;
    auto result = mset_falsify(regular_polygon(5), DistanceFunctional::angular(), 300, cfg);
    CHECK_FALSE(result.found);
    CHECK(result.trials_used == 300);
    CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("falsification returns empty-handed on the regular simplex") {
    OptimizerConfig cfg;
    cfg.rng_seed = 0;
    auto result =
        mset_falsify(regular_simplex(4), DistanceFunctional::squared_euclidean(), 200, cfg);
    CHECK_FALSE(result.found);
}

TEST_CASE("global Riesz minimizers are never dominated under the scale family") {
    OptimizerConfig cfg;
    cfg.restarts = 10;
    cfg.rng_seed = 2;
    auto best = minimize_riesz(3, 5, 1.0, cfg);
    std::mt19937_64 rng(33);
    std::size_t violations = 0;
    for (double s : {-0.5, 0.0, 1.0, 2.0}) {
        const auto rho = DistanceFunctional::scale(s);
        auto target = distance_profile(best.configuration, rho);
        for (int it = 0; it < 10000; ++it) {
            auto y = random_configuration(3, 5, rng);
            if (compare(distance_profile(y, rho), target) == MajorizationOrder::Dominates) {
                ++violations;
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("threshold equation endpoints and interior roots") {
    const double s0 = triangle_threshold_s_min();
    CHECK(s0 == doctest::Approx(2.8188).epsilon(1e-4));
    CHECK(triangle_threshold_root(s0) == -1.0);
    CHECK(triangle_threshold_root(4.0) == -0.5);
    CHECK(triangle_threshold_root(2.8188) == -1.0);  // inside the snap window

    for (double s : {3.0, 3.5}) {
        const double t = triangle_threshold_root(s);
        CHECK(t > -1.0);
        CHECK(t < -0.5);
        CHECK(std::abs(triangle_threshold_residual(s, t)) < 1e-10);
    }
    CHECK(triangle_threshold_root(3.0) < triangle_threshold_root(3.5));

    CHECK_THROWS_AS(triangle_threshold_root(2.0), RangeError);
    CHECK_THROWS_AS(triangle_threshold_root(4.5), RangeError);
}

TEST_CASE("threshold root is increasing in s") {
    const double s0 = triangle_threshold_s_min();
    double prev = triangle_threshold_root(s0);
    for (int i = 1; i <= 20; ++i) {
        const double s = s0 + (4.0 - s0) * i / 20.0;
        const double t = triangle_threshold_root(s);
        CHECK(t >= prev);
        prev = t;
    }
    CHECK(prev == -0.5);
}

TEST_CASE("triangle classification cases") {
    CHECK(classify_triangle_msets(2.0).case_id == 1);
    CHECK_FALSE(classify_triangle_msets(2.0).alpha_range.has_value());

    auto mid = classify_triangle_msets(3.0);
    CHECK(mid.case_id == 2);
    REQUIRE(mid.alpha_range.has_value());
    CHECK(mid.alpha_range->first ==
          doctest::Approx(std::acos(triangle_threshold_root(3.0))).epsilon(1e-12));
    CHECK(mid.alpha_range->second == doctest::Approx(kPi));

    auto high = classify_triangle_msets(5.0);
    CHECK(high.case_id == 3);
    REQUIRE(high.alpha_range.has_value());
    CHECK(high.alpha_range->first == doctest::Approx(2.0 * kPi / 3.0));
    CHECK(high.alpha_range->second == doctest::Approx(kPi));

    CHECK_THROWS_AS(classify_triangle_msets(0.0), DomainError);
    CHECK_THROWS_AS(classify_triangle_msets(-1.0), DomainError);
}
