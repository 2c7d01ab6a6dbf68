#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mset/configuration.hpp"
#include "mset/errors.hpp"
#include "mset/generators.hpp"
#include "mset/optimize.hpp"
#include "mset/pointset_io.hpp"
#include "oracles.hpp"

using namespace mset;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("configuration construction validates norms and shapes") {
    CHECK_THROWS_AS(SphericalConfiguration(2, {{0.5, 0.5}}), DomainError);
    CHECK_THROWS_AS(SphericalConfiguration(2, {{1.0, 0.0, 0.0}}), DimensionError);
    CHECK_THROWS_AS(SphericalConfiguration(2, {}), DomainError);
    CHECK_NOTHROW(SphericalConfiguration(2, {{1.0, 0.0}, {0.0, -1.0}}));

    auto x = SphericalConfiguration::from_flat(2, {3.0, 4.0}, true);
    CHECK(x.point(0)[0] == doctest::Approx(0.6));
    CHECK(x.point(0)[1] == doctest::Approx(0.8));
    CHECK_THROWS_AS(SphericalConfiguration::from_flat(2, {0.0, 0.0}, true), DomainError);
    CHECK_THROWS_AS(SphericalConfiguration::from_flat(2, {1.0, 0.0, 0.0}), DimensionError);
}

TEST_CASE("distance functional values and names") {
    auto r = DistanceFunctional::euclidean();
    auto r2 = DistanceFunctional::squared_euclidean();
    auto phi = DistanceFunctional::angular();
    CHECK(r.from_euclidean(2.0) == 2.0);
    CHECK(r2.from_euclidean(2.0) == 4.0);
    CHECK(phi.from_euclidean(2.0) == doctest::Approx(kPi));
    CHECK(phi.from_euclidean(std::sqrt(2.0)) == doctest::Approx(kPi / 2.0));

    CHECK(DistanceFunctional::scale(2.0).from_euclidean(3.0) == doctest::Approx(9.0));
    CHECK(DistanceFunctional::scale(0.0).from_euclidean(std::exp(1.0)) == doctest::Approx(1.0));
    CHECK(DistanceFunctional::scale(-1.0).from_euclidean(2.0) == doctest::Approx(-0.5));
    CHECK(DistanceFunctional::scale(-1.0).singular_at_coincidence());
    CHECK(DistanceFunctional::scale(0.0).singular_at_coincidence());
    CHECK_FALSE(DistanceFunctional::scale(1.0).singular_at_coincidence());
    CHECK(r2.name() == "r2");
}

TEST_CASE("square profile under the angular distance") {
    auto profile = distance_profile(regular_polygon(4), DistanceFunctional::angular());
    REQUIRE(profile.size() == 6);
    const auto& s = profile.sorted_view();
    for (int i = 0; i < 4; ++i) CHECK(s[i] == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(s[4] == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(s[5] == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("regular polygon angular profile matches the arc multiset") {
    for (std::size_t m : {3, 5, 6, 8}) {
        auto profile = distance_profile(regular_polygon(m), DistanceFunctional::angular());
        std::vector<double> expected;
        for (std::size_t k = 1; k <= m / 2; ++k) {
            const std::size_t mult = (2 * k == m) ? m / 2 : m;
            expected.insert(expected.end(), mult, 2.0 * kPi * static_cast<double>(k) /
                                                      static_cast<double>(m));
        }
        std::sort(expected.begin(), expected.end());
        REQUIRE(profile.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            // asin has unbounded slope at antipodal pairs, so arcs at pi only
            // resolve to about sqrt(ulp)
            const double tol = expected[i] > 3.14 ? 1e-7 : 1e-12;
            CHECK(std::abs(profile.sorted_view()[i] - expected[i]) <= tol);
        }
    }
}

TEST_CASE("regular simplex squared-distance profile is constant 2m/(m-1)") {
    for (std::size_t n : {2, 3, 5, 7}) {
        auto x = regular_simplex(n);
        auto profile = distance_profile(x, DistanceFunctional::squared_euclidean());
        const double expected = 2.0 * static_cast<double>(n + 1) / static_cast<double>(n);
        REQUIRE(profile.size() == (n + 1) * n / 2);
        for (double v : profile.values()) CHECK(v == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("profile length is always m(m-1)/2") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = 2 + it % 4;
        const std::size_t m = 2 + it % 7;
        auto x = random_configuration(n, m, rng);
        CHECK(distance_profile(x, DistanceFunctional::euclidean()).size() == m * (m - 1) / 2);
    }
}

TEST_CASE("angular and Euclidean profiles satisfy r = 2 sin(phi/2)") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 200; ++it) {
        auto x = random_configuration(2 + it % 4, 2 + it % 6, rng);
        auto r = distance_profile(x, DistanceFunctional::euclidean());
        auto phi = distance_profile(x, DistanceFunctional::angular());
        auto r2 = distance_profile(x, DistanceFunctional::squared_euclidean());
        auto spec = gram_spectrum(x);
        std::size_t pair = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j, ++pair) {
                CHECK(r.values()[pair] ==
                      doctest::Approx(2.0 * std::sin(0.5 * phi.values()[pair])).epsilon(1e-12));
                CHECK(r2.values()[pair] ==
                      doctest::Approx(2.0 - 2.0 * spec.entry(i, j)).epsilon(1e-12));
                CHECK(std::abs(spec.entry(i, j)) <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("singular scale functionals reject coincident pairs by name") {
    SphericalConfiguration x(2, {{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    for (double s : {0.0, -1.0}) {
        try {
            distance_profile(x, DistanceFunctional::scale(s));
            FAIL("expected SingularityError");
        } catch (const SingularityError& e) {
            const std::string what = e.what();
            CHECK(what.find("0 and 1") != std::string::npos);
        }
    }
    // finite kinds accept coincidence
    CHECK_NOTHROW(distance_profile(x, DistanceFunctional::squared_euclidean()));
    CHECK_NOTHROW(distance_profile(x, DistanceFunctional::angular()));
}

TEST_CASE("gram spectrum of the triangular bipyramid") {
    auto spec = gram_spectrum(triangular_bipyramid());
    const auto& clusters = spec.inner_product_set();
    REQUIRE(clusters.size() == 3);
    CHECK(clusters[0].representative == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(clusters[0].multiplicity == 1);
    CHECK(clusters[1].representative == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(clusters[1].multiplicity == 3);
    CHECK(clusters[2].representative == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(clusters[2].multiplicity == 6);
    for (std::size_t i = 0; i < spec.size(); ++i) CHECK(spec.entry(i, i) == doctest::Approx(1.0));
}

TEST_CASE("gram spectrum of the 24-cell has four off-diagonal values") {
    auto spec = gram_spectrum(cell24());
    const auto& clusters = spec.inner_product_set();
    REQUIRE(clusters.size() == 4);
    const double expected[] = {-1.0, -0.5, 0.0, 0.5};
    for (int i = 0; i < 4; ++i) {
        CHECK(clusters[i].representative == doctest::Approx(expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("gram spectrum of the regular simplex is a single cluster at -1/m-1") {
    for (std::size_t n : {2, 4, 6}) {
        auto spec = gram_spectrum(regular_simplex(n));
        REQUIRE(spec.inner_product_set().size() == 1);
        CHECK(spec.inner_product_set()[0].representative ==
              doctest::Approx(-1.0 / static_cast<double>(n)).epsilon(1e-12));
        CHECK(spec.inner_product_set()[0].multiplicity == (n + 1) * n / 2);
    }
}

TEST_CASE("minimum pair distance and omega membership") {
    const double sqrt2 = std::sqrt(2.0);
    CHECK(min_pair_distance(cross_polytope(4)) == doctest::Approx(sqrt2).epsilon(1e-12));
    CHECK(omega_member(cross_polytope(4), sqrt2));

    for (std::size_t n : {3, 5}) {
        const double side = std::sqrt(2.0 * static_cast<double>(n + 1) / static_cast<double>(n));
        CHECK(min_pair_distance(regular_simplex(n)) == doctest::Approx(side).epsilon(1e-12));
        CHECK(side > sqrt2);
        CHECK(omega_member(regular_simplex(n), sqrt2));
    }

    CHECK(min_pair_distance(triangular_bipyramid()) == doctest::Approx(sqrt2).epsilon(1e-12));
    CHECK(omega_member(triangular_bipyramid(), sqrt2));
    CHECK_FALSE(omega_member(triangular_bipyramid(), sqrt2 + 1e-6));
}

TEST_CASE("kuperberg decomposition of the cross-polytope gives antipodal pairs") {
    for (std::size_t n : {2, 3, 5}) {
        auto result = kuperberg_decompose(cross_polytope(n));
        CHECK(result.is_valid);
        REQUIRE(result.clusters.size() == n);
        for (std::size_t c = 0; c < n; ++c) {
            CHECK(result.clusters[c].size() == 2);
            CHECK(result.dims[c] == 1);
        }
    }
}

TEST_CASE("kuperberg decomposition of the triangular bipyramid") {
    auto result = kuperberg_decompose(triangular_bipyramid());
    CHECK(result.is_valid);
    REQUIRE(result.clusters.size() == 2);
    CHECK(result.clusters[0] == std::vector<std::size_t>{0, 1});  // the poles
    CHECK(result.dims[0] == 1);
    CHECK(result.clusters[1] == std::vector<std::size_t>{2, 3, 4});
    CHECK(result.dims[1] == 2);
}

TEST_CASE("kuperberg decomposition flags the single-cluster simplex case") {
    auto result = kuperberg_decompose(regular_simplex(4));
    CHECK(result.clusters.size() == 1);  // premise of the splitting needs k >= 2
    CHECK(result.dims[0] == 4);
    CHECK(result.is_valid);
}

TEST_CASE("kuperberg decomposition reports failed conditions") {
    // one orphaned point: cluster of size 1 with rank 1
    SphericalConfiguration x(3, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
    auto result = kuperberg_decompose(x);
    CHECK_FALSE(result.is_valid);
    CHECK(!result.failure.empty());
}

TEST_CASE("pointset io round-trips bit-exactly") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        auto x = random_configuration(2 + it % 4, 1 + it % 6, rng);
        std::stringstream buffer;
        write_pointset(buffer, x);
        auto back = read_pointset(buffer);
        REQUIRE(back.dimension() == x.dimension());
        REQUIRE(back.size() == x.size());
        CHECK(back.flat() == x.flat());
    }
}

TEST_CASE("pointset io accepts comments and blank lines") {
    std::stringstream in("# a comment\n\n2 2\n1 0\n# interior comment\n0 1\n");
    auto x = read_pointset(in);
    CHECK(x.dimension() == 2);
    CHECK(x.size() == 2);
}

TEST_CASE("pointset io reports offending line numbers") {
    auto expect_fail = [](const std::string& text, const std::string& needle) {
        std::stringstream in(text);
        try {
            read_pointset(in);
            FAIL_CHECK("expected FormatError for: " << text);
        } catch (const FormatError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("nonsense\n", "line 1");
    expect_fail("2 2\n1 0\n", "found 1");
    expect_fail("2 1\n1\n", "line 2");
    expect_fail("2 1\n1 0 extra\n", "line 2");
    expect_fail("2 1\n1 0\n1 0\n", "line 3");
    expect_fail("2 1\n0.5 0\n", "invalid");  // norm violation
}

TEST_CASE("pointset loader normalizes on request") {
    std::stringstream in("2 1\n3 4\n");
    CHECK_THROWS_AS(read_pointset(in), FormatError);
    std::stringstream again("2 1\n3 4\n");
    auto x = read_pointset(again, true);
    CHECK(x.point(0)[0] == doctest::Approx(0.6));
}
