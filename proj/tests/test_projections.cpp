#include <doctest.h>

#include <cmath>
#include <numbers>

#include "marstrand/ifs.hpp"
#include "marstrand/projections.hpp"
#include "marstrand/rng.hpp"
#include "oracles.hpp"

using namespace marstrand;

TEST_CASE("planar angle family: axis projections") {
    const auto family = planar_angle_family();
    CHECK(family.apply_point(std::vector<double>{0.0}, std::vector<double>{3.0, 4.0})[0] ==
          doctest::Approx(3.0));
    CHECK(family.apply_point(std::vector<double>{std::numbers::pi / 2.0},
                             std::vector<double>{3.0, 4.0})[0] == doctest::Approx(4.0));
}

TEST_CASE("planar angle family: collapse probability matches the arcsin law") {
    const auto family = planar_angle_family();
    const std::size_t n = 10000;
    const auto lambdas = family.sample_lambda(n, 99);
    const std::vector<double> u = {1.0, 0.0};
    for (double delta : {0.1, 0.3}) {
        std::size_t hits = 0;
        for (const auto& lambda : lambdas)
            if (std::abs(family.apply_point(lambda, u)[0]) <= delta) ++hits;
        const double p_hat = static_cast<double>(hits) / static_cast<double>(n);
        const double p = oracles::planar_collapse_prob(delta);
        CHECK(p <= delta);  // asin(delta) <= pi delta / 2
        CHECK(std::abs(p_hat - p) <= 3.0 * oracles::binomial_sigma(p, n));
    }
}

TEST_CASE("spatial direction family: axis projection and band law") {
    const auto family = spatial_direction_family();
    CHECK(family.apply_point(std::vector<double>{1.0, 0.0, 0.0},
                             std::vector<double>{5.0, 6.0, 7.0})[0] == doctest::Approx(5.0));

    const std::size_t n = 10000;
    const auto lambdas = family.sample_lambda(n, 1234);
    for (const auto& lambda : lambdas) {
        const double norm2 =
            lambda[0] * lambda[0] + lambda[1] * lambda[1] + lambda[2] * lambda[2];
        REQUIRE(norm2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    const std::vector<double> u = {0.0, 0.0, 1.0};
    for (double delta : {0.1, 0.3}) {
        std::size_t hits = 0;
        for (const auto& lambda : lambdas)
            if (std::abs(family.apply_point(lambda, u)[0]) <= delta) ++hits;
        const double p_hat = static_cast<double>(hits) / static_cast<double>(n);
        // Archimedes: the band |<lambda, u>| <= delta has measure exactly delta.
        CHECK(std::abs(p_hat - delta) <= 3.0 * oracles::binomial_sigma(delta, n));
    }
}

TEST_CASE("built-in families are 1-Lipschitz in the point argument") {
    CounterRng rng{5150};
    for (const auto& family : builtin_families()) {
        const auto lambdas = family.sample_lambda(100, 77);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> x(family.domain_dim), y(family.domain_dim);
            for (std::size_t c = 0; c < family.domain_dim; ++c) {
                x[c] = rng.uniform(1, trial * 8 + c, -2.0, 2.0);
                y[c] = rng.uniform(1, trial * 8 + 4 + c, -2.0, 2.0);
            }
            const auto& lambda = lambdas[trial % lambdas.size()];
            const double lhs = std::abs(family.apply_point(lambda, x)[0] -
                                        family.apply_point(lambda, y)[0]);
            REQUIRE(lhs <= dist(x.data(), y.data(), family.domain_dim) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("sample_lambda is reproducible for identical (count, seed)") {
    for (const auto& family : builtin_families()) {
        const auto a = family.sample_lambda(64, 4321);
        const auto b = family.sample_lambda(64, 4321);
        REQUIRE(a == b);
        const auto c = family.sample_lambda(64, 4322);
        REQUIRE(a != c);
    }
}

TEST_CASE("pushforward: planar angle at lambda = 0") {
    const auto mu = make_measure(PointCloud(2, {0.0, 0.0, 1.0, 1.0}), {0.5, 0.5});
    const auto nu = pushforward(planar_angle_family(), std::vector<double>{0.0}, mu);
    REQUIRE(nu.size() == 2);
    CHECK(nu.dim() == 1);
    CHECK(nu.support.coords[0] == doctest::Approx(0.0));
    CHECK(nu.support.coords[1] == doctest::Approx(1.0));
    CHECK(nu.weights == mu.weights);
}

TEST_CASE("pushforward preserves mass exactly") {
    const auto mu = oracles::random_measure(31, 200, 2, 3.7);
    const auto family = planar_angle_family();
    for (const auto& lambda : family.sample_lambda(16, 5)) {
        const auto nu = pushforward(family, lambda, mu);
        CHECK(nu.total_mass == mu.total_mass);
    }
}

TEST_CASE("pushforward: dimension mismatch rejected") {
    const auto mu = make_measure(PointCloud(3, {0, 0, 0, 1, 1, 1}), {0.5, 0.5});
    CHECK_THROWS_AS(pushforward(planar_angle_family(), std::vector<double>{0.0}, mu), Error);
}

TEST_CASE("pushforward: projected diameter of the Cantor product at pi/4") {
    const auto c7 = ifs_attractor_sample(cantor_middle_thirds(), 7, std::vector<double>{0.0});
    const auto prod = product_measure(c7, c7);
    const std::vector<double> lambda = {std::numbers::pi / 4.0};
    const auto nu = pushforward(planar_angle_family(), lambda, prod);

    // Brute-force extremes over all the projected points.
    double lo = nu.support.coords[0], hi = nu.support.coords[0];
    for (double v : nu.support.coords) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double cos45 = std::cos(std::numbers::pi / 4.0);
    // max coordinate of the depth-7 sample is 1 - 3^-7
    const double expected = (1.0 - std::pow(3.0, -7)) * 2.0 * cos45;
    CHECK(hi - lo == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("family registry: lookup by name, unknown rejected") {
    CHECK(family_by_name("planar_angle").domain_dim == 2);
    CHECK(family_by_name("spatial_direction").domain_dim == 3);
    CHECK_THROWS_AS(family_by_name("no_such_family"), Error);

    ProjectionFamily custom = planar_angle_family();
    custom.name = "custom_planar";
    const std::vector<ProjectionFamily> extra = {custom};
    CHECK(family_by_name("custom_planar", extra).name == "custom_planar");
}
