#include <doctest.h>

#include <cmath>

#include "marstrand/energy.hpp"
#include "marstrand/frostman.hpp"
#include "marstrand/ifs.hpp"
#include "marstrand/rng.hpp"
#include "oracles.hpp"

using namespace marstrand;

namespace {

// Independent exhaustive post-check, written against the definition.
bool exhaustive_certificate(const DiscreteMeasure& nu, double s, double c,
                            const std::vector<double>& radii) {
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (double r : radii) {
            double mass = 0.0;
            for (std::size_t j = 0; j < nu.size(); ++j)
                if (dist(nu.support.point(i), nu.support.point(j), nu.dim()) <= r)
                    mass += nu.weights[j];
            if (mass > c * std::pow(r, s)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("frostman: rejects nonpositive M and delta") {
    const auto mu = make_measure(PointCloud(1, {0.0, 1.0}), {0.5, 0.5});
    CHECK_THROWS_AS(frostman_regularize(mu, 1.0, 0.0, 1.0), Error);
    CHECK_THROWS_AS(frostman_regularize(mu, 1.0, 1.0, -2.0), Error);
}

TEST_CASE("frostman: measure with no candidate balls is returned unchanged") {
    // Two distant unit-weight points, huge M: no ball on the grid reaches
    // mass >= M r^s.
    const auto mu = make_measure(PointCloud(1, {0.0, 10.0}), {0.5, 0.5});
    const auto result = frostman_regularize(mu, 1.0, 1e6, 1.0);
    CHECK(result.balls_selected == 0);
    CHECK(result.mass_retained == 1.0);
    CHECK(result.remainder.size() == 2);
    CHECK(result.certificate_ok);
}

TEST_CASE("frostman: a single atom cannot be regularized") {
    const auto mu = make_measure(PointCloud(1, {0.0}), {1.0});
    const auto result = frostman_regularize(mu, 1.0, 1.0, 1.0);
    CHECK(result.remainder.total_mass == 0.0);
    CHECK(result.mass_retained == 0.0);
    CHECK(result.balls_selected >= 1);
    CHECK(result.certificate_ok);  // vacuously: no surviving support
}

TEST_CASE("frostman: Cantor depth-10 at its own exponent keeps positive mass") {
    const double s = std::log(2.0) / std::log(3.0);
    const auto mu = ifs_attractor_sample(cantor_middle_thirds(), 10, std::vector<double>{0.0});
    const auto result = frostman_regularize(mu, s, 10.0, 1.0);
    CHECK(result.remainder.total_mass > 0.0);
    CHECK(result.c == doctest::Approx(10.0));  // M dominates 10^s mass/delta^s here

    std::vector<double> radii = result.grid_radii;
    radii.push_back(1.0);
    radii.push_back(2.0);
    radii.push_back(support_diameter(mu.support));
    CHECK(exhaustive_certificate(result.remainder, s, result.c, radii));
}

TEST_CASE("frostman: certificate holds over random fixtures") {
    CounterRng rng{888};
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 24 + rng.index(3, trial * 4, 100);
        const std::size_t dim = 1 + rng.index(3, trial * 4 + 1, 2);
        const auto mu = oracles::random_measure(3000 + trial, n, dim);
        const double s = rng.uniform(3, trial * 4 + 2, 0.3, 1.5);
        const double M = std::exp(rng.uniform(3, trial * 4 + 3, std::log(0.5), std::log(20.0)));
        const double delta = 1.0;
        const auto result = frostman_regularize(mu, s, M, delta);
        std::vector<double> radii = result.grid_radii;
        radii.push_back(delta);
        radii.push_back(2.0 * delta);
        const double diam = support_diameter(mu.support);
        if (diam > 0.0) radii.push_back(diam);
        REQUIRE(exhaustive_certificate(result.remainder, s, result.c, radii));
    }
}

TEST_CASE("frostman: grid radii are dyadic in delta and floored at resolution") {
    const auto mu = ifs_attractor_sample(cantor_middle_thirds(), 6, std::vector<double>{0.0});
    const auto result = frostman_regularize(mu, 0.5, 100.0, 2.0);
    REQUIRE(!result.grid_radii.empty());
    CHECK(result.grid_radii.front() == doctest::Approx(0.2));
    for (std::size_t j = 1; j < result.grid_radii.size(); ++j)
        CHECK(result.grid_radii[j] == doctest::Approx(result.grid_radii[j - 1] / 2.0));
    const double resolution = min_positive_distance(mu.support);
    CHECK(result.grid_radii.back() >= resolution);
    CHECK(result.grid_radii.back() / 2.0 < resolution);
}
