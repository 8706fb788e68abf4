#include <doctest.h>

#include <cmath>
#include <vector>

#include "marstrand/ifs.hpp"
#include "marstrand/regularity.hpp"

using namespace marstrand;

TEST_CASE("regularity scan: uniform grid on [0,1] at kappa = 1") {
    const std::size_t n = 1000;
    PointCloud cloud;
    cloud.dim = 1;
    for (std::size_t i = 0; i < n; ++i)
        cloud.coords.push_back(static_cast<double>(i) / static_cast<double>(n - 1));
    const auto mu = make_measure(std::move(cloud), std::vector<double>(n, 1.0 / n));

    const std::vector<double> radii = {0.2, 0.1, 0.05};
    const auto report = regularity_scan(mu, 1.0, radii);

    // Direct count oracle: an interior ball of radius r captures about
    // 2 r n grid points, so the ratio sits near 2; edge points see half.
    const std::size_t mid = n / 2;
    CHECK(report.per_point_min_ratio[mid] == doctest::Approx(2.0).epsilon(0.02));
    CHECK(report.per_point_min_ratio[0] == doctest::Approx(1.0).epsilon(0.05));
    CHECK(report.global_min == doctest::Approx(1.0).epsilon(0.05));
    CHECK(report.global_max == doctest::Approx(2.0).epsilon(0.02));
    CHECK(report.global_min <= report.global_max);
}

TEST_CASE("regularity scan: single atom ratio is w / r^kappa") {
    const auto mu = make_measure(PointCloud(2, {0.5, 0.5}), {1.0});
    const std::vector<double> radii = {1e-2, 1e-3};
    const auto report = regularity_scan(mu, 0.7, radii);
    // min over radii realized at the largest radius
    CHECK(report.global_min == doctest::Approx(std::pow(1e-2, -0.7)));
    CHECK(report.global_min > 1.0);
}

TEST_CASE("regularity scan: Cantor natural measure at its own exponent is bounded") {
    const double kappa = std::log(2.0) / std::log(3.0);
    const auto mu = ifs_attractor_sample(cantor_middle_thirds(), 10, std::vector<double>{0.0});
    std::vector<double> radii;
    for (int k = 2; k <= 8; ++k) radii.push_back(std::pow(3.0, -k));
    const auto report = regularity_scan(mu, kappa, radii);
    CHECK(report.global_min > 0.4);
    CHECK(report.global_max < 3.0);
}

TEST_CASE("regularity scan: input validation") {
    const auto mu = make_measure(PointCloud(1, {0.0, 1.0}), {0.5, 0.5});
    CHECK_THROWS_AS(regularity_scan(mu, 1.0, std::vector<double>{}), Error);
    CHECK_THROWS_AS(regularity_scan(mu, 1.0, std::vector<double>{0.1}), Error);
    CHECK_THROWS_AS(regularity_scan(mu, 1.0, std::vector<double>{0.1, 0.2}), Error);
    CHECK_THROWS_AS(regularity_scan(mu, 1.0, std::vector<double>{0.2, -0.1}), Error);
}
