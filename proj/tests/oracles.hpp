// Test-side oracles: independent reference computations that expected
// values are derived from. Nothing here calls the implementation paths
// under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "marstrand/rng.hpp"
#include "marstrand/types.hpp"

namespace oracles {

/// Closed form for the planar angle family: probability that a uniform
/// direction collapses a pair below x, P = 2 asin(min(1, x)) / pi.
inline double planar_collapse_prob(double x) {
    return 2.0 * std::asin(std::min(1.0, x)) / std::numbers::pi;
}

/// Binomial standard error.
inline double binomial_sigma(double p, std::size_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

/// Independent bisection for sum(r_i^s) = 1 on [0, hi].
inline double moran_bisection(const std::vector<double>& ratios, double hi = 64.0) {
    auto f = [&](double s) {
        double sum = 0.0;
        for (double r : ratios) sum += std::pow(r, s);
        return sum;
    };
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Exact triadic box count for a depth-d middle-thirds Cantor sample:
/// the number of distinct k-digit prefixes, 2^min(k, d).
inline std::size_t cantor_box_count(int depth, int k) {
    return std::size_t(1) << std::min(k, depth);
}

/// Brute-force interval union length on a sorted copy (independent of the
/// sweep in the implementation: merges via an event list).
inline double interval_union_length(std::vector<double> points, double eps) {
    std::sort(points.begin(), points.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < points.size()) {
        double lo = points[i] - eps, hi = points[i] + eps;
        std::size_t j = i + 1;
        while (j < points.size() && points[j] - eps <= hi) {
            hi = std::max(hi, points[j] + eps);
            ++j;
        }
        total += hi - lo;
        i = j;
    }
    return total;
}

/// Point-in-triangle test via barycentric signs (tolerance for edges).
inline bool in_triangle(const double* p, const double* a, const double* b, const double* c) {
    auto cross = [](double ox, double oy, double ux, double uy, double vx, double vy) {
        return (ux - ox) * (vy - oy) - (uy - oy) * (vx - ox);
    };
    const double d1 = cross(a[0], a[1], b[0], b[1], p[0], p[1]);
    const double d2 = cross(b[0], b[1], c[0], c[1], p[0], p[1]);
    const double d3 = cross(c[0], c[1], a[0], a[1], p[0], p[1]);
    const bool has_neg = d1 < -1e-12 || d2 < -1e-12 || d3 < -1e-12;
    const bool has_pos = d1 > 1e-12 || d2 > 1e-12 || d3 > 1e-12;
    return !(has_neg && has_pos);
}

/// Random measure with distinct points in [0,1]^dim and positive weights
/// normalized to the requested mass.
inline marstrand::DiscreteMeasure random_measure(std::uint64_t seed, std::size_t n,
                                                 std::size_t dim, double mass = 1.0) {
    marstrand::CounterRng rng{seed};
    marstrand::PointCloud cloud;
    cloud.dim = dim;
    std::vector<double> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < dim; ++c)
            cloud.coords.push_back(rng.uniform(marstrand::streams::points, i * dim + c));
        weights[i] = 0.05 + rng.uniform(marstrand::streams::points, (n + i) * dim + 7);
    }
    double sum = 0.0;
    for (double w : weights) sum += w;
    for (double& w : weights) w *= mass / sum;
    return marstrand::make_measure(std::move(cloud), std::move(weights));
}

}  // namespace oracles
