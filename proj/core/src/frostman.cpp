#include "marstrand/frostman.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "marstrand/energy.hpp"

namespace marstrand {

namespace {

bool lexicographic_less(const double* a, const double* b, std::size_t dim) {
    for (std::size_t c = 0; c < dim; ++c) {
        if (a[c] < b[c]) return true;
        if (a[c] > b[c]) return false;
    }
    return false;
}

}  // namespace

FrostmanResult frostman_regularize(const DiscreteMeasure& mu, double s, double M, double delta) {
    if (!(M > 0.0)) throw Error("frostman: M must be positive");
    if (!(delta > 0.0)) throw Error("frostman: delta must be positive");
    if (s < 0.0) throw Error("frostman: exponent must be nonnegative");
    validate(mu);

    const std::size_t n = mu.size();
    const std::size_t d = mu.dim();

    // Dyadic radius grid delta/10 * 2^-j, floored at the measure's
    // resolution: below the least positive interpoint distance every ball
    // is a bare atom and the grid carries no further information.
    const double resolution = min_positive_distance(mu.support);
    std::vector<double> grid;
    double r = delta / 10.0;
    grid.push_back(r);
    while (resolution > 0.0 && r * 0.5 >= resolution) {
        r *= 0.5;
        grid.push_back(r);
    }

    // Candidate balls: mu(B(x, r)) >= M r^s, ordered largest radius first,
    // ties by lexicographic center.
    struct Ball {
        std::size_t center;
        double radius;
    };
    std::vector<Ball> candidates;
    for (double radius : grid) {
        const double threshold = M * std::pow(radius, s);
        std::vector<std::size_t> centers;
        for (std::size_t i = 0; i < n; ++i)
            if (ball_mass(mu, mu.support.at(i), radius) >= threshold) centers.push_back(i);
        std::sort(centers.begin(), centers.end(), [&](std::size_t a, std::size_t b) {
            return lexicographic_less(mu.support.point(a), mu.support.point(b), d);
        });
        for (std::size_t i : centers) candidates.push_back({i, radius});
    }

    // Greedy maximal disjoint subfamily (closed balls are disjoint iff the
    // center gap exceeds the radius sum).
    std::vector<Ball> selected;
    for (const Ball& ball : candidates) {
        bool disjoint = true;
        for (const Ball& kept : selected) {
            if (dist(mu.support.point(ball.center), mu.support.point(kept.center), d) <=
                ball.radius + kept.radius) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) selected.push_back(ball);
    }

    // Drop support points inside the 5-enlarged selected balls.
    PointCloud kept_points;
    kept_points.dim = d;
    std::vector<double> kept_weights;
    for (std::size_t i = 0; i < n; ++i) {
        bool removed = false;
        for (const Ball& ball : selected) {
            if (dist(mu.support.point(i), mu.support.point(ball.center), d) <=
                5.0 * ball.radius) {
                removed = true;
                break;
            }
        }
        if (!removed) {
            kept_points.push_back(mu.support.at(i));
            kept_weights.push_back(mu.weights[i]);
        }
    }

    FrostmanResult result;
    result.remainder = make_measure(std::move(kept_points), std::move(kept_weights), false);
    result.c = std::max(M, std::pow(10.0, s) * mu.total_mass / std::pow(delta, s));
    result.mass_retained = result.remainder.total_mass / mu.total_mass;
    result.balls_selected = selected.size();
    result.grid_radii = grid;

    std::vector<double> check_radii = grid;
    check_radii.push_back(delta);
    check_radii.push_back(2.0 * delta);
    const double diam = support_diameter(mu.support);
    if (diam > 0.0) check_radii.push_back(diam);
    result.certificate_ok = frostman_certificate(result.remainder, s, result.c, check_radii);
    if (!result.certificate_ok)
        throw std::logic_error("frostman: remainder violates its own ball-growth certificate");
    return result;
}

bool frostman_certificate(const DiscreteMeasure& nu, double s, double c,
                          std::span<const double> radii) {
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (double r : radii)
            if (ball_mass(nu, nu.support.at(i), r) > c * std::pow(r, s)) return false;
    return true;
}

}  // namespace marstrand
