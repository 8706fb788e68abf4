#include "marstrand/energy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#include "marstrand/parallel.hpp"

namespace marstrand {

double ball_mass(const DiscreteMeasure& mu, std::span<const double> center, double r) {
    if (r < 0.0) throw Error("ball_mass: radius must be nonnegative");
    if (center.size() != mu.dim()) throw Error("ball_mass: center dimension mismatch");
    double mass = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (dist(center.data(), mu.support.point(i), mu.dim()) <= r) mass += mu.weights[i];
    return mass;
}

namespace {

double mass_squared_minus_diag(const DiscreteMeasure& mu) {
    double sq = 0.0;
    for (double w : mu.weights) sq += w * w;
    return mu.total_mass * mu.total_mass - sq;
}

}  // namespace

double energy(const DiscreteMeasure& mu, double s, double r_min, std::size_t threads) {
    if (s < 0.0) throw Error("energy: exponent must be nonnegative");
    if (r_min < 0.0) throw Error("energy: r_min must be nonnegative");
    validate(mu);
    if (s == 0.0) return mass_squared_minus_diag(mu);

    const std::size_t n = mu.size();
    const std::size_t d = mu.dim();
    std::vector<double> partial(n, 0.0);
    std::atomic<bool> singular{false};
    parallel_for(n, threads, [&](std::size_t i) {
        const double* pi = mu.support.point(i);
        double acc = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double dij = dist(pi, mu.support.point(j), d);
            if (dij < r_min) dij = r_min;
            if (dij == 0.0) {
                singular.store(true, std::memory_order_relaxed);
                return;
            }
            acc += mu.weights[i] * mu.weights[j] * std::pow(dij, -s);
        }
        partial[i] = acc;
    });
    if (singular.load())
        throw Error("energy: coincident points with r_min = 0 make the s-energy singular");
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += partial[i];
    return 2.0 * total;
}

double energy_layercake(const DiscreteMeasure& mu, double s, double r_min) {
    if (s < 0.0) throw Error("energy: exponent must be nonnegative");
    if (r_min < 0.0) throw Error("energy: r_min must be nonnegative");
    validate(mu);
    if (s == 0.0) return mass_squared_minus_diag(mu);

    const std::size_t n = mu.size();
    const std::size_t d = mu.dim();
    double total = 0.0;
    std::vector<std::pair<double, double>> others;  // (clamped distance, weight)
    for (std::size_t i = 0; i < n; ++i) {
        others.clear();
        const double* pi = mu.support.point(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double dij = dist(pi, mu.support.point(j), d);
            if (dij < r_min) dij = r_min;
            if (dij == 0.0)
                throw Error("energy: coincident points with r_min = 0 make the s-energy singular");
            others.emplace_back(dij, mu.weights[j]);
        }
        if (others.empty()) continue;
        std::sort(others.begin(), others.end());
        // The ball-mass integrand is a step function of the level u: on
        // (b_{k+1}, b_k] with b_k = e_k^{-s} it equals the cumulative mass
        // within the k-th distinct distance e_k.
        double integral = 0.0;
        double cumulative = 0.0;
        std::size_t k = 0;
        std::vector<std::pair<double, double>> steps;  // (b_k, cumulative mass)
        while (k < others.size()) {
            const double e = others[k].first;
            while (k < others.size() && others[k].first == e) {
                cumulative += others[k].second;
                ++k;
            }
            steps.emplace_back(std::pow(e, -s), cumulative);
        }
        // steps is ordered by decreasing b; integrate from u = 0 upward.
        double prev_b = 0.0;
        for (std::size_t idx = steps.size(); idx-- > 0;) {
            integral += steps[idx].second * (steps[idx].first - prev_b);
            prev_b = steps[idx].first;
        }
        total += mu.weights[i] * integral;
    }
    return total;
}

}  // namespace marstrand
