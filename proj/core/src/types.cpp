#include "marstrand/types.hpp"

#include <cmath>
#include <numeric>

namespace marstrand {

void validate(const PointCloud& cloud) {
    if (cloud.dim == 0) throw Error("point cloud: dimension must be positive");
    if (cloud.coords.empty()) throw Error("point cloud: needs at least one point");
    if (cloud.coords.size() % cloud.dim != 0)
        throw Error("point cloud: coordinate count not a multiple of dim");
    for (double v : cloud.coords)
        if (!std::isfinite(v)) throw Error("point cloud: non-finite coordinate");
}

void validate(const DiscreteMeasure& mu) {
    validate(mu.support);
    if (mu.weights.size() != mu.support.count())
        throw Error("measure: weights/support size mismatch");
    double sum = 0.0;
    for (double w : mu.weights) {
        if (!(w >= 0.0)) throw Error("measure: negative weight");
        sum += w;
    }
    if (!(mu.total_mass > 0.0)) throw Error("measure: total mass must be positive");
    if (std::abs(sum - mu.total_mass) > 1e-12 * mu.total_mass)
        throw Error("measure: cached total_mass disagrees with weight sum");
}

DiscreteMeasure make_measure(PointCloud support, std::vector<double> weights,
                             bool require_positive_mass) {
    DiscreteMeasure mu;
    mu.support = std::move(support);
    mu.weights = std::move(weights);
    mu.total_mass = std::accumulate(mu.weights.begin(), mu.weights.end(), 0.0);
    if (require_positive_mass) validate(mu);
    return mu;
}

DiscreteMeasure embed_measure(const DiscreteMeasure& mu, std::size_t target_dim) {
    if (target_dim < mu.dim()) throw Error("embed: target dimension below ambient dimension");
    if (target_dim == mu.dim()) return mu;
    PointCloud out;
    out.dim = target_dim;
    out.coords.assign(mu.size() * target_dim, 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double* p = mu.support.point(i);
        for (std::size_t c = 0; c < mu.dim(); ++c) out.coords[i * target_dim + c] = p[c];
    }
    return make_measure(std::move(out), mu.weights, false);
}

double support_diameter(const PointCloud& cloud) {
    const std::size_t n = cloud.count();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            best = std::max(best, dist(cloud.point(i), cloud.point(j), cloud.dim));
    return best;
}

double min_positive_distance(const PointCloud& cloud) {
    const std::size_t n = cloud.count();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist(cloud.point(i), cloud.point(j), cloud.dim);
            if (d > 0.0 && (best == 0.0 || d < best)) best = d;
        }
    return best;
}

}  // namespace marstrand
