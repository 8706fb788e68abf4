#include "marstrand/ifs.hpp"

#include <cmath>
#include <string>

namespace marstrand {

void SimilarityMap::apply(std::span<const double> x, std::span<double> out) const {
    const std::size_t d = x.size();
    if (rotation.empty()) {
        for (std::size_t r = 0; r < d; ++r) out[r] = ratio * x[r] + translation[r];
        return;
    }
    for (std::size_t r = 0; r < d; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < d; ++c) acc += rotation[r * d + c] * x[c];
        out[r] = ratio * acc + translation[r];
    }
}

void validate(const IFSSpec& ifs) {
    if (ifs.ambient_dim == 0) throw Error("ifs: ambient dimension must be positive");
    if (ifs.maps.empty()) throw Error("ifs: needs at least one map");
    if (ifs.weights.size() != ifs.maps.size()) throw Error("ifs: weights/maps size mismatch");
    const std::size_t d = ifs.ambient_dim;
    for (const auto& map : ifs.maps) {
        if (!(map.ratio > 0.0 && map.ratio < 1.0))
            throw Error("ifs: contraction ratio must lie strictly inside (0,1)");
        if (map.translation.size() != d) throw Error("ifs: translation dimension mismatch");
        if (!map.rotation.empty()) {
            if (map.rotation.size() != d * d) throw Error("ifs: rotation must be d x d");
            // Q^T Q = I entrywise within 1e-10.
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    double acc = 0.0;
                    for (std::size_t k = 0; k < d; ++k)
                        acc += map.rotation[k * d + i] * map.rotation[k * d + j];
                    const double expect = i == j ? 1.0 : 0.0;
                    if (std::abs(acc - expect) > 1e-10)
                        throw Error("ifs: rotation matrix not orthogonal within 1e-10");
                }
        }
    }
    double sum = 0.0;
    for (double w : ifs.weights) {
        if (!(w >= 0.0)) throw Error("ifs: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw Error("ifs: weights must sum to 1 within 1e-12");
}

double similarity_dimension(const IFSSpec& ifs) {
    validate(ifs);
    const auto moran = [&](double s) {
        double sum = 0.0;
        for (const auto& map : ifs.maps) sum += std::pow(map.ratio, s);
        return sum - 1.0;
    };
    if (ifs.maps.size() == 1) return 0.0;
    double lo = 0.0;
    double hi = static_cast<double>(ifs.ambient_dim) + 1.0;
    // moran is strictly decreasing; extend the bracket until it straddles 0
    // (many maps with ratios near 1 push the root past d + 1).
    while (moran(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e6) throw Error("ifs: Moran exponent out of range");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (moran(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

DiscreteMeasure ifs_attractor_sample(const IFSSpec& ifs, int depth,
                                     std::span<const double> seed_point, std::size_t cap) {
    validate(ifs);
    if (depth < 1) throw Error("attractor sample: depth must be >= 1");
    if (seed_point.size() != ifs.ambient_dim)
        throw Error("attractor sample: seed point dimension mismatch");
    const std::size_t m = ifs.maps.size();
    double total = 1.0;
    for (int k = 0; k < depth; ++k) {
        total *= static_cast<double>(m);
        if (total > static_cast<double>(cap))
            throw Error("attractor sample: m^depth exceeds cap " + std::to_string(cap));
    }
    const std::size_t d = ifs.ambient_dim;

    PointCloud points(d, std::vector<double>(seed_point.begin(), seed_point.end()));
    std::vector<double> weights{1.0};
    std::vector<double> tmp(d);
    for (int level = 0; level < depth; ++level) {
        PointCloud next;
        next.dim = d;
        next.coords.reserve(points.coords.size() * m);
        std::vector<double> next_weights;
        next_weights.reserve(weights.size() * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t p = 0; p < points.count(); ++p) {
                ifs.maps[i].apply(points.at(p), tmp);
                next.push_back(tmp);
                next_weights.push_back(ifs.weights[i] * weights[p]);
            }
        }
        points = std::move(next);
        weights = std::move(next_weights);
    }
    return make_measure(std::move(points), std::move(weights));
}

DiscreteMeasure product_measure(const DiscreteMeasure& a, const DiscreteMeasure& b,
                                std::size_t cap) {
    validate(a);
    validate(b);
    const std::size_t n = a.size() * b.size();
    if (n > cap) throw Error("product measure: size exceeds cap " + std::to_string(cap));
    PointCloud points;
    points.dim = a.dim() + b.dim();
    points.coords.reserve(n * points.dim);
    std::vector<double> weights;
    weights.reserve(n);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            points.push_back(a.support.at(i));
            points.push_back(b.support.at(j));
            weights.push_back(a.weights[i] * b.weights[j]);
        }
    return make_measure(std::move(points), std::move(weights));
}

IFSSpec cantor_middle_thirds() {
    IFSSpec ifs;
    ifs.ambient_dim = 1;
    ifs.maps = {{1.0 / 3.0, {}, {0.0}}, {1.0 / 3.0, {}, {2.0 / 3.0}}};
    ifs.weights = {0.5, 0.5};
    return ifs;
}

IFSSpec sierpinski_triangle() {
    IFSSpec ifs;
    ifs.ambient_dim = 2;
    ifs.maps = {{0.5, {}, {0.0, 0.0}},
                {0.5, {}, {0.5, 0.0}},
                {0.5, {}, {0.25, std::sqrt(3.0) / 4.0}}};
    ifs.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return ifs;
}

}  // namespace marstrand
