#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace marstrand {

/// Library-level error. Precondition violations, size-cap overruns and
/// singular inputs all throw this with a message naming the offender.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite point set in R^d, row-major storage.
struct PointCloud {
    std::size_t dim = 0;
    std::vector<double> coords;  // count()*dim entries

    PointCloud() = default;
    PointCloud(std::size_t d, std::vector<double> c) : dim(d), coords(std::move(c)) {}

    std::size_t count() const { return dim == 0 ? 0 : coords.size() / dim; }
    const double* point(std::size_t i) const { return coords.data() + i * dim; }
    double* point(std::size_t i) { return coords.data() + i * dim; }
    std::span<const double> at(std::size_t i) const { return {point(i), dim}; }

    void push_back(std::span<const double> p) {
        coords.insert(coords.end(), p.begin(), p.end());
    }
};

/// Finitely supported Borel measure: points with nonnegative weights.
/// total_mass caches the weight sum. Zero-mass measures are representable
/// (they arise as regularization remainders) but most operations reject them.
struct DiscreteMeasure {
    PointCloud support;
    std::vector<double> weights;
    double total_mass = 0.0;

    std::size_t size() const { return weights.size(); }
    std::size_t dim() const { return support.dim; }
};

inline double dist(const double* a, const double* b, std::size_t dim) {
    double s = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        const double d = a[c] - b[c];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    return dist(a.data(), b.data(), a.size());
}

/// Validates cloud invariants: n >= 1, finite coordinates.
void validate(const PointCloud& cloud);

/// Validates measure invariants: weights >= 0, total_mass > 0 and equal to
/// the weight sum within 1e-12 relative, support/weights sizes agree.
void validate(const DiscreteMeasure& mu);

/// Builds a measure from a cloud and weights, caching the mass.
/// require_positive_mass=false admits the zero-mass remainder case.
DiscreteMeasure make_measure(PointCloud support, std::vector<double> weights,
                             bool require_positive_mass = true);

/// Pads points with zero coordinates up to target_dim (e.g. line fixtures
/// fed to planar projection families).
DiscreteMeasure embed_measure(const DiscreteMeasure& mu, std::size_t target_dim);

/// Diameter of the support (max pairwise distance, brute force).
double support_diameter(const PointCloud& cloud);

/// Smallest strictly positive pairwise distance; 0 if none exists.
double min_positive_distance(const PointCloud& cloud);

}  // namespace marstrand
