#include "marstrand/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "marstrand/numerics.hpp"
#include "marstrand/rng.hpp"

namespace marstrand {

namespace {

void check_scales(std::span<const double> scales, std::size_t minimum) {
    if (scales.size() < minimum) throw Error("dimension: too few scales");
    for (std::size_t k = 0; k < scales.size(); ++k) {
        if (!(scales[k] > 0.0)) throw Error("dimension: scales must be positive");
        if (k > 0 && !(scales[k] < scales[k - 1]))
            throw Error("dimension: scales must be strictly decreasing");
    }
}

std::size_t count_boxes(const PointCloud& cloud, double scale, std::span<const double> anchor,
                        std::span<const double> upper) {
    const std::size_t n = cloud.count();
    const std::size_t d = cloud.dim;
    // The grid sits a hair (2^-30 of a box) below the anchor so that points
    // mathematically on a box boundary land in their own cell even after
    // accumulated rounding in the point generators. ceil(range/scale) boxes
    // cover [min, max] per coordinate; the top edge belongs to the last box.
    const double guard = scale * 0x1.0p-30;
    std::vector<std::int64_t> top(d);
    bool packable = d <= 3;
    for (std::size_t c = 0; c < d; ++c) {
        const double boxes = std::ceil((upper[c] - anchor[c]) / scale);
        top[c] = std::max<std::int64_t>(0, static_cast<std::int64_t>(boxes) - 1);
        packable = packable && top[c] < (std::int64_t(1) << 21);
    }
    if (packable) {
        // <= 3 coordinates of < 2^21 boxes each pack into one 64-bit key.
        std::vector<std::uint64_t> keys(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double* p = cloud.point(i);
            std::uint64_t key = 0;
            for (std::size_t c = 0; c < d; ++c) {
                const auto idx = std::min(
                    top[c],
                    static_cast<std::int64_t>(std::floor((p[c] - anchor[c] + guard) / scale)));
                key = (key << 21) | static_cast<std::uint64_t>(idx);
            }
            keys[i] = key;
        }
        std::sort(keys.begin(), keys.end());
        return static_cast<std::size_t>(
            std::unique(keys.begin(), keys.end()) - keys.begin());
    }
    std::vector<std::vector<std::int64_t>> keys;
    keys.reserve(n);
    std::vector<std::int64_t> key(d);
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = cloud.point(i);
        for (std::size_t c = 0; c < d; ++c)
            key[c] = std::min(top[c], static_cast<std::int64_t>(
                                          std::floor((p[c] - anchor[c] + guard) / scale)));
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys.size();
}

std::pair<std::vector<double>, std::vector<double>> coordinate_bounds(const PointCloud& cloud) {
    const std::size_t d = cloud.dim;
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < cloud.count(); ++i)
        for (std::size_t c = 0; c < d; ++c) {
            lo[c] = std::min(lo[c], cloud.point(i)[c]);
            hi[c] = std::max(hi[c], cloud.point(i)[c]);
        }
    return {std::move(lo), std::move(hi)};
}

DimensionEstimate fit_box_counts(std::span<const double> scales,
                                 const std::vector<double>& counts) {
    DimensionEstimate est;
    est.method = DimensionMethod::box;
    est.scales.assign(scales.begin(), scales.end());
    est.scale_window = {scales.front(), scales.back()};
    est.log_counts.resize(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) est.log_counts[k] = std::log(counts[k]);

    const bool constant =
        std::all_of(counts.begin(), counts.end(), [&](double c) { return c == counts.front(); });
    if (constant) {
        // A single occupied box at every scale is genuinely zero-dimensional
        // at these scales; any other constant count means the window never
        // resolved the set.
        if (counts.front() == 1.0) {
            est.value = 0.0;
            est.fit_r2 = 1.0;
            return est;
        }
        throw Error("box dimension: degenerate fit (constant box counts across the window)");
    }
    std::vector<double> x(scales.size());
    for (std::size_t k = 0; k < scales.size(); ++k) x[k] = std::log(1.0 / scales[k]);
    const LineFit fit = line_fit(x, est.log_counts);
    est.value = fit.slope;
    est.fit_r2 = fit.r2;
    return est;
}

}  // namespace

DimensionEstimate box_dimension(const PointCloud& cloud, std::span<const double> scales) {
    validate(cloud);
    check_scales(scales, 3);
    if (std::log10(scales.front() / scales.back()) < 1.5)
        throw Error("box dimension: scales must span at least 1.5 decades");
    const auto [anchor, upper] = coordinate_bounds(cloud);
    std::vector<double> counts(scales.size());
    for (std::size_t k = 0; k < scales.size(); ++k)
        counts[k] = static_cast<double>(count_boxes(cloud, scales[k], anchor, upper));
    return fit_box_counts(scales, counts);
}

DimensionEstimate box_dimension_offset_averaged(const PointCloud& cloud,
                                                std::span<const double> scales,
                                                std::size_t k_offsets, std::uint64_t seed) {
    validate(cloud);
    check_scales(scales, 3);
    if (std::log10(scales.front() / scales.back()) < 1.5)
        throw Error("box dimension: scales must span at least 1.5 decades");
    if (k_offsets == 0) throw Error("box dimension: k_offsets must be >= 1");
    const auto [base, upper] = coordinate_bounds(cloud);
    CounterRng rng{seed};
    std::vector<double> counts(scales.size(), 0.0);
    for (std::size_t k = 0; k < scales.size(); ++k) {
        double sum = 0.0;
        for (std::size_t o = 0; o < k_offsets; ++o) {
            std::vector<double> anchor(base);
            for (std::size_t c = 0; c < cloud.dim; ++c)
                anchor[c] -= scales[k] * rng.uniform(streams::offsets,
                                                     (k * k_offsets + o) * cloud.dim + c);
            sum += static_cast<double>(count_boxes(cloud, scales[k], anchor, upper));
        }
        counts[k] = sum / static_cast<double>(k_offsets);
    }
    return fit_box_counts(scales, counts);
}

DimensionEstimate correlation_dimension(const DiscreteMeasure& mu,
                                        std::span<const double> radii) {
    validate(mu);
    check_scales(radii, 2);
    const std::size_t n = mu.size();
    const std::size_t d = mu.dim();
    // radii descending; count pair mass at or below each radius.
    std::vector<double> corr(radii.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = dist(mu.support.point(i), mu.support.point(j), d);
            const double w = 2.0 * mu.weights[i] * mu.weights[j];
            for (std::size_t k = 0; k < radii.size(); ++k) {
                if (dij <= radii[k])
                    corr[k] += w;
                else
                    break;  // radii shrink; farther pairs drop out
            }
        }
    for (std::size_t k = 0; k < radii.size(); ++k)
        if (corr[k] == 0.0)
            throw Error("correlation dimension: degenerate window (zero pair mass at radius " +
                        std::to_string(radii[k]) + "); shrink the window");

    DimensionEstimate est;
    est.method = DimensionMethod::correlation;
    est.scales.assign(radii.begin(), radii.end());
    est.scale_window = {radii.front(), radii.back()};
    est.log_counts.resize(radii.size());
    std::vector<double> x(radii.size());
    for (std::size_t k = 0; k < radii.size(); ++k) {
        x[k] = std::log(radii[k]);
        est.log_counts[k] = std::log(corr[k]);
    }
    const bool constant = std::all_of(corr.begin(), corr.end(),
                                      [&](double c) { return c == corr.front(); });
    if (constant)
        throw Error("correlation dimension: degenerate window (constant pair counts)");
    const LineFit fit = line_fit(x, est.log_counts);
    est.value = fit.slope;
    est.fit_r2 = fit.r2;
    return est;
}

double interval_measure(const PointCloud& points_1d, double epsilon) {
    validate(points_1d);
    if (points_1d.dim != 1) throw Error("interval measure: cloud must be 1-D");
    if (!(epsilon > 0.0)) throw Error("interval measure: epsilon must be positive");
    std::vector<double> pts(points_1d.coords);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    double lo = pts.front() - epsilon;
    double hi = pts.front() + epsilon;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double a = pts[i] - epsilon;
        const double b = pts[i] + epsilon;
        if (a <= hi) {
            hi = std::max(hi, b);
        } else {
            total += hi - lo;
            lo = a;
            hi = b;
        }
    }
    total += hi - lo;
    return total;
}

}  // namespace marstrand
