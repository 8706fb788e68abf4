#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "marstrand/types.hpp"

namespace marstrand {

enum class DimensionMethod { box, correlation };

struct DimensionEstimate {
    double value = 0.0;
    DimensionMethod method = DimensionMethod::box;
    std::vector<double> scales;      // the scales/radii actually used
    std::vector<double> log_counts;  // ln N(scale) or ln C(r)
    double fit_r2 = 0.0;
    std::pair<double, double> scale_window{0.0, 0.0};  // (coarsest, finest)
};

/// Box-counting slope: counts occupied boxes of an axis-aligned grid
/// anchored at the coordinate-wise minimum for each scale, then fits
/// log N vs log(1/scale). Scales must be decreasing, >= 3 of them,
/// spanning at least 1.5 decades. A cloud occupying a single box at every
/// scale has dimension 0; otherwise constant counts are a degenerate fit.
DimensionEstimate box_dimension(const PointCloud& cloud, std::span<const double> scales);

/// Robustness variant: counts averaged over k random grid offsets.
DimensionEstimate box_dimension_offset_averaged(const PointCloud& cloud,
                                                std::span<const double> scales,
                                                std::size_t k_offsets, std::uint64_t seed);

/// Correlation (pair-counting) slope: C(r) = sum_{i != j} w_i w_j [d <= r],
/// fitted on log C vs log r. Radii must be decreasing; a zero count inside
/// the window is a degenerate-window error.
DimensionEstimate correlation_dimension(const DiscreteMeasure& mu, std::span<const double> radii);

/// Lebesgue measure of the epsilon-neighborhood of a 1-D point set:
/// total length of the union of [p - eps, p + eps], exact sort-and-merge.
double interval_measure(const PointCloud& points_1d, double epsilon);

}  // namespace marstrand
