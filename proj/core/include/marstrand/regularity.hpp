#pragma once

#include <span>
#include <vector>

#include "marstrand/types.hpp"

namespace marstrand {

/// Discrete surrogate of the lower regularity ratio nu(B(y,r))/r^kappa:
/// per support point, the minimum of the ratio over a radii grid.
struct RegularityReport {
    double kappa = 0.0;
    std::vector<double> radii;                 // strictly decreasing, positive
    std::vector<double> per_point_min_ratio;   // one entry per support point
    double global_min = 0.0;
    double global_max = 0.0;
};

RegularityReport regularity_scan(const DiscreteMeasure& nu, double kappa,
                                 std::span<const double> radii);

}  // namespace marstrand
