#include "marstrand/regularity.hpp"

#include <cmath>
#include <limits>

#include "marstrand/energy.hpp"

namespace marstrand {

RegularityReport regularity_scan(const DiscreteMeasure& nu, double kappa,
                                 std::span<const double> radii) {
    validate(nu);
    if (radii.empty()) throw Error("regularity scan: empty radii grid");
    if (radii.size() < 2) throw Error("regularity scan: needs at least 2 radii");
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (!(radii[k] > 0.0)) throw Error("regularity scan: radii must be positive");
        if (k > 0 && !(radii[k] < radii[k - 1]))
            throw Error("regularity scan: radii must be strictly decreasing");
    }

    RegularityReport report;
    report.kappa = kappa;
    report.radii.assign(radii.begin(), radii.end());
    report.per_point_min_ratio.resize(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (double r : radii) {
            const double ratio = ball_mass(nu, nu.support.at(i), r) / std::pow(r, kappa);
            best = std::min(best, ratio);
        }
        report.per_point_min_ratio[i] = best;
    }
    report.global_min = std::numeric_limits<double>::infinity();
    report.global_max = -std::numeric_limits<double>::infinity();
    for (double v : report.per_point_min_ratio) {
        report.global_min = std::min(report.global_min, v);
        report.global_max = std::max(report.global_max, v);
    }
    return report;
}

}  // namespace marstrand
