#pragma once

#include <span>
#include <vector>

#include "marstrand/types.hpp"

namespace marstrand {

/// Output of the greedy ball-growth regularization.
struct FrostmanResult {
    DiscreteMeasure remainder;       // may have zero mass (reported, not an error)
    double c = 0.0;                  // certificate constant max(M, 10^s mass / delta^s)
    double mass_retained = 0.0;      // remainder mass / input mass
    std::size_t balls_selected = 0;  // size of the greedy disjoint family
    std::vector<double> grid_radii;  // dyadic grid delta/10 * 2^-j, floored at resolution
    bool certificate_ok = false;     // exhaustive ball-growth check on the remainder
};

/// Greedy Vitali-style regularization of a discrete measure:
///  1. candidate balls B(x, r), x a support point, r on the dyadic grid
///     {delta/10 * 2^-j} down to the measure's resolution, with
///     mu(B(x, r)) >= M r^s;
///  2. maximal disjoint subfamily, largest radius first, ties broken by
///     lexicographic center;
///  3. support points inside the 5-enlarged selected balls are dropped;
///  4. remainder plus certificate constant c are returned.
/// The remainder satisfies nu(B(x, r)) <= c r^s for every surviving support
/// point and every grid radius (checked exhaustively before returning).
FrostmanResult frostman_regularize(const DiscreteMeasure& mu, double s, double M, double delta);

/// Exhaustive ball-growth check: nu(B(x, r)) <= c r^s for every support
/// point x and every radius in `radii`. True for empty measures.
bool frostman_certificate(const DiscreteMeasure& nu, double s, double c,
                          std::span<const double> radii);

}  // namespace marstrand
