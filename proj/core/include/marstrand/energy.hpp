#pragma once

#include <cstddef>
#include <span>

#include "marstrand/types.hpp"

namespace marstrand {

/// Closed-ball mass: sum of weights of points with d(point, center) <= r.
double ball_mass(const DiscreteMeasure& mu, std::span<const double> center, double r);

/// Truncated s-energy: sum over i != j of w_i w_j max(d_ij, r_min)^{-s}.
/// Diagonal pairs are excluded; distances below r_min clamp to r_min.
/// s = 0 returns mass^2 - sum(w_i^2). Coincident distinct-index points with
/// r_min = 0 and s > 0 are a singularity and throw.
double energy(const DiscreteMeasure& mu, double s, double r_min, std::size_t threads = 0);

/// Same quantity through the layer-cake identity: per point, the integral
/// of the ball-mass step function over the level parameter, evaluated as a
/// finite sum over sorted distinct (clamped) distances. Independent
/// evaluation path; must agree with energy() to high relative accuracy.
double energy_layercake(const DiscreteMeasure& mu, double s, double r_min);

}  // namespace marstrand
