#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "marstrand/projections.hpp"
#include "marstrand/types.hpp"

namespace marstrand {

/// Empirical estimate of the transversality law
///   P[lambda : d(pi(x1), pi(x2)) <= delta * d(x1, x2)^alpha] <= C delta^kappa.
/// worst_prob is the per-delta maximum over sampled pairs; (fitted_C,
/// fitted_kappa) come from least squares on log worst_prob vs log delta
/// over the deltas with positive probability.
struct TransversalityEstimate {
    std::vector<double> deltas;
    std::vector<double> worst_prob;   // in [0,1], nondecreasing in delta
    std::vector<double> prob_sigma;   // binomial standard error of the worst pair
    std::optional<double> fitted_kappa;
    std::optional<double> fitted_C;
    std::optional<double> fit_r2;
    std::size_t n_lambda = 0;
    std::size_t n_pairs = 0;
    std::uint64_t seed = 0;
    double alpha_used = 1.0;
};

/// Samples n_pairs support pairs from mu x mu (conditioned on distinct
/// locations), adds the family's canonical worst pair when present, and
/// evaluates the collapse event over n_lambda sampled parameters.
/// alpha_override substitutes the exponent in the event (negative-control
/// pathway); deltas must lie in (0, 1], n_lambda >= 100.
TransversalityEstimate empirical_transversality(
    const ProjectionFamily& family, const DiscreteMeasure& mu, std::span<const double> deltas,
    std::size_t n_lambda, std::size_t n_pairs, std::optional<double> alpha_override,
    std::uint64_t seed, std::size_t threads = 0);

/// Pass/fail of worst_prob(delta) <= C delta^kappa + 3 sigma per delta.
struct TransversalityBoundCheck {
    bool pass = false;
    double worst_margin = 0.0;        // min over deltas of bound + slack - prob
    std::size_t worst_index = 0;
    std::vector<double> margins;
};

TransversalityBoundCheck check_transversality_bound(const TransversalityEstimate& est, double C,
                                                    double kappa);

}  // namespace marstrand
