#include "marstrand/transversality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "marstrand/numerics.hpp"
#include "marstrand/parallel.hpp"
#include "marstrand/rng.hpp"

namespace marstrand {

namespace {

// Weighted index draw via the cumulative distribution.
std::size_t weighted_index(const std::vector<double>& cumulative, double u) {
    const double target = u * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    if (it == cumulative.end()) --it;
    return static_cast<std::size_t>(it - cumulative.begin());
}

}  // namespace

TransversalityEstimate empirical_transversality(
    const ProjectionFamily& family, const DiscreteMeasure& mu, std::span<const double> deltas,
    std::size_t n_lambda, std::size_t n_pairs, std::optional<double> alpha_override,
    std::uint64_t seed, std::size_t threads) {
    validate(mu);
    if (mu.dim() != family.domain_dim)
        throw Error("transversality: measure dimension does not match family domain");
    if (deltas.empty()) throw Error("transversality: empty delta grid");
    for (double delta : deltas)
        if (!(delta > 0.0 && delta <= 1.0)) throw Error("transversality: deltas must lie in (0,1]");
    if (n_lambda < 100) throw Error("transversality: n_lambda must be >= 100");
    if (n_pairs < 1) throw Error("transversality: n_pairs must be >= 1");

    const double alpha = alpha_override.value_or(family.alpha);
    const std::size_t d = mu.dim();

    // Pairs from mu x mu conditioned on distinct locations.
    std::vector<double> cumulative(mu.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        acc += mu.weights[i];
        cumulative[i] = acc;
    }
    CounterRng rng{seed};
    struct Pair {
        std::vector<double> x1, x2;
        double separation;
    };
    std::vector<Pair> pairs;
    constexpr std::size_t kMaxAttempts = 4096;
    for (std::size_t p = 0; p < n_pairs; ++p) {
        bool found = false;
        for (std::size_t attempt = 0; attempt < kMaxAttempts && !found; ++attempt) {
            const std::uint64_t base = (p * kMaxAttempts + attempt) * 2;
            const std::size_t i = weighted_index(cumulative, rng.uniform(streams::pairs, base));
            const std::size_t j = weighted_index(cumulative, rng.uniform(streams::pairs, base + 1));
            const double sep = dist(mu.support.point(i), mu.support.point(j), d);
            if (sep > 0.0) {
                auto a = mu.support.at(i);
                auto b = mu.support.at(j);
                pairs.push_back({{a.begin(), a.end()}, {b.begin(), b.end()}, sep});
                found = true;
            }
        }
        if (!found)
            throw Error("transversality: measure is degenerate (no pair of distinct points)");
    }
    if (family.worst_pair) {
        const auto& [a, b] = *family.worst_pair;
        pairs.push_back({a, b, dist(a.data(), b.data(), d)});
    }

    const auto lambdas = family.sample_lambda(n_lambda, seed);

    // Per pair, the fraction of lambdas collapsing it below each delta.
    std::vector<std::vector<double>> prob(pairs.size(), std::vector<double>(deltas.size(), 0.0));
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
        const Pair& pair = pairs[p];
        const double scale = std::pow(pair.separation, alpha);
        std::vector<std::size_t> hits(deltas.size(), 0);
        std::vector<double> y1(family.codomain_dim), y2(family.codomain_dim);
        for (std::size_t l = 0; l < n_lambda; ++l) {
            family.apply(lambdas[l], pair.x1, y1);
            family.apply(lambdas[l], pair.x2, y2);
            const double ratio = dist(y1.data(), y2.data(), family.codomain_dim) / scale;
            for (std::size_t k = 0; k < deltas.size(); ++k)
                if (ratio <= deltas[k]) ++hits[k];
        }
        for (std::size_t k = 0; k < deltas.size(); ++k)
            prob[p][k] = static_cast<double>(hits[k]) / static_cast<double>(n_lambda);
    });

    TransversalityEstimate est;
    est.deltas.assign(deltas.begin(), deltas.end());
    est.worst_prob.resize(deltas.size());
    est.prob_sigma.resize(deltas.size());
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        double worst = 0.0;
        for (std::size_t p = 0; p < pairs.size(); ++p) worst = std::max(worst, prob[p][k]);
        est.worst_prob[k] = worst;
        est.prob_sigma[k] = std::sqrt(worst * (1.0 - worst) / static_cast<double>(n_lambda));
    }
    est.n_lambda = n_lambda;
    est.n_pairs = n_pairs;
    est.seed = seed;
    est.alpha_used = alpha;

    std::vector<double> log_delta, log_prob;
    for (std::size_t k = 0; k < deltas.size(); ++k)
        if (est.worst_prob[k] > 0.0) {
            log_delta.push_back(std::log(deltas[k]));
            log_prob.push_back(std::log(est.worst_prob[k]));
        }
    if (log_delta.size() >= 2) {
        const LineFit fit = line_fit(log_delta, log_prob);
        est.fitted_kappa = fit.slope;
        est.fitted_C = std::exp(fit.intercept);
        est.fit_r2 = fit.r2;
    }
    return est;
}

TransversalityBoundCheck check_transversality_bound(const TransversalityEstimate& est, double C,
                                                    double kappa) {
    if (!(C > 0.0)) throw Error("transversality bound: C must be positive");
    if (!(kappa > 0.0)) throw Error("transversality bound: kappa must be positive");
    TransversalityBoundCheck check;
    check.pass = true;
    check.margins.resize(est.deltas.size());
    bool first = true;
    for (std::size_t k = 0; k < est.deltas.size(); ++k) {
        const double bound = C * std::pow(est.deltas[k], kappa) + 3.0 * est.prob_sigma[k];
        const double margin = bound - est.worst_prob[k];
        check.margins[k] = margin;
        if (first || margin < check.worst_margin) {
            check.worst_margin = margin;
            check.worst_index = k;
            first = false;
        }
        if (margin < 0.0) check.pass = false;
    }
    return check;
}

}  // namespace marstrand
