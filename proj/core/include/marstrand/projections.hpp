#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "marstrand/types.hpp"

namespace marstrand {

/// Parameterized measurable family pi_lambda: R^d -> R^k with declared
/// Holder exponent alpha and transversality exponent kappa. Built-in
/// families are 1-Lipschitz in the point argument and sample their
/// parameter space with counter-based randomness, so sample_lambda is a
/// pure function of (count, seed).
struct ProjectionFamily {
    std::string name;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::size_t lambda_dim = 0;
    double alpha = 1.0;
    double kappa = 1.0;
    std::optional<double> declared_C;

    std::function<void(std::span<const double> lambda, std::span<const double> x,
                       std::span<double> out)>
        apply;
    std::function<std::vector<std::vector<double>>(std::size_t count, std::uint64_t seed)>
        sample_lambda;

    /// Canonical pair realizing the worst case of the transversality event;
    /// built-ins provide one (any pair works, by rotation invariance).
    std::optional<std::pair<std::vector<double>, std::vector<double>>> worst_pair;

    std::vector<double> apply_point(std::span<const double> lambda,
                                    std::span<const double> x) const {
        std::vector<double> out(codomain_dim);
        apply(lambda, x, out);
        return out;
    }
};

/// Angle projections of the plane: lambda uniform on [0, pi),
/// apply(lambda, x) = x1 cos(lambda) + x2 sin(lambda). alpha = kappa = 1,
/// declared C = 1 (the collapse probability 2 asin(delta)/pi is <= delta).
ProjectionFamily planar_angle_family();

/// Direction projections of R^3: lambda uniform on the unit sphere via the
/// area-preserving cylindrical map, apply(lambda, x) = <lambda, x>.
/// alpha = kappa = 1, declared C = 1 (band measure is exactly delta).
ProjectionFamily spatial_direction_family();

/// Built-in families addressable by name in experiment configs.
const std::vector<ProjectionFamily>& builtin_families();

/// Looks up a family by name among built-ins plus `extra`; throws Error on
/// unknown names. User-defined families enter through this argument.
const ProjectionFamily& family_by_name(const std::string& name,
                                       std::span<const ProjectionFamily> extra = {});

/// Image measure (pi_lambda)_* mu: points mapped, weights unchanged.
DiscreteMeasure pushforward(const ProjectionFamily& family, std::span<const double> lambda,
                            const DiscreteMeasure& mu);

}  // namespace marstrand
