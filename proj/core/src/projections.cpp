#include "marstrand/projections.hpp"

#include <cmath>
#include <numbers>

#include "marstrand/rng.hpp"

namespace marstrand {

ProjectionFamily planar_angle_family() {
    ProjectionFamily family;
    family.name = "planar_angle";
    family.domain_dim = 2;
    family.codomain_dim = 1;
    family.lambda_dim = 1;
    family.alpha = 1.0;
    family.kappa = 1.0;
    family.declared_C = 1.0;
    family.apply = [](std::span<const double> lambda, std::span<const double> x,
                      std::span<double> out) {
        out[0] = x[0] * std::cos(lambda[0]) + x[1] * std::sin(lambda[0]);
    };
    family.sample_lambda = [](std::size_t count, std::uint64_t seed) {
        CounterRng rng{seed};
        std::vector<std::vector<double>> lambdas(count);
        for (std::size_t k = 0; k < count; ++k)
            lambdas[k] = {rng.uniform(streams::lambda, k, 0.0, std::numbers::pi)};
        return lambdas;
    };
    family.worst_pair = {{0.0, 0.0}, {1.0, 0.0}};
    return family;
}

ProjectionFamily spatial_direction_family() {
    ProjectionFamily family;
    family.name = "spatial_direction";
    family.domain_dim = 3;
    family.codomain_dim = 1;
    family.lambda_dim = 3;
    family.alpha = 1.0;
    family.kappa = 1.0;
    family.declared_C = 1.0;
    family.apply = [](std::span<const double> lambda, std::span<const double> x,
                      std::span<double> out) {
        out[0] = lambda[0] * x[0] + lambda[1] * x[1] + lambda[2] * x[2];
    };
    family.sample_lambda = [](std::size_t count, std::uint64_t seed) {
        CounterRng rng{seed};
        std::vector<std::vector<double>> lambdas(count);
        for (std::size_t k = 0; k < count; ++k) {
            // Area-preserving cylindrical map: z uniform on [-1,1], angle
            // uniform on [0, 2pi).
            const double z = rng.uniform(streams::lambda, 2 * k, -1.0, 1.0);
            const double theta = rng.uniform(streams::lambda, 2 * k + 1, 0.0,
                                             2.0 * std::numbers::pi);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            lambdas[k] = {rho * std::cos(theta), rho * std::sin(theta), z};
        }
        return lambdas;
    };
    family.worst_pair = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    return family;
}

const std::vector<ProjectionFamily>& builtin_families() {
    static const std::vector<ProjectionFamily> families = {planar_angle_family(),
                                                           spatial_direction_family()};
    return families;
}

const ProjectionFamily& family_by_name(const std::string& name,
                                       std::span<const ProjectionFamily> extra) {
    for (const auto& family : extra)
        if (family.name == name) return family;
    for (const auto& family : builtin_families())
        if (family.name == name) return family;
    throw Error("unknown projection family: " + name);
}

DiscreteMeasure pushforward(const ProjectionFamily& family, std::span<const double> lambda,
                            const DiscreteMeasure& mu) {
    validate(mu);
    if (mu.dim() != family.domain_dim)
        throw Error("pushforward: measure dimension does not match family domain");
    PointCloud out;
    out.dim = family.codomain_dim;
    out.coords.resize(mu.size() * family.codomain_dim);
    for (std::size_t i = 0; i < mu.size(); ++i)
        family.apply(lambda, mu.support.at(i),
                     {out.coords.data() + i * family.codomain_dim, family.codomain_dim});
    DiscreteMeasure nu;
    nu.support = std::move(out);
    nu.weights = mu.weights;
    nu.total_mass = mu.total_mass;  // weights unchanged, mass preserved exactly
    return nu;
}

}  // namespace marstrand
