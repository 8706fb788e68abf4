#pragma once

#include <map>
#include <span>
#include <string>

#include "marstrand/config.hpp"
#include "marstrand/projections.hpp"
#include "marstrand/report.hpp"
#include "marstrand/types.hpp"

namespace marstrand {

/// Shared state for a verification run: resolved fixtures and memoized
/// reference energies (the bound sides reuse the same truncation).
struct Workspace {
    const ExperimentConfig* config = nullptr;
    std::size_t threads = 0;
    std::span<const ProjectionFamily> extra_families;
    std::map<std::string, DiscreteMeasure> fixture_cache;
    std::map<std::string, double> energy_cache;  // key: fixture|s|r_min

    const DiscreteMeasure& fixture(const std::string& name);
    const ProjectionFamily& family(const std::string& name) const;
    double reference_energy(const std::string& fixture_name, double s, double r_min);
};

// Per-theorem verification sections. Each samples n_lambda parameters,
// runs the pipeline, and compares against the declared bound with the
// declared slack; "a.e. lambda" statements become pass fractions against
// config.lambda_pass_threshold.
CheckRecord verify_theorem1(const ExperimentConfig& config, const CheckSpec& spec, Workspace& ws);
CheckRecord verify_theorem2(const ExperimentConfig& config, const CheckSpec& spec, Workspace& ws);
CheckRecord verify_theorem3(const ExperimentConfig& config, const CheckSpec& spec, Workspace& ws);
CheckRecord verify_theorem4(const ExperimentConfig& config, const CheckSpec& spec, Workspace& ws);
CheckRecord verify_corollary1(const ExperimentConfig& config, const CheckSpec& spec, Workspace& ws);
CheckRecord verify_transversality(const ExperimentConfig& config, const CheckSpec& spec,
                                  Workspace& ws);

/// Runs every configured check in order and assembles the report.
/// threads_override, when nonzero, wins over config.threads.
ExperimentReport run_verification(const ExperimentConfig& config,
                                  std::span<const ProjectionFamily> extra_families = {},
                                  std::size_t threads_override = 0);

}  // namespace marstrand
