#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "marstrand/ifs.hpp"
#include "marstrand/types.hpp"

namespace marstrand {

/// Fixture recipe. type "ifs" enumerates an attractor sample, "product"
/// crosses two named fixtures, "atom" is a unit mass at a point.
struct FixtureDef {
    std::string type;                // "ifs" | "product" | "atom"
    IFSSpec ifs;                     // type == ifs
    int depth = 0;                   // type == ifs
    std::vector<double> seed_point;  // type == ifs; defaults to the origin
    std::size_t embed_dim = 0;       // 0 = keep ambient dimension
    std::string a, b;                // type == product: operand fixture names
    std::vector<double> point;       // type == atom
};

/// One verification check. Fields are read per kind; unused ones keep
/// their defaults and are ignored.
struct CheckSpec {
    std::string id;
    std::string kind;  // theorem1 | theorem2 | theorem3 | theorem4 | corollary1 | transversality
    std::string fixture;
    std::string family;
    bool expect_fail = false;  // negative control: the check must fail

    std::size_t n_lambda = 64;

    // theorem1
    double tolerance = 0.08;
    std::vector<double> scales;
    bool normalize_projection = true;

    // theorem2
    double epsilon = 0.0;
    double length_threshold = 0.1;
    double ratio_threshold = 0.8;

    // theorem3
    std::vector<double> t_values;
    double r_min = 1e-9;

    // theorem4
    std::vector<double> radii;

    // corollary1
    double histogram_bin = 0.0;

    // transversality
    std::vector<double> delta_grid;
    std::size_t n_pairs = 8;
    std::optional<double> alpha_override;
    double bound_C = 1.0;
    double bound_kappa = 1.0;
};

struct ExperimentConfig {
    int schema_version = 1;
    std::uint64_t seed = 0;
    std::size_t threads = 0;  // 0 = hardware
    double lambda_pass_threshold = 0.9;
    std::map<std::string, FixtureDef> fixtures;
    std::vector<CheckSpec> checks;
};

ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Canonical echo with stable key ordering; identical configs render to
/// identical bytes.
std::string config_to_json_text(const ExperimentConfig& config);

/// The full built-in verification suite (all theorem checks plus negative
/// controls) with frozen windows and thresholds.
ExperimentConfig default_verify_config();

/// Resolves a named fixture to its measure (recursively for products).
DiscreteMeasure build_fixture(const ExperimentConfig& config, const std::string& name);

/// Ground-truth similarity dimension of a fixture: Moran exponent for ifs,
/// sum of operand dimensions for products, 0 for atoms.
double fixture_dimension(const ExperimentConfig& config, const std::string& name);

IFSSpec ifs_from_json_text(const std::string& text);
std::string ifs_to_json_text(const IFSSpec& ifs);

// Canonical per-item renderings; report digests hash these.
std::string check_to_json_text(const CheckSpec& spec);
std::string fixture_to_json_text(const FixtureDef& fx);

}  // namespace marstrand
