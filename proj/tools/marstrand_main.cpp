// Command-line front end: fixture generation, energies, dimension
// estimates, transversality estimation, pushforward, and the config-driven
// verification suite with machine-readable reports.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "marstrand/config.hpp"
#include "marstrand/dimension.hpp"
#include "marstrand/energy.hpp"
#include "marstrand/experiments.hpp"
#include "marstrand/io.hpp"
#include "marstrand/projections.hpp"
#include "marstrand/transversality.hpp"
#include "marstrand/version.hpp"

namespace {

using namespace marstrand;

std::string format_value(const std::string& key, double value, const std::string& format) {
    char buf[128];
    if (format == "csv")
        std::snprintf(buf, sizeof buf, "%s,%.17g\n", key.c_str(), value);
    else
        std::snprintf(buf, sizeof buf, "{\"%s\": %.17g}\n", key.c_str(), value);
    return buf;
}

ExperimentConfig resolve_config(const std::string& config_path, std::uint64_t seed_override,
                                bool has_seed_override) {
    ExperimentConfig config =
        config_path.empty() ? default_verify_config() : load_config(config_path);
    if (has_seed_override) config.seed = seed_override;
    return config;
}

int cmd_generate(const std::string& config_path, const std::string& fixture,
                 const std::string& out) {
    const ExperimentConfig config = resolve_config(config_path, 0, false);
    const DiscreteMeasure mu = build_fixture(config, fixture);
    save_measure(out, mu);
    std::cout << "wrote " << mu.size() << " points (dim " << mu.dim() << ") to " << out << "\n";
    return 0;
}

int cmd_energy(const std::string& measure_path, double s, double r_min, bool layercake,
               std::size_t threads, const std::string& format) {
    const DiscreteMeasure mu = load_measure(measure_path);
    const double value =
        layercake ? energy_layercake(mu, s, r_min) : energy(mu, s, r_min, threads);
    std::cout << format_value("energy", value, format);
    return 0;
}

int cmd_dimension(const std::string& measure_path, const std::string& method,
                  std::vector<double> scales, const std::string& out,
                  const std::string& format) {
    const DiscreteMeasure mu = load_measure(measure_path);
    DimensionEstimate est;
    if (method == "box")
        est = box_dimension(mu.support, scales);
    else if (method == "correlation")
        est = correlation_dimension(mu, scales);
    else
        throw Error("dimension: method must be box or correlation");
    std::cout << format_value("dimension", est.value, format);
    std::cout << format_value("fit_r2", est.fit_r2, format);
    if (!out.empty()) {
        std::vector<std::pair<double, double>> rows;
        for (std::size_t k = 0; k < est.scales.size(); ++k)
            rows.emplace_back(est.scales[k], est.log_counts[k]);
        save_plot(out, rows);
    }
    return 0;
}

int cmd_transversality(const std::string& measure_path, const std::string& family_name,
                       std::vector<double> deltas, std::size_t n_lambda, std::size_t n_pairs,
                       std::optional<double> alpha, std::uint64_t seed, std::size_t threads,
                       const std::string& out, const std::string& format) {
    const DiscreteMeasure mu = load_measure(measure_path);
    const ProjectionFamily& family = family_by_name(family_name);
    const TransversalityEstimate est =
        empirical_transversality(family, mu, deltas, n_lambda, n_pairs, alpha, seed, threads);
    for (std::size_t k = 0; k < est.deltas.size(); ++k) {
        char key[48];
        std::snprintf(key, sizeof key, "prob[delta=%g]", est.deltas[k]);
        std::cout << format_value(key, est.worst_prob[k], format);
    }
    if (est.fitted_kappa) std::cout << format_value("fitted_kappa", *est.fitted_kappa, format);
    if (est.fitted_C) std::cout << format_value("fitted_C", *est.fitted_C, format);
    if (est.fit_r2) std::cout << format_value("fit_r2", *est.fit_r2, format);
    if (!out.empty()) {
        std::vector<std::pair<double, double>> rows;
        for (std::size_t k = 0; k < est.deltas.size(); ++k)
            rows.emplace_back(est.deltas[k], est.worst_prob[k]);
        save_plot(out, rows);
    }
    return 0;
}

int cmd_project(const std::string& measure_path, const std::string& family_name,
                std::vector<double> lambda, const std::string& out) {
    const DiscreteMeasure mu = load_measure(measure_path);
    const ProjectionFamily& family = family_by_name(family_name);
    if (lambda.size() != family.lambda_dim)
        throw Error("project: family expects a parameter of dimension " +
                    std::to_string(family.lambda_dim));
    const DiscreteMeasure nu = pushforward(family, lambda, mu);
    save_measure(out, nu);
    std::cout << "wrote projected measure (" << nu.size() << " points) to " << out << "\n";
    return 0;
}

int cmd_verify(const std::string& config_path, std::uint64_t seed_override,
               bool has_seed_override, std::size_t threads, const std::string& out_dir,
               const std::string& format) {
    const ExperimentConfig config =
        resolve_config(config_path, seed_override, has_seed_override);
    const ExperimentReport report = run_verification(config, {}, threads);

    std::filesystem::create_directories(out_dir);
    const auto out_path = [&](const std::string& name) {
        return (std::filesystem::path(out_dir) / name).string();
    };
    write_text_file(out_path("report.json"), render_report_json(report));
    if (format == "csv") write_text_file(out_path("report.csv"), render_report_csv(report));
    write_text_file(out_path("timing.txt"), render_timing_text(report));
    for (const auto& record : report.checks)
        if (!record.plot.empty()) save_plot(out_path(record.id + ".dat"), record.plot);

    for (const auto& record : report.checks) {
        const char* verdict = record.ok ? "ok  " : "FAIL";
        std::cout << "[" << verdict << "] " << record.id << (record.expected_fail ? " (control)" : "")
                  << ": " << (record.pass ? "pass" : "fail") << "\n";
    }
    std::cout << (report.all_ok ? "all checks ok" : "CHECKS FAILED") << " -> "
              << out_path("report.json") << "\n";
    return report.all_ok ? 0 : 1;
}

int cmd_report(const std::string& in_path, const std::string& format, const std::string& out) {
    const ExperimentReport report = report_from_json_text(read_text_file(in_path));
    const std::string text =
        format == "csv" ? render_report_csv(report) : render_report_json(report);
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for projection theorems on fractal measures"};
    app.set_version_flag("--version", marstrand::kVersion);
    app.require_subcommand(1);

    std::string config_path, measure_path, family_name, out_path, in_path;
    std::string method = "box", format = "json", fixture;
    double s_exponent = 1.0, r_min = 0.0;
    bool layercake = false;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::size_t threads = 0, n_lambda = 10000, n_pairs = 8;
    std::vector<double> scales, deltas = {0.4, 0.2, 0.1, 0.05, 0.025}, lambda;
    std::optional<double> alpha;
    double alpha_value = 0.0;

    auto* generate = app.add_subcommand("generate", "build a fixture measure file");
    generate->add_option("--config", config_path, "experiment config path");
    generate->add_option("--fixture", fixture, "fixture name")->required();
    generate->add_option("--out", out_path, "output measure file")->required();

    auto* energy_cmd = app.add_subcommand("energy", "truncated s-energy of a measure");
    energy_cmd->add_option("--measure", measure_path)->required();
    energy_cmd->add_option("--s", s_exponent, "energy exponent")->required();
    energy_cmd->add_option("--rmin", r_min, "truncation radius");
    energy_cmd->add_flag("--layercake", layercake, "use the layer-cake evaluation path");
    energy_cmd->add_option("--threads", threads);
    energy_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* dim_cmd = app.add_subcommand("dimension", "box or correlation dimension estimate");
    dim_cmd->add_option("--measure", measure_path)->required();
    dim_cmd->add_option("--method", method)->check(CLI::IsMember({"box", "correlation"}));
    dim_cmd->add_option("--scales", scales, "decreasing scales/radii")
        ->required()
        ->delimiter(',');
    dim_cmd->add_option("--out", out_path, "two-column plot data file");
    dim_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* tv_cmd = app.add_subcommand("transversality", "empirical transversality estimate");
    tv_cmd->add_option("--measure", measure_path)->required();
    tv_cmd->add_option("--family", family_name)->required();
    tv_cmd->add_option("--deltas", deltas)->delimiter(',');
    tv_cmd->add_option("--n-lambda", n_lambda);
    tv_cmd->add_option("--n-pairs", n_pairs);
    auto* alpha_opt = tv_cmd->add_option("--alpha", alpha_value, "override the event exponent");
    tv_cmd->add_option("--seed", seed);
    tv_cmd->add_option("--threads", threads);
    tv_cmd->add_option("--out", out_path, "two-column plot data file");
    tv_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* project = app.add_subcommand("project", "push a measure through a family member");
    project->add_option("--measure", measure_path)->required();
    project->add_option("--family", family_name)->required();
    project->add_option("--lambda", lambda, "parameter coordinates")->required()->delimiter(',');
    project->add_option("--out", out_path)->required();

    auto* verify = app.add_subcommand("verify", "run the configured theorem checks");
    verify->add_option("--config", config_path, "experiment config path (built-in when absent)");
    auto* seed_opt = verify->add_option("--seed", seed, "override the config seed");
    verify->add_option("--threads", threads);
    verify->add_option("--out", out_path, "report directory")->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* report = app.add_subcommand("report", "re-render a stored report");
    report->add_option("--in", in_path)->required();
    report->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", out_path, "output path (stdout when absent)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) return cmd_generate(config_path, fixture, out_path);
        if (*energy_cmd)
            return cmd_energy(measure_path, s_exponent, r_min, layercake, threads, format);
        if (*dim_cmd) return cmd_dimension(measure_path, method, scales, out_path, format);
        if (*tv_cmd) {
            if (alpha_opt->count() > 0) alpha = alpha_value;
            return cmd_transversality(measure_path, family_name, deltas, n_lambda, n_pairs,
                                      alpha, seed, threads, out_path, format);
        }
        if (*project) return cmd_project(measure_path, family_name, lambda, out_path);
        if (*verify) {
            has_seed = seed_opt->count() > 0;
            return cmd_verify(config_path, seed, has_seed, threads, out_path, format);
        }
        if (*report) return cmd_report(in_path, format, out_path);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
