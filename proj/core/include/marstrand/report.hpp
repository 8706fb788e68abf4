#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace marstrand {

/// Per-check verification record. Estimates are named scalars rendered in
/// key order; plot holds (x, y) rows emitted as a sidecar .dat file and is
/// not part of the canonical report document. wall_ms likewise goes to a
/// timing sidecar so reports stay byte-identical across runs and thread
/// counts.
struct CheckRecord {
    std::string id;
    std::string statement;       // which bound / property was checked
    std::string inputs_digest;   // digest of the check spec + fixture data
    std::map<std::string, double> estimates;
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;           // the raw check outcome
    bool expected_fail = false;  // negative control flag from the config
    bool ok = false;             // pass == !expected_fail

    std::vector<std::pair<double, double>> plot;
    double wall_ms = 0.0;
    std::map<std::string, std::string> notes;
};

struct ExperimentReport {
    int schema_version = 1;
    std::string version;
    std::uint64_t seed = 0;
    double lambda_pass_threshold = 0.9;
    std::string config_digest;
    std::string config_echo;  // canonical config JSON text
    std::vector<CheckRecord> checks;
    bool all_ok = false;
};

/// Canonical JSON document: stable key ordering, no timing data;
/// byte-identical for identical (config, seed) regardless of thread count.
std::string render_report_json(const ExperimentReport& report);

/// Flat CSV: one row per check (plus one row per named estimate).
std::string render_report_csv(const ExperimentReport& report);

/// Parses a stored canonical report (the `report` subcommand re-renders).
ExperimentReport report_from_json_text(const std::string& text);

/// Timing sidecar: "<check id> <wall ms>" per line.
std::string render_timing_text(const ExperimentReport& report);

}  // namespace marstrand
