#include "marstrand/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "marstrand/types.hpp"
#include "marstrand/version.hpp"

namespace marstrand {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json check_to_json(const CheckRecord& record) {
    ordered_json doc;
    doc["id"] = record.id;
    doc["statement"] = record.statement;
    doc["inputs_digest"] = record.inputs_digest;
    ordered_json estimates;
    for (const auto& [key, value] : record.estimates) estimates[key] = value;
    doc["estimates"] = std::move(estimates);
    doc["bound"] = record.bound;
    doc["slack"] = record.slack;
    doc["pass"] = record.pass;
    doc["expected_fail"] = record.expected_fail;
    doc["ok"] = record.ok;
    if (!record.notes.empty()) {
        ordered_json notes;
        for (const auto& [key, value] : record.notes) notes[key] = value;
        doc["notes"] = std::move(notes);
    }
    return doc;
}

CheckRecord check_from_json(const json& doc) {
    CheckRecord record;
    record.id = doc.at("id").get<std::string>();
    record.statement = doc.at("statement").get<std::string>();
    record.inputs_digest = doc.at("inputs_digest").get<std::string>();
    for (const auto& [key, value] : doc.at("estimates").items())
        record.estimates[key] = value.get<double>();
    record.bound = doc.at("bound").get<double>();
    record.slack = doc.at("slack").get<double>();
    record.pass = doc.at("pass").get<bool>();
    record.expected_fail = doc.at("expected_fail").get<bool>();
    record.ok = doc.at("ok").get<bool>();
    if (doc.contains("notes"))
        for (const auto& [key, value] : doc.at("notes").items())
            record.notes[key] = value.get<std::string>();
    return record;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string render_report_json(const ExperimentReport& report) {
    ordered_json doc;
    doc["schema_version"] = report.schema_version;
    doc["version"] = report.version;
    doc["seed"] = report.seed;
    doc["lambda_pass_threshold"] = report.lambda_pass_threshold;
    doc["config_digest"] = report.config_digest;
    doc["config_echo"] = report.config_echo;
    auto checks = ordered_json::array();
    for (const auto& record : report.checks) checks.push_back(check_to_json(record));
    doc["checks"] = std::move(checks);
    doc["all_ok"] = report.all_ok;
    return doc.dump(2) + "\n";
}

std::string render_report_csv(const ExperimentReport& report) {
    std::string out = "check_id,key,value\n";
    for (const auto& record : report.checks) {
        out += csv_escape(record.id) + ",statement," + csv_escape(record.statement) + "\n";
        out += csv_escape(record.id) + ",inputs_digest," + record.inputs_digest + "\n";
        for (const auto& [key, value] : record.estimates)
            out += csv_escape(record.id) + "," + csv_escape(key) + "," + format_double(value) + "\n";
        out += csv_escape(record.id) + ",bound," + format_double(record.bound) + "\n";
        out += csv_escape(record.id) + ",slack," + format_double(record.slack) + "\n";
        out += csv_escape(record.id) + ",pass," + (record.pass ? "true" : "false") + "\n";
        out += csv_escape(record.id) + ",expected_fail," +
               (record.expected_fail ? "true" : "false") + "\n";
        out += csv_escape(record.id) + ",ok," + (record.ok ? "true" : "false") + "\n";
    }
    out += "summary,all_ok,";
    out += report.all_ok ? "true" : "false";
    out += "\n";
    return out;
}

ExperimentReport report_from_json_text(const std::string& text) {
    const auto doc = json::parse(text);
    ExperimentReport report;
    report.schema_version = doc.at("schema_version").get<int>();
    if (report.schema_version != kReportSchemaVersion)
        throw Error("report: unsupported schema_version");
    report.version = doc.at("version").get<std::string>();
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.lambda_pass_threshold = doc.at("lambda_pass_threshold").get<double>();
    report.config_digest = doc.at("config_digest").get<std::string>();
    report.config_echo = doc.at("config_echo").get<std::string>();
    for (const auto& c : doc.at("checks")) report.checks.push_back(check_from_json(c));
    report.all_ok = doc.at("all_ok").get<bool>();
    return report;
}

std::string render_timing_text(const ExperimentReport& report) {
    std::string out;
    for (const auto& record : report.checks) {
        char line[160];
        std::snprintf(line, sizeof line, "%s %.3f\n", record.id.c_str(), record.wall_ms);
        out += line;
    }
    return out;
}

}  // namespace marstrand
