#include "marstrand/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "marstrand/version.hpp"

namespace marstrand {

void save_measure(const std::string& path, const DiscreteMeasure& mu) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["dim"] = mu.dim();
    auto points = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < mu.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < mu.dim(); ++c) row.push_back(mu.support.point(i)[c]);
        points.push_back(std::move(row));
    }
    doc["points"] = std::move(points);
    doc["weights"] = mu.weights;
    write_text_file(path, doc.dump(2) + "\n");
}

DiscreteMeasure load_measure(const std::string& path) {
    const auto doc = nlohmann::json::parse(read_text_file(path));
    const std::size_t dim = doc.at("dim").get<std::size_t>();
    PointCloud cloud;
    cloud.dim = dim;
    for (const auto& row : doc.at("points")) {
        if (row.size() != dim) throw Error("measure file: point dimension mismatch");
        for (const auto& v : row) cloud.coords.push_back(v.get<double>());
    }
    return make_measure(std::move(cloud), doc.at("weights").get<std::vector<double>>());
}

void save_plot(const std::string& path, std::span<const std::pair<double, double>> rows) {
    std::string text;
    char line[80];
    for (const auto& [x, y] : rows) {
        std::snprintf(line, sizeof line, "%.17g %.17g\n", x, y);
        text += line;
    }
    write_text_file(path, text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

}  // namespace marstrand
