#pragma once

#include <span>
#include <string>
#include <utility>

#include "marstrand/types.hpp"

namespace marstrand {

/// Measure files are JSON: {schema_version, dim, points, weights}.
void save_measure(const std::string& path, const DiscreteMeasure& mu);
DiscreteMeasure load_measure(const std::string& path);

/// Two-column numeric text, "x y" per line, 17 significant digits.
void save_plot(const std::string& path, std::span<const std::pair<double, double>> rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace marstrand
