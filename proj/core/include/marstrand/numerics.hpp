#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace marstrand {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;  // 1.0 when residuals vanish (including constant y)
};

/// Ordinary least squares y = slope*x + intercept. Requires >= 2 points
/// with at least two distinct x values.
LineFit line_fit(std::span<const double> x, std::span<const double> y);

/// FNV-1a over a byte string. The hex form feeds report digests; the raw
/// form derives per-check RNG seeds.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

}  // namespace marstrand
