#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "marstrand/types.hpp"

namespace marstrand {

/// One contracting similarity x -> ratio * R x + translation.
struct SimilarityMap {
    double ratio = 0.0;
    std::vector<double> rotation;     // d*d row-major orthogonal; empty = identity
    std::vector<double> translation;  // d entries

    void apply(std::span<const double> x, std::span<double> out) const;
};

/// Finite list of contracting similarities with probability weights.
/// The open-set condition is not checked; callers assert it.
struct IFSSpec {
    std::size_t ambient_dim = 0;
    std::vector<SimilarityMap> maps;
    std::vector<double> weights;
};

/// Invariant checks: ratios in (0,1), weights nonnegative summing to 1
/// within 1e-12, rotations orthogonal within 1e-10 entrywise.
void validate(const IFSSpec& ifs);

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t(1) << 24;

/// Unique s >= 0 with sum(ratio_i^s) = 1, by bisection to 1e-12 absolute.
/// A single map forces s = 0.
double similarity_dimension(const IFSSpec& ifs);

/// Natural self-similar measure at fixed depth: enumerates all m^depth
/// words, point = f_{i1} o ... o f_{i_depth}(seed_point), weight = product
/// of branch probabilities. Deterministic; total mass 1.
DiscreteMeasure ifs_attractor_sample(const IFSSpec& ifs, int depth,
                                     std::span<const double> seed_point,
                                     std::size_t cap = kDefaultEnumerationCap);

/// Product measure on R^{d1+d2}: support is the Cartesian product,
/// weights multiply, mass multiplies.
DiscreteMeasure product_measure(const DiscreteMeasure& a, const DiscreteMeasure& b,
                                std::size_t cap = kDefaultEnumerationCap);

// Canonical fixtures used throughout the experiments.
IFSSpec cantor_middle_thirds();
IFSSpec sierpinski_triangle();

}  // namespace marstrand
