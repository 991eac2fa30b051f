#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spectral {

inline constexpr std::uint64_t kDefaultDirectionSeed = 42;

/// Deterministic quasi-uniform unit vectors in ℝ^dim: a Halton sequence
/// with a seeded random shift, mapped to [−1, 1]^dim, kept when its norm
/// lies in [0.1, 1], then normalised. Identical (dim, count, seed) give
/// identical output on every platform.
std::vector<std::vector<double>> sphere_directions(std::size_t dim, std::size_t count,
                                                   std::uint64_t seed = kDefaultDirectionSeed);

/// e_1, …, e_dim.
std::vector<std::vector<double>> axis_directions(std::size_t dim);

}  // namespace spectral
