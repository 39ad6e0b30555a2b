#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopspan/metric.hpp"

namespace hopspan {

/// Measurements are exhaustive up to this many points and sampled above it.
inline constexpr int kExactPairLimit = 512;
inline constexpr std::size_t kSampledPairs = 100000;
inline constexpr std::uint64_t kSamplingSeed = 0x5eed0f5a9e3779b9ULL;

/// All pairs u < v when n <= kExactPairLimit; otherwise kSampledPairs pairs drawn
/// with a fixed seed (u < v, possibly repeated).
std::vector<std::pair<Vertex, Vertex>> measurement_pairs(int n);

/// Sources for single-source hop measurements: every vertex when n <= kExactPairLimit,
/// otherwise ceil(kSampledPairs / (n-1)) distinct sources drawn with a fixed seed,
/// returned ascending. Each source is paired with every other point.
std::vector<Vertex> measurement_sources(int n);

}  // namespace hopspan
