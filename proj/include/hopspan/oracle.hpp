#pragma once

#include <cstdint>

#include "hopspan/metric.hpp"

namespace hopspan {

inline constexpr int kOracleMaxPoints = 10;

struct OracleResult {
  double lightness = 1.0;
  double weight = 0.0;
  double mst_weight = 0.0;
  SpannerGraph witness;
  std::uint64_t nodes_explored = 0;
};

/// Minimum-weight edge subset of the complete graph (weights = metric distances)
/// in which every pair of points is joined by a path of at most k edges; stretch
/// is unconstrained. Exact branch and bound, n <= kOracleMaxPoints.
/// The witness declares k and its own measured k-hop stretch.
OracleResult optimal_lightness(const Metric& m, int k);

}  // namespace hopspan
