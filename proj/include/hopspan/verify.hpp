#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hopspan/metric.hpp"

namespace hopspan {

/// d_k[s][v] for a set of source rows over all spanner vertices (real and auxiliary).
/// Unreachable entries hold kUnreachable.
class HopDistanceTable {
 public:
  HopDistanceTable(std::vector<Vertex> sources, int columns);

  std::span<const Vertex> sources() const { return sources_; }
  int columns() const { return cols_; }
  double at(std::size_t row, Vertex v) const { return d_[row * cols_ + v]; }
  std::span<double> row(std::size_t r) { return {d_.data() + r * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const double> row(std::size_t r) const {
    return {d_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }

  friend bool operator==(const HopDistanceTable&, const HopDistanceTable&) = default;

 private:
  std::vector<Vertex> sources_;
  int cols_;
  std::vector<double> d_;
};

/// Shortest path lengths using at most k edges, one row per source. Frontier-based
/// min-plus relaxation over CSR adjacency, sources split across OpenMP threads.
HopDistanceTable bounded_hop_distances(const SpannerGraph& g, int k, std::span<const Vertex> sources);
/// All vertices as sources.
HopDistanceTable bounded_hop_apsp(const SpannerGraph& g, int k);
/// Reference: k full rounds of min-plus relaxation over the raw edge list, one thread.
HopDistanceTable bounded_hop_apsp_serial(const SpannerGraph& g, int k);

struct WorstPair {
  Vertex u = -1;
  Vertex v = -1;
  double stretch = 1.0;
};

struct VerifyReport {
  SpannerStats stats;
  WorstPair worst_pair;
  std::size_t violations = 0;      // pairs whose k-hop stretch exceeds t + 1e-9
  std::size_t pairs_checked = 0;
  bool sampled = false;
  int k = 0;
  double t = 1.0;
  double real_edge_weight = 0;     // weight of edges between real points only
  std::vector<double> per_hop_profile;  // [h-1] = max stretch achievable within h hops
};

/// Stretch and lightness of g against m at hop budget k. Exact over all real
/// pairs for n <= 512; above that, every pair touching a fixed-seed sample of
/// sources (about 1e5 pairs). Unreachable pairs count as infinite stretch.
/// `known_mst` skips the O(n^2) MST when the caller already has it.
VerifyReport verify(const SpannerGraph& g, const Metric& m, int k, double t,
                    std::optional<double> known_mst = std::nullopt);

/// Smallest hop count h >= 1 at which every (measured) real pair has stretch <= t;
/// 0 when there are no pairs, nullopt when no hop count suffices.
std::optional<int> hop_diameter(const SpannerGraph& g, const Metric& m, double t);

}  // namespace hopspan
