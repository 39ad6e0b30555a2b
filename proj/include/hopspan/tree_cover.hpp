#pragma once

#include <vector>

#include "hopspan/metric.hpp"

namespace hopspan {

/// A collection of dominating trees over the points of a metric. Tree j hosts
/// point p at vertex point_map[j][p]; any other vertex of tree j is auxiliary.
struct TreeCover {
  std::vector<WeightedTree> trees;
  std::vector<std::vector<Vertex>> point_map;
  double declared_stretch = 1.0;
  double declared_lightness = 1.0;

  int size() const { return static_cast<int>(trees.size()); }
  int point_count() const { return point_map.empty() ? 0 : static_cast<int>(point_map[0].size()); }

  /// Structural checks: at least one tree, every point mapped in every tree,
  /// maps injective and in range. Throws InputError.
  void validate(int point_count) const;
};

/// Raised when a cover tree is not dominating; carries the witness.
class DominationError : public InputError {
 public:
  DominationError(int tree, Vertex u, Vertex v, double tree_distance, double metric_distance);
  int tree;
  Vertex u;
  Vertex v;
  double tree_distance;
  double metric_distance;
};

struct CoverStats {
  int size = 0;
  double measured_stretch = 1.0;
  double measured_lightness = 1.0;
};

/// The tree itself as a one-tree cover (stretch 1, lightness 1).
TreeCover identity_cover(const WeightedTree& tree);

/// d+1 shifted quadtree hierarchies turned into HSTs. Hierarchy j shifts the
/// normalized points by j/(d+2) in every coordinate; cells split into up to 2^d
/// nonempty children until they hold at most `leaf_capacity` points or reach
/// depth ceil(2 log2 n). Each edge from a cell node to a child weighs half the
/// parent cell's diameter, which makes every tree dominating. Real points use
/// vertex ids 0..n-1 in every tree; declared stretch/lightness are measured.
TreeCover shifted_quadtree_cover(const Metric& points, int leaf_capacity = 1);

/// Throws DominationError on the first violating pair (pairs in (u, v) order,
/// then the lowest violating tree).
/// All pairs for n <= 512, otherwise a fixed-seed sample of 1e5 pairs.
void check_domination(const TreeCover& cover, const Metric& m);

/// (gamma, max over pairs of min over trees of tree/metric distance, max tree lightness).
/// Same pair policy as check_domination; throws DominationError first if violated.
CoverStats cover_stats(const TreeCover& cover, const Metric& m);

}  // namespace hopspan
