#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hopspan {

/// Dense 0-based vertex index. Auxiliary (Steiner) vertices sit above the real points.
using Vertex = std::int32_t;

/// Explicit "no path" sentinel for distance tables.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Relative tolerance used for every floating-point equality check.
inline constexpr double kRelTol = 1e-9;

/// Raised on malformed or inconsistent input (files, trees, metrics, covers).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;

  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

struct Neighbor {
  Vertex to;
  double w;
};

bool approx_equal(double a, double b, double rel = kRelTol);

/// Rooted, edge-weighted tree on vertices [0, n). Validated on construction:
/// exactly n-1 edges, in-range endpoints, finite nonnegative weights, connected.
class WeightedTree {
 public:
  WeightedTree(int vertex_count, std::vector<WeightedEdge> edges, Vertex root = 0);

  /// Path 0-1-...-(n-1) with the given consecutive edge lengths.
  static WeightedTree path(std::span<const double> lengths);

  int size() const { return n_; }
  Vertex root() const { return root_; }
  std::span<const WeightedEdge> edges() const { return edges_; }
  /// Neighbors of v in increasing index order.
  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  double total_weight() const;

 private:
  int n_;
  Vertex root_;
  std::vector<WeightedEdge> edges_;
  std::vector<int> offsets_;
  std::vector<Neighbor> adj_;
};

/// Root distances plus binary-lifting LCA; answers tree-metric queries in O(log n).
class TreeDistanceIndex {
 public:
  explicit TreeDistanceIndex(const WeightedTree& tree);

  double distance(Vertex u, Vertex v) const;
  Vertex lca(Vertex u, Vertex v) const;
  double root_distance(Vertex v) const { return root_dist_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  /// -1 for the root.
  Vertex parent(Vertex v) const { return depth_[v] == 0 ? -1 : up_[0][v]; }

 private:
  int log_ = 0;
  std::vector<double> root_dist_;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> up_;     // up_[j][v] = 2^j-th ancestor (root maps to itself)
  std::vector<std::vector<double>> jump_;   // path length covered by up_[j][v]
};

/// Points in R^d, stored row-major.
class PointSet {
 public:
  PointSet(int dimension, std::vector<double> coords);

  int dimension() const { return dim_; }
  int size() const { return static_cast<int>(coords_.size()) / dim_; }
  std::span<const double> point(Vertex i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> coords() const { return coords_; }
  double distance(Vertex u, Vertex v) const;

 private:
  int dim_;
  std::vector<double> coords_;
};

/// Explicit symmetric distance table with zero diagonal.
class DistanceMatrix {
 public:
  /// Validates shape, zero diagonal, nonnegativity and symmetry (relative 1e-9).
  /// The O(n^3) triangle check runs only when requested.
  DistanceMatrix(int n, std::vector<double> entries, bool check_triangle = false);

  int size() const { return n_; }
  double at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_;
  std::vector<double> d_;
};

/// A finite metric space: a tree metric, a Euclidean point set, or an explicit matrix.
/// Immutable; copies share the underlying data.
class Metric {
 public:
  enum class Kind { Tree, Points, Matrix };

  static Metric tree(WeightedTree t);
  static Metric points(PointSet p);
  static Metric matrix(DistanceMatrix m);

  Kind kind() const;
  int size() const;
  /// Throws std::out_of_range for bad indices.
  double distance(Vertex u, Vertex v) const;

  /// Variant accessors; null when the metric is of another kind.
  const WeightedTree* as_tree() const;
  const TreeDistanceIndex* tree_index() const;
  const PointSet* as_points() const;
  const DistanceMatrix* as_matrix() const;

 private:
  struct TreeData {
    WeightedTree tree;
    TreeDistanceIndex index;
  };
  using Data = std::variant<std::shared_ptr<const TreeData>, std::shared_ptr<const PointSet>,
                            std::shared_ptr<const DistanceMatrix>>;
  explicit Metric(Data d) : data_(std::move(d)) {}
  double unchecked_distance(Vertex u, Vertex v) const;

  Data data_;
};

/// n points at coordinates i/n on the unit interval.
Metric uniform_line(int n);

/// Dense O(n^2) Prim, serial. Ties go to the smallest index.
WeightedTree minimum_spanning_tree(const Metric& m);
/// Same algorithm with the key update/argmin loops split across OpenMP threads.
double mst_weight(const Metric& m);
double mst_weight_serial(const Metric& m);

/// Sorts (u < v), removes self-loop-free duplicates keeping the lightest copy.
void canonicalize_edges(std::vector<WeightedEdge>& edges);

/// Weighted edge list over real vertices [0, real_count) plus auxiliary
/// vertices [real_count, total_count).
class SpannerGraph {
 public:
  /// Edges are stored with u < v, sorted. Rejects self-loops, duplicates,
  /// out-of-range endpoints and non-finite or negative weights.
  SpannerGraph(int real_count, int total_count, std::vector<WeightedEdge> edges, int declared_k,
               double declared_t);

  int real_count() const { return real_; }
  int total_count() const { return total_; }
  std::span<const WeightedEdge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  int declared_k() const { return k_; }
  double declared_t() const { return t_; }
  double total_weight() const;
  /// Weight of edges with both endpoints real.
  double real_edge_weight() const;

  /// Throws InputError if a real-real edge is shorter than the metric distance.
  void check_against(const Metric& m) const;

  friend bool operator==(const SpannerGraph&, const SpannerGraph&) = default;

 private:
  int real_;
  int total_;
  std::vector<WeightedEdge> edges_;
  int k_;
  double t_;
};

struct SpannerStats {
  double weight = 0;
  double mst_weight = 0;
  double lightness = 0;
  double max_stretch = 0;
  int hop_diameter_at_t = -1;  // -1: no hop count achieves the target stretch
  std::size_t edge_count = 0;
  double sparsity = 0;
};

/// weight / baseline with 0/0 read as 1.
double normalized_ratio(double weight, double baseline);

}  // namespace hopspan
