#include "hopspan/tree_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hopspan/sampling.hpp"

namespace hopspan {

namespace {

std::string domination_message(int tree, Vertex u, Vertex v, double dt, double dx) {
  return "cover tree " + std::to_string(tree) + " is not dominating: pair (" + std::to_string(u) +
         "," + std::to_string(v) + ") has tree distance " + std::to_string(dt) +
         " < metric distance " + std::to_string(dx);
}

bool undershoots(double tree_d, double metric_d) {
  return tree_d < metric_d && !approx_equal(tree_d, metric_d);
}

double pair_stretch(double tree_d, double metric_d) {
  if (metric_d > 0) return tree_d / metric_d;
  return tree_d > 0 ? kUnreachable : 1.0;
}

class QuadtreeBuilder {
 public:
  QuadtreeBuilder(const PointSet& pts, std::span<const double> normalized, double scale, double shift,
                  int leaf_capacity, int depth_cap)
      : pts_(pts), norm_(normalized), dim_(pts.dimension()), scale_(scale), shift_(shift),
        capacity_(leaf_capacity), depth_cap_(depth_cap), next_aux_(pts.size()) {}

  WeightedTree build() {
    std::vector<Vertex> all(pts_.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<double> origin(dim_, 0.0);
    const Vertex root = make_cell(all, origin, 2.0, 0, -1, 0.0);
    return WeightedTree(next_aux_, std::move(edges_), root);
  }

 private:
  double coord(Vertex p, int i) const { return norm_[static_cast<std::size_t>(p) * dim_ + i] + shift_; }
  double half_diameter(double side) const { return side * scale_ * std::sqrt(static_cast<double>(dim_)) / 2.0; }

  Vertex make_cell(const std::vector<Vertex>& members, const std::vector<double>& origin, double side,
                   int depth, Vertex parent, double parent_w) {
    const bool leaf = static_cast<int>(members.size()) <= capacity_ || depth >= depth_cap_;
    if (leaf && members.size() == 1) {
      link(parent, members[0], parent_w);
      return members[0];
    }
    const Vertex node = next_aux_++;
    link(parent, node, parent_w);
    const double child_w = half_diameter(side);
    if (leaf) {
      for (Vertex p : members) link(node, p, child_w);
      return node;
    }
    const double half = side / 2.0;
    const std::size_t fan = std::size_t{1} << dim_;
    std::vector<std::vector<Vertex>> buckets(fan);
    for (Vertex p : members) {
      std::size_t idx = 0;
      for (int i = 0; i < dim_; ++i) {
        if (coord(p, i) >= origin[i] + half) idx |= std::size_t{1} << i;
      }
      buckets[idx].push_back(p);
    }
    std::vector<double> child_origin(dim_);
    for (std::size_t idx = 0; idx < fan; ++idx) {
      if (buckets[idx].empty()) continue;
      for (int i = 0; i < dim_; ++i) child_origin[i] = origin[i] + ((idx >> i) & 1 ? half : 0.0);
      make_cell(buckets[idx], child_origin, half, depth + 1, node, child_w);
    }
    return node;
  }

  void link(Vertex parent, Vertex child, double w) {
    if (parent >= 0) edges_.push_back({parent, child, w});
  }

  const PointSet& pts_;
  std::span<const double> norm_;
  int dim_;
  double scale_;
  double shift_;
  int capacity_;
  int depth_cap_;
  Vertex next_aux_;
  std::vector<WeightedEdge> edges_;
};

}  // namespace

void TreeCover::validate(int points) const {
  if (trees.empty()) throw InputError("empty cover");
  if (point_map.size() != trees.size()) throw InputError("cover needs one point map per tree");
  for (std::size_t j = 0; j < trees.size(); ++j) {
    const auto& map = point_map[j];
    if (static_cast<int>(map.size()) != points) {
      throw InputError("cover tree " + std::to_string(j) + " maps " + std::to_string(map.size()) +
                       " points, metric has " + std::to_string(points));
    }
    std::vector<char> used(trees[j].size(), 0);
    for (std::size_t p = 0; p < map.size(); ++p) {
      const Vertex v = map[p];
      if (v < 0 || v >= trees[j].size()) {
        throw InputError("cover tree " + std::to_string(j) + ": point " + std::to_string(p) +
                         " maps to unknown vertex " + std::to_string(v));
      }
      if (used[v]) {
        throw InputError("cover tree " + std::to_string(j) + ": vertex " + std::to_string(v) +
                         " hosts two points");
      }
      used[v] = 1;
    }
  }
}

DominationError::DominationError(int tree_, Vertex u_, Vertex v_, double dt, double dx)
    : InputError(domination_message(tree_, u_, v_, dt, dx)), tree(tree_), u(u_), v(v_),
      tree_distance(dt), metric_distance(dx) {}

TreeCover identity_cover(const WeightedTree& tree) {
  TreeCover c;
  c.trees.push_back(tree);
  std::vector<Vertex> map(tree.size());
  std::iota(map.begin(), map.end(), 0);
  c.point_map.push_back(std::move(map));
  c.declared_stretch = 1.0;
  c.declared_lightness = 1.0;
  return c;
}

TreeCover shifted_quadtree_cover(const Metric& m, int leaf_capacity) {
  const PointSet* pts = m.as_points();
  if (!pts) throw InputError("quadtree cover needs a point set");
  if (leaf_capacity < 1) throw InputError("leaf capacity must be at least 1");
  const int n = pts->size();
  const int d = pts->dimension();

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto lex_less = [&](Vertex a, Vertex b) {
    const auto pa = pts->point(a);
    const auto pb = pts->point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(order.begin(), order.end(), lex_less);
  for (int i = 1; i < n; ++i) {
    if (!lex_less(order[i - 1], order[i])) {
      throw InputError("duplicate points " + std::to_string(std::min(order[i - 1], order[i])) +
                       " and " + std::to_string(std::max(order[i - 1], order[i])));
    }
  }

  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (Vertex p = 0; p < n; ++p) {
    for (int i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], pts->point(p)[i]);
      hi[i] = std::max(hi[i], pts->point(p)[i]);
    }
  }
  double extent = 0;
  for (int i = 0; i < d; ++i) extent = std::max(extent, hi[i] - lo[i]);
  // Slightly inflated so every normalized coordinate lands in [0, 1).
  const double scale = extent > 0 ? extent * (1.0 + 1e-9) : 1.0;
  std::vector<double> normalized(static_cast<std::size_t>(n) * d);
  for (Vertex p = 0; p < n; ++p) {
    for (int i = 0; i < d; ++i) normalized[static_cast<std::size_t>(p) * d + i] = (pts->point(p)[i] - lo[i]) / scale;
  }

  const int depth_cap = n > 1 ? static_cast<int>(std::ceil(2.0 * std::log2(static_cast<double>(n)))) : 0;
  TreeCover cover;
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  for (int j = 0; j <= d; ++j) {
    const double shift = static_cast<double>(j) / (d + 2);
    QuadtreeBuilder builder(*pts, normalized, scale, shift, leaf_capacity, depth_cap);
    cover.trees.push_back(builder.build());
    cover.point_map.push_back(identity);
  }
  const CoverStats stats = cover_stats(cover, m);
  cover.declared_stretch = stats.measured_stretch;
  cover.declared_lightness = stats.measured_lightness;
  return cover;
}

void check_domination(const TreeCover& cover, const Metric& m) {
  cover.validate(m.size());
  std::vector<TreeDistanceIndex> index;
  index.reserve(cover.trees.size());
  for (const auto& t : cover.trees) index.emplace_back(t);
  const auto pairs = measurement_pairs(m.size());

  const long long none = static_cast<long long>(pairs.size());
  long long first_bad = none;
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (long long i = 0; i < none; ++i) {
    const auto [u, v] = pairs[i];
    const double dx = m.distance(u, v);
    for (std::size_t j = 0; j < index.size(); ++j) {
      if (undershoots(index[j].distance(cover.point_map[j][u], cover.point_map[j][v]), dx)) {
        first_bad = std::min(first_bad, i);
        break;
      }
    }
  }
  if (first_bad == none) return;
  const auto [u, v] = pairs[first_bad];
  const double dx = m.distance(u, v);
  for (std::size_t j = 0; j < index.size(); ++j) {
    const double dt = index[j].distance(cover.point_map[j][u], cover.point_map[j][v]);
    if (undershoots(dt, dx)) throw DominationError(static_cast<int>(j), u, v, dt, dx);
  }
}

CoverStats cover_stats(const TreeCover& cover, const Metric& m) {
  check_domination(cover, m);
  std::vector<TreeDistanceIndex> index;
  index.reserve(cover.trees.size());
  for (const auto& t : cover.trees) index.emplace_back(t);
  const auto pairs = measurement_pairs(m.size());

  double worst = 1.0;
  const long long count = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (long long i = 0; i < count; ++i) {
    const auto [u, v] = pairs[i];
    const double dx = m.distance(u, v);
    double best = kUnreachable;
    for (std::size_t j = 0; j < index.size(); ++j) {
      best = std::min(best, pair_stretch(index[j].distance(cover.point_map[j][u], cover.point_map[j][v]), dx));
    }
    worst = std::max(worst, best);
  }

  const double mst = mst_weight(m);
  double light = 0.0;
  for (const auto& t : cover.trees) light = std::max(light, normalized_ratio(t.total_weight(), mst));
  return CoverStats{cover.size(), worst, light};
}

}  // namespace hopspan
