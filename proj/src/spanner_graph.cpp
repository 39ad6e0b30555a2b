#include "hopspan/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hopspan {

void canonicalize_edges(std::vector<WeightedEdge>& edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const WeightedEdge& a, const WeightedEdge& b) {
                            return a.u == b.u && a.v == b.v;
                          }),
              edges.end());
}

SpannerGraph::SpannerGraph(int real_count, int total_count, std::vector<WeightedEdge> edges,
                           int declared_k, double declared_t)
    : real_(real_count), total_(total_count), edges_(std::move(edges)), k_(declared_k),
      t_(declared_t) {
  if (real_ < 0 || total_ < real_) throw InputError("spanner needs 0 <= real <= total");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const std::string where = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.u < 0 || e.v >= total_) throw InputError(where + ": vertex index out of range");
    if (e.u == e.v) throw InputError(where + ": self-loop");
    if (!std::isfinite(e.w) || e.w < 0) throw InputError(where + ": bad weight");
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v) {
      throw InputError(where + ": duplicate edge");
    }
  }
}

double SpannerGraph::total_weight() const {
  double s = 0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

double SpannerGraph::real_edge_weight() const {
  double s = 0;
  for (const auto& e : edges_) {
    if (e.v < real_) s += e.w;
  }
  return s;
}

void SpannerGraph::check_against(const Metric& m) const {
  if (m.size() != real_) {
    throw InputError("spanner has " + std::to_string(real_) + " real vertices but metric has " +
                     std::to_string(m.size()) + " points");
  }
  for (const auto& e : edges_) {
    if (e.v >= real_) continue;
    const double d = m.distance(e.u, e.v);
    if (e.w < d && !approx_equal(e.w, d)) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") undershoots the metric distance");
    }
  }
}

}  // namespace hopspan
