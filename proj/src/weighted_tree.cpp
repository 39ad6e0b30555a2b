#include "hopspan/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hopspan {

bool approx_equal(double a, double b, double rel) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

double normalized_ratio(double weight, double baseline) {
  if (baseline > 0) return weight / baseline;
  return weight > 0 ? kUnreachable : 1.0;
}

WeightedTree::WeightedTree(int vertex_count, std::vector<WeightedEdge> edges, Vertex root)
    : n_(vertex_count), root_(root), edges_(std::move(edges)) {
  if (n_ < 1) throw InputError("tree must have at least one vertex");
  if (root_ < 0 || root_ >= n_) throw InputError("root " + std::to_string(root_) + " out of range");
  if (static_cast<long long>(edges_.size()) != n_ - 1) {
    throw InputError("not spanning: tree on " + std::to_string(n_) + " vertices needs " +
                     std::to_string(n_ - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  std::vector<int> deg(n_, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw InputError("edge " + std::to_string(i) + ": vertex index out of range");
    }
    if (e.u == e.v) throw InputError("edge " + std::to_string(i) + ": self-loop");
    if (!std::isfinite(e.w) || e.w < 0) {
      throw InputError("edge " + std::to_string(i) + ": weight must be finite and nonnegative");
    }
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n_]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adj_[fill[e.u]++] = {e.v, e.w};
    adj_[fill[e.v]++] = {e.u, e.w};
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }

  // n-1 edges + connected => acyclic.
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{root_};
  seen[root_] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& nb : neighbors(v)) {
      if (!seen[nb.to]) {
        seen[nb.to] = 1;
        ++reached;
        stack.push_back(nb.to);
      }
    }
  }
  if (reached != n_) throw InputError("not spanning: tree is disconnected");
}

WeightedTree WeightedTree::path(std::span<const double> lengths) {
  std::vector<WeightedEdge> edges;
  edges.reserve(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), lengths[i]});
  }
  return WeightedTree(static_cast<int>(lengths.size()) + 1, std::move(edges));
}

double WeightedTree::total_weight() const {
  double s = 0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

TreeDistanceIndex::TreeDistanceIndex(const WeightedTree& tree) {
  const int n = tree.size();
  root_dist_.assign(n, 0.0);
  depth_.assign(n, 0);
  while ((1 << log_) < n) ++log_;
  up_.assign(log_ + 1, std::vector<Vertex>(n, tree.root()));
  jump_.assign(log_ + 1, std::vector<double>(n, 0.0));

  std::vector<Vertex> stack{tree.root()};
  std::vector<char> seen(n, 0);
  seen[tree.root()] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& nb : tree.neighbors(v)) {
      if (seen[nb.to]) continue;
      seen[nb.to] = 1;
      up_[0][nb.to] = v;
      jump_[0][nb.to] = nb.w;
      depth_[nb.to] = depth_[v] + 1;
      root_dist_[nb.to] = root_dist_[v] + nb.w;
      stack.push_back(nb.to);
    }
  }
  for (int j = 1; j <= log_; ++j) {
    for (int v = 0; v < n; ++v) {
      const Vertex mid = up_[j - 1][v];
      up_[j][v] = up_[j - 1][mid];
      jump_[j][v] = jump_[j - 1][v] + jump_[j - 1][mid];
    }
  }
}

Vertex TreeDistanceIndex::lca(Vertex u, Vertex v) const {
  if (depth_[u] < depth_[v]) std::swap(u, v);
  int diff = depth_[u] - depth_[v];
  for (int j = 0; diff; ++j, diff >>= 1) {
    if (diff & 1) u = up_[j][u];
  }
  if (u == v) return u;
  for (int j = log_; j >= 0; --j) {
    if (up_[j][u] != up_[j][v]) {
      u = up_[j][u];
      v = up_[j][v];
    }
  }
  return up_[0][u];
}

// Same walk as lca(), but summing jump lengths; avoids the cancellation in
// root_dist(u) + root_dist(v) - 2 root_dist(lca) on deep trees.
double TreeDistanceIndex::distance(Vertex u, Vertex v) const {
  if (u == v) return 0.0;
  if (depth_[u] < depth_[v]) std::swap(u, v);
  double du = 0.0;
  double dv = 0.0;
  int diff = depth_[u] - depth_[v];
  for (int j = 0; diff; ++j, diff >>= 1) {
    if (diff & 1) {
      du += jump_[j][u];
      u = up_[j][u];
    }
  }
  if (u == v) return du;
  for (int j = log_; j >= 0; --j) {
    if (up_[j][u] != up_[j][v]) {
      du += jump_[j][u];
      dv += jump_[j][v];
      u = up_[j][u];
      v = up_[j][v];
    }
  }
  return (du + jump_[0][u]) + (dv + jump_[0][v]);
}

}  // namespace hopspan
