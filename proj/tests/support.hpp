#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// algorithms under test beyond plain data accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hopspan/metric.hpp"

namespace testsupport {

using hopspan::Vertex;
using hopspan::WeightedEdge;
using hopspan::WeightedTree;

inline bool close(double a, double b, double rel = 1e-9) {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::vector<std::vector<std::pair<Vertex, double>>> adjacency(int n, const std::vector<WeightedEdge>& edges) {
  std::vector<std::vector<std::pair<Vertex, double>>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  return adj;
}

// All-pairs tree distances by one stack walk per source.
inline std::vector<std::vector<double>> tree_apsp(const WeightedTree& t) {
  const int n = t.size();
  std::vector<WeightedEdge> edges(t.edges().begin(), t.edges().end());
  const auto adj = adjacency(n, edges);
  std::vector<std::vector<double>> d(n, std::vector<double>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> stack{s};
    d[s][s] = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (auto [v, w] : adj[u]) {
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + w;
          stack.push_back(v);
        }
      }
    }
  }
  return d;
}

// Floyd-Warshall restricted to paths of at most k edges (k rounds of full min-plus).
inline std::vector<std::vector<double>> hop_limited_apsp(int n, const std::vector<WeightedEdge>& edges, int k) {
  const double inf = hopspan::kUnreachable;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int round = 0; round < k; ++round) {
    auto next = d;
    for (int s = 0; s < n; ++s) {
      for (const auto& e : edges) {
        if (d[s][e.u] + e.w < next[s][e.v]) next[s][e.v] = d[s][e.u] + e.w;
        if (d[s][e.v] + e.w < next[s][e.u]) next[s][e.u] = d[s][e.v] + e.w;
      }
    }
    d = std::move(next);
  }
  return d;
}

// Uniform attachment tree with integer-valued weights in [1, 100].
inline WeightedTree random_tree(std::mt19937_64& rng, int n, bool integer_weights = false) {
  std::vector<WeightedEdge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex p = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v));
    const double w = integer_weights ? static_cast<double>(1 + rng() % 100)
                                     : 1.0 + 99.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    edges.push_back({p, v, w});
  }
  // Shuffle labels so vertex order does not follow attachment order.
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return WeightedTree(n, std::move(edges));
}

// Connected components of the tree minus `removed`, by BFS, sorted like Separator::components.
inline std::vector<std::vector<Vertex>> components_bfs(const WeightedTree& t, const std::vector<char>& removed) {
  const int n = t.size();
  std::vector<WeightedEdge> edges(t.edges().begin(), t.edges().end());
  const auto adj = adjacency(n, edges);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto [v, w] : adj[comp[i]]) {
        if (!removed[v] && !seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline WeightedTree unit_path(int n) {
  std::vector<double> lengths(n - 1, 1.0);
  return WeightedTree::path(lengths);
}

}  // namespace testsupport
