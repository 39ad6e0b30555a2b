#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hopspan/metric.hpp"

namespace hopspan::detail {

// Round-by-round single-source relaxation where round h yields exact <=h-hop
// distances. Only vertices improved in the previous round are expanded, using
// their previous-round values.
class HopRelaxer {
 public:
  struct Workspace {
    explicit Workspace(int n) : dist(n, kUnreachable), mark(n, 0) {}
    std::vector<double> dist;
    std::vector<std::pair<Vertex, double>> frontier;
    std::vector<Vertex> changed;
    std::vector<char> mark;
  };

  explicit HopRelaxer(const SpannerGraph& g) : offsets_(g.total_count() + 1, 0) {
    for (const auto& e : g.edges()) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    adj_.resize(offsets_.back());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : g.edges()) {
      adj_[fill[e.u]++] = {e.v, e.w};
      adj_[fill[e.v]++] = {e.u, e.w};
    }
  }

  void start(Workspace& ws, Vertex s) const {
    std::fill(ws.dist.begin(), ws.dist.end(), kUnreachable);
    ws.dist[s] = 0.0;
    ws.frontier.assign(1, {s, 0.0});
  }

  // One more hop. Returns false once nothing changed (fixpoint reached).
  bool step(Workspace& ws) const {
    ws.changed.clear();
    for (const auto& [u, du] : ws.frontier) {
      for (int i = offsets_[u]; i < offsets_[u + 1]; ++i) {
        const auto& nb = adj_[i];
        const double cand = du + nb.w;
        if (cand < ws.dist[nb.to]) {
          ws.dist[nb.to] = cand;
          if (!ws.mark[nb.to]) {
            ws.mark[nb.to] = 1;
            ws.changed.push_back(nb.to);
          }
        }
      }
    }
    ws.frontier.clear();
    for (Vertex v : ws.changed) {
      ws.mark[v] = 0;
      ws.frontier.emplace_back(v, ws.dist[v]);
    }
    return !ws.frontier.empty();
  }

 private:
  std::vector<int> offsets_;
  std::vector<Neighbor> adj_;
};

}  // namespace hopspan::detail
