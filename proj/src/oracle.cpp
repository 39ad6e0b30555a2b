#include "hopspan/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hopspan/verify.hpp"

namespace hopspan {

namespace {

using Mask = std::uint32_t;

struct Candidate {
  Vertex u;
  Vertex v;
  double w;
};

// Branch and bound over edges in decreasing weight order, excluding before
// including. Prunes on (a) hop-k infeasibility of included + undecided edges and
// (b) included weight plus the cheapest way to connect the included components
// with undecided edges, which every completion must pay.
class Search {
 public:
  Search(int n, int k, std::vector<Candidate> edges)
      : n_(n), k_(k), edges_(std::move(edges)), state_(edges_.size(), State::Open) {}

  void run() {
    best_weight_ = kUnreachable;
    descend(0, 0.0);
  }

  double best_weight() const { return best_weight_; }
  const std::vector<std::size_t>& best_edges() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class State : unsigned char { Open, In, Out };

  void descend(std::size_t i, double included) {
    ++nodes_;
    if (included >= best_weight_) return;
    if (!hop_feasible()) return;
    if (included + connection_bound() >= best_weight_) return;
    if (i == edges_.size()) {
      best_weight_ = included;
      best_.clear();
      for (std::size_t j = 0; j < edges_.size(); ++j) {
        if (state_[j] == State::In) best_.push_back(j);
      }
      return;
    }
    state_[i] = State::Out;
    descend(i + 1, included);
    state_[i] = State::In;
    descend(i + 1, included + edges_[i].w);
    state_[i] = State::Open;
  }

  bool hop_feasible() const {
    Mask adj[kOracleMaxPoints] = {};
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (state_[j] == State::Out) continue;
      adj[edges_[j].u] |= Mask{1} << edges_[j].v;
      adj[edges_[j].v] |= Mask{1} << edges_[j].u;
    }
    const Mask full = (Mask{1} << n_) - 1;
    for (int s = 0; s < n_; ++s) {
      Mask reach = Mask{1} << s;
      for (int h = 0; h < k_ && reach != full; ++h) {
        Mask next = reach;
        for (int v = 0; v < n_; ++v) {
          if (reach >> v & 1) next |= adj[v];
        }
        if (next == reach) break;
        reach = next;
      }
      if (reach != full) return false;
    }
    return true;
  }

  // Kruskal over open edges on the graph with included components contracted.
  double connection_bound() const {
    int parent[kOracleMaxPoints];
    std::iota(parent, parent + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int groups = n_;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (state_[j] != State::In) continue;
      const int a = find(edges_[j].u);
      const int b = find(edges_[j].v);
      if (a != b) {
        parent[a] = b;
        --groups;
      }
    }
    double extra = 0.0;
    // edges_ is sorted heaviest first, so scan backwards.
    for (std::size_t j = edges_.size(); j-- > 0 && groups > 1;) {
      if (state_[j] != State::Open) continue;
      const int a = find(edges_[j].u);
      const int b = find(edges_[j].v);
      if (a != b) {
        parent[a] = b;
        --groups;
        extra += edges_[j].w;
      }
    }
    return extra;
  }

  int n_;
  int k_;
  std::vector<Candidate> edges_;
  std::vector<State> state_;
  double best_weight_ = kUnreachable;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult optimal_lightness(const Metric& m, int k) {
  const int n = m.size();
  if (n > kOracleMaxPoints) {
    throw std::invalid_argument("oracle is limited to " + std::to_string(kOracleMaxPoints) +
                                " points, got " + std::to_string(n));
  }
  if (k < 1) throw std::invalid_argument("hop bound k must be >= 1");

  std::vector<Candidate> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, m.distance(u, v)});
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Candidate& a, const Candidate& b) { return a.w > b.w; });

  Search search(n, k, edges);
  search.run();

  std::vector<WeightedEdge> chosen;
  for (std::size_t j : search.best_edges()) chosen.push_back({edges[j].u, edges[j].v, edges[j].w});
  const double weight = n > 1 ? search.best_weight() : 0.0;
  SpannerGraph probe(n, n, chosen, k, 1.0);
  const double stretch = verify(probe, m, k, 1.0).stats.max_stretch;

  OracleResult r{1.0, weight, mst_weight(m), SpannerGraph(n, n, std::move(chosen), k, stretch),
                 search.nodes()};
  r.lightness = normalized_ratio(r.weight, r.mst_weight);
  return r;
}

}  // namespace hopspan
