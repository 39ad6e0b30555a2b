#include "hopspan/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hop_relax.hpp"
#include "hopspan/sampling.hpp"

namespace hopspan {

namespace {

constexpr double kStretchSlack = 1e-9;

double stretch_of(double spanner_d, double metric_d) {
  if (spanner_d == kUnreachable) return kUnreachable;
  if (metric_d > 0) return spanner_d / metric_d;
  return spanner_d > 0 ? kUnreachable : 1.0;
}

struct SourceResult {
  std::vector<double> profile;  // [h-1], filled up to the budget
  int satisfied_at = 0;         // first round with every target within t; -1 never
  std::size_t pairs = 0;
  std::size_t violations = 0;
  WorstPair worst;
};

struct Sweep {
  std::vector<SourceResult> per_source;
  bool sampled = false;
};

// Runs relaxation rounds from each measured source until both the hop budget is
// covered and every target meets the stretch target (or a fixpoint is hit).
Sweep sweep_sources(const SpannerGraph& g, const Metric& m, int k, double t) {
  const int n = g.real_count();
  if (m.size() != n) {
    throw InputError("spanner has " + std::to_string(n) + " real vertices but metric has " +
                     std::to_string(m.size()) + " points");
  }
  const std::vector<Vertex> sources = measurement_sources(n);
  Sweep out;
  out.sampled = n > kExactPairLimit;
  out.per_source.resize(sources.size());
  const detail::HopRelaxer relaxer(g);
  const bool exact = !out.sampled;
  const long long count = static_cast<long long>(sources.size());

#pragma omp parallel
  {
    detail::HopRelaxer::Workspace ws(g.total_count());
    std::vector<double> metric_d(n);
#pragma omp for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
      const Vertex s = sources[i];
      SourceResult& res = out.per_source[i];
      const Vertex first_target = exact ? s + 1 : 0;
      for (Vertex v = first_target; v < n; ++v) metric_d[v] = m.distance(s, v);
      for (Vertex v = first_target; v < n; ++v) res.pairs += v != s;
      if (res.pairs == 0) {
        res.profile.assign(k, 1.0);
        continue;
      }

      auto max_stretch = [&] {
        double worst = 1.0;
        for (Vertex v = first_target; v < n; ++v) {
          if (v != s) worst = std::max(worst, stretch_of(ws.dist[v], metric_d[v]));
        }
        return worst;
      };
      auto record_budget = [&] {
        for (Vertex v = first_target; v < n; ++v) {
          if (v == s) continue;
          const double r = stretch_of(ws.dist[v], metric_d[v]);
          if (r > t + kStretchSlack) ++res.violations;
          if (res.worst.u < 0 || r > res.worst.stretch) {
            res.worst = {std::min(s, v), std::max(s, v), r};
          }
        }
      };

      relaxer.start(ws, s);
      res.satisfied_at = -1;
      int h = 0;
      bool budget_recorded = false;
      while (true) {
        const bool moved = relaxer.step(ws);
        ++h;
        const double st = max_stretch();
        if (h <= k) res.profile.push_back(st);
        if (h == k) {
          record_budget();
          budget_recorded = true;
        }
        if (res.satisfied_at < 0 && st <= t + kStretchSlack) res.satisfied_at = h;
        if (!moved || (h >= k && res.satisfied_at >= 0)) break;
      }
      if (!budget_recorded) record_budget();  // fixpoint reached before round k
      while (static_cast<int>(res.profile.size()) < k) res.profile.push_back(res.profile.back());
    }
  }
  return out;
}

bool worse(const WorstPair& a, const WorstPair& b) {
  if (b.u < 0) return a.u >= 0;
  if (a.u < 0) return false;
  if (a.stretch != b.stretch) return a.stretch > b.stretch;
  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
}

}  // namespace

VerifyReport verify(const SpannerGraph& g, const Metric& m, int k, double t, std::optional<double> known_mst) {
  if (k < 1) throw std::invalid_argument("hop bound k must be >= 1");
  const Sweep sweep = sweep_sources(g, m, k, t);

  VerifyReport rep;
  rep.k = k;
  rep.t = t;
  rep.sampled = sweep.sampled;
  rep.per_hop_profile.assign(k, 1.0);
  int hop = 0;
  for (const auto& res : sweep.per_source) {
    rep.pairs_checked += res.pairs;
    rep.violations += res.violations;
    for (int h = 0; h < k; ++h) rep.per_hop_profile[h] = std::max(rep.per_hop_profile[h], res.profile[h]);
    if (worse(res.worst, rep.worst_pair)) rep.worst_pair = res.worst;
    if (hop >= 0) hop = res.satisfied_at < 0 ? -1 : std::max(hop, res.satisfied_at);
  }

  const int n = g.real_count();
  SpannerStats& s = rep.stats;
  s.weight = g.total_weight();
  s.mst_weight = known_mst ? *known_mst : mst_weight(m);
  s.lightness = normalized_ratio(s.weight, s.mst_weight);
  s.max_stretch = rep.per_hop_profile[k - 1];
  s.hop_diameter_at_t = hop;
  s.edge_count = g.edge_count();
  s.sparsity = n > 1 ? static_cast<double>(s.edge_count) / (n - 1) : 0.0;
  rep.real_edge_weight = g.real_edge_weight();
  return rep;
}

std::optional<int> hop_diameter(const SpannerGraph& g, const Metric& m, double t) {
  const Sweep sweep = sweep_sources(g, m, 1, t);
  int hop = 0;
  for (const auto& res : sweep.per_source) {
    if (res.satisfied_at < 0) return std::nullopt;
    hop = std::max(hop, res.satisfied_at);
  }
  return hop;
}

}  // namespace hopspan
