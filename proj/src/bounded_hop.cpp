#include <stdexcept>

#include "hop_relax.hpp"
#include "hopspan/verify.hpp"

namespace hopspan {

HopDistanceTable::HopDistanceTable(std::vector<Vertex> sources, int columns)
    : sources_(std::move(sources)), cols_(columns),
      d_(sources_.size() * static_cast<std::size_t>(columns), kUnreachable) {}

HopDistanceTable bounded_hop_distances(const SpannerGraph& g, int k, std::span<const Vertex> sources) {
  if (k < 1) throw std::invalid_argument("hop bound k must be >= 1");
  const detail::HopRelaxer relaxer(g);
  HopDistanceTable table(std::vector<Vertex>(sources.begin(), sources.end()), g.total_count());
  const long long rows = static_cast<long long>(sources.size());
#pragma omp parallel
  {
    detail::HopRelaxer::Workspace ws(g.total_count());
#pragma omp for schedule(dynamic, 4)
    for (long long r = 0; r < rows; ++r) {
      relaxer.start(ws, sources[r]);
      for (int h = 0; h < k && relaxer.step(ws); ++h) {
      }
      auto out = table.row(r);
      std::copy(ws.dist.begin(), ws.dist.end(), out.begin());
    }
  }
  return table;
}

HopDistanceTable bounded_hop_apsp(const SpannerGraph& g, int k) {
  std::vector<Vertex> all(g.total_count());
  for (Vertex v = 0; v < g.total_count(); ++v) all[v] = v;
  return bounded_hop_distances(g, k, all);
}

HopDistanceTable bounded_hop_apsp_serial(const SpannerGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("hop bound k must be >= 1");
  const int n = g.total_count();
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  HopDistanceTable table(all, n);
  std::vector<double> prev(n);
  for (Vertex s = 0; s < n; ++s) {
    auto cur = table.row(s);
    cur[s] = 0.0;
    for (int h = 0; h < k; ++h) {
      std::copy(cur.begin(), cur.end(), prev.begin());
      for (const auto& e : g.edges()) {
        if (prev[e.u] + e.w < cur[e.v]) cur[e.v] = prev[e.u] + e.w;
        if (prev[e.v] + e.w < cur[e.u]) cur[e.u] = prev[e.v] + e.w;
      }
    }
  }
  return table;
}

}  // namespace hopspan
