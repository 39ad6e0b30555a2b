#include "hopspan/metric.hpp"

#include <omp.h>

#include <algorithm>

namespace hopspan {

namespace {

struct Candidate {
  double key;
  Vertex v;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.key < b.key || (a.key == b.key && a.v < b.v);
}

}  // namespace

WeightedTree minimum_spanning_tree(const Metric& m) {
  const int n = m.size();
  std::vector<double> key(n, kUnreachable);
  std::vector<Vertex> from(n, -1);
  std::vector<char> done(n, 0);
  std::vector<WeightedEdge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);

  Vertex cur = 0;
  done[0] = 1;
  for (int step = 1; step < n; ++step) {
    Candidate best{kUnreachable, -1};
    for (Vertex v = 0; v < n; ++v) {
      if (done[v]) continue;
      const double d = m.distance(cur, v);
      if (d < key[v]) {
        key[v] = d;
        from[v] = cur;
      }
      if (best.v < 0 || better({key[v], v}, best)) best = {key[v], v};
    }
    done[best.v] = 1;
    edges.push_back({from[best.v], best.v, best.key});
    cur = best.v;
  }
  return WeightedTree(n, std::move(edges));
}

double mst_weight_serial(const Metric& m) { return minimum_spanning_tree(m).total_weight(); }

double mst_weight(const Metric& m) {
  const int n = m.size();
  std::vector<double> key(n, kUnreachable);
  std::vector<char> done(n, 0);
  std::vector<Candidate> local(omp_get_max_threads(), Candidate{kUnreachable, -1});

  // Accumulate in step order so the sum matches the serial reference bit for bit.
  double total = 0;
  Vertex cur = 0;
  done[0] = 1;
  for (int step = 1; step < n; ++step) {
    int used = 1;
#pragma omp parallel
    {
      const int tid = omp_get_thread_num();
#pragma omp single
      used = omp_get_num_threads();
      Candidate best{kUnreachable, -1};
#pragma omp for schedule(static)
      for (Vertex v = 0; v < n; ++v) {
        if (done[v]) continue;
        const double d = m.distance(cur, v);
        if (d < key[v]) key[v] = d;
        if (best.v < 0 || better({key[v], v}, best)) best = {key[v], v};
      }
      local[tid] = best;
    }
    Candidate best{kUnreachable, -1};
    for (int t = 0; t < used; ++t) {
      if (local[t].v >= 0 && (best.v < 0 || better(local[t], best))) best = local[t];
    }
    done[best.v] = 1;
    total += best.key;
    cur = best.v;
  }
  return total;
}

}  // namespace hopspan
