#include "hopspan/sampling.hpp"

#include <algorithm>
#include <random>

namespace hopspan {

std::vector<std::pair<Vertex, Vertex>> measurement_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (n < 2) return pairs;
  if (n <= kExactPairLimit) {
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    return pairs;
  }
  // Modulo keeps the stream identical across standard libraries.
  std::mt19937_64 rng(kSamplingSeed);
  pairs.reserve(kSampledPairs);
  while (pairs.size() < kSampledPairs) {
    auto u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    auto v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    pairs.emplace_back(u, v);
  }
  return pairs;
}

std::vector<Vertex> measurement_sources(int n) {
  std::vector<Vertex> sources;
  if (n <= kExactPairLimit) {
    sources.resize(n);
    for (Vertex v = 0; v < n; ++v) sources[v] = v;
    return sources;
  }
  const std::size_t want = (kSampledPairs + static_cast<std::size_t>(n) - 2) / (n - 1);
  std::vector<char> taken(n, 0);
  std::mt19937_64 rng(kSamplingSeed);
  while (sources.size() < want) {
    auto s = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    if (taken[s]) continue;
    taken[s] = 1;
    sources.push_back(s);
  }
  std::sort(sources.begin(), sources.end());
  return sources;
}

}  // namespace hopspan
