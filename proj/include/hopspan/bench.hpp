#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopspan/metric.hpp"

namespace hopspan {

/// One measured (family, n, k) instance.
struct BenchRow {
  std::string family;
  int n = 0;
  int k = 0;
  std::size_t edge_count = 0;
  double weight = 0;
  double mst_weight = 0;
  double lightness = 0;
  double max_stretch = 0;
  int hop_diameter = 0;
  double build_millis = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

/// uniform-line | random-tree | random-points-<d>D
struct Family {
  enum class Kind { UniformLine, RandomTree, RandomPoints };
  Kind kind = Kind::UniformLine;
  int dimension = 1;
  std::string name() const;
};

/// Throws std::invalid_argument on an unknown family name.
Family parse_family(std::string_view name);

/// Uniform random attachment: vertex i hangs off a uniformly chosen earlier vertex,
/// edge weights uniform in [1, 100]. Deterministic for a given seed.
WeightedTree random_tree(int n, std::uint64_t seed);
/// n points uniform in [0,1)^d.
PointSet random_points(int n, int d, std::uint64_t seed);
/// Path 0-1-...-(n-1) with edges 1/n; its tree metric is uniform_line(n).
WeightedTree uniform_line_path(int n);

struct SweepOptions {
  std::uint64_t seed = 1;
  /// Wall-clock build time is only recorded on request; otherwise build_millis is 0
  /// so that equal seeds give byte-identical output.
  bool timing = false;
};

/// One row per (n, k), sorted by (family, n, k). The instance for a given n is the
/// same for every k. Stretch is measured against the family's metric at hop budget k.
std::vector<BenchRow> bench_sweep(const Family& family, std::span<const int> ns, std::span<const int> ks,
                                  const SweepOptions& options = {});

/// Least-squares slope of ln(lightness) against ln(n). Needs >= 3 distinct n.
double fit_slope(std::span<const BenchRow> rows);

inline constexpr std::string_view kBenchCsvHeader =
    "family,n,k,edge_count,weight,mst_weight,lightness,max_stretch,hop_diameter,build_millis";

std::string rows_to_csv(std::span<const BenchRow> rows);
/// Throws FormatError on a wrong header or malformed row.
std::vector<BenchRow> parse_rows_csv(std::string_view text);

}  // namespace hopspan
