#include "hopspan/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <optional>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "hopspan/hop_spanner.hpp"
#include "hopspan/io.hpp"
#include "hopspan/tree_cover.hpp"
#include "hopspan/verify.hpp"

namespace hopspan {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 53-bit uniform in [0, 1); avoids the implementation-defined distributions.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Instance {
  Metric metric;
  WeightedTree tree;             // tree families
  std::optional<TreeCover> cover;  // point families
  double mst = 0;
};

Instance make_instance(const Family& f, int n, std::uint64_t seed) {
  const std::uint64_t s = mix(seed ^ mix(static_cast<std::uint64_t>(n)));
  switch (f.kind) {
    case Family::Kind::UniformLine: {
      Instance in{uniform_line(n), uniform_line_path(n), std::nullopt, 0};
      in.mst = mst_weight(in.metric);
      return in;
    }
    case Family::Kind::RandomTree: {
      WeightedTree t = random_tree(n, s);
      Instance in{Metric::tree(t), t, std::nullopt, t.total_weight()};
      return in;
    }
    case Family::Kind::RandomPoints: {
      Metric m = Metric::points(random_points(n, f.dimension, s));
      TreeCover cover = shifted_quadtree_cover(m);
      Instance in{m, cover.trees.front(), std::move(cover), 0};
      in.mst = mst_weight(in.metric);
      return in;
    }
  }
  throw std::logic_error("unknown family");
}

std::string field_at(std::string_view line, std::size_t& pos, const std::string& where) {
  if (pos > line.size()) throw FormatError(where + ": too few fields");
  const std::size_t comma = line.find(',', pos);
  std::string out(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
  pos = comma == std::string_view::npos ? line.size() + 1 : comma + 1;
  return out;
}

template <typename T>
T parse_num(const std::string& s, const std::string& where) {
  T x{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError(where + ": bad number '" + s + "'");
  return x;
}

}  // namespace

std::string Family::name() const {
  switch (kind) {
    case Kind::UniformLine: return "uniform-line";
    case Kind::RandomTree: return "random-tree";
    case Kind::RandomPoints: return "random-points-" + std::to_string(dimension) + "D";
  }
  return {};
}

Family parse_family(std::string_view name) {
  if (name == "uniform-line") return {Family::Kind::UniformLine, 1};
  if (name == "random-tree") return {Family::Kind::RandomTree, 1};
  constexpr std::string_view prefix = "random-points-";
  if (name.starts_with(prefix) && name.size() > prefix.size() + 1 &&
      (name.back() == 'D' || name.back() == 'd')) {
    const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    int d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && d >= 1 && d <= 16) {
      return {Family::Kind::RandomPoints, d};
    }
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

WeightedTree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) {
    const auto parent = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v));
    edges.push_back({parent, v, 1.0 + 99.0 * unit(rng)});
  }
  return WeightedTree(n, std::move(edges));
}

PointSet random_points(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("random_points needs n, d >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(static_cast<std::size_t>(n) * d);
  for (double& c : coords) c = unit(rng);
  return PointSet(d, std::move(coords));
}

WeightedTree uniform_line_path(int n) {
  if (n < 1) throw std::invalid_argument("uniform_line_path needs n >= 1");
  std::vector<double> lengths(n - 1, 1.0 / n);
  return WeightedTree::path(lengths);
}

std::vector<BenchRow> bench_sweep(const Family& family, std::span<const int> ns, std::span<const int> ks,
                                  const SweepOptions& options) {
  if (ns.empty() || ks.empty()) throw std::invalid_argument("bench needs at least one n and one k");
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
  }
  std::vector<int> sorted_n(ns.begin(), ns.end());
  std::sort(sorted_n.begin(), sorted_n.end());
  sorted_n.erase(std::unique(sorted_n.begin(), sorted_n.end()), sorted_n.end());
  std::vector<int> sorted_k(ks.begin(), ks.end());
  std::sort(sorted_k.begin(), sorted_k.end());
  sorted_k.erase(std::unique(sorted_k.begin(), sorted_k.end()), sorted_k.end());

  std::vector<BenchRow> rows;
  for (int n : sorted_n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const Instance in = make_instance(family, n, options.seed);
    for (int k : sorted_k) {
      const auto start = std::chrono::steady_clock::now();
      const SpannerGraph g = in.cover ? cover_to_spanner(*in.cover, k, in.metric, CoverTrust::Trust)
                                      : build_tree_spanner(in.tree, k);
      const auto stop = std::chrono::steady_clock::now();
      const VerifyReport rep = verify(g, in.metric, k, g.declared_t(), in.mst);

      BenchRow row;
      row.family = family.name();
      row.n = n;
      row.k = k;
      row.edge_count = rep.stats.edge_count;
      row.weight = rep.stats.weight;
      row.mst_weight = rep.stats.mst_weight;
      row.lightness = rep.stats.lightness;
      row.max_stretch = rep.stats.max_stretch;
      row.hop_diameter = rep.stats.hop_diameter_at_t;
      row.build_millis =
          options.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double fit_slope(std::span<const BenchRow> rows) {
  std::set<int> distinct;
  for (const auto& r : rows) distinct.insert(r.n);
  if (distinct.size() < 3) throw std::invalid_argument("fit_slope needs at least 3 distinct n values");
  double sx = 0, sy = 0;
  for (const auto& r : rows) {
    sx += std::log(static_cast<double>(r.n));
    sy += std::log(r.lightness);
  }
  const double m = static_cast<double>(rows.size());
  const double mx = sx / m;
  const double my = sy / m;
  double sxy = 0, sxx = 0;
  for (const auto& r : rows) {
    const double dx = std::log(static_cast<double>(r.n)) - mx;
    sxy += dx * (std::log(r.lightness) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::string rows_to_csv(std::span<const BenchRow> rows) {
  std::string out(kBenchCsvHeader);
  out += "\n";
  for (const auto& r : rows) {
    out += r.family + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.edge_count) +
           "," + format_double(r.weight) + "," + format_double(r.mst_weight) + "," + format_double(r.lightness) +
           "," + format_double(r.max_stretch) + "," + std::to_string(r.hop_diameter) + "," +
           format_double(r.build_millis) + "\n";
  }
  return out;
}

std::vector<BenchRow> parse_rows_csv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (header) {
      if (line != kBenchCsvHeader) throw FormatError("line 1: unexpected CSV header");
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    std::size_t p = 0;
    BenchRow r;
    r.family = field_at(line, p, where);
    r.n = parse_num<int>(field_at(line, p, where), where);
    r.k = parse_num<int>(field_at(line, p, where), where);
    r.edge_count = parse_num<std::size_t>(field_at(line, p, where), where);
    r.weight = parse_num<double>(field_at(line, p, where), where);
    r.mst_weight = parse_num<double>(field_at(line, p, where), where);
    r.lightness = parse_num<double>(field_at(line, p, where), where);
    r.max_stretch = parse_num<double>(field_at(line, p, where), where);
    r.hop_diameter = parse_num<int>(field_at(line, p, where), where);
    r.build_millis = parse_num<double>(field_at(line, p, where), where);
    if (p <= line.size()) throw FormatError(where + ": too many fields");
    rows.push_back(std::move(r));
  }
  if (header) throw FormatError("line 1: missing CSV header");
  return rows;
}

}  // namespace hopspan
