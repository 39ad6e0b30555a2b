// hopspan: build, verify and benchmark light low-hop spanners.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input or failed verification.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopspan/bench.hpp"
#include "hopspan/hop_spanner.hpp"
#include "hopspan/io.hpp"
#include "hopspan/oracle.hpp"
#include "hopspan/tree_cover.hpp"
#include "hopspan/tree_decompose.hpp"
#include "hopspan/verify.hpp"

namespace {

using namespace hopspan;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json stats_json(const SpannerStats& s) {
  Json j;
  j["weight"] = s.weight;
  j["mst_weight"] = s.mst_weight;
  j["lightness"] = number_or_null(s.lightness);
  j["max_stretch"] = number_or_null(s.max_stretch);
  j["hop_diameter_at_t"] = s.hop_diameter_at_t >= 0 ? Json(s.hop_diameter_at_t) : Json(nullptr);
  j["edge_count"] = s.edge_count;
  j["sparsity"] = s.sparsity;
  return j;
}

Json report_json(const VerifyReport& r) {
  Json j;
  j["k"] = r.k;
  j["t"] = number_or_null(r.t);
  j["sampled"] = r.sampled;
  j["pairs_checked"] = r.pairs_checked;
  j["violations"] = r.violations;
  j["stats"] = stats_json(r.stats);
  j["real_edge_weight"] = r.real_edge_weight;
  Json worst;
  if (r.worst_pair.u >= 0) {
    worst["u"] = r.worst_pair.u;
    worst["v"] = r.worst_pair.v;
    worst["stretch"] = number_or_null(r.worst_pair.stretch);
  }
  j["worst_pair"] = r.worst_pair.u >= 0 ? worst : Json(nullptr);
  Json profile = Json::array();
  for (double x : r.per_hop_profile) profile.push_back(number_or_null(x));
  j["per_hop_profile"] = profile;
  return j;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) {
      int x = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
      if (ec != std::errc() || ptr != item.data() + item.size() || x < 1) {
        throw UsageError(std::string(flag) + ": '" + item + "' is not a positive integer");
      }
      out.push_back(x);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
  return out;
}

double parse_stretch(const std::string& text) {
  if (text == "inf" || text == "infinity") return kUnreachable;
  double x = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(x >= 1.0)) {
    throw UsageError("--t: expected a number >= 1 or 'inf', got '" + text + "'");
  }
  return x;
}

MetricFileKind parse_kind(const std::string& s) {
  if (s == "auto") return MetricFileKind::Auto;
  if (s == "tree") return MetricFileKind::Tree;
  if (s == "points") return MetricFileKind::Points;
  return MetricFileKind::Matrix;
}

// Fixed-size instance of a bench family, as used by `oracle`.
Metric family_metric(const Family& f, int n, std::uint64_t seed) {
  switch (f.kind) {
    case Family::Kind::UniformLine: return uniform_line(n);
    case Family::Kind::RandomTree: return Metric::tree(random_tree(n, seed));
    case Family::Kind::RandomPoints: return Metric::points(random_points(n, f.dimension, seed));
  }
  throw std::logic_error("unknown family");
}

struct BuildArgs {
  std::string tree, points, matrix, cover, out;
  bool quadtree = false;
  bool trust = false;
  int base_cells = 1;
  int k = 0;
};

int run_build(const BuildArgs& a) {
  const int sources = !a.tree.empty() + !a.points.empty() + !a.matrix.empty();
  if (sources != 1) throw UsageError("build: give exactly one of --tree, --points, --matrix");

  std::optional<Metric> metric;
  std::optional<WeightedTree> tree;
  if (!a.tree.empty()) {
    tree = load_tree(a.tree);
    metric = Metric::tree(*tree);
  } else if (!a.points.empty()) {
    metric = Metric::points(load_points(a.points));
  } else {
    metric = Metric::matrix(load_matrix(a.matrix));
  }

  std::optional<TreeCover> cover;
  CoverTrust trust = a.trust ? CoverTrust::Trust : CoverTrust::Check;
  if (!a.cover.empty()) {
    cover = load_cover(a.cover);
  } else if (a.quadtree || !a.points.empty()) {
    if (a.points.empty()) throw UsageError("build: --cover-quadtree needs --points");
    cover = shifted_quadtree_cover(*metric, a.base_cells);
    trust = CoverTrust::Trust;  // dominating by construction, and cover_stats already checked it
  } else if (!a.matrix.empty()) {
    throw UsageError("build: a matrix metric needs --cover");
  }

  const SpannerGraph g = cover ? cover_to_spanner(*cover, a.k, *metric, trust) : build_tree_spanner(*tree, a.k);
  save_spanner(a.out, g);

  Json j;
  j["out"] = a.out;
  j["real"] = g.real_count();
  j["total"] = g.total_count();
  j["k"] = g.declared_k();
  j["t"] = number_or_null(g.declared_t());
  j["edge_count"] = g.edge_count();
  j["weight"] = g.total_weight();
  j["real_edge_weight"] = g.real_edge_weight();
  if (cover) j["cover_size"] = cover->size();
  print(j);
  return 0;
}

struct VerifyArgs {
  std::string spanner, metric, kind = "auto", t;
  int k = 0;
};

int run_verify(const VerifyArgs& a) {
  const SpannerGraph g = load_spanner(a.spanner);
  const Metric m = load_metric(a.metric, parse_kind(a.kind));
  const int k = a.k > 0 ? a.k : g.declared_k();
  const double t = a.t.empty() ? g.declared_t() : parse_stretch(a.t);
  g.check_against(m);
  const VerifyReport rep = verify(g, m, k, t);
  print(report_json(rep));
  return rep.violations == 0 ? 0 : kExitInvalid;
}

int run_decompose(const std::string& tree_path, int ell) {
  const WeightedTree t = load_tree(tree_path);
  const Separator s = split(t, ell);
  Json j;
  j["n"] = t.size();
  j["ell"] = s.ell;
  j["separator"] = s.separator;
  Json sizes = Json::array();
  for (const auto& c : s.components) sizes.push_back(c.size());
  j["component_sizes"] = sizes;
  j["boundary"] = s.boundary;
  j["centroid"] = centroid(t);
  print(j);
  return 0;
}

int run_cover(const std::string& points_path, const std::string& out, int base_cells) {
  const Metric m = Metric::points(load_points(points_path));
  const TreeCover c = shifted_quadtree_cover(m, base_cells);
  save_cover(out, c);
  Json j;
  j["out"] = out;
  j["gamma"] = c.size();
  j["measured_stretch"] = c.declared_stretch;
  j["measured_lightness"] = c.declared_lightness;
  Json sizes = Json::array();
  for (const auto& t : c.trees) sizes.push_back(t.size());
  j["tree_sizes"] = sizes;
  print(j);
  return 0;
}

struct OracleArgs {
  std::string family = "uniform-line", metric, kind = "auto";
  int n = 0;
  int k = 0;
  std::uint64_t seed = 1;
};

int run_oracle(const OracleArgs& a) {
  std::optional<Metric> m;
  Json j;
  if (!a.metric.empty()) {
    m = load_metric(a.metric, parse_kind(a.kind));
    j["metric"] = a.metric;
  } else {
    if (a.n < 1) throw UsageError("oracle: --n is required without --metric");
    const Family f = parse_family(a.family);
    m = family_metric(f, a.n, a.seed);
    j["family"] = f.name();
  }
  if (m->size() > kOracleMaxPoints) {
    throw UsageError("oracle: n = " + std::to_string(m->size()) + " exceeds the cap of " +
                     std::to_string(kOracleMaxPoints));
  }
  const OracleResult r = optimal_lightness(*m, a.k);
  j["n"] = m->size();
  j["k"] = a.k;
  j["lightness"] = r.lightness;
  j["weight"] = r.weight;
  j["mst_weight"] = r.mst_weight;
  j["nodes_explored"] = r.nodes_explored;
  Json edges = Json::array();
  for (const auto& e : r.witness.edges()) edges.push_back(Json::array({e.u, e.v, e.w}));
  j["witness_edges"] = edges;
  j["report"] = report_json(verify(r.witness, *m, a.k, r.witness.declared_t()));
  print(j);
  return 0;
}

struct BenchArgs {
  std::string family, ns, ks, csv;
  std::uint64_t seed = 1;
  bool timing = false;
};

int run_bench(const BenchArgs& a) {
  const Family f = parse_family(a.family);
  const std::vector<int> ns = parse_int_list(a.ns, "--n");
  const std::vector<int> ks = parse_int_list(a.ks, "--k");
  const auto rows = bench_sweep(f, ns, ks, {a.seed, a.timing});
  write_file(a.csv, rows_to_csv(rows));

  Json j;
  j["family"] = f.name();
  j["csv"] = a.csv;
  j["rows"] = rows.size();
  std::map<int, std::vector<BenchRow>> by_k;
  for (const auto& r : rows) by_k[r.k].push_back(r);
  Json slopes = Json::object();
  Json worst = Json::object();
  for (const auto& [k, krows] : by_k) {
    std::set<int> distinct;
    double max_light = 0;
    for (const auto& r : krows) {
      distinct.insert(r.n);
      max_light = std::max(max_light, r.lightness);
    }
    if (distinct.size() >= 3) slopes[std::to_string(k)] = fit_slope(krows);
    worst[std::to_string(k)] = max_light;
  }
  j["slope_by_k"] = slopes;
  j["max_lightness_by_k"] = worst;
  print(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Light spanners with bounded hop-diameter"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  const std::vector<std::string> kinds{"auto", "tree", "points", "matrix"};

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a k-hop spanner from a tree, point set or matrix");
  auto* b_tree = b->add_option("--tree", build.tree, "Tree JSON (exact tree-metric spanner)");
  auto* b_points = b->add_option("--points", build.points, "Point CSV (quadtree cover unless --cover)");
  auto* b_matrix = b->add_option("--matrix", build.matrix, "Distance matrix CSV (needs --cover)");
  b_tree->excludes(b_points, b_matrix);
  b_points->excludes(b_matrix);
  b->add_option("--k", build.k, "Hop-diameter")->required()->check(CLI::PositiveNumber);
  auto* b_cover = b->add_option("--cover", build.cover, "Tree cover JSON");
  auto* b_quad = b->add_flag("--cover-quadtree", build.quadtree, "Use the shifted quadtree cover");
  b_cover->excludes(b_quad);
  b->add_flag("--trust-cover", build.trust, "Skip the domination check of --cover");
  b->add_option("--base-cells", build.base_cells, "Quadtree leaf capacity")->check(CLI::PositiveNumber);
  b->add_option("--out", build.out, "Output spanner JSON")->required();

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Measure stretch, lightness and hop-diameter of a spanner");
  v->add_option("--spanner", ver.spanner, "Spanner JSON")->required();
  v->add_option("--metric", ver.metric, "Tree JSON, point CSV or matrix CSV")->required();
  v->add_option("--metric-kind", ver.kind, "How to read --metric")->check(CLI::IsMember(kinds));
  v->add_option("--k", ver.k, "Hop budget (default: the spanner's k)")->check(CLI::PositiveNumber);
  v->add_option("--t", ver.t, "Stretch target, or 'inf' (default: the spanner's t)");

  std::string dec_tree;
  int dec_ell = 0;
  auto* d = app.add_subcommand("decompose", "Print the ell-split separator of a tree");
  d->add_option("--tree", dec_tree, "Tree JSON")->required();
  d->add_option("--ell", dec_ell, "Component size bound")->required()->check(CLI::PositiveNumber);

  std::string cov_points, cov_out;
  int cov_cells = 1;
  auto* c = app.add_subcommand("cover", "Build the shifted quadtree cover of a point set");
  c->add_option("--points", cov_points, "Point CSV")->required();
  c->add_option("--out", cov_out, "Output cover JSON")->required();
  c->add_option("--base-cells", cov_cells, "Quadtree leaf capacity")->check(CLI::PositiveNumber);

  OracleArgs orc;
  auto* o = app.add_subcommand("oracle", "Exact minimum lightness of a k-hop connected edge set (n <= 10)");
  auto* o_family = o->add_option("--family", orc.family, "uniform-line | random-tree | random-points-<d>D");
  auto* o_metric = o->add_option("--metric", orc.metric, "Metric file instead of a family");
  o_family->excludes(o_metric);
  o->add_option("--metric-kind", orc.kind, "How to read --metric")->check(CLI::IsMember(kinds));
  o->add_option("--n", orc.n, "Number of points")->check(CLI::PositiveNumber);
  o->add_option("--k", orc.k, "Hop budget")->required()->check(CLI::PositiveNumber);
  o->add_option("--seed", orc.seed, "Seed for random families");

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Sweep n and k, write one CSV row per instance");
  be->add_option("--family", bench.family, "uniform-line | random-tree | random-points-<d>D")->required();
  be->add_option("--n", bench.ns, "Comma-separated sizes")->required();
  be->add_option("--k", bench.ks, "Comma-separated hop budgets")->required();
  be->add_option("--csv", bench.csv, "Output CSV")->required();
  be->add_option("--seed", bench.seed, "Seed for random families");
  be->add_flag("--timing", bench.timing, "Record build_millis (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*b) return run_build(build);
    if (*v) return run_verify(ver);
    if (*d) return run_decompose(dec_tree, dec_ell);
    if (*c) return run_cover(cov_points, cov_out, cov_cells);
    if (*o) return run_oracle(orc);
    if (*be) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
