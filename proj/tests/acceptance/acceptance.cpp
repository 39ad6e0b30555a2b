// Acceptance gate: one PASS/FAIL line per criterion. Exit code 1 if any fails.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>

#include "hopspan/bench.hpp"
#include "hopspan/hop_spanner.hpp"
#include "hopspan/io.hpp"
#include "hopspan/oracle.hpp"
#include "hopspan/tree_cover.hpp"
#include "hopspan/verify.hpp"
#include "support.hpp"

using namespace hopspan;

namespace {

// Pinned tolerances and limits.
constexpr double kExactRelTol = 1e-9;
constexpr double kStretchTol = 1e-9;
constexpr double kSlopeTol = 0.3;
constexpr double kAc1Seconds = 300;
constexpr double kAc5Seconds = 600;
constexpr double kOracleSeconds = 60;
constexpr double kW3Factor = 32;
constexpr double kWkFactor = 128;
constexpr double kCoverFactor = 128;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
  std::printf("%s %s %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int ceil_log2(int n) {
  int r = 0;
  while ((1LL << r) < n) ++r;
  return std::max(r, 1);
}

// 200 random trees with n <= 512, shared by AC1 and AC2.
std::vector<WeightedTree> ac1_trees() {
  std::mt19937_64 rng(0xac1);
  std::vector<WeightedTree> trees;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 511);
    trees.push_back(random_tree(n, rng()));
  }
  return trees;
}

void ac1_ac2() {
  const auto t0 = Clock::now();
  const auto trees = ac1_trees();
  long long mismatches = 0;
  long long checked = 0;
  double worst_rel = 0;
  // AC2: worst measured weight / bound, per bound family.
  double w2 = 0, w3 = 0, wk = 0;
  int bound_failures = 0;

  for (const auto& t : trees) {
    const int n = t.size();
    const auto ref = testsupport::tree_apsp(t);
    const double L = t.total_weight();
    std::vector<int> ks{1, 2, 3, 4, 5, 8, ceil_log2(n), n};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks) {
      const SpannerGraph g = build_tree_spanner(t, k);
      const HopDistanceTable d = bounded_hop_apsp(g, k);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          const double got = d.at(u, v);
          const double want = ref[u][v];
          const double rel = std::abs(got - want) / std::max(1.0, want);
          ++checked;
          if (!(rel <= kExactRelTol)) ++mismatches;
          if (std::isfinite(rel)) worst_rel = std::max(worst_rel, rel);
        }
      }
      const double w = g.total_weight();
      double ratio = 0;
      if (k == 2) {
        ratio = w / (n * L);
        w2 = std::max(w2, ratio);
      } else if (k == 3) {
        ratio = w / (kW3Factor * std::pow(n, 2.0 / 3) * L);
        w3 = std::max(w3, ratio);
      } else if (k >= 4) {
        ratio = w / (kWkFactor * k * std::pow(n, 2.0 / k) * L);
        wk = std::max(wk, ratio);
      }
      if (ratio > 1.0) ++bound_failures;
    }
  }
  const double secs = seconds_since(t0);
  report("AC1", mismatches == 0 && secs < kAc1Seconds,
         fmt("exactness: 200 trees, k in {1,2,3,4,5,8,ceil(log2 n),n}, %lld pair checks, %lld mismatches, worst "
             "rel err %.3g (tol %.0e), %.1fs (limit %.0fs)",
             checked, mismatches, worst_rel, kExactRelTol, secs, kAc1Seconds));
  report("AC2", bound_failures == 0,
         fmt("weight bounds: max W2/(nL) = %.4f, max W3/(32 n^(2/3) L) = %.4f, max Wk/(128 k n^(2/k) L) = %.4f "
             "(all must be <= 1)",
             w2, w3, wk));
}

void ac3() {
  std::mt19937_64 rng(0xac3);
  long long failures_here = 0;
  long long checks = 0;
  double worst_x_ratio = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2000);
    const WeightedTree t = random_tree(n, rng());
    const int root_n = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
    for (int ell : {1, 2, 3, root_n, std::max(1, n / 2)}) {
      ++checks;
      const Separator s = split(t, ell);
      std::vector<char> in_x(n, 0);
      bool ok = s.ell == ell;
      for (Vertex x : s.separator) {
        ok = ok && x >= 0 && x < n && !in_x[x];
        if (x >= 0 && x < n) in_x[x] = 1;
      }
      const long long cap = (2LL * n + ell - 1) / ell;
      ok = ok && static_cast<long long>(s.separator.size()) <= cap;
      worst_x_ratio = std::max(worst_x_ratio, static_cast<double>(s.separator.size()) / cap);
      // Partition exactness via independent BFS.
      ok = ok && s.components == testsupport::components_bfs(t, in_x) && s.boundary.size() == s.components.size();
      if (ok) {
        std::vector<int> comp_of(n, -1);
        for (std::size_t c = 0; c < s.components.size(); ++c) {
          ok = ok && static_cast<int>(s.components[c].size()) <= ell;
          for (Vertex v : s.components[c]) comp_of[v] = static_cast<int>(c);
        }
        std::vector<std::vector<Vertex>> outside(s.components.size());
        for (const auto& e : t.edges()) {
          if (comp_of[e.u] >= 0 && comp_of[e.v] < 0) outside[comp_of[e.u]].push_back(e.v);
          if (comp_of[e.v] >= 0 && comp_of[e.u] < 0) outside[comp_of[e.v]].push_back(e.u);
        }
        for (std::size_t c = 0; c < s.components.size(); ++c) {
          auto want = outside[c];
          auto got = s.boundary[c];
          std::sort(want.begin(), want.end());
          std::sort(got.begin(), got.end());
          ok = ok && want.size() <= 2 && want == got;
        }
      }
      if (!ok) ++failures_here;
    }
  }
  report("AC3", failures_here == 0,
         fmt("separator invariants: %lld (tree, ell) cases, %lld failures, max |X| / ceil(2n/ell) = %.3f", checks,
             failures_here, worst_x_ratio));
}

void ac4() {
  std::mt19937_64 rng(0xac4);
  long long levels = 0, pairs = 0, bad = 0;
  BuildObserver obs;
  obs.on_contract = [&](const WeightedTree& level, const Separator& sep, const ContractedTree& c) {
    ++levels;
    const auto ref = testsupport::tree_apsp(level);
    const auto got = testsupport::tree_apsp(c.tree);
    if (c.to_original != sep.separator) ++bad;
    for (std::size_t a = 0; a < sep.separator.size(); ++a) {
      for (std::size_t b = 0; b < sep.separator.size(); ++b) {
        ++pairs;
        if (!testsupport::close(got[a][b], ref[sep.separator[a]][sep.separator[b]], kExactRelTol)) ++bad;
      }
    }
  };
  const int ks[] = {3, 4, 5, 6, 8};
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng() % 511);
    build_tree_spanner(random_tree(n, rng()), ks[i % 5], &obs);
  }
  report("AC4", bad == 0 && levels > 0,
         fmt("contraction preservation: 50 builds, %lld contraction levels, %lld separator pairs, %lld mismatches "
             "(tol %.0e)",
             levels, pairs, bad, kExactRelTol));
}

void ac5() {
  const auto t0 = Clock::now();
  std::vector<int> ns;
  for (int e = 9; e <= 14; ++e) ns.push_back(1 << e);
  const std::vector<int> ks{2, 3, 4, 6};
  const auto rows = bench_sweep(parse_family("uniform-line"), ns, ks);
  std::map<int, std::vector<BenchRow>> by_k;
  for (const auto& r : rows) by_k[r.k].push_back(r);
  bool ok = true;
  std::string detail = "scaling exponent (uniform-line, n = 2^9..2^14):";
  for (int k : ks) {
    const double slope = fit_slope(by_k[k]);
    const double target = 2.0 / k;
    const bool in = std::abs(slope - target) <= kSlopeTol;
    ok = ok && in;
    detail += fmt(" k=%d slope %.3f (target %.3f +- %.1f)%s;", k, slope, target, kSlopeTol, in ? "" : " OUT");
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < kAc5Seconds;
  detail += fmt(" %.1fs (limit %.0fs)", secs, kAc5Seconds);
  report("AC5", ok, detail);
}

void ac6() {
  bool ok = true;
  std::string notes;
  const OracleResult three = optimal_lightness(uniform_line(3), 1);
  if (three.lightness != 2.0) {
    ok = false;
    notes += fmt(" n=3 k=1 gave %.17g;", three.lightness);
  }
  double slowest = 0;
  int sandwich_bad = 0, monotone_bad = 0, lower_bad = 0;
  double min_k1_margin = 1e300, min_k2_margin = 1e300;
  for (int n = 4; n <= 9; ++n) {
    const Metric m = uniform_line(n);
    const WeightedTree path = uniform_line_path(n);
    double previous = kUnreachable;
    for (int k = 1; k <= 3; ++k) {
      const auto t0 = Clock::now();
      const OracleResult r = optimal_lightness(m, k);
      slowest = std::max(slowest, seconds_since(t0));
      const SpannerGraph built = build_tree_spanner(path, k);
      const VerifyReport rep = verify(built, m, k, 1.0);
      if (rep.violations != 0 || r.lightness > rep.stats.lightness * (1 + kExactRelTol)) ++sandwich_bad;
      if (r.lightness > previous * (1 + kExactRelTol)) ++monotone_bad;
      previous = r.lightness;
      const double p = n;
      if (k == 1) {
        const double bound = (p * p / n) * (p * p / n) / 64;
        min_k1_margin = std::min(min_k1_margin, r.weight / bound);
        if (r.weight < bound) ++lower_bad;
      }
      if (k == 2) {
        const double bound = p * p / n / 16;
        min_k2_margin = std::min(min_k2_margin, r.weight / bound);
        if (r.weight < bound) ++lower_bad;
      }
    }
  }
  ok = ok && sandwich_bad == 0 && monotone_bad == 0 && lower_bad == 0 && slowest < kOracleSeconds;
  report("AC6", ok,
         fmt("oracle sandwich (uniform_line n=4..9, k=1..3): n=3,k=1 lightness %.17g; sandwich failures %d; "
             "monotonicity failures %d; lower-bound failures %d (min weight/bound k=1 %.3f, k=2 %.3f); slowest "
             "instance %.2fs (limit %.0fs)%s",
             three.lightness, sandwich_bad, monotone_bad, lower_bad, min_k1_margin, min_k2_margin, slowest,
             kOracleSeconds, notes.c_str()));
}

void ac7() {
  bool ok = true;
  std::string detail = "cover reduction (2D points, quadtree cover):";
  for (int n : {64, 256}) {
    const Metric m = Metric::points(random_points(n, 2, 0xac7 + n));
    const TreeCover cover = shifted_quadtree_cover(m);
    const CoverStats cs = cover_stats(cover, m);
    for (int k : {2, 4, 8}) {
      const SpannerGraph g = cover_to_spanner(cover, k, m);
      const VerifyReport rep = verify(g, m, k, cs.measured_stretch);
      const double bound = kCoverFactor * cs.size * cs.measured_lightness * k * std::pow(n, 2.0 / k);
      const bool stretch_ok = rep.stats.max_stretch <= cs.measured_stretch + kStretchTol;
      const bool hop_ok = rep.violations == 0 && rep.stats.hop_diameter_at_t >= 0 && rep.stats.hop_diameter_at_t <= k;
      const bool light_ok = rep.stats.lightness <= bound;
      ok = ok && stretch_ok && hop_ok && light_ok;
      detail += fmt(" n=%d k=%d stretch %.3f/%.3f hops %d light %.1f/%.0f%s;", n, k, rep.stats.max_stretch,
                    cs.measured_stretch, rep.stats.hop_diameter_at_t, rep.stats.lightness, bound,
                    stretch_ok && hop_ok && light_ok ? "" : " FAIL");
    }
  }
  report("AC7", ok, detail);
}

struct Snapshot {
  std::string spanner_tree;
  std::string spanner_points;
  std::string csv_line, csv_tree, csv_points;
  std::string oracle;
};

Snapshot snapshot() {
  Snapshot s;
  const WeightedTree t = random_tree(400, 0xac8);
  s.spanner_tree = spanner_to_json(build_tree_spanner(t, 4));
  const Metric pts = Metric::points(random_points(200, 2, 0xac8));
  s.spanner_points = spanner_to_json(cover_to_spanner(shifted_quadtree_cover(pts), 3, pts));
  const std::vector<int> ns{64, 128, 700};
  const std::vector<int> ks{2, 3, 5};
  s.csv_line = rows_to_csv(bench_sweep(parse_family("uniform-line"), ns, ks, {5, false}));
  s.csv_tree = rows_to_csv(bench_sweep(parse_family("random-tree"), ns, ks, {5, false}));
  s.csv_points = rows_to_csv(bench_sweep(parse_family("random-points-2D"), ns, ks, {5, false}));
  const OracleResult r = optimal_lightness(Metric::points(random_points(9, 2, 0xac8)), 2);
  s.oracle = spanner_to_json(r.witness) + format_double(r.lightness) + " " + std::to_string(r.nodes_explored);
  return s;
}

void ac8() {
  const int threads = omp_get_max_threads();
  const Snapshot a = snapshot();
  const Snapshot b = snapshot();
  omp_set_num_threads(4);
  const Snapshot c = snapshot();
  omp_set_num_threads(threads);
  auto same = [](const Snapshot& x, const Snapshot& y) {
    return x.spanner_tree == y.spanner_tree && x.spanner_points == y.spanner_points && x.csv_line == y.csv_line &&
           x.csv_tree == y.csv_tree && x.csv_points == y.csv_points && x.oracle == y.oracle;
  };
  const bool repeat = same(a, b);
  const bool across_threads = same(a, c);
  report("AC8", repeat && across_threads,
         fmt("determinism: build/bench/oracle outputs byte-identical on repeat: %s; with %d vs 4 OpenMP threads: %s",
             repeat ? "yes" : "no", threads, across_threads ? "yes" : "no"));
}

}  // namespace

int main() {
  std::printf("acceptance: %d OpenMP threads\n", omp_get_max_threads());
  ac1_ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  std::printf("acceptance: %d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
