#include <doctest.h>

#include <numeric>
#include <random>

#include "hopspan/metric.hpp"
#include "support.hpp"

using namespace hopspan;
using testsupport::close;

namespace {

// Weight of the tree encoded by a Pruefer sequence over the complete graph.
double pruefer_tree_weight(const std::vector<int>& seq, int n, const Metric& m) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  double w = 0;
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    w += m.distance(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  }
  return w + m.distance(a, b);
}

double min_spanning_weight_exhaustive(const Metric& m) {
  const int n = m.size();
  if (n == 1) return 0;
  if (n == 2) return m.distance(0, 1);
  std::vector<int> seq(n - 2, 0);
  double best = kUnreachable;
  while (true) {
    best = std::min(best, pruefer_tree_weight(seq, n, m));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
  return best;
}

}  // namespace

TEST_SUITE("metric") {
  TEST_CASE("uniform line coordinates and distances") {
    CHECK(uniform_line(1).size() == 1);
    const Metric two = uniform_line(2);
    CHECK(two.distance(0, 1) == 0.5);
    const Metric four = uniform_line(4);
    const auto* pts = four.as_points();
    REQUIRE(pts != nullptr);
    CHECK(pts->dimension() == 1);
    CHECK(pts->point(0)[0] == 0.0);
    CHECK(pts->point(1)[0] == 0.25);
    CHECK(pts->point(2)[0] == 0.5);
    CHECK(pts->point(3)[0] == 0.75);
    CHECK(four.distance(0, 3) == 0.75);
    for (Vertex u = 0; u < 4; ++u) CHECK(four.distance(u, u) == 0.0);
    CHECK_THROWS_AS(uniform_line(0), InputError);
  }

  TEST_CASE("path tree distance") {
    const std::vector<double> lengths{2, 3};
    const Metric m = Metric::tree(WeightedTree::path(lengths));
    CHECK(m.distance(0, 2) == 5.0);
    CHECK(m.distance(2, 0) == 5.0);
    CHECK(m.distance(1, 1) == 0.0);
    CHECK_THROWS_AS(m.distance(0, 3), std::out_of_range);
    CHECK_THROWS_AS(m.distance(-1, 0), std::out_of_range);
  }

  TEST_CASE("tree metric agrees with brute-force distances") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 60; ++rep) {
      const int n = 1 + static_cast<int>(rng() % 200);
      const WeightedTree t = testsupport::random_tree(rng, n);
      const Metric m = Metric::tree(t);
      const auto ref = testsupport::tree_apsp(t);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          REQUIRE(close(m.distance(u, v), ref[u][v], 1e-12));
        }
      }
    }
  }

  TEST_CASE("deep path keeps small distances accurate") {
    std::vector<double> lengths(5000, 1e6);
    lengths.push_back(1e-6);
    const Metric m = Metric::tree(WeightedTree::path(lengths));
    CHECK(close(m.distance(5000, 5001), 1e-6, 1e-12));
  }

  TEST_CASE("tree index lca and depth") {
    // 0 - 1 - 2, 1 - 3
    const WeightedTree t(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 4}});
    const TreeDistanceIndex idx(t);
    CHECK(idx.lca(2, 3) == 1);
    CHECK(idx.lca(0, 3) == 0);
    CHECK(idx.depth(3) == 2);
    CHECK(idx.parent(0) == -1);
    CHECK(idx.parent(3) == 1);
    CHECK(idx.root_distance(3) == 5.0);
    CHECK(idx.distance(2, 3) == 5.0);
  }

  TEST_CASE("mst weight examples") {
    for (int n : {1, 2, 5, 17, 100}) {
      CHECK(close(mst_weight(uniform_line(n)), static_cast<double>(n - 1) / n));
    }
    const Metric mat = Metric::matrix(DistanceMatrix(3, {0, 1, 2, 1, 0, 1, 2, 1, 0}));
    CHECK(mst_weight(mat) == 2.0);
  }

  TEST_CASE("mst of a tree metric is the tree") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 40; ++rep) {
      const int n = 1 + static_cast<int>(rng() % 150);
      const WeightedTree t = testsupport::random_tree(rng, n);
      const Metric m = Metric::tree(t);
      CHECK(close(mst_weight(m), t.total_weight()));
      CHECK(close(minimum_spanning_tree(m).total_weight(), t.total_weight()));
    }
  }

  TEST_CASE("mst is no heavier than any spanning tree") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coord(0, 1);
    for (int n = 1; n <= 8; ++n) {
      for (int rep = 0; rep < (n <= 6 ? 6 : 2); ++rep) {
        std::vector<double> c(2 * n);
        for (double& x : c) x = coord(rng);
        const Metric m = Metric::points(PointSet(2, c));
        const double exhaustive = min_spanning_weight_exhaustive(m);
        CHECK(mst_weight(m) <= exhaustive * (1 + 1e-12));
        CHECK(close(mst_weight(m), exhaustive, 1e-12));
      }
    }
  }

  TEST_CASE("parallel and serial mst agree") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> coord(0, 1);
    for (int n : {1, 2, 3, 64, 300}) {
      std::vector<double> c(3 * n);
      for (double& x : c) x = coord(rng);
      const Metric m = Metric::points(PointSet(3, c));
      CHECK(mst_weight(m) == mst_weight_serial(m));
    }
  }

  TEST_CASE("tree validation") {
    CHECK_THROWS_WITH_AS(WeightedTree(3, {{0, 1, 1}}), doctest::Contains("not spanning"), InputError);
    CHECK_THROWS_WITH_AS(WeightedTree(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}}), doctest::Contains("not spanning"),
                         InputError);
    CHECK_THROWS_AS(WeightedTree(2, {{0, 2, 1}}), InputError);
    CHECK_THROWS_AS(WeightedTree(2, {{0, 1, -1}}), InputError);
    CHECK_THROWS_AS(WeightedTree(2, {{0, 1, kUnreachable}}), InputError);
    CHECK_THROWS_AS(WeightedTree(2, {{1, 1, 1}}), InputError);
    CHECK_THROWS_AS(WeightedTree(0, {}), InputError);
    CHECK_THROWS_AS(WeightedTree(2, {{0, 1, 1}}, 2), InputError);
    CHECK_NOTHROW(WeightedTree(1, {}));
  }

  TEST_CASE("neighbors are sorted") {
    const WeightedTree t(5, {{4, 0, 1}, {0, 2, 1}, {0, 1, 1}, {3, 0, 1}});
    std::vector<Vertex> seen;
    for (const auto& nb : t.neighbors(0)) seen.push_back(nb.to);
    CHECK(seen == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(t.degree(0) == 4);
  }

  TEST_CASE("matrix validation") {
    CHECK_THROWS_WITH_AS(DistanceMatrix(2, {0, 1, 1.001, 0}), doctest::Contains("not symmetric"), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {1, 1, 1, 0}), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, -1, -1, 0}), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 1}), InputError);
    CHECK_NOTHROW(DistanceMatrix(2, {0, 1, 1 + 1e-12, 0}));
    const std::vector<double> bad_triangle{0, 1, 5, 1, 0, 1, 5, 1, 0};
    CHECK_NOTHROW(DistanceMatrix(3, bad_triangle));
    CHECK_THROWS_WITH_AS(DistanceMatrix(3, bad_triangle, true), doctest::Contains("triangle"), InputError);
  }

  TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet(0, {}), InputError);
    CHECK_THROWS_AS(PointSet(2, {1, 2, 3}), InputError);
    CHECK_THROWS_AS(Metric::points(PointSet(2, {})), InputError);
    const PointSet p(2, {0, 0, 3, 4});
    CHECK(p.distance(0, 1) == 5.0);
  }

  TEST_CASE("spanner graph validation") {
    CHECK_THROWS_AS(SpannerGraph(2, 2, {{0, 0, 1}}, 1, 1), InputError);
    CHECK_THROWS_AS(SpannerGraph(2, 2, {{0, 1, 1}, {1, 0, 1}}, 1, 1), InputError);
    CHECK_THROWS_AS(SpannerGraph(2, 2, {{0, 2, 1}}, 1, 1), InputError);
    CHECK_THROWS_AS(SpannerGraph(2, 2, {{0, 1, -1}}, 1, 1), InputError);
    CHECK_THROWS_AS(SpannerGraph(3, 2, {}, 1, 1), InputError);
    const SpannerGraph g(2, 3, {{2, 0, 1}, {1, 2, 2}, {0, 1, 4}}, 2, 1);
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges()[0] == WeightedEdge{0, 1, 4});
    CHECK(g.edges()[1] == WeightedEdge{0, 2, 1});
    CHECK(g.total_weight() == 7.0);
    CHECK(g.real_edge_weight() == 4.0);
    CHECK_NOTHROW(g.check_against(uniform_line(2)));
    const SpannerGraph short_edge(2, 2, {{0, 1, 0.25}}, 1, 1);
    CHECK_THROWS_AS(short_edge.check_against(uniform_line(2)), InputError);
  }

  TEST_CASE("canonical edges keep the lightest copy") {
    std::vector<WeightedEdge> e{{3, 1, 5}, {1, 3, 2}, {0, 2, 1}};
    canonicalize_edges(e);
    CHECK(e == std::vector<WeightedEdge>{{0, 2, 1}, {1, 3, 2}});
  }

  TEST_CASE("normalized ratio") {
    CHECK(normalized_ratio(0, 0) == 1.0);
    CHECK(normalized_ratio(3, 2) == 1.5);
  }
}
