#include "hopspan/hop_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hopspan {

namespace {

__extension__ typedef unsigned __int128 u128;
constexpr u128 kSaturated = ~u128{0};

u128 sat_mul(u128 a, u128 b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

u128 sat_pow(u128 base, int exp) {
  u128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kSaturated) break;
  }
  return r;
}

// Is l^k <= scale^k * n^2 ?
bool within(long long l, int k, long long n, int scale) {
  const u128 lhs = sat_pow(static_cast<u128>(l), k);
  const u128 rhs = sat_mul(sat_pow(static_cast<u128>(scale), k), sat_mul(n, n));
  if (lhs != kSaturated && rhs != kSaturated) return lhs <= rhs;
  const long double a = k * std::log(static_cast<long double>(l));
  const long double b = k * std::log(static_cast<long double>(scale)) +
                        2 * std::log(static_cast<long double>(n));
  return a <= b;
}

// Largest l >= 1 with l^k <= scale^k * n^2, i.e. floor(scale * n^{2/k}).
long long floor_scaled_root(long long n, int k, int scale) {
  const long double approx =
      scale * std::exp(2.0L * std::log(static_cast<long double>(n)) / static_cast<long double>(k));
  long long l = std::max<long long>(1, static_cast<long long>(approx));
  while (l > 1 && !within(l, k, n, scale)) --l;
  while (within(l + 1, k, n, scale)) ++l;
  return l;
}

// Tree induced by a connected vertex subset of `level`; local ids follow `comp` order.
WeightedTree induced_subtree(const WeightedTree& level, const std::vector<Vertex>& comp,
                             std::vector<Vertex>& local_scratch) {
  for (std::size_t i = 0; i < comp.size(); ++i) local_scratch[comp[i]] = static_cast<Vertex>(i);
  std::vector<WeightedEdge> edges;
  edges.reserve(comp.size() - 1);
  for (Vertex v : comp) {
    for (const auto& nb : level.neighbors(v)) {
      if (nb.to > v && local_scratch[nb.to] >= 0) {
        edges.push_back({local_scratch[v], local_scratch[nb.to], nb.w});
      }
    }
  }
  for (Vertex v : comp) local_scratch[v] = -1;
  return WeightedTree(static_cast<int>(comp.size()), std::move(edges));
}

class Builder {
 public:
  Builder(const WeightedTree& tree, const BuildObserver* observer)
      : index_(tree), observer_(observer) {}

  void run(const WeightedTree& level, const std::vector<Vertex>& to_orig, int k) {
    const int n = level.size();
    // A tree on at most k+1 vertices already has hop-diameter <= k.
    if (n <= k + 1) {
      for (const auto& e : level.edges()) emit(to_orig[e.u], to_orig[e.v]);
      return;
    }
    if (k == 1) {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) emit(to_orig[a], to_orig[b]);
      }
      return;
    }
    std::vector<Vertex> scratch(n, -1);
    if (k == 2) {
      const Vertex c = centroid(level);
      for (Vertex v = 0; v < n; ++v) {
        if (v != c) emit(to_orig[c], to_orig[v]);
      }
      std::vector<char> removed(n, 0);
      removed[c] = 1;
      for (const auto& comp : components_without(level, removed)) {
        recurse_on(level, comp, to_orig, scratch, 2);
      }
      return;
    }

    const Separator sep = split(level, choose_ell(n, k));
    for (std::size_t i = 0; i < sep.components.size(); ++i) {
      const auto& comp = sep.components[i];
      recurse_on(level, comp, to_orig, scratch, k);
      for (Vertex b : sep.boundary[i]) {
        for (Vertex w : comp) emit(to_orig[b], to_orig[w]);
      }
    }
    const ContractedTree contracted = build_contracted_tree(level, sep);
    if (observer_ && observer_->on_contract) observer_->on_contract(level, sep, contracted);
    std::vector<Vertex> sub_orig(contracted.to_original.size());
    for (std::size_t i = 0; i < sub_orig.size(); ++i) sub_orig[i] = to_orig[contracted.to_original[i]];
    run(contracted.tree, sub_orig, k - 2);
  }

  std::vector<WeightedEdge> take_edges() { return std::move(edges_); }

 private:
  void recurse_on(const WeightedTree& level, const std::vector<Vertex>& comp,
                  const std::vector<Vertex>& to_orig, std::vector<Vertex>& scratch, int k) {
    const WeightedTree sub = induced_subtree(level, comp, scratch);
    std::vector<Vertex> sub_orig(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) sub_orig[i] = to_orig[comp[i]];
    run(sub, sub_orig, k);
  }

  void emit(Vertex a, Vertex b) { edges_.push_back({a, b, index_.distance(a, b)}); }

  TreeDistanceIndex index_;
  const BuildObserver* observer_;
  std::vector<WeightedEdge> edges_;
};

}  // namespace

int choose_ell(long long n, int k) {
  if (k < 3) throw std::invalid_argument("choose_ell needs k >= 3");
  if (n < 1) throw std::invalid_argument("choose_ell needs n >= 1");
  long long ell;
  if (k == 3) {
    ell = floor_scaled_root(n, 3, 1);
  } else if (n <= 2LL * k * k) {
    ell = k;
  } else {
    ell = floor_scaled_root(n, k, 2);
  }
  ell = std::min(ell, n - 1);
  return static_cast<int>(std::max<long long>(ell, 1));
}

ContractedTree build_contracted_tree(const WeightedTree& tree, const Separator& sep) {
  const int n = tree.size();
  if (sep.separator.empty()) throw InputError("empty separator");
  if (sep.boundary.size() != sep.components.size()) {
    throw InputError("separator inconsistent with tree: boundary/component count mismatch");
  }

  std::vector<Vertex> pos(n, -1);
  for (std::size_t i = 0; i < sep.separator.size(); ++i) {
    const Vertex x = sep.separator[i];
    if (x < 0 || x >= n || pos[x] >= 0) throw InputError("separator inconsistent with tree");
    pos[x] = static_cast<Vertex>(i);
  }
  std::vector<int> comp_of(n, -1);
  std::size_t covered = sep.separator.size();
  for (std::size_t i = 0; i < sep.components.size(); ++i) {
    for (Vertex v : sep.components[i]) {
      if (v < 0 || v >= n || pos[v] >= 0 || comp_of[v] >= 0) {
        throw InputError("separator inconsistent with tree: components do not partition");
      }
      comp_of[v] = static_cast<int>(i);
    }
    covered += sep.components[i].size();
  }
  if (covered != static_cast<std::size_t>(n)) {
    throw InputError("separator inconsistent with tree: components do not cover the tree");
  }

  std::vector<WeightedEdge> edges;
  for (const auto& e : tree.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.push_back({pos[e.u], pos[e.v], e.w});
  }

  // Shortcut across each two-boundary component; its u-v path stays inside the component.
  std::vector<double> dist(n, -1.0);
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < sep.components.size(); ++i) {
    const auto& b = sep.boundary[i];
    if (b.empty() || b.size() > 2) {
      throw std::logic_error("component with " + std::to_string(b.size()) + " boundary vertices");
    }
    if (b.size() == 1) continue;
    const Vertex from = b[0];
    const Vertex to = b[1];
    if (pos[from] < 0 || pos[to] < 0) throw InputError("boundary vertex outside the separator");
    std::vector<Vertex> touched{from};
    dist[from] = 0.0;
    stack.assign(1, from);
    while (!stack.empty() && dist[to] < 0) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& nb : tree.neighbors(v)) {
        if (dist[nb.to] >= 0) continue;
        if (comp_of[nb.to] != static_cast<int>(i) && nb.to != to) continue;
        dist[nb.to] = dist[v] + nb.w;
        touched.push_back(nb.to);
        if (nb.to != to) stack.push_back(nb.to);
      }
    }
    if (dist[to] < 0) throw InputError("separator inconsistent with tree: boundary not linked");
    edges.push_back({pos[from], pos[to], dist[to]});
    for (Vertex v : touched) dist[v] = -1.0;
  }

  return ContractedTree{WeightedTree(static_cast<int>(sep.separator.size()), std::move(edges)),
                        sep.separator};
}

SpannerGraph build_tree_spanner(const WeightedTree& tree, int k, const BuildObserver* observer) {
  if (k < 1) throw std::invalid_argument("hop-diameter k must be >= 1");
  Builder builder(tree, observer);
  std::vector<Vertex> identity(tree.size());
  for (Vertex v = 0; v < tree.size(); ++v) identity[v] = v;
  builder.run(tree, identity, k);
  auto edges = builder.take_edges();
  canonicalize_edges(edges);
  return SpannerGraph(tree.size(), tree.size(), std::move(edges), k, 1.0);
}

SpannerGraph cover_to_spanner(const TreeCover& cover, int k, const Metric& m, CoverTrust trust) {
  if (k < 1) throw std::invalid_argument("hop-diameter k must be >= 1");
  const int n = m.size();
  cover.validate(n);
  if (trust == CoverTrust::Check) check_domination(cover, m);

  std::vector<WeightedEdge> all;
  Vertex next_aux = n;
  for (int j = 0; j < cover.size(); ++j) {
    const WeightedTree& tree = cover.trees[j];
    std::vector<Vertex> global(tree.size(), -1);
    for (Vertex p = 0; p < n; ++p) global[cover.point_map[j][p]] = p;
    for (Vertex v = 0; v < tree.size(); ++v) {
      if (global[v] < 0) global[v] = next_aux++;
    }
    const SpannerGraph part = build_tree_spanner(tree, k);
    for (const auto& e : part.edges()) all.push_back({global[e.u], global[e.v], e.w});
  }
  canonicalize_edges(all);
  return SpannerGraph(n, next_aux, std::move(all), k, cover.declared_stretch);
}

}  // namespace hopspan
