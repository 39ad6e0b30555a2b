#include "hopspan/tree_decompose.hpp"

#include <algorithm>

namespace hopspan {

namespace {

struct Rooted {
  std::vector<Vertex> parent;
  std::vector<Vertex> preorder;  // children pushed so that they pop in increasing order
};

Rooted root_tree(const WeightedTree& tree) {
  const int n = tree.size();
  Rooted r{std::vector<Vertex>(n, -1), {}};
  r.preorder.reserve(n);
  std::vector<Vertex> stack{tree.root()};
  r.parent[tree.root()] = tree.root();
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    r.preorder.push_back(v);
    auto nbs = tree.neighbors(v);
    for (auto it = nbs.rbegin(); it != nbs.rend(); ++it) {
      if (r.parent[it->to] == -1) {
        r.parent[it->to] = v;
        stack.push_back(it->to);
      }
    }
  }
  r.parent[tree.root()] = -1;
  return r;
}

}  // namespace

Vertex centroid(const WeightedTree& tree) {
  const int n = tree.size();
  const Rooted r = root_tree(tree);
  std::vector<int> sub(n, 1);
  std::vector<int> heaviest_child(n, 0);
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    const Vertex p = r.parent[*it];
    if (p < 0) continue;
    sub[p] += sub[*it];
    heaviest_child[p] = std::max(heaviest_child[p], sub[*it]);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (std::max(heaviest_child[v], n - sub[v]) <= n / 2) return v;
  }
  return tree.root();  // unreachable: every tree has a centroid
}

std::vector<std::vector<Vertex>> components_without(const WeightedTree& tree,
                                                    const std::vector<char>& removed) {
  const int n = tree.size();
  std::vector<char> seen(removed.begin(), removed.end());
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& nb : tree.neighbors(v)) {
        if (!seen[nb.to]) {
          seen[nb.to] = 1;
          stack.push_back(nb.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Separator split(const WeightedTree& tree, int ell) {
  const int n = tree.size();
  Separator s;
  s.ell = std::max(ell, 1);
  if (s.ell >= n) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    s.components.push_back(std::move(all));
    s.boundary.emplace_back();
    return s;
  }

  const Rooted r = root_tree(tree);
  std::vector<int> cluster(n, 1);   // open-cluster size rooted at v
  std::vector<int> contacts(n, 0);  // separator vertices reachable below v through the cluster
  std::vector<char> cut(n, 0);
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    const Vertex v = *it;
    if (cluster[v] >= s.ell + 1 || contacts[v] >= 2) {
      cut[v] = 1;
      cluster[v] = 0;
      contacts[v] = 0;
    }
    const Vertex p = r.parent[v];
    if (p < 0) continue;
    if (cut[v]) {
      ++contacts[p];
    } else {
      cluster[p] += cluster[v];
      contacts[p] += contacts[v];
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (cut[v]) s.separator.push_back(v);
  }
  s.components = components_without(tree, cut);
  s.boundary.reserve(s.components.size());
  for (const auto& comp : s.components) {
    std::vector<Vertex> b;
    for (Vertex v : comp) {
      for (const auto& nb : tree.neighbors(v)) {
        if (cut[nb.to]) b.push_back(nb.to);
      }
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    s.boundary.push_back(std::move(b));
  }
  return s;
}

}  // namespace hopspan
