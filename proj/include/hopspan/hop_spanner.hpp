#pragma once

#include <functional>
#include <vector>

#include "hopspan/metric.hpp"
#include "hopspan/tree_cover.hpp"
#include "hopspan/tree_decompose.hpp"

namespace hopspan {

/// Component size bound for the ell-split at a k >= 3 level:
/// floor(n^{2/3}) for k = 3, k when k >= 4 and n <= 2k^2, floor(2 n^{2/k}) otherwise;
/// clamped to [1, n-1]. Integer-exact (no pow() rounding at perfect powers).
int choose_ell(long long n, int k);

/// Tree on the separator vertices that preserves tree distances between them.
struct ContractedTree {
  WeightedTree tree;
  std::vector<Vertex> to_original;  // contracted vertex -> vertex of the split tree
};

/// Keeps separator-separator tree edges and adds (u_i, v_i) with weight
/// d_T(u_i, v_i) for every two-boundary component. Throws InputError on an
/// empty separator or a separator that does not match the tree.
ContractedTree build_contracted_tree(const WeightedTree& tree, const Separator& sep);

/// Hooks into the recursion; used by tests to inspect every level.
struct BuildObserver {
  std::function<void(const WeightedTree& level, const Separator& sep, const ContractedTree& contracted)>
      on_contract;
};

/// Exact (stretch 1) spanner of the tree metric with hop-diameter k. Every edge
/// weighs the tree distance of its endpoints. Output has no auxiliary vertices.
/// Trees with n <= k + 1 come back unchanged.
SpannerGraph build_tree_spanner(const WeightedTree& tree, int k, const BuildObserver* observer = nullptr);

enum class CoverTrust { Check, Trust };

/// Union of build_tree_spanner over all cover trees. Real points keep their
/// indices; auxiliary vertices of tree j get a disjoint block above the real
/// points (blocks in tree order). A pair produced by several trees keeps its
/// lightest weight. declared_t is the cover's declared stretch.
SpannerGraph cover_to_spanner(const TreeCover& cover, int k, const Metric& m,
                              CoverTrust trust = CoverTrust::Check);

}  // namespace hopspan
