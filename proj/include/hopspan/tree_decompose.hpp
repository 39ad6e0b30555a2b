#pragma once

#include <vector>

#include "hopspan/metric.hpp"

namespace hopspan {

/// Result of an ell-split: removing `separator` from the tree leaves `components`,
/// each with at most `ell` vertices and one or two tree edges into the separator.
struct Separator {
  std::vector<Vertex> separator;                 // ascending
  std::vector<std::vector<Vertex>> components;   // each ascending, ordered by smallest vertex
  std::vector<std::vector<Vertex>> boundary;     // separator vertices adjacent to components[i]
  int ell = 0;
};

/// Vertex whose removal leaves components of at most floor(n/2) vertices.
/// Ties go to the smallest index.
Vertex centroid(const WeightedTree& tree);

/// Greedy bottom-up split. Vertices are processed in post-order from the root
/// (children in increasing index order); a vertex joins the separator once its
/// open cluster reaches ell+1 vertices or it touches two separator vertices below.
/// Guarantees: components <= ell, <= 2 boundary edges each, |X| <= ceil(2n/ell).
Separator split(const WeightedTree& tree, int ell);

/// Connected components of the tree after deleting the vertices flagged in `removed`.
/// Same ordering conventions as Separator::components.
std::vector<std::vector<Vertex>> components_without(const WeightedTree& tree,
                                                    const std::vector<char>& removed);

}  // namespace hopspan
