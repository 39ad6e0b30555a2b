#include "hopspan/metric.hpp"

#include <cmath>
#include <string>

namespace hopspan {

PointSet::PointSet(int dimension, std::vector<double> coords)
    : dim_(dimension), coords_(std::move(coords)) {
  if (dim_ < 1) throw InputError("point dimension must be at least 1");
  if (coords_.size() % static_cast<std::size_t>(dim_) != 0) {
    throw InputError("coordinate count is not a multiple of the dimension");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InputError("non-finite coordinate");
  }
}

double PointSet::distance(Vertex u, Vertex v) const {
  const auto a = point(u);
  const auto b = point(v);
  double s = 0;
  for (int i = 0; i < dim_; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

DistanceMatrix::DistanceMatrix(int n, std::vector<double> entries, bool check_triangle)
    : n_(n), d_(std::move(entries)) {
  if (n_ < 1) throw InputError("matrix must have at least one row");
  if (d_.size() != static_cast<std::size_t>(n_) * n_) throw InputError("matrix is not square");
  for (int u = 0; u < n_; ++u) {
    if (at(u, u) != 0.0) throw InputError("nonzero diagonal at row " + std::to_string(u));
    for (int v = 0; v < n_; ++v) {
      const double x = at(u, v);
      if (!std::isfinite(x) || x < 0) {
        throw InputError("entry (" + std::to_string(u) + "," + std::to_string(v) +
                         ") must be finite and nonnegative");
      }
      if (v > u && !approx_equal(x, at(v, u))) {
        throw InputError("not symmetric at (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }
  if (!check_triangle) return;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      for (int w = 0; w < n_; ++w) {
        const double via = at(u, w) + at(w, v);
        if (at(u, v) > via && !approx_equal(at(u, v), via)) {
          throw InputError("triangle inequality violated: (" + std::to_string(u) + "," +
                           std::to_string(v) + ") via " + std::to_string(w));
        }
      }
    }
  }
}

Metric Metric::tree(WeightedTree t) {
  TreeDistanceIndex index(t);
  return Metric(std::make_shared<const TreeData>(TreeData{std::move(t), std::move(index)}));
}

Metric Metric::points(PointSet p) {
  if (p.size() < 1) throw InputError("empty point set");
  return Metric(std::make_shared<const PointSet>(std::move(p)));
}

Metric Metric::matrix(DistanceMatrix m) {
  return Metric(std::make_shared<const DistanceMatrix>(std::move(m)));
}

Metric::Kind Metric::kind() const { return static_cast<Kind>(data_.index()); }

int Metric::size() const {
  switch (kind()) {
    case Kind::Tree: return std::get<0>(data_)->tree.size();
    case Kind::Points: return std::get<1>(data_)->size();
    case Kind::Matrix: return std::get<2>(data_)->size();
  }
  return 0;
}

double Metric::distance(Vertex u, Vertex v) const {
  const int n = size();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::out_of_range("metric index out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ") with n=" + std::to_string(n));
  }
  return unchecked_distance(u, v);
}

double Metric::unchecked_distance(Vertex u, Vertex v) const {
  if (u == v) return 0.0;
  switch (kind()) {
    case Kind::Tree: return std::get<0>(data_)->index.distance(u, v);
    case Kind::Points: return std::get<1>(data_)->distance(u, v);
    case Kind::Matrix: return std::get<2>(data_)->at(u, v);
  }
  return 0.0;
}

const WeightedTree* Metric::as_tree() const {
  return kind() == Kind::Tree ? &std::get<0>(data_)->tree : nullptr;
}
const TreeDistanceIndex* Metric::tree_index() const {
  return kind() == Kind::Tree ? &std::get<0>(data_)->index : nullptr;
}
const PointSet* Metric::as_points() const {
  return kind() == Kind::Points ? std::get<1>(data_).get() : nullptr;
}
const DistanceMatrix* Metric::as_matrix() const {
  return kind() == Kind::Matrix ? std::get<2>(data_).get() : nullptr;
}

Metric uniform_line(int n) {
  if (n < 1) throw InputError("uniform_line needs n >= 1");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = static_cast<double>(i) / n;
  return Metric::points(PointSet(1, std::move(xs)));
}

}  // namespace hopspan
