#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hopspan/metric.hpp"
#include "hopspan/tree_cover.hpp"

namespace hopspan {

/// Malformed file content. The message carries the position (line:column for
/// text, a JSON path such as edges[3][2] for structural problems).
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

/// %.17g; non-finite values are rejected by the writers that cannot encode them.
std::string format_double(double x);

// Tree JSON: {"n": int, "root": int, "edges": [[u, v, w], ...]}
WeightedTree parse_tree_json(std::string_view text);
std::string tree_to_json(const WeightedTree& tree);

// Point CSV: one point per line, comma-separated coordinates.
PointSet parse_points_csv(std::string_view text);
std::string points_to_csv(const PointSet& points);

// Matrix CSV: n lines of n comma-separated entries.
DistanceMatrix parse_matrix_csv(std::string_view text, bool check_triangle = false);
std::string matrix_to_csv(const DistanceMatrix& m);

// Spanner JSON: {"real": int, "total": int, "k": int, "t": float|null, "edges": [[u, v, w], ...]}
// A null t stands for an unbounded stretch.
SpannerGraph parse_spanner_json(std::string_view text);
std::string spanner_to_json(const SpannerGraph& g);

// Cover JSON: {"gamma": int, "t": float, "L": float,
//              "trees": [{"n", "root", "edges", "point_map": [[point, vertex], ...]}, ...]}
TreeCover parse_cover_json(std::string_view text);
std::string cover_to_json(const TreeCover& cover);

enum class MetricFileKind { Auto, Tree, Points, Matrix };

/// Auto: *.json is a tree; a CSV that is square with zero diagonal and symmetric
/// is a matrix; any other CSV is a point set.
Metric parse_metric(std::string_view text, MetricFileKind kind, bool json_hint = false);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

WeightedTree load_tree(const std::filesystem::path& path);
PointSet load_points(const std::filesystem::path& path);
DistanceMatrix load_matrix(const std::filesystem::path& path);
SpannerGraph load_spanner(const std::filesystem::path& path);
TreeCover load_cover(const std::filesystem::path& path);
Metric load_metric(const std::filesystem::path& path, MetricFileKind kind = MetricFileKind::Auto);

void save_tree(const std::filesystem::path& path, const WeightedTree& tree);
void save_points(const std::filesystem::path& path, const PointSet& points);
void save_matrix(const std::filesystem::path& path, const DistanceMatrix& m);
void save_spanner(const std::filesystem::path& path, const SpannerGraph& g);
void save_cover(const std::filesystem::path& path, const TreeCover& cover);

}  // namespace hopspan
