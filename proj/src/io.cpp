#include "hopspan/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace hopspan {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw FormatError(line_col(text, at) + ": invalid JSON");
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where + ": missing \"" + key + "\"");
  return *it;
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<long long>();
}

double as_double(const json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError(where + ": expected a number");
  return j.get<double>();
}

Vertex as_vertex(const json& j, const std::string& where) {
  const long long v = as_int(j, where);
  if (v < 0 || v > std::numeric_limits<Vertex>::max()) throw FormatError(where + ": vertex out of range");
  return static_cast<Vertex>(v);
}

std::vector<WeightedEdge> parse_edges(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw FormatError(where + ": expected an array");
  std::vector<WeightedEdge> edges;
  edges.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 3) throw FormatError(at + ": expected [u, v, w]");
    edges.push_back({as_vertex(e[0], at + "[0]"), as_vertex(e[1], at + "[1]"), as_double(e[2], at + "[2]")});
  }
  return edges;
}

// Re-throws constructor validation errors with the file location prefixed.
template <typename F>
auto with_context(const std::string& where, F&& make) {
  try {
    return make();
  } catch (const FormatError&) {
    throw;
  } catch (const InputError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

WeightedTree tree_from(const json& obj, const std::string& where) {
  const long long n = as_int(field(obj, "n", where), where + ".n");
  if (n < 1 || n > std::numeric_limits<Vertex>::max()) throw FormatError(where + ".n: must be >= 1");
  Vertex root = 0;
  if (obj.contains("root")) root = as_vertex(obj["root"], where + ".root");
  auto edges = parse_edges(field(obj, "edges", where), where + ".edges");
  return with_context(where, [&] { return WeightedTree(static_cast<int>(n), std::move(edges), root); });
}

void append_edges(std::string& out, std::span<const WeightedEdge> edges) {
  out += "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(edges[i].u) + ", " + std::to_string(edges[i].v) + ", " +
           format_double(edges[i].w) + "]";
  }
  out += "]";
}

void append_tree_fields(std::string& out, const WeightedTree& t) {
  out += "\"n\": " + std::to_string(t.size()) + ", \"root\": " + std::to_string(t.root()) + ", \"edges\": ";
  append_edges(out, t.edges());
}

std::string finite_or_null(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

// Splits CSV text into numeric rows, skipping blank lines.
std::vector<std::vector<double>> parse_csv_rows(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    std::vector<double> row;
    std::size_t cell_start = 0;
    while (true) {
      std::size_t comma = line.find(',', cell_start);
      std::string_view cell = line.substr(cell_start, comma == std::string_view::npos ? line.size() - cell_start
                                                                                      : comma - cell_start);
      const std::size_t lead = cell.find_first_not_of(" \t");
      const std::size_t trail = cell.find_last_not_of(" \t");
      const std::string where = "line " + std::to_string(line_no) + ", column " + std::to_string(cell_start + 1);
      if (lead == std::string_view::npos) throw FormatError(where + ": empty field");
      cell = cell.substr(lead, trail - lead + 1);
      double x = 0;
      const char* first = cell.data();
      if (!cell.empty() && cell.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, cell.data() + cell.size(), x);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(x)) {
        throw FormatError(where + ": not a number '" + std::string(cell) + "'");
      }
      row.push_back(x);
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  return rows;
}

PointSet points_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw FormatError("point file: no points");
  const std::size_t d = rows[0].size();
  std::vector<double> coords;
  coords.reserve(rows.size() * d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) {
      throw FormatError("point " + std::to_string(i) + ": expected " + std::to_string(d) + " coordinates, got " +
                        std::to_string(rows[i].size()));
    }
    coords.insert(coords.end(), rows[i].begin(), rows[i].end());
  }
  return PointSet(static_cast<int>(d), std::move(coords));
}

DistanceMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows, bool check_triangle) {
  const std::size_t n = rows.size();
  if (n == 0) throw FormatError("matrix file: no rows");
  std::vector<double> d;
  d.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw FormatError("row " + std::to_string(i) + ": expected " + std::to_string(n) + " entries, got " +
                        std::to_string(rows[i].size()));
    }
    d.insert(d.end(), rows[i].begin(), rows[i].end());
  }
  return with_context("matrix", [&] { return DistanceMatrix(static_cast<int>(n), std::move(d), check_triangle); });
}

bool looks_like_matrix(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n || rows[i][i] != 0.0) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!approx_equal(rows[i][j], rows[j][i])) return false;
    }
  }
  return n > 0;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

WeightedTree parse_tree_json(std::string_view text) { return tree_from(parse_json(text), "tree"); }

std::string tree_to_json(const WeightedTree& tree) {
  std::string out = "{";
  append_tree_fields(out, tree);
  out += "}\n";
  return out;
}

PointSet parse_points_csv(std::string_view text) { return points_from_rows(parse_csv_rows(text)); }

std::string points_to_csv(const PointSet& points) {
  std::string out;
  for (Vertex i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c) out += ",";
      out += format_double(p[c]);
    }
    out += "\n";
  }
  return out;
}

DistanceMatrix parse_matrix_csv(std::string_view text, bool check_triangle) {
  return matrix_from_rows(parse_csv_rows(text), check_triangle);
}

std::string matrix_to_csv(const DistanceMatrix& m) {
  std::string out;
  for (Vertex u = 0; u < m.size(); ++u) {
    for (Vertex v = 0; v < m.size(); ++v) {
      if (v) out += ",";
      out += format_double(m.at(u, v));
    }
    out += "\n";
  }
  return out;
}

SpannerGraph parse_spanner_json(std::string_view text) {
  const json obj = parse_json(text);
  const std::string where = "spanner";
  const long long real = as_int(field(obj, "real", where), where + ".real");
  const long long total = as_int(field(obj, "total", where), where + ".total");
  const long long k = as_int(field(obj, "k", where), where + ".k");
  const json& tj = field(obj, "t", where);
  const double t = tj.is_null() ? kUnreachable : as_double(tj, where + ".t");
  if (real < 0 || total < real || total > std::numeric_limits<Vertex>::max()) {
    throw FormatError(where + ": need 0 <= real <= total");
  }
  auto edges = parse_edges(field(obj, "edges", where), where + ".edges");
  return with_context(where, [&] {
    return SpannerGraph(static_cast<int>(real), static_cast<int>(total), std::move(edges), static_cast<int>(k), t);
  });
}

std::string spanner_to_json(const SpannerGraph& g) {
  std::string out = "{\"real\": " + std::to_string(g.real_count()) + ", \"total\": " +
                    std::to_string(g.total_count()) + ", \"k\": " + std::to_string(g.declared_k()) +
                    ", \"t\": " + finite_or_null(g.declared_t()) + ", \"edges\": ";
  append_edges(out, g.edges());
  out += "}\n";
  return out;
}

TreeCover parse_cover_json(std::string_view text) {
  const json obj = parse_json(text);
  const std::string where = "cover";
  TreeCover cover;
  const long long gamma = as_int(field(obj, "gamma", where), where + ".gamma");
  cover.declared_stretch = as_double(field(obj, "t", where), where + ".t");
  cover.declared_lightness = as_double(field(obj, "L", where), where + ".L");
  const json& trees = field(obj, "trees", where);
  if (!trees.is_array()) throw FormatError(where + ".trees: expected an array");
  if (gamma != static_cast<long long>(trees.size())) {
    throw FormatError(where + ".gamma: says " + std::to_string(gamma) + " but " + std::to_string(trees.size()) +
                      " trees are listed");
  }
  for (std::size_t j = 0; j < trees.size(); ++j) {
    const std::string at = where + ".trees[" + std::to_string(j) + "]";
    cover.trees.push_back(tree_from(trees[j], at));
    const json& pm = field(trees[j], "point_map", at);
    if (!pm.is_array()) throw FormatError(at + ".point_map: expected an array");
    std::vector<Vertex> map(pm.size(), -1);
    for (std::size_t i = 0; i < pm.size(); ++i) {
      const std::string pat = at + ".point_map[" + std::to_string(i) + "]";
      if (!pm[i].is_array() || pm[i].size() != 2) throw FormatError(pat + ": expected [point, vertex]");
      const Vertex p = as_vertex(pm[i][0], pat + "[0]");
      const Vertex v = as_vertex(pm[i][1], pat + "[1]");
      if (static_cast<std::size_t>(p) >= map.size() || map[p] >= 0) {
        throw FormatError(pat + ": point " + std::to_string(p) + " is out of range or listed twice");
      }
      map[p] = v;
    }
    cover.point_map.push_back(std::move(map));
  }
  if (cover.trees.empty()) throw FormatError(where + ": empty cover");
  with_context(where, [&] {
    cover.validate(cover.point_count());
    return 0;
  });
  return cover;
}

std::string cover_to_json(const TreeCover& cover) {
  std::string out = "{\"gamma\": " + std::to_string(cover.size()) + ", \"t\": " +
                    finite_or_null(cover.declared_stretch) + ", \"L\": " + finite_or_null(cover.declared_lightness) +
                    ", \"trees\": [";
  for (int j = 0; j < cover.size(); ++j) {
    if (j) out += ", ";
    out += "{";
    append_tree_fields(out, cover.trees[j]);
    out += ", \"point_map\": [";
    for (std::size_t p = 0; p < cover.point_map[j].size(); ++p) {
      if (p) out += ", ";
      out += "[" + std::to_string(p) + ", " + std::to_string(cover.point_map[j][p]) + "]";
    }
    out += "]}";
  }
  out += "]}\n";
  return out;
}

Metric parse_metric(std::string_view text, MetricFileKind kind, bool json_hint) {
  if (kind == MetricFileKind::Tree || (kind == MetricFileKind::Auto && json_hint)) {
    return Metric::tree(parse_tree_json(text));
  }
  const auto rows = parse_csv_rows(text);
  if (kind == MetricFileKind::Matrix || (kind == MetricFileKind::Auto && looks_like_matrix(rows))) {
    return Metric::matrix(matrix_from_rows(rows, false));
  }
  return Metric::points(points_from_rows(rows));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
  if (!out) throw InputError("write failed: " + path.string());
}

namespace {

template <typename F>
auto load_with_name(const std::filesystem::path& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace

WeightedTree load_tree(const std::filesystem::path& p) { return load_with_name(p, parse_tree_json); }
PointSet load_points(const std::filesystem::path& p) { return load_with_name(p, parse_points_csv); }
DistanceMatrix load_matrix(const std::filesystem::path& p) {
  return load_with_name(p, [](std::string_view t) { return parse_matrix_csv(t); });
}
SpannerGraph load_spanner(const std::filesystem::path& p) { return load_with_name(p, parse_spanner_json); }
TreeCover load_cover(const std::filesystem::path& p) { return load_with_name(p, parse_cover_json); }
Metric load_metric(const std::filesystem::path& p, MetricFileKind kind) {
  const bool json_hint = p.extension() == ".json";
  return load_with_name(p, [&](std::string_view t) { return parse_metric(t, kind, json_hint); });
}

void save_tree(const std::filesystem::path& p, const WeightedTree& t) { write_file(p, tree_to_json(t)); }
void save_points(const std::filesystem::path& p, const PointSet& s) { write_file(p, points_to_csv(s)); }
void save_matrix(const std::filesystem::path& p, const DistanceMatrix& m) { write_file(p, matrix_to_csv(m)); }
void save_spanner(const std::filesystem::path& p, const SpannerGraph& g) { write_file(p, spanner_to_json(g)); }
void save_cover(const std::filesystem::path& p, const TreeCover& c) { write_file(p, cover_to_json(c)); }

}  // namespace hopspan
