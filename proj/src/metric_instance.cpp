#include "clonewt/metric_instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "clonewt/errors.hpp"
#include "clonewt/random.hpp"

namespace clonewt {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
  }
  return labels;
}

double euclidean(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw ValidationError("duplicate label '" + l + "'");
    }
  }
}

}  // namespace

MetricInstance MetricInstance::from_points(std::vector<std::string> labels, std::vector<Point> points, double tol) {
  if (points.empty()) {
    throw ValidationError("instance has no elements");
  }
  if (labels.empty()) {
    labels = default_labels(points.size());
  }
  if (labels.size() != points.size()) {
    throw ValidationError("label count does not match point count");
  }
  check_labels(labels);
  const std::size_t dim = points.front().size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw ValidationError("point " + std::to_string(i) + " has dimension " + std::to_string(points[i].size()) +
                            ", expected " + std::to_string(dim));
    }
    for (double c : points[i]) {
      if (!std::isfinite(c)) {
        throw ValidationError("point " + std::to_string(i) + " has a non-finite coordinate");
      }
    }
  }
  MetricInstance inst;
  inst.form_ = Form::points;
  inst.dim_ = dim;
  inst.labels_ = std::move(labels);
  inst.points_ = std::move(points);
  const std::size_t n = inst.points_.size();
  inst.dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = euclidean(inst.points_[i], inst.points_[j]);
      inst.dist_[i * n + j] = d;
      inst.dist_[j * n + i] = d;
    }
  }
  inst.validate(tol);
  return inst;
}

MetricInstance MetricInstance::from_matrix(std::vector<std::string> labels, std::vector<std::vector<double>> distances,
                                           double tol) {
  const std::size_t n = distances.size();
  if (n == 0) {
    throw ValidationError("instance has no elements");
  }
  if (labels.empty()) {
    labels = default_labels(n);
  }
  if (labels.size() != n) {
    throw ValidationError("label count does not match matrix size");
  }
  check_labels(labels);
  MetricInstance inst;
  inst.form_ = Form::matrix;
  inst.labels_ = std::move(labels);
  inst.dist_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) {
      throw ValidationError("distance matrix row " + std::to_string(i) + " has " +
                            std::to_string(distances[i].size()) + " entries, expected " + std::to_string(n));
    }
    inst.dist_.insert(inst.dist_.end(), distances[i].begin(), distances[i].end());
  }
  inst.validate(tol);
  return inst;
}

void MetricInstance::validate(double tol) const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = distance(i, j);
      if (!std::isfinite(d)) {
        throw ValidationError("distance d(" + std::to_string(i) + "," + std::to_string(j) + ") is not finite");
      }
      if (d < 0.0) {
        throw ValidationError("negative distance d(" + std::to_string(i) + "," + std::to_string(j) + ") = " + fmt(d));
      }
    }
    if (distance(i, i) != 0.0) {
      throw ValidationError("zero-diagonal violation: d(" + std::to_string(i) + "," + std::to_string(i) +
                            ") = " + fmt(distance(i, i)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(i, j) != distance(j, i)) {
        throw ValidationError("asymmetric matrix: d(" + std::to_string(i) + "," + std::to_string(j) +
                              ") = " + fmt(distance(i, j)) + " but d(" + std::to_string(j) + "," + std::to_string(i) +
                              ") = " + fmt(distance(j, i)));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) {
          continue;
        }
        if (distance(i, k) > distance(i, j) + distance(j, k) + tol) {
          throw ValidationError("triangle inequality violated on (" + std::to_string(i) + "," + std::to_string(k) +
                                ") via " + std::to_string(j) + ": " + fmt(distance(i, k)) + " > " +
                                fmt(distance(i, j)) + " + " + fmt(distance(j, k)));
        }
      }
    }
  }
}

std::vector<std::vector<double>> MetricInstance::matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = distance(i, j);
    }
  }
  return m;
}

std::optional<std::size_t> MetricInstance::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t MetricInstance::index_of(std::string_view label) const {
  if (auto i = find(label)) {
    return *i;
  }
  throw ValidationError("element '" + std::string(label) + "' not found");
}

MetricInstance MetricInstance::permuted(const std::vector<std::size_t>& order) const {
  const std::size_t n = size();
  if (order.size() != n) {
    throw ValidationError("permutation size mismatch");
  }
  MetricInstance out;
  out.form_ = form_;
  out.dim_ = dim_;
  out.labels_.reserve(n);
  for (auto i : order) {
    out.labels_.push_back(labels_.at(i));
    if (form_ == Form::points) {
      out.points_.push_back(points_.at(i));
    }
  }
  out.dist_.assign(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out.dist_[a * n + b] = distance(order[a], order[b]);
    }
  }
  return out;
}

MetricInstance MetricInstance::without(std::size_t i) const {
  if (size() <= 1) {
    throw ValidationError("cannot remove the only element");
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < size(); ++k) {
    if (k != i) {
      keep.push_back(k);
    }
  }
  return permuted_subset(keep);
}

MetricInstance MetricInstance::permuted_subset(const std::vector<std::size_t>& keep) const {
  const std::size_t m = keep.size();
  MetricInstance out;
  out.form_ = form_;
  out.dim_ = dim_;
  for (auto k : keep) {
    out.labels_.push_back(labels_.at(k));
    if (form_ == Form::points) {
      out.points_.push_back(points_.at(k));
    }
  }
  out.dist_.assign(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      out.dist_[a * m + b] = distance(keep[a], keep[b]);
    }
  }
  return out;
}

MetricInstance MetricInstance::embedded(std::size_t extra) const {
  if (form_ != Form::points) {
    throw ValidationError("embedding requires a point-form instance");
  }
  std::vector<Point> pts = points_;
  for (auto& p : pts) {
    p.resize(p.size() + extra, 0.0);
  }
  return from_points(labels_, std::move(pts));
}

DistanceSet DistanceSet::of(const MetricInstance& inst) {
  DistanceSet ds;
  const std::size_t n = inst.size();
  ds.per_element.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        continue;
      }
      ds.per_element[i].push_back(inst.distance(i, j));
      if (i < j) {
        ds.all.push_back(inst.distance(i, j));
      }
    }
    std::sort(ds.per_element[i].begin(), ds.per_element[i].end());
  }
  std::sort(ds.all.begin(), ds.all.end());
  return ds;
}

std::size_t DistanceSet::distinct_count() const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (k == 0 || all[k] != all[k - 1]) {
      ++count;
    }
  }
  return count;
}

MetricInstance load_instance(const nlohmann::json& doc, double tol) {
  if (!doc.is_object()) {
    throw ValidationError("instance document must be a JSON object");
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) {
      throw ValidationError("'labels' must be an array");
    }
    for (const auto& l : doc["labels"]) {
      labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
  }
  std::string kind;
  if (doc.contains("kind")) {
    kind = doc["kind"].get<std::string>();
  } else if (doc.contains("points")) {
    kind = "points";
  } else if (doc.contains("distances")) {
    kind = "matrix";
  }
  try {
    if (kind == "points") {
      if (!doc.contains("points")) {
        throw ValidationError("kind 'points' requires a 'points' array");
      }
      auto points = doc["points"].get<std::vector<Point>>();
      if (doc.contains("dim")) {
        const auto dim = doc["dim"].get<std::size_t>();
        for (std::size_t i = 0; i < points.size(); ++i) {
          if (points[i].size() != dim) {
            throw ValidationError("point " + std::to_string(i) + " does not have declared dim " + std::to_string(dim));
          }
        }
      }
      return MetricInstance::from_points(std::move(labels), std::move(points), tol);
    }
    if (kind == "matrix") {
      if (!doc.contains("distances")) {
        throw ValidationError("kind 'matrix' requires a 'distances' array");
      }
      return MetricInstance::from_matrix(std::move(labels), doc["distances"].get<std::vector<std::vector<double>>>(),
                                         tol);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("instance schema violation: ") + e.what());
  }
  throw ValidationError("instance 'kind' must be \"points\" or \"matrix\"");
}

MetricInstance load_instance_csv(std::string_view text, double tol) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto a = cell.find_first_not_of(" \t\r");
      const auto b = cell.find_last_not_of(" \t\r");
      cells.push_back(a == std::string::npos ? std::string() : cell.substr(a, b - a + 1));
    }
    return cells;
  };
  if (!std::getline(in, line)) {
    throw ValidationError("empty CSV");
  }
  auto labels = split(line);
  if (!labels.empty() && labels.front().empty()) {
    labels.erase(labels.begin());
  }
  const std::size_t n = labels.size();
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    auto cells = split(line);
    if (cells.size() == n + 1) {
      cells.erase(cells.begin());
    }
    if (cells.size() != n) {
      throw ValidationError("CSV row " + std::to_string(rows.size()) + " has " + std::to_string(cells.size()) +
                            " values, expected " + std::to_string(n));
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(c, &used));
        if (used != c.size()) {
          throw std::invalid_argument(c);
        }
      } catch (const std::exception&) {
        throw ValidationError("CSV: not a number: '" + c + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) {
    throw ValidationError("CSV matrix is not square");
  }
  return MetricInstance::from_matrix(std::move(labels), std::move(rows), tol);
}

MetricInstance load_instance_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return load_instance_csv(ss.str(), tol);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return load_instance(doc, tol);
}

nlohmann::json to_json(const MetricInstance& inst) {
  nlohmann::json doc;
  doc["labels"] = inst.labels();
  if (inst.form() == MetricInstance::Form::points) {
    doc["kind"] = "points";
    doc["dim"] = inst.dim();
    doc["points"] = inst.points();
  } else {
    doc["kind"] = "matrix";
    doc["distances"] = inst.matrix();
  }
  return doc;
}

MetricInstance random_instance(const EuclideanKind& kind, std::uint64_t seed) {
  if (kind.n == 0 || kind.dim == 0) {
    throw ValidationError("euclidean instance needs n >= 1 and dim >= 1");
  }
  auto rng = make_rng(seed, 0x45);
  std::vector<Point> pts(kind.n, Point(kind.dim));
  for (auto& p : pts) {
    for (auto& c : p) {
      c = uniform01(rng);
    }
  }
  return MetricInstance::from_points({}, std::move(pts));
}

namespace {

// Floyd–Warshall repeated until no entry changes, updating (i, k) and (k, i)
// together so the result is symmetric and every triple satisfies
// d(i,k) <= d(i,j) + d(j,k) as evaluated in floating point.
void close_metric(std::vector<std::vector<double>>& d) {
  const std::size_t n = d.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
          const double via = d[i][j] + d[j][k];
          if (via < d[i][k]) {
            d[i][k] = via;
            d[k][i] = via;
            changed = true;
          }
        }
      }
    }
  }
}

}  // namespace

MetricInstance random_instance(const ShortestPathKind& kind, std::uint64_t seed) {
  if (kind.n == 0) {
    throw ValidationError("shortest-path instance needs n >= 1");
  }
  if (!(kind.density >= 0.0 && kind.density <= 1.0)) {
    throw ValidationError("edge density must lie in [0, 1]");
  }
  auto rng = make_rng(seed, 0x53);
  const std::size_t n = kind.n;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0.0;
  }
  // Dyadic lengths k/1024 keep every path sum exact.
  auto length = [&] { return static_cast<double>(uniform_int(rng, 1, 1024)) / 1024.0; };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[uniform_int(rng, 0, i - 1)]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double w = length();
    d[order[i]][order[i + 1]] = w;
    d[order[i + 1]][order[i]] = w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uniform01(rng) < kind.density) {
        const double w = length();
        if (w < d[i][j]) {
          d[i][j] = w;
          d[j][i] = w;
        }
      }
    }
  }
  close_metric(d);
  return MetricInstance::from_matrix({}, std::move(d), 0.0);
}

MetricInstance add_clone(const MetricInstance& inst, std::size_t x, double eps, std::uint64_t seed,
                         std::string label) {
  if (x >= inst.size()) {
    throw ValidationError("clone source " + std::to_string(x) + " not found");
  }
  if (!(eps >= 0.0)) {
    throw ValidationError("clone radius must be non-negative");
  }
  if (label.empty()) {
    label = inst.label(x) + "'";
  }
  while (inst.find(label)) {
    label += "'";
  }
  auto rng = make_rng(seed, 0x43);
  const double radius = uniform01(rng) * eps;
  auto labels = inst.labels();
  labels.push_back(label);

  if (inst.form() == MetricInstance::Form::points) {
    const std::size_t dim = inst.dim();
    Point dir(dim, 0.0);
    double norm = 0.0;
    if (dim == 1) {
      dir[0] = uniform01(rng) < 0.5 ? -1.0 : 1.0;
      norm = 1.0;
    } else {
      do {
        norm = 0.0;
        for (auto& c : dir) {
          c = uniform(rng, -1.0, 1.0);
          norm += c * c;
        }
        norm = std::sqrt(norm);
      } while (norm == 0.0 || norm > 1.0);
    }
    Point y = inst.points()[x];
    for (std::size_t k = 0; k < dim; ++k) {
      y[k] += radius * dir[k] / norm;
    }
    auto pts = inst.points();
    pts.push_back(std::move(y));
    return MetricInstance::from_points(std::move(labels), std::move(pts));
  }

  // Matrix form: d(y, z) drawn from the upper half of the envelope
  // [d(x,z), d(x,z) + d(x,y)], then closed along shortest paths through y's
  // row only. The original distances are never modified.
  const std::size_t n = inst.size();
  auto d = inst.matrix();
  std::vector<double> row(n + 1, 0.0);
  for (std::size_t z = 0; z < n; ++z) {
    row[z] = z == x ? radius : inst.distance(x, z) + uniform01(rng) * radius;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t z = 0; z < n; ++z) {
        const double via = row[w] + d[w][z];
        if (via < row[z]) {
          row[z] = via;
          changed = true;
        }
      }
    }
  }
  for (std::size_t z = 0; z < n; ++z) {
    d[z].push_back(row[z]);
  }
  d.push_back(row);
  return MetricInstance::from_matrix(std::move(labels), std::move(d));
}

}  // namespace clonewt
