#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace clonewt {

using Point = std::vector<double>;

// A finite pseudo-metric space. Either backed by Euclidean points or by an
// explicit distance matrix; distances are cached in both cases. Immutable
// once built.
class MetricInstance {
 public:
  enum class Form { points, matrix };

  static constexpr double default_tolerance = 1e-9;

  // Both factories validate (symmetry, zero diagonal, non-negativity,
  // triangle inequality up to `tol`) and throw ValidationError naming the
  // offending entry or triple.
  static MetricInstance from_points(std::vector<std::string> labels, std::vector<Point> points,
                                    double tol = default_tolerance);
  static MetricInstance from_matrix(std::vector<std::string> labels,
                                    std::vector<std::vector<double>> distances,
                                    double tol = default_tolerance);

  std::size_t size() const { return labels_.size(); }
  Form form() const { return form_; }
  std::size_t dim() const { return dim_; }

  double distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Point>& points() const { return points_; }
  std::vector<std::vector<double>> matrix() const;

  // Throws ValidationError when the label is unknown.
  std::size_t index_of(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;

  // Drops element i (used by removal-based audits).
  MetricInstance without(std::size_t i) const;
  // Reorders elements: result element k is this element order[k].
  MetricInstance permuted(const std::vector<std::size_t>& order) const;
  // Point form only: appends `extra` zero coordinates to every point.
  MetricInstance embedded(std::size_t extra) const;

 private:
  MetricInstance() = default;
  void validate(double tol) const;
  MetricInstance permuted_subset(const std::vector<std::size_t>& keep) const;

  Form form_ = Form::matrix;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Point> points_;
  std::vector<double> dist_;
};

// Sorted multiset of pairwise distances plus per-element distance lists.
struct DistanceSet {
  std::vector<double> all;                  // i < j pairs, ascending
  std::vector<std::vector<double>> per_element;  // d(x, z) for z != x, ascending

  static DistanceSet of(const MetricInstance& inst);
  std::size_t distinct_count() const;
};

// Instance document:
// {"labels": [...], "kind": "points"|"matrix", "dim": n, "points": [[...]], "distances": [[...]]}
MetricInstance load_instance(const nlohmann::json& doc, double tol = MetricInstance::default_tolerance);
// CSV matrix: header row of labels followed by the square matrix.
MetricInstance load_instance_csv(std::string_view text, double tol = MetricInstance::default_tolerance);
// Dispatches on extension (.csv) and otherwise parses JSON.
MetricInstance load_instance_file(const std::string& path, double tol = MetricInstance::default_tolerance);
nlohmann::json to_json(const MetricInstance& inst);

struct EuclideanKind {
  std::size_t dim = 2;
  std::size_t n = 1;
};
struct ShortestPathKind {
  std::size_t n = 1;
  double density = 0.5;  // probability of each extra edge beyond a spanning path
};

// Seeded generators. Shortest-path metrics use dyadic edge lengths so
// closure sums are exact and the triangle inequality holds with tol 0.
MetricInstance random_instance(const EuclideanKind& kind, std::uint64_t seed);
MetricInstance random_instance(const ShortestPathKind& kind, std::uint64_t seed);

// Appends an approximate clone y of element x with d(x, y) <= eps. The new
// element is labelled `label` (default: "<x>'" made unique).
MetricInstance add_clone(const MetricInstance& inst, std::size_t x, double eps, std::uint64_t seed,
                         std::string label = {});

}  // namespace clonewt
