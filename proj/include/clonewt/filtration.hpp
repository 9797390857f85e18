#pragma once

#include <cstddef>
#include <vector>

#include "clonewt/graph.hpp"
#include "clonewt/metric_instance.hpp"

namespace clonewt {

// Partition of the vertices by equality of closed neighborhoods.
struct ClassPartition {
  std::vector<std::vector<std::size_t>> classes;  // ordered by smallest member
  std::vector<std::size_t> class_of;

  std::size_t count() const { return classes.size(); }
  std::size_t class_size(std::size_t v) const { return classes[class_of[v]].size(); }
};

// G collapsed by equivalence; quotient vertex k stands for classes[k].
struct QuotientGraph {
  Graph graph;
  ClassPartition partition;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double r) const { return lo <= r && r <= hi; }
};

// Edge (x, y) iff d(x, y) <= r, x != y.
Graph neighborhood_graph(const MetricInstance& inst, double r);

// Distinct pairwise distances in (0, alpha], ascending.
std::vector<double> threshold_radii(const MetricInstance& inst, double alpha);

ClassPartition equivalence_classes(const Graph& g);
QuotientGraph quotient(const Graph& g);

// Merged union of [d(x,z) - d(x,y), d(x,z) + d(x,y)] clipped to [0, inf),
// z ranging over the instance minus y (x included).
std::vector<Interval> forbidden_intervals(const MetricInstance& inst, std::size_t x, std::size_t y);
double total_length(const std::vector<Interval>& intervals);

}  // namespace clonewt
