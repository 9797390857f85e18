#include "clonewt/filtration.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "clonewt/errors.hpp"

namespace clonewt {

Graph neighborhood_graph(const MetricInstance& inst, double r) {
  if (!(r >= 0.0)) {
    throw ValidationError("radius must be non-negative");
  }
  const std::size_t n = inst.size();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (inst.distance(i, j) <= r) {
        g.add_edge(i, j);
      }
    }
  }
  g.set_labels(inst.labels());
  return g;
}

std::vector<double> threshold_radii(const MetricInstance& inst, double alpha) {
  if (!(alpha > 0.0)) {
    throw ValidationError("alpha must be positive");
  }
  std::vector<double> radii;
  const std::size_t n = inst.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = inst.distance(i, j);
      if (d > 0.0 && d <= alpha) {
        radii.push_back(d);
      }
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

ClassPartition equivalence_classes(const Graph& g) {
  const std::size_t n = g.size();
  ClassPartition p;
  p.class_of.assign(n, 0);
  std::map<VertexSet, std::size_t> index;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = index.try_emplace(g.closed_neighborhood(v), p.classes.size());
    if (inserted) {
      p.classes.emplace_back();
    }
    p.class_of[v] = it->second;
    p.classes[it->second].push_back(v);
  }
  return p;
}

QuotientGraph quotient(const Graph& g) {
  QuotientGraph q;
  q.partition = equivalence_classes(g);
  const auto& classes = q.partition.classes;
  q.graph = Graph(classes.size());
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      const bool linked = g.adjacent(classes[a].front(), classes[b].front());
#ifndef NDEBUG
      // Equal closed neighborhoods make cross adjacency constant per class pair.
      for (auto u : classes[a]) {
        for (auto v : classes[b]) {
          assert(g.adjacent(u, v) == linked);
        }
      }
#endif
      if (linked) {
        q.graph.add_edge(a, b);
      }
    }
  }
  return q;
}

std::vector<Interval> forbidden_intervals(const MetricInstance& inst, std::size_t x, std::size_t y) {
  if (x == y || x >= inst.size() || y >= inst.size()) {
    throw ValidationError("forbidden intervals need two distinct elements");
  }
  const double radius = inst.distance(x, y);
  std::vector<Interval> raw;
  for (std::size_t z = 0; z < inst.size(); ++z) {
    if (z == y) {
      continue;
    }
    const double c = inst.distance(x, z);
    raw.push_back({std::max(0.0, c - radius), c + radius});
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

double total_length(const std::vector<Interval>& intervals) {
  double sum = 0.0;
  for (const auto& iv : intervals) {
    sum += iv.length();
  }
  return sum;
}

}  // namespace clonewt
