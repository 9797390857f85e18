#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace clonewt {

using VertexSet = boost::dynamic_bitset<>;

// Finite undirected simple graph over vertices 0..n-1. Self-loops are never
// stored; closed neighborhoods add the vertex itself.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return adj_.size(); }
  bool empty() const { return adj_.empty(); }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  VertexSet closed_neighborhood(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool is_clique(const VertexSet& s) const;

  // Induced subgraph on `keep` (in the given order).
  Graph induced(const std::vector<std::size_t>& keep) const;
  // G \ {v}: vertices after v shift down by one.
  Graph without(std::size_t v) const;
  // Vertex k of the result is vertex perm[k] of this graph.
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(std::size_t v) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n) { return Graph(n); }
  static Graph path(std::size_t n);

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

VertexSet singleton(std::size_t n, std::size_t v);
std::vector<std::size_t> members(const VertexSet& s);

// Edge-list text: optional "# labels: a b c" header (or "# n: 4"), then one
// "u v" pair of 0-based indices per line. Blank lines and other '#' lines
// are ignored.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);
std::string to_edge_list(const Graph& g);
// One line: "n=4: 0-1 1-2 1-3 2-3".
std::string to_compact(const Graph& g);

// All automorphisms by backtracking with degree pruning.
std::vector<std::vector<std::size_t>> automorphisms(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Random graph: `vertices` base vertices with independent edges of
// probability `edge_prob`, then `twins` extra vertices each copying the
// closed neighborhood of a random earlier vertex.
Graph random_graph(std::size_t vertices, double edge_prob, std::size_t twins, std::uint64_t seed);

}  // namespace clonewt
