#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "clonewt/graph.hpp"

namespace clonewt {

struct CliqueCover {
  std::vector<VertexSet> cliques;                 // sorted lexicographically by members
  std::vector<std::size_t> membership;            // c_v
  std::vector<std::vector<std::size_t>> as_lists() const;
};

// Every maximal clique, via Bron–Kerbosch with Tomita pivoting. Throws
// CapExceeded beyond `cap` cliques.
CliqueCover maximal_cliques(const Graph& g, std::size_t cap = 1'000'000);

using CliquePartition = std::vector<std::vector<std::size_t>>;

// Streams every partition of V into cliques exactly once, in canonical
// order: each block holds the smallest unassigned vertex, and blocks are
// tried in lexicographic order of their sorted member lists (singleton
// first). The callback returns false to stop early. Throws CapExceeded when
// |V| exceeds `max_vertices`.
void for_each_clique_partition(const Graph& g, const std::function<bool(const CliquePartition&)>& visit,
                               std::size_t max_vertices = 12);
std::vector<CliquePartition> clique_partitions(const Graph& g, std::size_t max_vertices = 12);

}  // namespace clonewt
