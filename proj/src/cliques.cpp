#include "clonewt/cliques.hpp"

#include <algorithm>

#include "clonewt/errors.hpp"

namespace clonewt {

std::vector<std::vector<std::size_t>> CliqueCover::as_lists() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(cliques.size());
  for (const auto& k : cliques) {
    out.push_back(members(k));
  }
  return out;
}

namespace {

struct BronKerbosch {
  const Graph& g;
  std::size_t cap;
  std::vector<VertexSet> found;

  void run(VertexSet r, VertexSet p, VertexSet x) {
    if (p.none() && x.none()) {
      if (found.size() >= cap) {
        throw CapExceeded("maximal clique count exceeds cap " + std::to_string(cap), "--clique-cap");
      }
      found.push_back(std::move(r));
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
    const VertexSet px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = (p & g.neighbors(pivot)).count();
    for (auto u = px.find_next(pivot); u != VertexSet::npos; u = px.find_next(u)) {
      const std::size_t c = (p & g.neighbors(u)).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    const VertexSet branch = p - g.neighbors(pivot);
    for (auto v = branch.find_first(); v != VertexSet::npos; v = branch.find_next(v)) {
      VertexSet r2 = r;
      r2.set(v);
      run(std::move(r2), p & g.neighbors(v), x & g.neighbors(v));
      p.reset(v);
      x.set(v);
    }
  }
};

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = members(a);
  const auto mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace

CliqueCover maximal_cliques(const Graph& g, std::size_t cap) {
  const std::size_t n = g.size();
  CliqueCover cover;
  cover.membership.assign(n, 0);
  if (n == 0) {
    return cover;
  }
  BronKerbosch bk{g, cap, {}};
  VertexSet all(n);
  all.set();
  bk.run(VertexSet(n), all, VertexSet(n));
  std::sort(bk.found.begin(), bk.found.end(), lex_less);
  cover.cliques = std::move(bk.found);
  for (const auto& k : cover.cliques) {
    for (auto v = k.find_first(); v != VertexSet::npos; v = k.find_next(v)) {
      ++cover.membership[v];
    }
  }
  return cover;
}

namespace {

struct PartitionWalker {
  const Graph& g;
  const std::function<bool(const CliquePartition&)>& visit;
  CliquePartition blocks;
  bool stopped = false;

  void next_block(const VertexSet& remaining) {
    if (stopped) {
      return;
    }
    if (remaining.none()) {
      stopped = !visit(blocks);
      return;
    }
    const std::size_t v = remaining.find_first();
    VertexSet rest = remaining;
    rest.reset(v);
    blocks.push_back({v});
    grow(rest, rest & g.neighbors(v));
    blocks.pop_back();
  }

  // The last block is emitted as-is, then extended by each larger candidate
  // in ascending order.
  void grow(const VertexSet& rest, const VertexSet& candidates) {
    next_block(rest);
    for (auto u = candidates.find_first(); u != VertexSet::npos && !stopped; u = candidates.find_next(u)) {
      VertexSet later = candidates & g.neighbors(u);
      // Only candidates above u keep the member list sorted.
      for (auto w = later.find_first(); w != VertexSet::npos && w <= u; w = later.find_next(w)) {
        later.reset(w);
      }
      VertexSet rest2 = rest;
      rest2.reset(u);
      blocks.back().push_back(u);
      grow(rest2, later);
      blocks.back().pop_back();
    }
  }
};

}  // namespace

void for_each_clique_partition(const Graph& g, const std::function<bool(const CliquePartition&)>& visit,
                               std::size_t max_vertices) {
  if (g.size() > max_vertices) {
    throw CapExceeded("clique-partition enumeration limited to " + std::to_string(max_vertices) + " vertices, graph has " +
                          std::to_string(g.size()),
                      "--partition-cap");
  }
  PartitionWalker walker{g, visit, {}};
  VertexSet all(g.size());
  all.set();
  walker.next_block(all);
}

std::vector<CliquePartition> clique_partitions(const Graph& g, std::size_t max_vertices) {
  std::vector<CliquePartition> out;
  for_each_clique_partition(
      g,
      [&](const CliquePartition& p) {
        out.push_back(p);
        return true;
      },
      max_vertices);
  return out;
}

}  // namespace clonewt
