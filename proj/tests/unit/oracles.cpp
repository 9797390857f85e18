#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace oracle {

Adjacency adjacency(std::size_t n, const Edges& edges) {
  Adjacency adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : edges) {
    adj[u][v] = adj[v][u] = true;
  }
  return adj;
}

Adjacency adjacency(const clonewt::Graph& g) {
  Adjacency adj(g.size(), std::vector<bool>(g.size(), false));
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      adj[u][v] = u != v && g.adjacent(u, v);
    }
  }
  return adj;
}

namespace {

void partitions(const Adjacency& adj, const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (block[u] == block[v] && !adj[u][v]) {
            return;
          }
        }
      }
      visit(block, used);
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    visit(block, 0);
    return;
  }
  go(0, 0);
}

}  // namespace

std::size_t clique_partition_count(const Adjacency& adj) {
  std::size_t count = 0;
  partitions(adj, [&](const std::vector<std::size_t>&, std::size_t) { ++count; });
  return count;
}

double min_partition_entropy(const Adjacency& adj, const std::vector<double>& pi) {
  double best = std::numeric_limits<double>::infinity();
  partitions(adj, [&](const std::vector<std::size_t>& block, std::size_t used) {
    std::vector<double> mass(used, 0.0);
    for (std::size_t v = 0; v < block.size(); ++v) {
      mass[block[v]] += pi[v];
    }
    double h = 0.0;
    for (double m : mass) {
      if (m > 0) {
        h -= m * std::log2(m);
      }
    }
    best = std::min(best, h);
  });
  return best;
}

std::vector<clonewt::Rational> class_uniform(const Adjacency& adj) {
  const std::size_t n = adj.size();
  auto closed = [&](std::size_t v) {
    auto row = adj[v];
    row[v] = true;
    return row;
  };
  std::vector<std::size_t> cls(n);
  std::vector<std::vector<bool>> reps;
  for (std::size_t v = 0; v < n; ++v) {
    const auto nv = closed(v);
    auto it = std::find(reps.begin(), reps.end(), nv);
    cls[v] = static_cast<std::size_t>(it - reps.begin());
    if (it == reps.end()) {
      reps.push_back(nv);
    }
  }
  std::vector<long> size(reps.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    ++size[cls[v]];
  }
  std::vector<clonewt::Rational> w;
  for (std::size_t v = 0; v < n; ++v) {
    w.emplace_back(clonewt::Rational(1) / (static_cast<long>(reps.size()) * size[cls[v]]));
  }
  return w;
}

std::vector<double> riemann_cu(const std::vector<std::vector<double>>& d, double alpha, std::size_t steps) {
  const std::size_t n = d.size();
  std::vector<double> total(n, 0.0);
  const double h = alpha / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const double r = (static_cast<double>(s) + 0.5) * h;
    Adjacency adj(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        adj[u][v] = u != v && d[u][v] <= r;
      }
    }
    const auto w = class_uniform(adj);
    for (std::size_t v = 0; v < n; ++v) {
      total[v] += w[v].convert_to<double>() * h / alpha;
    }
  }
  return total;
}

double overlap_1d(double a, double b, double r) { return std::max(0.0, 2 * r - std::abs(a - b)); }

}  // namespace oracle
