#include "clonewt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "clonewt/errors.hpp"
#include "clonewt/random.hpp"

namespace clonewt {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    add_edge(u, v);
  }
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) {
    throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) {
    return;
  }
  adj_[u].set(v);
  adj_[v].set(u);
}

VertexSet Graph::closed_neighborhood(std::size_t v) const {
  VertexSet s = adj_[v];
  s.set(v);
  return s;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) {
    twice += row.count();
  }
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (auto u = s.find_first(); u != VertexSet::npos; u = s.find_next(u)) {
    VertexSet rest = s;
    rest.reset(u);
    if (!rest.is_subset_of(adj_[u])) {
      return false;
    }
  }
  return true;
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
  Graph g(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) {
        g.add_edge(i, j);
      }
    }
  }
  if (!labels_.empty()) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (auto v : keep) {
      labels.push_back(labels_[v]);
    }
    g.labels_ = std::move(labels);
  }
  return g;
}

Graph Graph::without(std::size_t v) const {
  std::vector<std::size_t> keep;
  keep.reserve(size());
  for (std::size_t u = 0; u < size(); ++u) {
    if (u != v) {
      keep.push_back(u);
    }
  }
  return induced(keep);
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const { return induced(perm); }

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size()) {
    throw ValidationError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::string Graph::label(std::size_t v) const { return labels_.empty() ? std::to_string(v) : labels_.at(v); }

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    g.add_edge(u, u + 1);
  }
  return g;
}

VertexSet singleton(std::size_t n, std::size_t v) {
  VertexSet s(n);
  s.set(v);
  return s;
}

std::vector<std::size_t> members(const VertexSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
    out.push_back(v);
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> labels;
  std::size_t declared = 0;
  bool have_count = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    if (line[first] == '#') {
      std::istringstream header(line.substr(first + 1));
      std::string key;
      header >> key;
      if (key == "labels:") {
        std::string label;
        while (header >> label) {
          labels.push_back(label);
        }
      } else if (key == "n:") {
        header >> declared;
        have_count = true;
      }
      continue;
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0) {
      throw ValidationError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  std::size_t n = labels.empty() ? declared : labels.size();
  if (labels.empty() && !have_count) {
    for (const auto& [u, v] : edges) {
      n = std::max({n, u + 1, v + 1});
    }
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds vertex count " +
                            std::to_string(n));
    }
  }
  Graph g(n, edges);
  g.set_labels(std::move(labels));
  return g;
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (!g.labels().empty()) {
    out << "# labels:";
    for (const auto& l : g.labels()) {
      out << ' ' << l;
    }
    out << '\n';
  } else {
    out << "# n: " << g.size() << '\n';
  }
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
  return out.str();
}

std::string to_compact(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.size() << ':';
  for (const auto& [u, v] : g.edges()) {
    out << ' ' << u << '-' << v;
  }
  return out.str();
}

namespace {

// Maps vertices of `a` onto vertices of `b` preserving adjacency. Visits
// every complete bijection; the visitor returns false to stop.
void match(const Graph& a, const Graph& b, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    return;
  }
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (stop) {
      return;
    }
    if (i == n) {
      stop = !visit(image);
      return;
    }
    for (std::size_t c = 0; c < n && !stop; ++c) {
      if (used[c] || a.degree(i) != b.degree(c)) {
        continue;
      }
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = a.adjacent(i, j) == b.adjacent(c, image[j]);
      }
      if (!ok) {
        continue;
      }
      used[c] = true;
      image[i] = c;
      extend(i + 1);
      used[c] = false;
    }
  };
  extend(0);
}

}  // namespace

std::vector<std::vector<std::size_t>> automorphisms(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  match(g, g, [&](const std::vector<std::size_t>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) {
    return false;
  }
  bool found = false;
  match(a, b, [&](const std::vector<std::size_t>&) {
    found = true;
    return false;
  });
  return found;
}

Graph random_graph(std::size_t vertices, double edge_prob, std::size_t twins, std::uint64_t seed) {
  auto rng = make_rng(seed);
  Graph g(vertices + twins);
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = u + 1; v < vertices; ++v) {
      if (uniform01(rng) < edge_prob) {
        g.add_edge(u, v);
      }
    }
  }
  for (std::size_t t = 0; t < twins; ++t) {
    const std::size_t twin = vertices + t;
    if (twin == 0) {
      continue;
    }
    const auto source = static_cast<std::size_t>(uniform_int(rng, 0, twin - 1));
    g.add_edge(twin, source);
    for (std::size_t v = 0; v < twin; ++v) {
      if (g.adjacent(source, v)) {
        g.add_edge(twin, v);
      }
    }
  }
  return g;
}

}  // namespace clonewt
