#include "clonewt/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "clonewt/cliques.hpp"
#include "clonewt/errors.hpp"
#include "clonewt/filtration.hpp"
#include "clonewt/graph_sharing.hpp"
#include "clonewt/random.hpp"

namespace clonewt {

namespace {

PropertyTally& find_tally(std::vector<PropertyTally>& all, const std::string& name) {
  for (auto& t : all) {
    if (t.name == name) {
      return t;
    }
  }
  throw std::out_of_range("unknown property " + name);
}

void record(PropertyTally& t, bool violated, const std::string& witness) {
  ++t.cases;
  if (violated) {
    if (t.violations == 0) {
      t.witness = witness;
    }
    ++t.violations;
  }
}

// Lipschitz check: |a - b| <= bound, tracking observed / bound.
void record_bound(PropertyTally& t, double observed, double bound, const std::string& witness) {
  bool violated = false;
  if (bound > 0.0) {
    const double slack = observed / bound;
    t.worst_slack = std::max(t.worst_slack, slack);
    violated = slack > 1.0 + 1e-9;
  } else {
    violated = observed > 0.0;
  }
  record(t, violated, witness);
}

double gap(const WeightVector& a, std::size_t i, const WeightVector& b, std::size_t j) {
  if (a.is_exact() && b.is_exact()) {
    return to_double(abs(a.rational(i) - b.rational(j)));
  }
  return std::abs(a[i] - b[j]);
}

bool same(const WeightVector& a, std::size_t i, const WeightVector& b, std::size_t j, double tol) {
  if (a.is_exact() && b.is_exact()) {
    return a.rational(i) == b.rational(j);
  }
  return std::abs(a[i] - b[j]) <= tol;
}

std::string where(std::size_t index, std::uint64_t seed) {
  return "instance " + std::to_string(index) + " (seed " + std::to_string(seed) + ")";
}

MetricInstance symmetric_dyadic(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> ks(32);
  std::iota(ks.begin(), ks.end(), 1);
  for (std::size_t i = ks.size(); i > 1; --i) {
    std::swap(ks[i - 1], ks[uniform_int(rng, 0, i - 1)]);
  }
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n / 2; ++i) {
    pts.push_back({-static_cast<double>(ks[i]) / 32.0});
  }
  if (n % 2 == 1) {
    pts.push_back({0.0});
  }
  for (std::size_t i = n / 2; i-- > 0;) {
    pts.push_back({static_cast<double>(ks[i]) / 32.0});
  }
  std::sort(pts.begin(), pts.end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    labels.push_back("e" + std::to_string(i));
  }
  return MetricInstance::from_points(std::move(labels), std::move(pts));
}

void isometry_search(const MetricInstance& inst, std::vector<std::size_t>& perm, std::vector<bool>& used,
                     std::vector<std::vector<std::size_t>>& out) {
  const std::size_t k = perm.size();
  const std::size_t n = inst.size();
  if (k == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) {
      continue;
    }
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = inst.distance(k, j) == inst.distance(c, perm[j]);
    }
    if (!ok) {
      continue;
    }
    used[c] = true;
    perm.push_back(c);
    isometry_search(inst, perm, used, out);
    perm.pop_back();
    used[c] = false;
  }
}

// Smallest vertex in each automorphism orbit.
std::vector<std::size_t> orbit_representatives(const Graph& g) {
  std::vector<std::size_t> rep(g.size());
  std::iota(rep.begin(), rep.end(), 0);
  for (const auto& sigma : automorphisms(g)) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      rep[v] = std::min(rep[v], sigma[v]);
    }
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    rep[v] = rep[rep[v]];
  }
  return rep;
}

class PlantedAsymmetry final : public GraphRule {
 public:
  std::string name() const override { return "planted-asymmetry"; }
  WeightVector operator()(const Graph& g) const override {
    if (g.empty()) {
      throw ValidationError("graph weighting needs at least one vertex");
    }
    const auto n = static_cast<long>(g.size());
    std::vector<Rational> w(g.size(), Rational(1, n + 1));
    w[0] = Rational(2, n + 1);
    return WeightVector::exact(std::move(w));
  }
};

}  // namespace

bool MetricSuiteReport::clean() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.violations == 0; });
}

const PropertyTally& MetricSuiteReport::property(const std::string& name) const {
  for (const auto& t : properties) {
    if (t.name == name) {
      return t;
    }
  }
  throw std::out_of_range("unknown property " + name);
}

MetricInstance audit_instance(std::size_t index, std::uint64_t seed, std::size_t max_n) {
  if (max_n < 2) {
    throw ValidationError("audit instances need max_n >= 2");
  }
  auto rng = make_rng(seed, index);
  const auto n = static_cast<std::size_t>(uniform_int(rng, 2, max_n));
  switch (index % 4) {
    case 0:
      return random_instance(EuclideanKind{static_cast<std::size_t>(uniform_int(rng, 1, 3)), n}, rng());
    case 1:
      return random_instance(ShortestPathKind{n, uniform(rng, 0.1, 0.6)}, rng());
    case 2: {
      const auto clones = static_cast<std::size_t>(uniform_int(rng, 1, n - 1));
      MetricInstance inst = random_instance(EuclideanKind{2, n - clones}, rng());
      for (std::size_t c = 0; c < clones; ++c) {
        const auto x = static_cast<std::size_t>(uniform_int(rng, 0, inst.size() - 1));
        inst = add_clone(inst, x, 0.0, rng());
      }
      return inst;
    }
    default:
      return symmetric_dyadic(n, rng);
  }
}

std::vector<std::vector<std::size_t>> self_isometries(const MetricInstance& inst, std::size_t max_n) {
  const std::size_t n = inst.size();
  std::vector<std::vector<std::size_t>> out;
  if (n <= max_n) {
    std::vector<std::size_t> perm;
    std::vector<bool> used(n, false);
    isometry_search(inst, perm, used, out);
    return out;
  }
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  out.push_back(id);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> p = id;
      std::swap(p[i], p[j]);
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = inst.distance(a, b) == inst.distance(p[a], p[b]);
        }
      }
      if (ok) {
        out.push_back(p);
      }
    }
  }
  return out;
}

MetricSuiteReport run_metric_suite(const MetricWeighting& mw, const MetricSuiteConfig& config) {
  MetricSuiteReport report;
  report.rule = mw.rule->name();
  for (const char* name : {"positivity", "symmetry", "clone_fairness", "locality", "continuity", "embedding"}) {
    report.properties.push_back(PropertyTally{name, 0, 0, 0.0, {}});
  }
  auto& positivity = find_tally(report.properties, "positivity");
  auto& symmetry = find_tally(report.properties, "symmetry");
  auto& fairness = find_tally(report.properties, "clone_fairness");
  auto& locality = find_tally(report.properties, "locality");
  auto& continuity = find_tally(report.properties, "continuity");
  auto& embedding = find_tally(report.properties, "embedding");

  const Arithmetic mode = mw.rule->exact() ? Arithmetic::exact : Arithmetic::floating;
  const double alpha = mw.density.alpha();
  const double nu_bar = mw.density.nu_bar();
  const double float_tol = 1e-12;

  for (std::size_t i = 0; i < config.instances; ++i) {
    const MetricInstance inst = audit_instance(i, config.seed, config.max_n);
    const std::size_t n = inst.size();
    const auto size = static_cast<double>(n);
    const WeightVector f = evaluate_all(inst, mw, mode);
    auto rng = make_rng(config.seed ^ 0xA5A5A5A5ULL, i);
    ++report.instances;

    for (std::size_t x = 0; x < n; ++x) {
      const bool positive = f.is_exact() ? f.rational(x) > 0 : f[x] > 0.0;
      record(positivity, !positive, where(i, config.seed) + ": f(" + inst.label(x) + ") = " + f.str(x));
    }

    for (const auto& sigma : self_isometries(inst, config.max_isometry_n)) {
      for (std::size_t x = 0; x < n; ++x) {
        record(symmetry, !same(f, x, f, sigma[x], float_tol),
               where(i, config.seed) + ": f(" + inst.label(x) + ") = " + f.str(x) + " but f(" +
                   inst.label(sigma[x]) + ") = " + f.str(sigma[x]));
      }
    }

    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        record_bound(fairness, gap(f, x, f, y), 2.0 * nu_bar * size * inst.distance(x, y),
                     where(i, config.seed) + ": |f(" + inst.label(x) + ") - f(" + inst.label(y) + ")| = " +
                         shortest(gap(f, x, f, y)) + " at distance " + shortest(inst.distance(x, y)));
      }
    }

    const auto x = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
    for (double eps : {0.0, config.clone_eps * alpha}) {
      const MetricInstance grown = add_clone(inst, x, eps, rng());
      const WeightVector g = evaluate_all(grown, mw, mode);
      const double d = grown.distance(x, n);
      for (std::size_t z = 0; z < n; ++z) {
        if (inst.distance(x, z) < alpha) {
          continue;
        }
        record_bound(locality, gap(g, z, f, z), 2.0 * nu_bar * size * d,
                     where(i, config.seed) + ": clone of " + inst.label(x) + " at distance " + shortest(d) +
                         " moves f(" + inst.label(z) + ") by " + shortest(gap(g, z, f, z)));
      }
    }

    if (inst.form() == MetricInstance::Form::points) {
      const double delta = config.delta * alpha;
      std::vector<Point> moved = inst.points();
      for (auto& p : moved) {
        Point dir(p.size());
        double norm = 0.0;
        while (norm == 0.0) {
          norm = 0.0;
          for (auto& c : dir) {
            c = uniform(rng, -1.0, 1.0);
            norm += c * c;
          }
          norm = std::sqrt(norm);
        }
        const double len = delta * uniform01(rng);
        for (std::size_t a = 0; a < p.size(); ++a) {
          p[a] += dir[a] / norm * len;
        }
      }
      const MetricInstance shifted = MetricInstance::from_points(inst.labels(), std::move(moved));
      const WeightVector g = evaluate_all(shifted, mw, mode);
      for (std::size_t y = 0; y < n; ++y) {
        record_bound(continuity, gap(g, y, f, y), 2.0 * nu_bar * size * size * delta,
                     where(i, config.seed) + ": moving points by <= " + shortest(delta) + " moves f(" +
                         inst.label(y) + ") by " + shortest(gap(g, y, f, y)));
      }

      const WeightVector e = evaluate_all(inst.embedded(1), mw, mode);
      for (std::size_t y = 0; y < n; ++y) {
        record(embedding, !same(e, y, f, y, 0.0),
               where(i, config.seed) + ": embedding changes f(" + inst.label(y) + ") from " + f.str(y) + " to " +
                   e.str(y));
      }
    }
  }
  return report;
}

bool GraphSuiteReport::clean() const {
  return distribution.violations == 0 && positivity.violations == 0 && symmetry.violations == 0 &&
         locality.violations == 0;
}

Graph suite_graph(std::size_t index, std::uint64_t seed, std::size_t max_vertices) {
  if (max_vertices == 0) {
    throw ValidationError("graph suite needs max_vertices >= 1");
  }
  auto rng = make_rng(seed, index);
  const auto base = static_cast<std::size_t>(uniform_int(rng, 1, max_vertices));
  const auto twins = static_cast<std::size_t>(uniform_int(rng, 0, max_vertices - base));
  const double p = uniform(rng, 0.2, 0.8);
  return random_graph(base, p, twins, rng());
}

GraphSuiteReport run_graph_suite(const GraphRule& rule, const GraphSuiteConfig& config) {
  GraphSuiteReport report;
  report.rule = rule.name();
  const bool exact = rule.exact();
  const double tol = exact ? 0.0 : config.float_tol;
  auto compare = [&](const WeightVector& a, std::size_t i, const WeightVector& b, std::size_t j) {
    if (!exact) {
      report.worst_float_gap = std::max(report.worst_float_gap, std::abs(a[i] - b[j]));
    }
    return same(a, i, b, j, tol);
  };

  for (std::size_t i = 0; i < config.graphs; ++i) {
    const Graph g = suite_graph(i, config.seed, config.max_vertices);
    const std::string tag = "graph " + std::to_string(i) + " [" + to_compact(g) + "]";
    const std::vector<std::size_t> orbit = orbit_representatives(g);
    const WeightVector w = rule(g);
    ++report.graphs;
    record(report.distribution, !w.is_distribution(), tag + ": weights do not form a distribution");
    if (exact) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        record(report.positivity, !(w.rational(v) > 0), tag + ": w(" + std::to_string(v) + ") = " + w.str(v));
      }
    }

    for (std::size_t v = 0; v < g.size(); ++v) {
      const std::size_t rep = orbit[v];
      if (rep != v) {
        record(report.symmetry, !compare(w, v, w, rep),
               tag + ": w(" + std::to_string(v) + ") = " + w.str(v) + " but w(" + std::to_string(rep) +
                   ") = " + w.str(rep));
      }
    }

    const ClassPartition classes = equivalence_classes(g);
    for (const auto& cls : classes.classes) {
      if (cls.size() < 2) {
        continue;
      }
      const VertexSet hood = g.closed_neighborhood(cls.front());
      for (std::size_t z : cls) {
        const WeightVector reduced = rule(g.without(z));
        for (std::size_t y = 0; y < g.size(); ++y) {
          if (hood[y]) {
            continue;
          }
          const std::size_t k = y < z ? y : y - 1;
          record(report.locality, !compare(reduced, k, w, y),
                 tag + ": removing clone " + std::to_string(z) + " moves w(" + std::to_string(y) + ") from " +
                     w.str(y) + " to " + reduced.str(k));
        }
      }
    }
  }
  return report;
}

std::optional<std::size_t> clique_cover_invariance(const Graph& g) {
  const ClassPartition classes = equivalence_classes(g);
  const CliqueCover full = maximal_cliques(g);
  for (const auto& cls : classes.classes) {
    if (cls.size() < 2) {
      continue;
    }
    for (std::size_t x : cls) {
      std::vector<std::vector<std::size_t>> expected;
      for (const auto& k : full.cliques) {
        std::vector<std::size_t> m;
        for (std::size_t v : members(k)) {
          if (v != x) {
            m.push_back(v < x ? v : v - 1);
          }
        }
        expected.push_back(std::move(m));
      }
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      std::vector<std::vector<std::size_t>> actual = maximal_cliques(g.without(x)).as_lists();
      std::sort(actual.begin(), actual.end());
      if (actual != expected) {
        return x;
      }
    }
  }
  return std::nullopt;
}

RulePtr planted_asymmetry_rule() { return std::make_shared<PlantedAsymmetry>(); }

Graph paw_graph() {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  g.set_labels({"a", "b", "c", "d"});
  return g;
}

// ---------------------------------------------------------------------------
// Strong-locality propagation.

std::string Affine::str() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const Rational& coef, const char* symbol) {
    if (coef == 0) {
      return;
    }
    const bool neg = coef < 0;
    const Rational mag = neg ? Rational(-coef) : coef;
    if (first) {
      out << (neg ? "-" : "");
    } else {
      out << (neg ? " - " : " + ");
    }
    if (*symbol == '\0') {
      out << to_string(mag);
    } else {
      if (mag != 1) {
        out << to_string(mag) << ' ';
      }
      out << symbol;
    }
    first = false;
  };
  term(c[0], "");
  term(c[1], "w1");
  term(c[2], "w2");
  return first ? "0" : out.str();
}

namespace {

Affine operator+(Affine a, const Affine& b) {
  for (int i = 0; i < 3; ++i) a.c[i] += b.c[i];
  return a;
}

Affine operator-(Affine a, const Affine& b) {
  for (int i = 0; i < 3; ++i) a.c[i] -= b.c[i];
  return a;
}

Affine scaled(Affine a, const Rational& s) {
  for (auto& v : a.c) v *= s;
  return a;
}

Affine constant(const Rational& v) {
  Affine a;
  a.c[0] = v;
  return a;
}

Affine symbol(int k) {
  Affine a;
  a.c[k] = 1;
  return a;
}

bool is_zero(const Affine& a) { return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0; }

// Linear equations e = 0 over (w1, w2), kept in reduced row-echelon form.
class Equations {
 public:
  bool consistent() const { return consistent_; }

  Affine reduce(Affine e) const {
    for (const auto& [pivot, row] : rows_) {
      if (e.c[pivot] != 0) {
        e = e - scaled(row, e.c[pivot]);
      }
    }
    return e;
  }

  // Returns false when the equation was already implied.
  bool add(const Affine& e) {
    Affine r = reduce(e);
    if (is_zero(r)) {
      return false;
    }
    int pivot = r.c[1] != 0 ? 1 : (r.c[2] != 0 ? 2 : 0);
    if (pivot == 0) {
      consistent_ = false;
      return true;
    }
    r = scaled(r, 1 / r.c[pivot]);
    for (auto& [p, row] : rows_) {
      if (row.c[pivot] != 0) {
        row = row - scaled(r, row.c[pivot]);
      }
    }
    rows_.emplace_back(pivot, r);
    return true;
  }

 private:
  std::vector<std::pair<int, Affine>> rows_;
  bool consistent_ = true;
};

struct SpiderState {
  std::vector<std::string> names;
  Graph graph;
  std::vector<std::optional<Affine>> values;
};

}  // namespace

DemoResult strict_locality_demo(std::size_t additions) {
  const std::vector<std::pair<std::string, std::string>> growth = {
      {"c2", "d"}, {"b2", "c2"}, {"a2", "b2"}, {"c3", "d"}, {"b3", "c3"}, {"a3", "b3"}};
  if (additions > growth.size()) {
    throw ValidationError("the spider has only six vertices beyond the first path");
  }
  DemoResult result;
  Equations all;
  Equations symmetric_only;

  SpiderState s;
  s.names = {"a1", "b1", "c1", "d"};
  s.graph = Graph::path(4);
  s.values.assign(4, std::nullopt);

  auto index = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(s.names.begin(), s.names.end(), name) - s.names.begin());
  };
  auto shown = [&](const Affine& v) {
    const Affine r = all.consistent() ? all.reduce(v) : v;
    return (r.c[1] == 0 && r.c[2] == 0) ? r.str() : v.str();
  };
  auto equation = [&](const Affine& lhs, const Affine& rhs, bool from_symmetry, DemoStep& step) {
    const bool fresh = all.add(lhs - rhs);
    if (from_symmetry) {
      symmetric_only.add(lhs - rhs);
    }
    if (fresh) {
      result.equations.push_back(lhs.str() + " = " + rhs.str());
      step.notes.push_back("equation " + result.equations.back() +
                           (all.consistent() ? "" : " contradicts the earlier equations"));
    }
  };

  auto normalize = [&](DemoStep& step) {
    std::vector<std::size_t> unknown;
    Affine known;
    for (std::size_t v = 0; v < s.names.size(); ++v) {
      if (s.values[v]) {
        known = known + *s.values[v];
      } else {
        unknown.push_back(v);
      }
    }
    if (unknown.size() == 1) {
      const Affine v = constant(1) - known;
      s.values[unknown[0]] = v;
      step.notes.push_back("normalization: " + s.names[unknown[0]] + " = " + v.str() + " = " + shown(v));
      return true;
    }
    if (unknown.size() >= 2 && is_zero(all.reduce(known - constant(1)))) {
      std::string list;
      for (std::size_t v : unknown) {
        s.values[v] = constant(0);
        list += (list.empty() ? "" : ", ") + s.names[v];
      }
      step.notes.push_back("normalization: known weights already sum to 1, so " + list + " = 0");
      return true;
    }
    return false;
  };

  auto symmetrize = [&](DemoStep& step) {
    bool changed = false;
    for (const auto& sigma : automorphisms(s.graph)) {
      for (std::size_t v = 0; v < s.names.size(); ++v) {
        const std::size_t u = sigma[v];
        if (!s.values[v] || u == v) {
          continue;
        }
        if (!s.values[u]) {
          s.values[u] = s.values[v];
          step.notes.push_back("symmetry: " + s.names[u] + " = " + s.names[v] + " = " + shown(*s.values[v]));
          changed = true;
        } else if (!is_zero(all.reduce(*s.values[v] - *s.values[u]))) {
          step.notes.push_back("symmetry: " + s.names[u] + " and " + s.names[v] + " must agree");
          equation(*s.values[v], *s.values[u], true, step);
          changed = true;
          if (!all.consistent()) {
            return changed;
          }
        }
      }
    }
    return changed;
  };

  auto snapshot = [&](DemoStep& step) {
    step.vertices = s.names;
    for (const auto& v : s.values) {
      step.values.push_back(v ? shown(*v) : "?");
    }
  };

  {
    DemoStep step;
    s.values[index("a1")] = symbol(1);
    s.values[index("b1")] = symbol(2);
    step.notes.push_back("start: path a1-b1-c1-d with w(a1) = w1, w(b1) = w2");
    symmetrize(step);
    Affine total;
    for (const auto& v : s.values) total = total + *v;
    equation(total, constant(1), false, step);
    snapshot(step);
    result.steps.push_back(std::move(step));
  }

  for (std::size_t k = 0; k < additions && all.consistent(); ++k) {
    const auto& [name, attach] = growth[k];
    DemoStep step;
    step.added = name;
    const std::size_t x = index(attach);
    const std::size_t n = s.names.size();
    Graph next(n + 1, s.graph.edges());
    next.add_edge(n, x);
    s.names.push_back(name);
    s.graph = next;
    s.values.push_back(std::nullopt);

    const VertexSet hood = s.graph.closed_neighborhood(x);
    std::string kept;
    for (std::size_t v = 0; v < n; ++v) {
      if (hood[v]) {
        s.values[v].reset();
      } else if (s.values[v]) {
        kept += (kept.empty() ? "" : ", ") + s.names[v];
      }
    }
    step.notes.push_back("add " + name + " next to " + attach + "; strong locality keeps " +
                         (kept.empty() ? std::string("nothing") : kept) + " (outside N[" + attach + "])");

    bool changed = true;
    while (changed && all.consistent()) {
      changed = normalize(step);
      if (!changed) {
        changed = symmetrize(step);
      }
    }
    if (all.consistent()) {
      Affine total;
      bool complete = true;
      for (const auto& v : s.values) {
        if (v) {
          total = total + *v;
        } else {
          complete = false;
        }
      }
      if (complete) {
        equation(total, constant(1), false, step);
      }
    }
    snapshot(step);
    result.steps.push_back(std::move(step));
  }

  result.contradiction = !all.consistent();
  Affine total;
  for (const auto& v : s.values) {
    if (v) {
      total = total + *v;
    }
  }
  result.total_mass = symmetric_only.reduce(total).str();
  return result;
}

// ---------------------------------------------------------------------------
// Conjecture search.

ConjectureFindings conjecture_search(ConjectureTarget target, std::size_t budget, std::uint64_t seed,
                                     const std::vector<RulePtr>& rules) {
  ConjectureFindings out;
  out.target = target;
  out.budget = budget;
  out.seed = seed;
  constexpr std::size_t kept = 10;
  const Graph paw = paw_graph();

  std::vector<RulePtr> active = rules;
  if (active.empty()) {
    if (target == ConjectureTarget::mcc_axiom2) {
      active = {mcca_rule(), mccp_rule()};
    } else {
      active = {entropy_rule()};
    }
  }

  for (std::size_t i = 0; i < budget; ++i) {
    auto rng = make_rng(seed, i);
    const std::size_t max_n = target == ConjectureTarget::mcc_axiom2 ? 7 : 6;
    const auto n = static_cast<std::size_t>(uniform_int(rng, 3, max_n));
    const double p = uniform(rng, 0.3, 0.8);
    const Graph g = random_graph(n, p, 0, rng());
    ++out.graphs_tested;
    const bool paw_class = isomorphic(g, paw);

    for (const auto& rule : active) {
      std::optional<ConjectureWitness> found;
      if (target == ConjectureTarget::mcc_axiom2) {
        const AxiomReport rep = audit_axioms(g, *rule, {1, 2});
        const AxiomResult& ax2 = rep.axiom(2);
        if (!ax2.passed) {
          ConjectureWitness w;
          w.x = ax2.witness[0];
          w.y = ax2.witness[1];
          w.chi = chi_graph(g, *rule, w.x, w.y).str();
          found = w;
        }
      } else {
        for (std::size_t x = 0; x < g.size() && !found; ++x) {
          const RescaleReport rep = eta(g, *rule, x);
          if (!rep.consistent) {
            continue;
          }
          const auto row = chi_row(g, *rule, x);
          for (std::size_t y = 0; y < g.size(); ++y) {
            if (y != x && row[y].value < -float_sharing_tol) {
              ConjectureWitness w;
              w.x = x;
              w.y = y;
              w.chi = row[y].str();
              found = w;
              break;
            }
          }
        }
      }
      if (found) {
        found->rule = rule->name();
        found->graph = to_compact(g);
        found->paw_class = paw_class;
        out.paw_found = out.paw_found || paw_class;
        ++out.witness_count;
        if (out.witnesses.size() < kept) {
          out.witnesses.push_back(*found);
        }
      }
    }
  }

  if (out.witness_count == 0) {
    out.summary = "no counterexample in budget";
  } else {
    out.summary = std::to_string(out.witness_count) + " rule/graph witnesses among " +
                  std::to_string(out.graphs_tested) + " graphs" + (out.paw_found ? "; the paw is among them" : "");
  }
  return out;
}

}  // namespace clonewt
