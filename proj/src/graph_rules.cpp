#include "clonewt/graph_rules.hpp"

#include <functional>
#include <sstream>

#include "clonewt/entropy.hpp"
#include "clonewt/errors.hpp"
#include "clonewt/filtration.hpp"

namespace clonewt {

namespace {

void require_vertices(const Graph& g) {
  if (g.empty()) {
    throw ValidationError("graph weighting needs at least one vertex");
  }
}

class FunctionRule final : public GraphRule {
 public:
  using Fn = std::function<WeightVector(const Graph&)>;
  FunctionRule(std::string name, Fn fn, bool exact = true) : name_(std::move(name)), fn_(std::move(fn)), exact_(exact) {}
  std::string name() const override { return name_; }
  bool exact() const override { return exact_; }
  WeightVector operator()(const Graph& g) const override { return fn_(g); }

 private:
  std::string name_;
  Fn fn_;
  bool exact_;
};

class LiftedRule final : public GraphRule {
 public:
  explicit LiftedRule(RulePtr base) : base_(std::move(base)) {}
  std::string name() const override { return "lift:" + base_->name(); }
  bool exact() const override { return base_->exact(); }

  WeightVector operator()(const Graph& g) const override {
    require_vertices(g);
    const QuotientGraph q = quotient(g);
    const WeightVector base = (*base_)(q.graph);
    const auto& part = q.partition;
    if (base.is_exact()) {
      std::vector<Rational> w(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) {
        w[v] = base.rational(part.class_of[v]) / part.class_size(v);
      }
      return WeightVector::exact(std::move(w));
    }
    std::vector<double> w(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      w[v] = base[part.class_of[v]] / static_cast<double>(part.class_size(v));
    }
    return WeightVector::approx(std::move(w));
  }

 private:
  RulePtr base_;
};

class SmoothedRule final : public GraphRule {
 public:
  explicit SmoothedRule(RulePtr base) : base_(std::move(base)) {}
  std::string name() const override { return "smooth:" + base_->name(); }
  bool exact() const override { return base_->exact(); }

  WeightVector operator()(const Graph& g) const override {
    require_vertices(g);
    const WeightVector base = (*base_)(g);
    const std::size_t n = g.size();
    if (base.is_exact()) {
      std::vector<Rational> w(n, Rational(0));
      for (std::size_t y = 0; y < n; ++y) {
        const Rational share = base.rational(y) / (g.degree(y) + 1);
        const VertexSet nb = g.closed_neighborhood(y);
        for (auto x = nb.find_first(); x != VertexSet::npos; x = nb.find_next(x)) {
          w[x] += share;
        }
      }
      return WeightVector::exact(std::move(w));
    }
    std::vector<double> w(n, 0.0);
    for (std::size_t y = 0; y < n; ++y) {
      const double share = base[y] / static_cast<double>(g.degree(y) + 1);
      const VertexSet nb = g.closed_neighborhood(y);
      for (auto x = nb.find_first(); x != VertexSet::npos; x = nb.find_next(x)) {
        w[x] += share;
      }
    }
    return WeightVector::approx(std::move(w));
  }

 private:
  RulePtr base_;
};

}  // namespace

WeightVector w_uniform(const Graph& g) {
  require_vertices(g);
  return WeightVector::exact(std::vector<Rational>(g.size(), Rational(1, static_cast<long>(g.size()))));
}

WeightVector w_cu(const Graph& g) {
  require_vertices(g);
  const ClassPartition p = equivalence_classes(g);
  std::vector<Rational> w(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    w[v] = Rational(1, static_cast<long>(p.count() * p.class_size(v)));
  }
  return WeightVector::exact(std::move(w));
}

WeightVector w_mcca(const Graph& g, std::size_t clique_cap) {
  require_vertices(g);
  const CliqueCover cover = maximal_cliques(g, clique_cap);
  std::vector<Rational> w(g.size(), Rational(0));
  const auto total = static_cast<long>(cover.cliques.size());
  for (const auto& k : cover.cliques) {
    const Rational share(1, total * static_cast<long>(k.count()));
    for (auto v = k.find_first(); v != VertexSet::npos; v = k.find_next(v)) {
      w[v] += share;
    }
  }
  return WeightVector::exact(std::move(w));
}

WeightVector w_mccp(const Graph& g, std::size_t clique_cap) {
  require_vertices(g);
  const CliqueCover cover = maximal_cliques(g, clique_cap);
  std::vector<Rational> w(g.size(), Rational(0));
  const auto total = static_cast<long>(cover.cliques.size());
  for (const auto& k : cover.cliques) {
    Rational participation = 0;
    for (auto v = k.find_first(); v != VertexSet::npos; v = k.find_next(v)) {
      participation += Rational(1, static_cast<long>(cover.membership[v]));
    }
    for (auto v = k.find_first(); v != VertexSet::npos; v = k.find_next(v)) {
      w[v] += Rational(1, total * static_cast<long>(cover.membership[v])) / participation;
    }
  }
  return WeightVector::exact(std::move(w));
}

WeightVector w_degree(const Graph& g) {
  require_vertices(g);
  long total = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    total += static_cast<long>(g.degree(v)) + 1;
  }
  std::vector<Rational> w(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    w[v] = Rational(static_cast<long>(g.degree(v)) + 1, total);
  }
  return WeightVector::exact(std::move(w));
}

RulePtr lift_quotient(RulePtr base) { return std::make_shared<LiftedRule>(std::move(base)); }
RulePtr smooth(RulePtr base) { return std::make_shared<SmoothedRule>(std::move(base)); }

RulePtr uniform_rule() { return std::make_shared<FunctionRule>("uniform", w_uniform); }
RulePtr cu_rule() { return std::make_shared<FunctionRule>("cu", w_cu); }
RulePtr mcca_rule(std::size_t clique_cap) {
  return std::make_shared<FunctionRule>("mcca", [clique_cap](const Graph& g) { return w_mcca(g, clique_cap); });
}
RulePtr mccp_rule(std::size_t clique_cap) {
  return std::make_shared<FunctionRule>("mccp", [clique_cap](const Graph& g) { return w_mccp(g, clique_cap); });
}
RulePtr degree_rule() { return std::make_shared<FunctionRule>("degree", w_degree); }
RulePtr entropy_rule(double tol, std::size_t partition_cap) {
  return std::make_shared<FunctionRule>(
      "entropy",
      [tol, partition_cap](const Graph& g) {
        EntropyOptions opts;
        opts.tol = tol;
        opts.partition_cap = partition_cap;
        return entropy_weights(g, opts).weights;
      },
      false);
}

std::vector<std::string> registry_names() {
  return {"uniform", "cu", "mcca", "mccp", "entropy", "degree", "lift:<base>", "smooth:<base>"};
}

RulePtr make_rule(std::string_view spec, const RuleOptions& options) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const bool wrapper = head == "lift" || head == "smooth";
  auto unknown = [&] {
    std::ostringstream msg;
    msg << "unknown rule '" << spec << "'; registry:";
    for (const auto& n : registry_names()) {
      msg << ' ' << n;
    }
    return ValidationError(msg.str());
  };
  if (wrapper) {
    if (colon == std::string_view::npos) {
      throw unknown();
    }
    RulePtr base = make_rule(spec.substr(colon + 1), options);
    return head == "lift" ? lift_quotient(std::move(base)) : smooth(std::move(base));
  }
  if (colon != std::string_view::npos) {
    throw unknown();
  }
  if (head == "uniform") return uniform_rule();
  if (head == "cu") return cu_rule();
  if (head == "mcca") return mcca_rule(options.clique_cap);
  if (head == "mccp") return mccp_rule(options.clique_cap);
  if (head == "entropy") return entropy_rule(options.entropy_tol, options.partition_cap);
  if (head == "degree") return degree_rule();
  throw unknown();
}

}  // namespace clonewt
