#include "clonewt/metric_weighting.hpp"

#include <algorithm>
#include <tuple>

#include "clonewt/errors.hpp"
#include "clonewt/filtration.hpp"
#include "clonewt/random.hpp"

namespace clonewt {

namespace {

struct Pair {
  double d;
  std::size_t i;
  std::size_t j;
};

std::vector<Pair> sorted_pairs(const MetricInstance& inst) {
  std::vector<Pair> pairs;
  const std::size_t n = inst.size();
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.push_back({inst.distance(i, j), i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j); });
  return pairs;
}

void check_setup(const MetricInstance& inst, const MetricWeighting& mw) {
  if (inst.size() == 0) {
    throw ValidationError("instance has no elements");
  }
  if (!mw.rule) {
    throw ValidationError("metric weighting has no graph rule");
  }
}

// Calls piece(graph, lo, hi) for each constant piece [lo, hi) of the filtration
// on [0, alpha].
template <typename Piece>
void sweep(const MetricInstance& inst, double alpha, Piece&& piece) {
  const std::vector<Pair> pairs = sorted_pairs(inst);
  Graph g(inst.size());
  g.set_labels(inst.labels());
  std::size_t next = 0;
  while (next < pairs.size() && pairs[next].d <= 0.0) {
    g.add_edge(pairs[next].i, pairs[next].j);
    ++next;
  }
  double lo = 0.0;
  while (next < pairs.size() && pairs[next].d <= alpha) {
    const double r = pairs[next].d;
    piece(g, lo, r);
    while (next < pairs.size() && pairs[next].d == r) {
      g.add_edge(pairs[next].i, pairs[next].j);
      ++next;
    }
    lo = r;
  }
  if (lo < alpha) {
    piece(g, lo, alpha);
  }
}

}  // namespace

WeightVector evaluate_all(const MetricInstance& inst, const MetricWeighting& mw, Arithmetic mode) {
  check_setup(inst, mw);
  const Density& nu = mw.density;
  const std::size_t n = inst.size();
  if (mode == Arithmetic::exact) {
    if (!mw.rule->exact()) {
      throw ValidationError("rule '" + mw.rule->name() + "' has no exact arithmetic");
    }
    std::vector<Rational> total(n, Rational(0));
    sweep(inst, nu.alpha(), [&](const Graph& g, double lo, double hi) {
      const Rational mass = nu.cdf_exact(decimal_rational(hi)) - nu.cdf_exact(decimal_rational(lo));
      if (mass == 0) {
        return;
      }
      const WeightVector w = (*mw.rule)(g);
      for (std::size_t x = 0; x < n; ++x) {
        total[x] += mass * w.rational(x);
      }
    });
    return WeightVector::exact(std::move(total));
  }
  std::vector<double> total(n, 0.0);
  sweep(inst, nu.alpha(), [&](const Graph& g, double lo, double hi) {
    const double mass = nu.cdf(hi) - nu.cdf(lo);
    if (mass == 0.0) {
      return;
    }
    const WeightVector w = (*mw.rule)(g);
    for (std::size_t x = 0; x < n; ++x) {
      total[x] += mass * w[x];
    }
  });
  return WeightVector::approx(std::move(total));
}

double evaluate(const MetricInstance& inst, std::size_t x, const MetricWeighting& mw) {
  if (x >= inst.size()) {
    throw ValidationError("element index out of range");
  }
  return evaluate_all(inst, mw)[x];
}

std::vector<double> riemann_oracle_all(const MetricInstance& inst, const MetricWeighting& mw, std::size_t steps) {
  check_setup(inst, mw);
  if (steps == 0) {
    throw ValidationError("oracle needs at least one step");
  }
  const double alpha = mw.density.alpha();
  const double h = alpha / static_cast<double>(steps);
  std::vector<double> total(inst.size(), 0.0);
  Graph prev;
  WeightVector w;
  for (std::size_t k = 0; k < steps; ++k) {
    const double r = (static_cast<double>(k) + 0.5) * h;
    Graph g = neighborhood_graph(inst, r);
    if (k == 0 || !(g == prev)) {
      w = (*mw.rule)(g);
      prev = std::move(g);
    }
    const double mass = mw.density.pdf(r) * h;
    for (std::size_t x = 0; x < inst.size(); ++x) {
      total[x] += mass * w[x];
    }
  }
  return total;
}

double riemann_oracle(const MetricInstance& inst, std::size_t x, const MetricWeighting& mw, std::size_t steps) {
  if (x >= inst.size()) {
    throw ValidationError("element index out of range");
  }
  return riemann_oracle_all(inst, mw, steps)[x];
}

double riemann_bound(const MetricInstance& inst, const MetricWeighting& mw, std::size_t steps) {
  const double alpha = mw.density.alpha();
  const std::size_t knots = mw.density.knot_radii().size() - 2;
  const auto ell = static_cast<double>(threshold_radii(inst, alpha).size() + knots);
  return mw.density.nu_bar() * ell * alpha / static_cast<double>(steps) + 1e-9;
}

std::vector<std::size_t> sample_indices(const WeightVector& w, std::size_t k, std::uint64_t seed) {
  if (w.size() == 0) {
    throw ValidationError("cannot sample from an empty weight vector");
  }
  std::vector<double> cumulative(w.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    cumulative[i] = acc;
  }
  auto rng = make_rng(seed);
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    const double u = uniform01(rng) * acc;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    out.push_back(std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), w.size() - 1));
  }
  return out;
}

}  // namespace clonewt
