#include "clonewt/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clonewt/cliques.hpp"
#include "clonewt/errors.hpp"
#include "clonewt/filtration.hpp"

namespace clonewt {

namespace {

using Real = long double;

const Real inv_ln2 = 1.0L / std::log(2.0L);

Real eta(Real m) { return m > 0 ? -m * std::log2(m) : 0; }

// A clique partition of the quotient stored as block index per class.
struct Blocks {
  std::vector<std::size_t> block_of;
  std::size_t count = 0;
};

Real partition_entropy(const Blocks& p, const std::vector<Real>& q, std::vector<Real>& mass) {
  mass.assign(p.count, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    mass[p.block_of[i]] += q[i];
  }
  Real h = 0;
  for (Real m : mass) {
    h += eta(m);
  }
  return h;
}

bool mergeable(const Graph& g, const CliquePartition& part) {
  for (std::size_t a = 0; a < part.size(); ++a) {
    for (std::size_t b = a + 1; b < part.size(); ++b) {
      bool joined = true;
      for (std::size_t u : part[a]) {
        for (std::size_t v : part[b]) {
          joined = joined && g.adjacent(u, v);
        }
      }
      if (joined) {
        return true;
      }
    }
  }
  return false;
}

std::vector<Blocks> maximal_partitions(const Graph& quotient_graph, std::size_t cap) {
  std::vector<Blocks> out;
  for_each_clique_partition(
      quotient_graph,
      [&](const CliquePartition& part) {
        if (!mergeable(quotient_graph, part)) {
          Blocks b;
          b.block_of.assign(quotient_graph.size(), 0);
          b.count = part.size();
          for (std::size_t k = 0; k < part.size(); ++k) {
            for (std::size_t v : part[k]) {
              b.block_of[v] = k;
            }
          }
          out.push_back(std::move(b));
        }
        return true;
      },
      cap);
  return out;
}

bool solve_linear(std::vector<std::vector<Real>> a, std::vector<Real>& x) {
  const std::size_t n = x.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[pivot][c])) {
        pivot = r;
      }
    }
    if (a[pivot][c] == 0) {
      return false;
    }
    std::swap(a[pivot], a[c]);
    std::swap(x[pivot], x[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Real f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) {
        a[r][k] -= f * a[c][k];
      }
      x[r] -= f * x[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t k = c + 1; k < n; ++k) {
      x[c] -= a[c][k] * x[k];
    }
    x[c] /= a[c][c];
  }
  return true;
}

// Log-barrier interior point over the simplex in class-mass space.
// Stage `max_level`: maximize t subject to H_P(q) > t for every partition P.
// Stage `max_shannon`: maximize H(q) subject to H_P(q) > level.
// Iterates are offsets from a base point q0; each slack is a constant at the
// base plus an entropy difference evaluated without cancellation, and the
// base moves after every centering.
class Barrier {
 public:
  enum class Stage { max_level, max_shannon };

  // `slack[P]` is H_P(q0) - t0 (first stage) or H_P(q0) - level (second).
  Barrier(const std::vector<Blocks>& parts, std::vector<Real> base, std::vector<Real> slack, Stage stage,
          std::size_t budget)
      : parts_(parts), k_(base.size()), stage_(stage), base_(std::move(base)), slack_(std::move(slack)),
        budget_(budget) {}

  std::size_t steps() const { return steps_; }
  const std::vector<Real>& base() const { return base_; }

  void solve(Real gap) {
    const auto m = static_cast<Real>(parts_.size() + k_);
    Real tau = 1;
    for (;;) {
      center_at(tau);
      if (m / tau <= gap) {
        return;
      }
      tau *= 8;
    }
  }

  void center_at(Real tau) {
    choose_eliminated();
    std::vector<Real> x(dim(), 0);
    center(x, tau);
    rebase(x);
  }

  Real constraints() const { return static_cast<Real>(parts_.size() + k_); }

  void restart(std::vector<Real> base, std::vector<Real> slack) {
    base_ = std::move(base);
    slack_ = std::move(slack);
  }

  // Adds `delta` to every slack; false (and unchanged) if one turns non-positive.
  bool relax(Real delta) {
    for (Real s : slack_) {
      if (!(s + delta > 0)) {
        return false;
      }
    }
    for (Real& s : slack_) {
      s += delta;
    }
    return true;
  }

  // Moves the base by `dq` (summing to zero); false (and unchanged) if infeasible.
  bool move(const std::vector<Real>& dq) {
    if (!feasible_offsets(dq, 0)) {
      return false;
    }
    std::vector<Real> mass;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      slack_[p] += entropy_change(parts_[p], dq, mass);
    }
    for (std::size_t i = 0; i < k_; ++i) {
      base_[i] += dq[i];
    }
    return true;
  }

 private:
  std::size_t dim() const { return k_ - 1 + (stage_ == Stage::max_level ? 1 : 0); }

  // The eliminated coordinate is the largest mass at the current base.
  std::vector<Real> offsets(const std::vector<Real>& x) const {
    std::vector<Real> dq(k_);
    Real rest = 0;
    for (std::size_t a = 0; a + 1 < k_; ++a) {
      dq[free_[a]] = x[a];
      rest -= x[a];
    }
    dq[last_] = rest;
    return dq;
  }

  void choose_eliminated() {
    last_ = static_cast<std::size_t>(std::max_element(base_.begin(), base_.end()) - base_.begin());
    free_.clear();
    for (std::size_t i = 0; i < k_; ++i) {
      if (i != last_) {
        free_.push_back(i);
      }
    }
  }

  Real shift(const std::vector<Real>& x) const { return stage_ == Stage::max_level ? x[k_ - 1] : 0; }

  // H_P(q0 + dq) - H_P(q0); fills the block masses at q0 + dq.
  Real entropy_change(const Blocks& p, const std::vector<Real>& dq, std::vector<Real>& mass) const {
    std::vector<Real> base_mass(p.count, 0);
    std::vector<Real> delta(p.count, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      base_mass[p.block_of[i]] += base_[i];
      delta[p.block_of[i]] += dq[i];
    }
    mass.resize(p.count);
    Real change = 0;
    for (std::size_t b = 0; b < p.count; ++b) {
      mass[b] = base_mass[b] + delta[b];
      if (delta[b] != 0) {
        change -= delta[b] * std::log2(mass[b]) + base_mass[b] * std::log1p(delta[b] / base_mass[b]) * inv_ln2;
      }
    }
    return change;
  }

  bool feasible(const std::vector<Real>& x) const { return feasible_offsets(offsets(x), shift(x)); }

  bool feasible_offsets(const std::vector<Real>& dq, Real t) const {
    for (std::size_t i = 0; i < k_; ++i) {
      if (!(base_[i] + dq[i] > 0)) {
        return false;
      }
    }
    std::vector<Real> mass;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      if (!(slack_[p] + entropy_change(parts_[p], dq, mass) - t > 0)) {
        return false;
      }
    }
    return true;
  }

  void rebase(const std::vector<Real>& x) {
    const std::vector<Real> dq = offsets(x);
    std::vector<Real> mass;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      slack_[p] += entropy_change(parts_[p], dq, mass) - shift(x);
    }
    for (std::size_t i = 0; i < k_; ++i) {
      base_[i] += dq[i];
    }
  }

  void center(std::vector<Real>& x, Real tau) {
    const std::size_t d = dim();
    Real previous = std::numeric_limits<Real>::infinity();
    std::size_t stalled = 0;
    std::size_t taken = 0;
    for (;;) {
      if (++steps_ > budget_) {
        throw ConvergenceError("entropy solver exceeded its Newton step budget");
      }
      std::vector<Real> grad(d, 0);
      std::vector<std::vector<Real>> hess(d, std::vector<Real>(d, 0));
      derivatives(x, tau, grad, hess);
      std::vector<Real> scale(d);
      std::vector<Real> step(d);
      for (std::size_t i = 0; i < d; ++i) {
        scale[i] = hess[i][i] > 0 ? 1 / std::sqrt(hess[i][i]) : 1;
        step[i] = -grad[i] * scale[i];
      }
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          hess[i][j] *= scale[i] * scale[j];
        }
      }
      if (!solve_linear(hess, step)) {
        return;
      }
      for (std::size_t i = 0; i < d; ++i) {
        step[i] *= scale[i];
      }
      Real dec = 0;
      for (std::size_t i = 0; i < d; ++i) {
        dec -= grad[i] * step[i];
      }
      const Real lambda = std::sqrt(std::max<Real>(dec, 0));
      // Converged, or stalled at the precision floor.
      stalled = lambda < 1 && lambda > previous / 2 ? stalled + 1 : 0;
      if (lambda < 1e-6L || stalled >= 8 || ++taken > 500) {
        return;
      }
      previous = lambda;
      const Real here = merit(x, tau);
      Real s = 1;
      std::vector<Real> next(d);
      for (;;) {
        for (std::size_t i = 0; i < d; ++i) {
          next[i] = x[i] + s * step[i];
        }
        if (feasible(next) && merit(next, tau) <= here - 1e-4L * s * dec) {
          break;
        }
        s /= 2;
        if (s < 1e-30L) {
          return;
        }
      }
      x = next;
    }
  }

  // Barrier objective relative to the base point.
  Real merit(const std::vector<Real>& x, Real tau) const {
    const std::vector<Real> dq = offsets(x);
    Real value = 0;
    if (stage_ == Stage::max_level) {
      value -= tau * shift(x);
    } else {
      for (std::size_t i = 0; i < k_; ++i) {
        if (dq[i] != 0) {
          value += tau * (dq[i] * std::log2(base_[i] + dq[i]) + base_[i] * std::log1p(dq[i] / base_[i]) * inv_ln2);
        }
      }
    }
    for (std::size_t i = 0; i < k_; ++i) {
      value -= std::log(base_[i] + dq[i]);
    }
    std::vector<Real> mass;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      value -= std::log(slack_[p] + entropy_change(parts_[p], dq, mass) - shift(x));
    }
    return value;
  }

  // Gradient and Hessian in the reduced coordinates: direction a < k - 1 moves
  // mass from the eliminated class to free_[a]; the last slot is t in the
  // first stage. Every Hessian term is a nonnegative multiple of v v^T.
  void derivatives(const std::vector<Real>& x, Real tau, std::vector<Real>& grad,
                   std::vector<std::vector<Real>>& hess) const {
    const std::size_t d = dim();
    const std::size_t n = k_ - 1;
    const std::vector<Real> dq = offsets(x);
    std::vector<Real> q(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      q[i] = base_[i] + dq[i];
    }
    auto add_outer = [&](const std::vector<Real>& v, Real c) {
      for (std::size_t i = 0; i < d; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          hess[i][j] += c * v[i] * v[j];
        }
      }
    };
    // Separable terms c_i on each mass coordinate.
    auto add_diagonal = [&](const std::vector<Real>& c) {
      for (std::size_t a = 0; a < n; ++a) {
        hess[a][a] += c[free_[a]];
        for (std::size_t b = 0; b < n; ++b) {
          hess[a][b] += c[last_];
        }
      }
    };

    std::vector<Real> curv(k_);
    if (stage_ == Stage::max_level) {
      grad[n] -= tau;
      for (std::size_t i = 0; i < k_; ++i) {
        curv[i] = 0;
      }
    } else {
      for (std::size_t a = 0; a < n; ++a) {
        grad[a] += tau * std::log2(q[free_[a]] / q[last_]);
      }
      for (std::size_t i = 0; i < k_; ++i) {
        curv[i] = tau * inv_ln2 / q[i];
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      grad[a] -= 1 / q[free_[a]] - 1 / q[last_];
    }
    for (std::size_t i = 0; i < k_; ++i) {
      curv[i] += 1 / (q[i] * q[i]);
    }
    add_diagonal(curv);

    std::vector<Real> mass;
    std::vector<Real> ds(d);
    std::vector<Real> u(d);
    for (std::size_t pi = 0; pi < parts_.size(); ++pi) {
      const Blocks& p = parts_[pi];
      const Real s = slack_[pi] + entropy_change(p, dq, mass) - shift(x);
      const std::size_t home = p.block_of[last_];
      for (std::size_t a = 0; a < n; ++a) {
        const std::size_t blk = p.block_of[free_[a]];
        ds[a] = blk == home ? 0 : -std::log2(mass[blk] / mass[home]);
      }
      if (stage_ == Stage::max_level) {
        ds[n] = -1;
      }
      for (std::size_t a = 0; a < d; ++a) {
        grad[a] -= ds[a] / s;
      }
      add_outer(ds, 1 / (s * s));
      for (std::size_t blk = 0; blk < p.count; ++blk) {
        bool any = false;
        for (std::size_t a = 0; a < d; ++a) {
          u[a] = 0;
          if (a < n) {
            u[a] = (p.block_of[free_[a]] == blk ? 1 : 0) - (home == blk ? 1 : 0);
            any = any || u[a] != 0;
          }
        }
        if (any) {
          add_outer(u, inv_ln2 / (mass[blk] * s));
        }
      }
    }
  }

  const std::vector<Blocks>& parts_;
  std::size_t k_;
  Stage stage_;
  std::vector<Real> base_;
  std::vector<Real> slack_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::size_t last_ = 0;
  std::vector<std::size_t> free_;
};

Real min_entropy(const std::vector<Blocks>& parts, const std::vector<Real>& q) {
  Real best = std::numeric_limits<Real>::infinity();
  std::vector<Real> mass;
  for (const auto& p : parts) {
    best = std::min(best, partition_entropy(p, q, mass));
  }
  return best;
}

}  // namespace

double shannon_entropy(const std::vector<double>& masses) {
  Real h = 0;
  for (double m : masses) {
    h += eta(m);
  }
  return static_cast<double>(std::max<Real>(h, 0));
}

double graph_entropy(const Graph& g, const std::vector<double>& pi, std::size_t partition_cap) {
  if (pi.size() != g.size()) {
    throw ValidationError("distribution size does not match the graph");
  }
  Real best = std::numeric_limits<Real>::infinity();
  for_each_clique_partition(
      g,
      [&](const CliquePartition& part) {
        Real h = 0;
        for (const auto& block : part) {
          Real m = 0;
          for (std::size_t v : block) {
            m += pi[v];
          }
          h += eta(m);
        }
        best = std::min(best, h);
        return true;
      },
      partition_cap);
  return g.empty() ? 0.0 : static_cast<double>(std::max<Real>(best, 0));
}

double class_entropy(const Graph& g, const std::vector<double>& pi) {
  if (pi.size() != g.size()) {
    throw ValidationError("distribution size does not match the graph");
  }
  const ClassPartition classes = equivalence_classes(g);
  std::vector<double> masses(classes.count(), 0.0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    masses[classes.class_of[v]] += pi[v];
  }
  return shannon_entropy(masses);
}

EntropyResult entropy_weights(const Graph& g, const EntropyOptions& options) {
  if (g.empty()) {
    throw ValidationError("graph weighting needs at least one vertex");
  }
  if (!(options.tol > 0.0)) {
    throw ValidationError("entropy tolerance must be positive");
  }
  const QuotientGraph quo = quotient(g);
  const std::size_t k = quo.partition.count();
  EntropyResult result;
  std::vector<Real> q(k, 1.0L / static_cast<Real>(k));

  if (k > 1) {
    const std::vector<Blocks> parts = maximal_partitions(quo.graph, options.partition_cap);
    const Real gap = std::max<Real>(static_cast<Real>(options.tol) * options.tol, 1e-16L);
    std::vector<Real> mass;

    const Real t0 = min_entropy(parts, q) - 1;
    std::vector<Real> slack;
    for (const auto& p : parts) {
      slack.push_back(partition_entropy(p, q, mass) - t0);
    }
    Barrier first(parts, q, std::move(slack), Barrier::Stage::max_level, options.max_newton_steps);
    first.solve(gap);
    q = first.base();
    const Real level = min_entropy(parts, q);

    // Tie-break under H_P(q) > level - eps, shrinking eps from tol to gap as
    // tau grows. An iterate left infeasible by a shrink is pulled back toward
    // the first-stage point, which stays feasible by concavity.
    const std::vector<Real> top = q;
    std::vector<Real> excess;
    for (const auto& p : parts) {
      excess.push_back(partition_entropy(p, q, mass) - level);
    }
    auto slack_at_top = [&](Real eps) {
      std::vector<Real> out = excess;
      for (Real& v : out) {
        v += eps;
      }
      return out;
    };
    Real eps = std::max<Real>(static_cast<Real>(options.tol), gap);
    Barrier second(parts, top, slack_at_top(eps), Barrier::Stage::max_shannon, options.max_newton_steps);
    for (Real tau = 1;; tau *= 8) {
      second.center_at(tau);
      if (eps <= gap && second.constraints() / tau <= gap) {
        break;
      }
      const Real next = std::max(eps / 8, gap);
      if (next < eps && !second.relax(next - eps)) {
        std::vector<Real> dq(k);
        for (std::size_t i = 0; i < k; ++i) {
          dq[i] = second.base()[i] - top[i];
        }
        second.restart(top, slack_at_top(next));
        for (Real keep = 0.5L; keep > 1e-30L; keep /= 2) {
          std::vector<Real> part(k);
          for (std::size_t i = 0; i < k; ++i) {
            part[i] = keep * dq[i];
          }
          if (second.move(part)) {
            break;
          }
        }
      }
      eps = next;
    }
    q = second.base();
    result.level = static_cast<double>(level);
    result.newton_steps = first.steps() + second.steps();
    result.graph_entropy = static_cast<double>(min_entropy(parts, q));
  }

  std::vector<double> w(g.size());
  std::vector<double> class_mass(k);
  for (std::size_t c = 0; c < k; ++c) {
    class_mass[c] = static_cast<double>(q[c]);
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    w[v] = static_cast<double>(q[quo.partition.class_of[v]] / static_cast<Real>(quo.partition.class_size(v)));
  }
  result.class_entropy = shannon_entropy(class_mass);
  result.weights = WeightVector::approx(std::move(w));
  return result;
}

WeightVector w_entropy(const Graph& g, double tol) {
  EntropyOptions options;
  options.tol = tol;
  return entropy_weights(g, options).weights;
}

}  // namespace clonewt
