#include "clonewt/attack.hpp"

#include <algorithm>
#include <cmath>

#include "clonewt/errors.hpp"
#include "clonewt/random.hpp"

namespace clonewt {

namespace {

std::string family_mass(const WeightVector& w, std::size_t target, std::size_t first_clone) {
  if (w.is_exact()) {
    Rational sum = w.rational(target);
    for (std::size_t i = first_clone; i < w.size(); ++i) {
      sum += w.rational(i);
    }
    return to_string(sum);
  }
  double sum = w[target];
  for (std::size_t i = first_clone; i < w.size(); ++i) {
    sum += w[i];
  }
  return shortest(sum);
}

}  // namespace

AttackReport run_attack(const MetricInstance& inst, const MetricWeighting& mw, const AttackConfig& config) {
  const std::size_t n = inst.size();
  if (config.target >= n) {
    throw ValidationError("attack target " + std::to_string(config.target) + " out of range");
  }
  if (!(config.eps >= 0.0)) {
    throw ValidationError("clone distance eps must be non-negative");
  }

  AttackReport report;
  report.rule = mw.rule->name();
  report.alpha = mw.density.alpha();
  report.target = config.target;
  report.clones = config.clones;
  report.eps = config.eps;
  report.exact = mw.rule->exact();
  const Arithmetic mode = report.exact ? Arithmetic::exact : Arithmetic::floating;

  const WeightVector before = evaluate_all(inst, mw, mode);
  MetricInstance grown = inst;
  WeightVector after = before;
  auto rng = make_rng(config.seed, 0xA77AC4ULL);
  for (std::size_t i = 0; i < config.clones; ++i) {
    const std::size_t size = grown.size();
    grown = add_clone(grown, config.target, config.eps, rng());
    report.bound += 2.0 * mw.density.nu_bar() * static_cast<double>(size) * grown.distance(config.target, size);
    after = evaluate_all(grown, mw, mode);
  }

  for (std::size_t z = 0; z < n; ++z) {
    ElementDrift e;
    e.label = inst.label(z);
    e.distance = inst.distance(config.target, z);
    e.far = e.distance >= report.alpha;
    e.before = before.str(z);
    e.after = after.str(z);
    if (report.exact) {
      const Rational diff = abs(after.rational(z) - before.rational(z));
      e.drift = to_double(diff);
      e.exact_zero = diff == 0;
    } else {
      e.drift = std::abs(after[z] - before[z]);
      e.exact_zero = e.drift == 0.0;
    }
    if (e.far) {
      report.max_far_drift = std::max(report.max_far_drift, e.drift);
      if (e.drift > report.bound * (1.0 + 1e-9) && !e.exact_zero) {
        report.within_bound = false;
      }
    }
    report.elements.push_back(std::move(e));
  }

  report.family_before = before.str(config.target);
  report.family_after = family_mass(after, config.target, n);

  const MetricWeighting uniform{uniform_rule(), mw.density};
  const WeightVector flat = evaluate_all(grown, uniform, Arithmetic::exact);
  report.uniform_family_after = family_mass(flat, config.target, n);
  report.uniform_family_expected = to_string(Rational(static_cast<long>(1 + config.clones),
                                                      static_cast<long>(n + config.clones)));
  return report;
}

}  // namespace clonewt
