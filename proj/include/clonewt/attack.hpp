#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clonewt/metric_instance.hpp"
#include "clonewt/metric_weighting.hpp"

namespace clonewt {

struct AttackConfig {
  std::size_t target = 0;
  std::size_t clones = 5;
  double eps = 0.0;  // each clone lands within eps of the target
  std::uint64_t seed = 0;
};

struct ElementDrift {
  std::string label;
  double distance = 0.0;  // to the target
  bool far = false;       // distance >= alpha
  std::string before;
  std::string after;
  double drift = 0.0;     // |after - before|
  bool exact_zero = false;
};

struct AttackReport {
  std::string rule;
  double alpha = 0.0;
  std::size_t target = 0;
  std::size_t clones = 0;
  double eps = 0.0;
  bool exact = false;
  std::vector<ElementDrift> elements;  // original elements only
  // Cumulative locality bound: sum over additions of 2 nu_bar |S_i| d(target, clone_i).
  double bound = 0.0;
  double max_far_drift = 0.0;
  bool within_bound = true;
  // Mass held by the target and its clones under the rule, before and after.
  std::string family_before;
  std::string family_after;
  // The same mass under the uniform rule, computed and in closed form (1+k)/(n+k).
  std::string uniform_family_after;
  std::string uniform_family_expected;
};

// Adds `clones` approximate clones of the target one at a time, recomputing
// weights after each addition. Exact arithmetic is used when the rule
// supports it.
AttackReport run_attack(const MetricInstance& inst, const MetricWeighting& mw, const AttackConfig& config);

}  // namespace clonewt
