#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clonewt/density.hpp"
#include "clonewt/graph_rules.hpp"
#include "clonewt/metric_instance.hpp"
#include "clonewt/weights.hpp"

namespace clonewt {

// f_{ν,w}(S)(x) = ∫_0^α ν(r) w(G_r(S))(x) dr.
struct MetricWeighting {
  RulePtr rule;
  Density density;
};

enum class Arithmetic { floating, exact };

// One filtration sweep shared by all elements. In exact mode the rule must be
// exact; distances and Γ are taken at their shortest decimal spelling.
WeightVector evaluate_all(const MetricInstance& inst, const MetricWeighting& mw,
                          Arithmetic mode = Arithmetic::floating);
double evaluate(const MetricInstance& inst, std::size_t x, const MetricWeighting& mw);

// Midpoint Riemann sum of ν(r) w(G_r)(x) over `steps` cells on [0, α]. Each
// cell rebuilds G_r from the distances; consecutive equal graphs reuse the
// previous rule evaluation.
double riemann_oracle(const MetricInstance& inst, std::size_t x, const MetricWeighting& mw, std::size_t steps);
std::vector<double> riemann_oracle_all(const MetricInstance& inst, const MetricWeighting& mw, std::size_t steps);

// Bound on |oracle - evaluate|: ν̄ ℓ α / steps + 1e-9, ℓ counting threshold
// radii plus interior density knots.
double riemann_bound(const MetricInstance& inst, const MetricWeighting& mw, std::size_t steps);

// Draws k element indices i.i.d. from the distribution `w`.
std::vector<std::size_t> sample_indices(const WeightVector& w, std::size_t k, std::uint64_t seed);

}  // namespace clonewt
