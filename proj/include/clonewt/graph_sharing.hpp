#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clonewt/graph.hpp"
#include "clonewt/graph_rules.hpp"
#include "clonewt/rational.hpp"

namespace clonewt {

// A sharing quantity: exact for exact rules, floating otherwise.
struct SharingValue {
  double value = 0.0;
  std::optional<Rational> exact;
  std::string str() const;
};

// Multiplicative rescaling factor on removal of x. `eta` is empty when the
// ratios disagree across non-neighbours (or a non-neighbour has zero weight
// in G); `witness` then holds two non-neighbours with different ratios.
struct RescaleReport {
  std::optional<SharingValue> eta;
  bool consistent = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Tolerance used for floating rules when comparing ratios and signs.
inline constexpr double float_sharing_tol = 1e-7;

RescaleReport eta(const Graph& g, const GraphRule& rule, std::size_t x);
// χ(x, y) = w(G \ {x})(y) / (1 + η) - w(G)(y). Throws ValidationError when
// η is inconsistent.
SharingValue chi_graph(const Graph& g, const GraphRule& rule, std::size_t x, std::size_t y);
// η / (1 + η).
SharingValue private_graph(const Graph& g, const GraphRule& rule, std::size_t x);

// All χ(x, ·) for one x from a single pair of rule evaluations. Entry x is
// the private weight.
std::vector<SharingValue> chi_row(const Graph& g, const GraphRule& rule, std::size_t x);

struct AxiomResult {
  int axiom = 0;
  bool checked = false;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::size_t> witness;  // vertices of the first violation
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_passed() const;
  const AxiomResult& axiom(int k) const;
};

// Axiom 1: multiplicative rescaling. Axiom 2: χ(x, y) >= 0. Axiom 3:
// χ(x, y) = χ(y, x). Axiom 4: y ⪰_x z implies χ(x, y) >= χ(x, z), where
// y ⪰_x z iff N[x] ∩ N[z] ⊆ N[x] ∩ N[y]. Axioms 2-4 are evaluated on the
// vertices where Axiom 1 holds.
AxiomReport audit_axioms(const Graph& g, const GraphRule& rule, const std::vector<int>& axioms = {1, 2, 3, 4});

}  // namespace clonewt
