#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clonewt/graph.hpp"
#include "clonewt/graph_rules.hpp"
#include "clonewt/metric_instance.hpp"
#include "clonewt/metric_weighting.hpp"

namespace clonewt {

struct PropertyTally {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  double worst_slack = 0.0;  // observed / bound, Lipschitz properties only
  std::string witness;       // first violation
};

struct MetricSuiteConfig {
  std::size_t instances = 100;
  std::uint64_t seed = 0;
  std::size_t max_n = 12;
  double clone_eps = 0.05;   // relative to alpha
  double delta = 1e-3;       // continuity perturbation, relative to alpha
  std::size_t max_isometry_n = 8;
};

struct MetricSuiteReport {
  std::string rule;
  std::vector<PropertyTally> properties;  // positivity, symmetry, clone_fairness, locality, continuity, embedding
  std::size_t instances = 0;
  bool clean() const;
  const PropertyTally& property(const std::string& name) const;
};

// Seeded instance mix: Euclidean points, shortest-path metrics, planted
// perfect clones and symmetric dyadic 1-D sets.
MetricInstance audit_instance(std::size_t index, std::uint64_t seed, std::size_t max_n);

// Permutations fixing the distance matrix: all of them by backtracking when
// n <= max_n, otherwise the fixing transpositions.
std::vector<std::vector<std::size_t>> self_isometries(const MetricInstance& inst, std::size_t max_n = 8);

MetricSuiteReport run_metric_suite(const MetricWeighting& mw, const MetricSuiteConfig& config = {});

struct GraphSuiteConfig {
  std::size_t graphs = 500;
  std::uint64_t seed = 0;
  std::size_t max_vertices = 8;
  double float_tol = 1e-7;  // floating rules only
};

struct GraphSuiteReport {
  std::string rule;
  std::size_t graphs = 0;
  PropertyTally distribution{"distribution", 0, 0, 0.0, {}};
  PropertyTally positivity{"positivity", 0, 0, 0.0, {}};
  PropertyTally symmetry{"symmetry", 0, 0, 0.0, {}};
  PropertyTally locality{"locality", 0, 0, 0.0, {}};
  double worst_float_gap = 0.0;
  bool clean() const;
};

// Graph `index` of the suite stream: random base graph plus planted twins.
Graph suite_graph(std::size_t index, std::uint64_t seed, std::size_t max_vertices);

GraphSuiteReport run_graph_suite(const GraphRule& rule, const GraphSuiteConfig& config = {});

// 𝒦(G \ {x}) = {K \ {x}} for every x in a class of size >= 2. Returns the
// first failing vertex.
std::optional<std::size_t> clique_cover_invariance(const Graph& g);

// Self-test rules for the harness.
RulePtr planted_asymmetry_rule();

// Affine expression c0 + c1 w1 + c2 w2.
struct Affine {
  Rational c[3];
  std::string str() const;
};

struct DemoStep {
  std::string added;                    // vertex added at this step ("" for the start)
  std::vector<std::string> vertices;    // in insertion order
  std::vector<std::string> values;      // forced weights, same order
  std::vector<std::string> notes;
};

struct DemoResult {
  std::vector<DemoStep> steps;
  std::vector<std::string> equations;  // normalization and symmetry equations, in order
  bool contradiction = false;
  std::string total_mass;  // final total mass under the symmetry equations alone
};

// Constraint propagation for symmetry plus strong locality on the spider
// graph (center d, legs a_i - b_i - c_i - d), growing from the path
// a1-b1-c1-d. `additions` limits how many of the six vertices are added.
DemoResult strict_locality_demo(std::size_t additions = 6);

enum class ConjectureTarget { mcc_axiom2, entropy_negative_chi };

struct ConjectureWitness {
  std::string rule;
  std::string graph;  // edge list
  std::size_t x = 0;
  std::size_t y = 0;
  std::string chi;
  bool paw_class = false;
};

struct ConjectureFindings {
  ConjectureTarget target = ConjectureTarget::mcc_axiom2;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t graphs_tested = 0;
  std::size_t witness_count = 0;
  std::vector<ConjectureWitness> witnesses;  // first few
  bool paw_found = false;
  std::string summary;
};

// Random search for Axiom-2 failures of clique-cover rules, or for negative
// sharing coefficients of the entropy rule on graphs with at most 6 vertices.
ConjectureFindings conjecture_search(ConjectureTarget target, std::size_t budget, std::uint64_t seed,
                                     const std::vector<RulePtr>& rules = {});

// The paw: a - b, b - c, b - d, c - d.
Graph paw_graph();

}  // namespace clonewt
