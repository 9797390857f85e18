#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "clonewt/cliques.hpp"
#include "clonewt/graph.hpp"
#include "clonewt/weights.hpp"

namespace clonewt {

// A graph weighting function: maps every finite graph to a distribution over
// its vertices.
class GraphRule {
 public:
  virtual ~GraphRule() = default;
  virtual std::string name() const = 0;
  // Exact rules return rational vectors.
  virtual bool exact() const { return true; }
  virtual WeightVector operator()(const Graph& g) const = 0;
};

using RulePtr = std::shared_ptr<const GraphRule>;

WeightVector w_uniform(const Graph& g);
WeightVector w_cu(const Graph& g);
WeightVector w_mcca(const Graph& g, std::size_t clique_cap = 1'000'000);
WeightVector w_mccp(const Graph& g, std::size_t clique_cap = 1'000'000);
// w ∝ 1 + deg. Not clone-robust; kept as a sensitivity probe for audits.
WeightVector w_degree(const Graph& g);

// w̃(G)(x) = base(G/≡)([x]) / |[x]|.
RulePtr lift_quotient(RulePtr base);
// ŵ(G)(x) = Σ_y base(G)(y) · P_G(y → x), with the lazy walk
// P_G(y → x) = 1 / (1 + deg y) on N[y].
RulePtr smooth(RulePtr base);

RulePtr uniform_rule();
RulePtr cu_rule();
RulePtr mcca_rule(std::size_t clique_cap = 1'000'000);
RulePtr mccp_rule(std::size_t clique_cap = 1'000'000);
RulePtr degree_rule();
RulePtr entropy_rule(double tol = 1e-8, std::size_t partition_cap = 12);

struct RuleOptions {
  double entropy_tol = 1e-8;
  std::size_t clique_cap = 1'000'000;
  std::size_t partition_cap = 12;
};

// Grammar: name(:base)*. Terminal names: uniform, cu, mcca, mccp, entropy,
// degree. Wrappers: lift:<base>, smooth:<base>. Throws ValidationError
// listing the registry on unknown names.
RulePtr make_rule(std::string_view spec, const RuleOptions& options = {});
std::vector<std::string> registry_names();

}  // namespace clonewt
