#include <doctest.h>

#include "clonewt/attack.hpp"
#include "clonewt/audit.hpp"

using namespace clonewt;

namespace {

MetricWeighting with(const std::string& rule) { return MetricWeighting{make_rule(rule), Density::uniform(1.0)}; }

}  // namespace

TEST_SUITE("audit") {
  TEST_CASE("suites are deterministic") {
    CHECK(audit_instance(3, 9, 10).matrix() == audit_instance(3, 9, 10).matrix());
    CHECK(suite_graph(17, 2, 8) == suite_graph(17, 2, 8));
    MetricSuiteConfig config;
    config.instances = 8;
    const auto a = run_metric_suite(with("cu"), config);
    const auto b = run_metric_suite(with("cu"), config);
    for (std::size_t i = 0; i < a.properties.size(); ++i) {
      CHECK(a.properties[i].cases == b.properties[i].cases);
      CHECK(a.properties[i].worst_slack == b.properties[i].worst_slack);
    }
  }

  TEST_CASE("self-isometries") {
    const auto line = MetricInstance::from_points({}, {{0.0}, {1.0}, {2.0}});
    CHECK(self_isometries(line).size() == 2);
    const auto square = MetricInstance::from_points({}, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    CHECK(self_isometries(square).size() == 8);
  }

  TEST_CASE("clean rules pass") {
    MetricSuiteConfig metric;
    metric.instances = 20;
    CHECK(run_metric_suite(with("cu"), metric).clean());
    CHECK(run_metric_suite(with("mccp"), metric).clean());
    GraphSuiteConfig graphs;
    graphs.graphs = 60;
    CHECK(run_graph_suite(*cu_rule(), graphs).clean());
    CHECK(run_graph_suite(*make_rule("lift:uniform"), graphs).clean());
  }

  TEST_CASE("planted violations are caught") {
    GraphSuiteConfig graphs;
    graphs.graphs = 40;
    const auto asym = run_graph_suite(*planted_asymmetry_rule(), graphs);
    CHECK(asym.symmetry.violations > 0);
    CHECK_FALSE(asym.symmetry.witness.empty());
    CHECK(run_graph_suite(*degree_rule(), graphs).locality.violations > 0);
    CHECK(run_graph_suite(*uniform_rule(), graphs).locality.violations > 0);
    MetricSuiteConfig metric;
    metric.instances = 10;
    CHECK_FALSE(run_metric_suite(MetricWeighting{planted_asymmetry_rule(), Density::uniform(1.0)}, metric).clean());
  }

  TEST_CASE("smoothing breaks locality when a neighbour of the far vertex touches the clone") {
    // x - y twins, u adjacent to both, z' hangs off u.
    const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const auto smooth = make_rule("smooth:cu");
    CHECK((*smooth)(g).rational(3) == Rational(1, 4));
    CHECK((*smooth)(g.without(1)).rational(2) == Rational(5, 18));
  }

  TEST_CASE("clique cover invariance") {
    for (std::size_t i = 0; i < 50; ++i) {
      CHECK_FALSE(clique_cover_invariance(suite_graph(i, 4, 8)).has_value());
    }
  }

  TEST_CASE("strict locality demo") {
    const auto full = strict_locality_demo();
    CHECK(full.contradiction);
    CHECK(full.total_mass == "0");
    const auto path = strict_locality_demo(0);
    CHECK_FALSE(path.contradiction);
    REQUIRE(path.equations.size() == 1);
    CHECK(path.equations[0] == "2 w1 + 2 w2 = 1");
    bool forced_zero = false;
    for (const auto& step : full.steps) {
      for (std::size_t i = 0; i < step.vertices.size(); ++i) {
        forced_zero = forced_zero || (step.vertices[i] == "c1" && step.values[i] == "0");
      }
    }
    CHECK(forced_zero);
  }

  TEST_CASE("conjecture search") {
    const auto a = conjecture_search(ConjectureTarget::mcc_axiom2, 60, 3);
    const auto b = conjecture_search(ConjectureTarget::mcc_axiom2, 60, 3);
    CHECK(a.graphs_tested == 60);
    CHECK(a.summary == b.summary);
    CHECK(a.witness_count > 0);
    const auto h = conjecture_search(ConjectureTarget::entropy_negative_chi, 10, 3);
    CHECK(h.graphs_tested == 10);
  }

  TEST_CASE("attack") {
    const auto inst = MetricInstance::from_points({"t", "u", "v", "w"}, {{0.0}, {0.5}, {1.5}, {4.0}});
    const auto none = run_attack(inst, with("cu"), AttackConfig{0, 0, 0.0, 1});
    for (const auto& e : none.elements) {
      CHECK(e.exact_zero);
    }
    const auto five = run_attack(inst, with("cu"), AttackConfig{0, 5, 0.0, 1});
    for (const auto& e : five.elements) {
      if (e.far) {
        CHECK(e.exact_zero);
      }
    }
    CHECK(five.uniform_family_after == "2/3");
    CHECK(five.uniform_family_after == five.uniform_family_expected);
    const auto noisy = run_attack(inst, with("mccp"), AttackConfig{1, 3, 0.05, 9});
    CHECK(noisy.within_bound);
  }
}
