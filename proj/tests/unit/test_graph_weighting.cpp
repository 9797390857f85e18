#include <doctest.h>

#include <cmath>

#include "clonewt/cliques.hpp"
#include "clonewt/entropy.hpp"
#include "clonewt/errors.hpp"
#include "clonewt/graph_rules.hpp"
#include "clonewt/random.hpp"
#include "oracles.hpp"

using namespace clonewt;

namespace {

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

Graph eight_vertex_graph() {
  return Graph(8, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6},
                   {4, 7}, {5, 7}});
}

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Rational> out;
  for (const auto& [p, d] : values) {
    out.emplace_back(p, d);
  }
  return out;
}

}  // namespace

TEST_SUITE("graph_weighting") {
  TEST_CASE("uniform") {
    CHECK(w_uniform(Graph::complete(3)).rationals() == q({{1, 3}, {1, 3}, {1, 3}}));
    CHECK(w_uniform(paw()).rationals() == q({{1, 4}, {1, 4}, {1, 4}, {1, 4}}));
    CHECK(w_uniform(Graph(1)).rationals() == q({{1, 1}}));
  }

  TEST_CASE("class-uniform") {
    CHECK(w_cu(eight_vertex_graph()).rationals() ==
          q({{1, 15}, {1, 15}, {1, 15}, {1, 5}, {1, 10}, {1, 10}, {1, 5}, {1, 5}}));
    CHECK(w_cu(paw()).rationals() == q({{1, 3}, {1, 3}, {1, 6}, {1, 6}}));
    CHECK(w_cu(Graph::edgeless(5)).rationals() == w_uniform(Graph::edgeless(5)).rationals());
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Graph g = random_graph(7, 0.5, 2, seed);
      CHECK(w_cu(g).rationals() == oracle::class_uniform(oracle::adjacency(g)));
    }
  }

  TEST_CASE("quotient lift and smoothing") {
    const auto lifted = make_rule("lift:uniform");
    CHECK((*lifted)(paw()).rationals() == q({{1, 3}, {1, 3}, {1, 6}, {1, 6}}));
    const auto smoothed = make_rule("smooth:cu");
    CHECK((*smoothed)(Graph::complete(2)).rationals() == q({{1, 2}, {1, 2}}));
    CHECK((*smoothed)(Graph::path(3)).rationals() == q({{5, 18}, {4, 9}, {5, 18}}));
    CHECK((*smoothed)(eight_vertex_graph()).is_distribution());
  }

  TEST_CASE("maximal cliques") {
    const auto cover = maximal_cliques(paw());
    CHECK(cover.as_lists() == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2, 3}});
    CHECK(cover.membership == std::vector<std::size_t>{1, 2, 1, 1});
    CHECK(maximal_cliques(Graph::complete(6)).cliques.size() == 1);
    CHECK(maximal_cliques(Graph::edgeless(4)).cliques.size() == 4);
    CHECK_THROWS_AS(maximal_cliques(paw(), 1), CapExceeded);
    // Moon-Moser graph K_{3,3,3} complement: 27 maximal cliques.
    Graph mm(9);
    for (std::size_t u = 0; u < 9; ++u) {
      for (std::size_t v = u + 1; v < 9; ++v) {
        if (u / 3 != v / 3) {
          mm.add_edge(u, v);
        }
      }
    }
    CHECK(maximal_cliques(mm).cliques.size() == 27);
  }

  TEST_CASE("clique-cover rules") {
    CHECK(w_mcca(paw()).rationals() == q({{1, 4}, {5, 12}, {1, 6}, {1, 6}}));
    CHECK(w_mccp(paw()).rationals() == q({{1, 3}, {4, 15}, {1, 5}, {1, 5}}));
    CHECK(w_mcca(Graph::complete(4)).rationals() == w_uniform(Graph::complete(4)).rationals());
    CHECK(w_mccp(Graph::complete(4)).rationals() == w_uniform(Graph::complete(4)).rationals());
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK(w_mcca(two_edges).rationals() == q({{1, 4}, {1, 4}, {1, 4}, {1, 4}}));
    const Graph forest(6, {{0, 1}, {2, 3}, {3, 4}});
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(w_mccp(two_edges).rationals() == w_mcca(two_edges).rationals());
    CHECK(w_mcca(star).is_distribution());
    CHECK(w_mccp(forest).is_distribution());
  }

  TEST_CASE("clique partitions against the set-partition filter") {
    CHECK(clique_partitions(Graph::complete(2)).size() == 2);
    CHECK(clique_partitions(Graph::edgeless(3)).size() == 1);
    CHECK(clique_partitions(Graph::complete(5)).size() == 52);
    CHECK(clique_partitions(paw()).size() == oracle::clique_partition_count(oracle::adjacency(paw())));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = random_graph(7, 0.6, 1, seed);
      CHECK(clique_partitions(g).size() == oracle::clique_partition_count(oracle::adjacency(g)));
    }
    CHECK_THROWS_AS(clique_partitions(Graph::edgeless(5), 4), CapExceeded);
  }

  TEST_CASE("graph entropy") {
    CHECK(graph_entropy(paw(), {0.5, 0, 0.25, 0.25}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(graph_entropy(paw(), {0.25, 0.25, 0.25, 0.25}) == doctest::Approx(0.8112781244591328));
    CHECK(graph_entropy(paw(), {0, 1, 0, 0}) == 0.0);
    CHECK(graph_entropy(Graph::complete(4), {0.1, 0.2, 0.3, 0.4}) == 0.0);
    CHECK(graph_entropy(Graph::edgeless(2), {0.5, 0.5}) == doctest::Approx(1.0));
    const Graph eight = eight_vertex_graph();
    CHECK(class_entropy(eight, w_cu(eight).values()) == doctest::Approx(std::log2(5.0)));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = random_graph(6, 0.5, 1, seed);
      const auto pi = w_cu(g).values();
      CHECK(graph_entropy(g, pi) == doctest::Approx(oracle::min_partition_entropy(oracle::adjacency(g), pi)));
    }
  }

  TEST_CASE("graph entropy is concave along segments") {
    auto rng = make_rng(21);
    auto draw = [&](std::size_t n) {
      std::vector<double> p(n);
      double sum = 0.0;
      for (auto& v : p) {
        v = uniform01(rng);
        sum += v;
      }
      for (auto& v : p) {
        v /= sum;
      }
      return p;
    };
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = random_graph(6, 0.5, 1, seed);
      const auto a = draw(g.size());
      const auto b = draw(g.size());
      for (double lambda : {0.1, 0.35, 0.5, 0.8}) {
        std::vector<double> mix(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
          mix[v] = lambda * a[v] + (1 - lambda) * b[v];
        }
        CHECK(graph_entropy(g, mix) >= lambda * graph_entropy(g, a) + (1 - lambda) * graph_entropy(g, b) - 1e-12);
      }
    }
  }

  TEST_CASE("entropy rule") {
    const auto paw_result = entropy_weights(paw());
    const std::vector<double> expected{0.5, 0.0, 0.25, 0.25};
    for (std::size_t v = 0; v < 4; ++v) {
      CHECK(std::abs(paw_result.weights[v] - expected[v]) <= 1e-6);
    }
    CHECK(std::abs(paw_result.graph_entropy - 1.0) <= 1e-9);

    const auto k4 = w_entropy(Graph::complete(4));
    const auto empty = w_entropy(Graph::edgeless(3));
    for (std::size_t v = 0; v < 4; ++v) {
      CHECK(k4[v] == doctest::Approx(0.25).epsilon(1e-6));
    }
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(empty[v] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    }

    const auto p5 = w_entropy(Graph::path(5));
    const std::vector<double> p5_expected{1.0 / 3, 0, 1.0 / 3, 0, 1.0 / 3};
    for (std::size_t v = 0; v < 5; ++v) {
      CHECK(std::abs(p5[v] - p5_expected[v]) <= 1e-6);
    }

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const Graph g = random_graph(6, 0.5, 1, seed);
      const auto r = entropy_weights(g);
      CHECK(r.weights.is_distribution());
      CHECK(r.graph_entropy >= oracle::min_partition_entropy(oracle::adjacency(g), w_cu(g).values()) - 1e-6);
    }
  }

  TEST_CASE("registry") {
    CHECK(make_rule("cu")->name() == "cu");
    CHECK(make_rule("lift:smooth:cu")->name() == "lift:smooth:cu");
    CHECK_FALSE(make_rule("entropy")->exact());
    CHECK_THROWS_WITH_AS(make_rule("nosuch"), doctest::Contains("mcca"), ValidationError);
    CHECK_THROWS_AS(make_rule("lift"), ValidationError);
    CHECK_THROWS_AS(make_rule("cu:uniform"), ValidationError);
  }
}
