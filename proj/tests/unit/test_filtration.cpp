#include <doctest.h>

#include "clonewt/filtration.hpp"
#include "clonewt/graph.hpp"

using namespace clonewt;

namespace {

Graph eight_vertex_graph() {
  return Graph(8, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6},
                   {4, 7}, {5, 7}});
}

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_SUITE("filtration") {
  TEST_CASE("neighborhood graphs") {
    const auto paw_metric = MetricInstance::from_matrix(
        {"a", "b", "c", "d"}, {{0, 1, 2, 2}, {1, 0, 1, 1}, {2, 1, 0, 1}, {2, 1, 1, 0}});
    CHECK(neighborhood_graph(paw_metric, 1.0) == paw());
    CHECK(neighborhood_graph(paw_metric, 2.0) == Graph::complete(4));
    const auto three = MetricInstance::from_points({}, {{0.0}, {0.4}, {2.0}});
    CHECK(neighborhood_graph(three, 0.3).edge_count() == 0);
    CHECK(neighborhood_graph(three, 0.4).edge_count() == 1);
  }

  TEST_CASE("threshold radii") {
    const auto three = MetricInstance::from_points({}, {{0.0}, {0.4}, {2.0}});
    CHECK(threshold_radii(three, 1.0) == std::vector<double>{0.4});
    CHECK(threshold_radii(three, 0.1).empty());
    CHECK(threshold_radii(three, 2.0) == std::vector<double>{0.4, 1.6, 2.0});
  }

  TEST_CASE("equivalence classes") {
    const auto fig = equivalence_classes(eight_vertex_graph());
    CHECK(fig.classes == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}, {4, 5}, {6}, {7}});
    CHECK(equivalence_classes(Graph::complete(5)).count() == 1);
    CHECK(equivalence_classes(Graph::edgeless(4)).count() == 4);
    CHECK(equivalence_classes(Graph(1)).count() == 1);
  }

  TEST_CASE("quotients") {
    CHECK(quotient(Graph::complete(4)).graph.size() == 1);
    const auto q = quotient(paw());
    CHECK(q.graph == Graph::path(3));
    CHECK(q.partition.classes == std::vector<std::vector<std::size_t>>{{0}, {1}, {2, 3}});
    CHECK(quotient(eight_vertex_graph()).graph.size() == 5);
  }

  TEST_CASE("forbidden intervals") {
    const auto inst = MetricInstance::from_points({"x", "y", "z"}, {{0.0}, {0.2}, {0.95}});
    const auto iv = forbidden_intervals(inst, 0, 1);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].lo == doctest::Approx(0.0));
    CHECK(iv[0].hi == doctest::Approx(0.2));
    CHECK(iv[1].lo == doctest::Approx(0.75));
    CHECK(iv[1].hi == doctest::Approx(1.15));
    CHECK(total_length(iv) == doctest::Approx(0.6));

    const auto clones = MetricInstance::from_points({}, {{0.0}, {0.0}, {1.0}});
    for (const auto& i : forbidden_intervals(clones, 0, 1)) {
      CHECK(i.length() == 0.0);
    }
    for (double r : {0.0, 0.3, 1.0, 1.7}) {
      const auto cls = equivalence_classes(neighborhood_graph(clones, r));
      CHECK(cls.class_of[0] == cls.class_of[1]);
    }
  }

  TEST_CASE("clones outside forbidden intervals stay equivalent") {
    const auto inst = MetricInstance::from_points({}, {{0.0}, {0.2}, {0.95}, {2.3}});
    const auto iv = forbidden_intervals(inst, 0, 1);
    for (int k = 0; k <= 300; ++k) {
      const double r = 0.01 * k;
      bool inside = false;
      for (const auto& i : iv) {
        inside = inside || i.contains(r);
      }
      if (!inside) {
        const auto cls = equivalence_classes(neighborhood_graph(inst, r));
        CHECK(cls.class_of[0] == cls.class_of[1]);
      }
    }
  }
}
