#include <doctest.h>

#include <cmath>

#include "clonewt/density.hpp"
#include "clonewt/errors.hpp"
#include "clonewt/metric_instance.hpp"
#include "clonewt/rational.hpp"
#include "clonewt/weights.hpp"

using namespace clonewt;

TEST_SUITE("metric_core") {
  TEST_CASE("two points become a distance matrix") {
    const auto inst = MetricInstance::from_points({"a", "b"}, {{0.0}, {1.0}});
    CHECK(inst.matrix() == std::vector<std::vector<double>>{{0, 1}, {1, 0}});
    CHECK(inst.dim() == 1);
    CHECK(inst.index_of("b") == 1);
    CHECK_FALSE(inst.find("c").has_value());
  }

  TEST_CASE("invalid matrices are rejected") {
    CHECK_THROWS_AS(MetricInstance::from_matrix({}, {{0, 1}, {1, 0.5}}), ValidationError);
    CHECK_THROWS_WITH_AS(MetricInstance::from_matrix({}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}),
                         doctest::Contains("triangle"), ValidationError);
    CHECK_THROWS_AS(MetricInstance::from_matrix({}, {{0, 1}, {2, 0}}), ValidationError);
    CHECK_THROWS_AS(MetricInstance::from_matrix({}, {{0, -1}, {-1, 0}}), ValidationError);
    CHECK_THROWS_AS(MetricInstance::from_points({"a", "a"}, {{0.0}, {1.0}}), ValidationError);
    CHECK_THROWS_AS(MetricInstance::from_points({}, {{0.0}, {1.0, 2.0}}), ValidationError);
  }

  TEST_CASE("pseudo-metrics allow zero distances") {
    const auto inst = MetricInstance::from_matrix({}, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
    CHECK(inst.distance(0, 1) == 0.0);
    CHECK(inst.size() == 3);
  }

  TEST_CASE("JSON and CSV loaders agree") {
    const auto a = load_instance(nlohmann::json::parse(R"({"kind": "matrix", "labels": ["p", "q", "r"],
        "distances": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]})"));
    const auto b = load_instance_csv(",p,q,r\np,0,1,2\nq,1,0,1\nr,2,1,0\n");
    CHECK(a.matrix() == b.matrix());
    CHECK(a.labels() == b.labels());
    CHECK_THROWS_AS(load_instance(nlohmann::json::parse(R"({"kind": "points"})")), ValidationError);
    CHECK_THROWS_AS(load_instance(nlohmann::json::parse(R"([1, 2])")), ValidationError);
  }

  TEST_CASE("seeded generators") {
    const auto single = random_instance(EuclideanKind{2, 1}, 7);
    CHECK(single.matrix() == std::vector<std::vector<double>>{{0}});
    CHECK(random_instance(EuclideanKind{2, 5}, 3).matrix() == random_instance(EuclideanKind{2, 5}, 3).matrix());
    const auto sp = random_instance(ShortestPathKind{3, 1.0}, 1);
    CHECK_NOTHROW(MetricInstance::from_matrix({}, sp.matrix(), 0.0));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto m = random_instance(ShortestPathKind{9, 0.3}, seed);
      CHECK_NOTHROW(MetricInstance::from_matrix({}, m.matrix(), 0.0));
    }
  }

  TEST_CASE("add_clone") {
    const auto inst = MetricInstance::from_points({"x", "z"}, {{0.0}, {2.0}});
    const auto perfect = add_clone(inst, 0, 0.0, 1);
    REQUIRE(perfect.size() == 3);
    CHECK(perfect.distance(2, 0) == 0.0);
    CHECK(perfect.distance(2, 1) == inst.distance(0, 1));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto near = add_clone(inst, 0, 0.3, seed);
      CHECK(std::abs(near.points()[2][0]) <= 0.3);
      CHECK(std::abs(near.distance(2, 1) - 2.0) <= 0.3 + 1e-15);
    }
    const auto matrix = MetricInstance::from_matrix({}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    const auto grown = add_clone(matrix, 1, 0.25, 4);
    CHECK(grown.distance(1, 3) <= 0.25);
    CHECK_NOTHROW(MetricInstance::from_matrix({}, grown.matrix()));
  }

  TEST_CASE("embedding and removal") {
    const auto inst = MetricInstance::from_points({}, {{0.0}, {0.4}, {2.0}});
    const auto lifted = inst.embedded(2);
    CHECK(lifted.dim() == 3);
    CHECK(lifted.matrix() == inst.matrix());
    const auto smaller = inst.without(1);
    CHECK(smaller.size() == 2);
    CHECK(smaller.distance(0, 1) == 2.0);
  }

  TEST_CASE("rationals") {
    CHECK(to_string(Rational(17, 60)) == "17/60");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(parse_rational("-5/10") == Rational(-1, 2));
    CHECK(parse_rational("0.4") == Rational(2, 5));
    CHECK(decimal_rational(0.1) == Rational(1, 10));
    CHECK(shortest(0.1) == "0.1");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
  }

  TEST_CASE("weight vectors") {
    const auto w = WeightVector::exact({Rational(1, 3), Rational(2, 3)});
    CHECK(w.is_distribution());
    CHECK(w.str(0) == "1/3");
    CHECK(w[1] == doctest::Approx(2.0 / 3.0));
    CHECK_FALSE(WeightVector::approx({0.5, 0.6}).is_distribution());
  }

  TEST_CASE("densities") {
    const auto u = Density::uniform(2.0);
    CHECK(u.cdf(1.0) == doctest::Approx(0.5));
    CHECK(u.nu_bar() == doctest::Approx(0.5));
    CHECK(u.cdf_exact(Rational(1, 2)) == Rational(1, 4));
    const auto p = Density::parse("pwl:0.5=0.25,1=1;bar=1.5", 1.0);
    CHECK(p.cdf(0.5) == doctest::Approx(0.25));
    CHECK(p.pdf(0.75) == doctest::Approx(1.5));
    CHECK(p.knot_radii() == std::vector<double>{0, 0.5, 1});
    CHECK_THROWS_AS(Density::parse("pwl:0.5=0.75,1=1;bar=1", 1.0), ValidationError);
    CHECK_THROWS_AS(Density::parse("gaussian", 1.0), ValidationError);
  }
}
