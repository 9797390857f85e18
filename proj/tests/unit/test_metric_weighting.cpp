#include <doctest.h>

#include <cmath>
#include <map>

#include "clonewt/errors.hpp"
#include "clonewt/metric_weighting.hpp"
#include "oracles.hpp"

using namespace clonewt;

namespace {

MetricWeighting with(const std::string& rule, double alpha = 1.0, const std::string& nu = "uniform") {
  return MetricWeighting{make_rule(rule), Density::parse(nu, alpha)};
}

}  // namespace

TEST_SUITE("metric_weighting") {
  TEST_CASE("three-point example") {
    const auto inst = MetricInstance::from_points({}, {{0.0}, {0.4}, {2.0}});
    const auto w = evaluate_all(inst, with("cu"), Arithmetic::exact);
    CHECK(w.rationals() == std::vector<Rational>{Rational(17, 60), Rational(17, 60), Rational(13, 30)});
    CHECK(evaluate(inst, 2, with("cu")) == doctest::Approx(13.0 / 30.0));
    CHECK(std::abs(riemann_oracle(inst, 2, with("cu"), 100'000) - 13.0 / 30.0) <= 1e-3);
  }

  TEST_CASE("degenerate instances") {
    const auto single = MetricInstance::from_points({}, {{5.0}});
    CHECK(evaluate_all(single, with("cu"), Arithmetic::exact).rationals() == std::vector<Rational>{Rational(1)});
    const auto far = MetricInstance::from_points({}, {{0.0}, {3.0}, {7.0}, {12.0}});
    for (const char* rule : {"cu", "mcca", "mccp", "smooth:cu", "lift:uniform"}) {
      const auto w = evaluate_all(far, with(rule), Arithmetic::exact);
      for (std::size_t i = 0; i < 4; ++i) {
        CHECK(w.rational(i) == Rational(1, 4));
      }
    }
    const auto clones = MetricInstance::from_points({}, {{1.0}, {1.0}, {1.0}});
    const auto w = evaluate_all(clones, with("cu"), Arithmetic::exact);
    CHECK(w.rational(0) == Rational(1, 3));
  }

  TEST_CASE("matches an independent Riemann sum") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = random_instance(EuclideanKind{2, 6}, seed);
      const auto w = evaluate_all(inst, with("cu"));
      const auto ref = oracle::riemann_cu(inst.matrix(), 1.0, 20'000);
      const double bound = riemann_bound(inst, with("cu"), 20'000);
      for (std::size_t i = 0; i < inst.size(); ++i) {
        CHECK(std::abs(w[i] - ref[i]) <= bound);
      }
    }
  }

  TEST_CASE("exact and floating modes agree") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = random_instance(ShortestPathKind{7, 0.4}, seed);
      for (const char* rule : {"cu", "mccp"}) {
        const auto a = evaluate_all(inst, with(rule, 1.5), Arithmetic::exact);
        const auto b = evaluate_all(inst, with(rule, 1.5));
        CHECK(a.is_distribution());
        for (std::size_t i = 0; i < inst.size(); ++i) {
          CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("non-uniform density") {
    const auto inst = MetricInstance::from_points({}, {{0.0}, {0.4}, {2.0}});
    const auto mw = with("cu", 1.0, "pwl:0.5=0.75,1=1;bar=1.5");
    const auto w = evaluate_all(inst, mw, Arithmetic::exact);
    // Γ(0.4) = 0.6: the pair is split for 60% of the mass.
    CHECK(w.rational(2) == Rational(6, 10) / 3 + Rational(4, 10) / 2);
    CHECK(std::abs(riemann_oracle(inst, 2, mw, 100'000) - w[2]) <= riemann_bound(inst, mw, 100'000));
  }

  TEST_CASE("exact mode needs an exact rule") {
    const auto inst = MetricInstance::from_points({}, {{0.0}, {0.4}});
    CHECK_THROWS_AS(evaluate_all(inst, with("entropy"), Arithmetic::exact), ValidationError);
  }

  TEST_CASE("sampling") {
    const auto w = WeightVector::exact({Rational(1, 4), Rational(3, 4)});
    const auto draws = sample_indices(w, 20'000, 11);
    CHECK(draws == sample_indices(w, 20'000, 11));
    std::map<std::size_t, int> counts;
    for (auto i : draws) {
      ++counts[i];
    }
    CHECK(counts[1] / 20'000.0 == doctest::Approx(0.75).epsilon(0.03));
    CHECK(sample_indices(WeightVector::exact({Rational(0), Rational(1)}), 50, 2) == std::vector<std::size_t>(50, 1));
  }
}
