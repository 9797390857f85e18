#include <doctest.h>

#include "clonewt/errors.hpp"
#include "clonewt/graph_sharing.hpp"

using namespace clonewt;

namespace {

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

Rational exact(const SharingValue& v) {
  REQUIRE(v.exact.has_value());
  return *v.exact;
}

}  // namespace

TEST_SUITE("graph_sharing") {
  TEST_CASE("rescaling factor on the paw") {
    const auto cu = cu_rule();
    const auto a = eta(paw(), *cu, 0);
    REQUIRE(a.eta.has_value());
    CHECK(exact(*a.eta) + 1 == 2);
    const auto b = eta(paw(), *cu, 1);
    REQUIRE(b.eta.has_value());
    CHECK(exact(*b.eta) == 0);
  }

  TEST_CASE("sharing coefficients on the paw") {
    const auto cu = cu_rule();
    CHECK(exact(chi_graph(paw(), *cu, 0, 1)) == Rational(-1, 6));
    CHECK(exact(chi_graph(paw(), *cu, 1, 0)) == Rational(1, 6));
    CHECK(exact(chi_graph(paw(), *cu, 0, 2)) == 0);
    CHECK(exact(chi_graph(paw(), *cu, 1, 2)) == Rational(1, 12));
    CHECK(exact(private_graph(paw(), *cu, 0)) == Rational(1, 2));
    CHECK(exact(private_graph(paw(), *cu, 1)) == 0);
    CHECK(exact(chi_graph(paw(), *mcca_rule(), 0, 1)) == Rational(-1, 4));
    CHECK(exact(chi_graph(paw(), *mccp_rule(), 0, 1)) == Rational(-1, 15));
    CHECK(chi_graph(paw(), *cu, 0, 1).str() == "-1/6");
  }

  TEST_CASE("rows decompose the weight") {
    const auto cu = cu_rule();
    const auto w = (*cu)(paw());
    for (std::size_t x = 0; x < 4; ++x) {
      Rational sum = 0;
      for (const auto& v : chi_row(paw(), *cu, x)) {
        sum += exact(v);
      }
      CHECK(sum == w.rational(x));
    }
  }

  TEST_CASE("axiom audit") {
    const auto cu_report = audit_axioms(paw(), *cu_rule());
    CHECK_FALSE(cu_report.axiom(2).passed);
    CHECK(cu_report.axiom(2).witness == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(cu_report.axiom(3).passed);
    CHECK_FALSE(audit_axioms(paw(), *mcca_rule(), {2}).all_passed());
    CHECK_FALSE(audit_axioms(paw(), *mccp_rule(), {2}).all_passed());
    for (const char* rule : {"uniform", "cu", "mcca", "mccp"}) {
      CHECK(audit_axioms(Graph::complete(4), *make_rule(rule)).all_passed());
    }
    CHECK(audit_axioms(Graph::edgeless(3), *cu_rule()).all_passed());
  }

  TEST_CASE("inconsistent rescaling") {
    // Removing 1 merges 0 and 2 into one class: w(2) keeps 1/4, w(3) doubles.
    const Graph g(4, {{0, 1}, {0, 2}});
    const auto r = eta(g, *cu_rule(), 1);
    CHECK_FALSE(r.consistent);
    CHECK_FALSE(r.eta.has_value());
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK_THROWS_AS(chi_graph(g, *cu_rule(), 1, 2), ValidationError);
    CHECK_FALSE(audit_axioms(g, *cu_rule(), {1}).axiom(1).passed);
  }

  TEST_CASE("floating rules") {
    const auto h = entropy_rule();
    const auto v = chi_graph(paw(), *h, 0, 1);
    CHECK_FALSE(v.exact.has_value());
    CHECK(v.value >= -float_sharing_tol);
  }
}
