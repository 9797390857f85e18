#include "clonewt/graph_sharing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clonewt/errors.hpp"

namespace clonewt {

namespace {

struct Removal {
  WeightVector before;
  WeightVector after;  // indexed by the original vertex, entry x unused
  std::vector<Rational> after_exact;
  std::vector<double> after_float;
};

Removal remove_vertex(const Graph& g, const GraphRule& rule, std::size_t x) {
  if (x >= g.size()) {
    throw ValidationError("vertex index out of range");
  }
  if (g.size() < 2) {
    throw ValidationError("sharing needs at least two vertices");
  }
  Removal r;
  r.before = rule(g);
  r.after = rule(g.without(x));
  const bool exact = r.before.is_exact() && r.after.is_exact();
  for (std::size_t y = 0; y < g.size(); ++y) {
    const std::size_t k = y < x ? y : y - 1;
    if (exact) {
      r.after_exact.push_back(y == x ? Rational(0) : r.after.rational(k));
    }
    r.after_float.push_back(y == x ? 0.0 : r.after[k]);
  }
  return r;
}

bool exact_pair(const Removal& r) { return !r.after_exact.empty(); }

bool close(double a, double b) { return std::abs(a - b) <= float_sharing_tol * std::max(1.0, std::abs(a)); }

RescaleReport rescale(const Graph& g, const Removal& r, std::size_t x) {
  RescaleReport report;
  const VertexSet nx = g.closed_neighborhood(x);
  std::optional<std::size_t> first;
  std::optional<Rational> ratio_exact;
  double ratio = 0.0;
  for (std::size_t z = 0; z < g.size(); ++z) {
    if (nx[z]) {
      continue;
    }
    if (exact_pair(r)) {
      if (r.before.rational(z) == 0) {
        report.consistent = false;
        report.witness = std::make_pair(first.value_or(z), z);
        return report;
      }
      const Rational q = r.after_exact[z] / r.before.rational(z);
      if (!first) {
        first = z;
        ratio_exact = q;
      } else if (q != *ratio_exact) {
        report.consistent = false;
        report.witness = std::make_pair(*first, z);
        return report;
      }
    } else {
      if (r.before[z] <= 0.0) {
        report.consistent = false;
        report.witness = std::make_pair(first.value_or(z), z);
        return report;
      }
      const double q = r.after_float[z] / r.before[z];
      if (!first) {
        first = z;
        ratio = q;
      } else if (!close(q, ratio)) {
        report.consistent = false;
        report.witness = std::make_pair(*first, z);
        return report;
      }
    }
  }
  SharingValue eta;
  if (!first) {
    eta.value = 0.0;
    if (exact_pair(r)) {
      eta.exact = Rational(0);
    }
  } else if (exact_pair(r)) {
    eta.exact = *ratio_exact - 1;
    eta.value = to_double(*eta.exact);
  } else {
    eta.value = ratio - 1.0;
  }
  report.eta = eta;
  return report;
}

SharingValue make_value(const Rational& q) { return SharingValue{to_double(q), q}; }
SharingValue make_value(double v) { return SharingValue{v, std::nullopt}; }

std::vector<SharingValue> row_from(const Graph& g, const Removal& r, const RescaleReport& rep, std::size_t x) {
  if (!rep.consistent) {
    throw ValidationError("multiplicative rescaling fails on removal of vertex " + g.label(x) +
                          "; sharing is undefined");
  }
  std::vector<SharingValue> row;
  row.reserve(g.size());
  const VertexSet nx = g.closed_neighborhood(x);
  if (rep.eta->exact) {
    const Rational scale = 1 + *rep.eta->exact;
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (y == x) {
        row.push_back(make_value(*rep.eta->exact / scale));
      } else {
        const Rational chi = r.after_exact[y] / scale - r.before.rational(y);
        if (!nx[y] && chi != 0) {
          throw std::logic_error("sharing with a non-neighbour must vanish");
        }
        row.push_back(make_value(chi));
      }
    }
    return row;
  }
  const double scale = 1.0 + rep.eta->value;
  for (std::size_t y = 0; y < g.size(); ++y) {
    row.push_back(make_value(y == x ? rep.eta->value / scale : r.after_float[y] / scale - r.before[y]));
  }
  return row;
}

bool negative(const SharingValue& v) { return v.exact ? *v.exact < 0 : v.value < -float_sharing_tol; }

bool less(const SharingValue& a, const SharingValue& b) {
  return a.exact && b.exact ? *a.exact < *b.exact : a.value < b.value - float_sharing_tol;
}

bool differ(const SharingValue& a, const SharingValue& b) {
  return a.exact && b.exact ? *a.exact != *b.exact : std::abs(a.value - b.value) > float_sharing_tol;
}

}  // namespace

std::string SharingValue::str() const { return exact ? to_string(*exact) : shortest(value); }

RescaleReport eta(const Graph& g, const GraphRule& rule, std::size_t x) {
  const Removal r = remove_vertex(g, rule, x);
  return rescale(g, r, x);
}

std::vector<SharingValue> chi_row(const Graph& g, const GraphRule& rule, std::size_t x) {
  const Removal r = remove_vertex(g, rule, x);
  return row_from(g, r, rescale(g, r, x), x);
}

SharingValue chi_graph(const Graph& g, const GraphRule& rule, std::size_t x, std::size_t y) {
  if (x == y) {
    throw ValidationError("sharing coefficient needs two distinct vertices");
  }
  if (y >= g.size()) {
    throw ValidationError("vertex index out of range");
  }
  return chi_row(g, rule, x)[y];
}

SharingValue private_graph(const Graph& g, const GraphRule& rule, std::size_t x) { return chi_row(g, rule, x)[x]; }

bool AxiomReport::all_passed() const {
  for (const auto& r : results) {
    if (r.checked && !r.passed) {
      return false;
    }
  }
  return true;
}

const AxiomResult& AxiomReport::axiom(int k) const {
  for (const auto& r : results) {
    if (r.axiom == k) {
      return r;
    }
  }
  throw std::out_of_range("axiom not in report");
}

AxiomReport audit_axioms(const Graph& g, const GraphRule& rule, const std::vector<int>& axioms) {
  for (int a : axioms) {
    if (a < 1 || a > 4) {
      throw ValidationError("axioms are numbered 1 to 4");
    }
  }
  const std::size_t n = g.size();
  AxiomReport report;
  for (int a = 1; a <= 4; ++a) {
    AxiomResult res;
    res.axiom = a;
    res.checked = std::find(axioms.begin(), axioms.end(), a) != axioms.end();
    report.results.push_back(res);
  }
  auto& ax1 = report.results[0];
  auto& ax2 = report.results[1];
  auto& ax3 = report.results[2];
  auto& ax4 = report.results[3];
  if (n < 2) {
    return report;
  }

  std::vector<std::optional<std::vector<SharingValue>>> rows(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Removal r = remove_vertex(g, rule, x);
    const RescaleReport rep = rescale(g, r, x);
    ++ax1.cases;
    const bool ok = rep.consistent && (rep.eta->exact ? *rep.eta->exact >= 0 : rep.eta->value >= -float_sharing_tol);
    if (!ok) {
      if (ax1.passed) {
        ax1.passed = false;
        ax1.witness = {x};
        if (rep.witness) {
          ax1.witness.push_back(rep.witness->first);
          ax1.witness.push_back(rep.witness->second);
          ax1.detail = "rescaling ratios differ on removal of " + g.label(x);
        } else {
          ax1.detail = "negative rescaling on removal of " + g.label(x);
        }
      }
      continue;
    }
    rows[x] = row_from(g, r, rep, x);
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!rows[x]) {
      continue;
    }
    const auto& row = *rows[x];
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) {
        continue;
      }
      ++ax2.cases;
      if (negative(row[y]) && ax2.passed) {
        ax2.passed = false;
        ax2.witness = {x, y};
        ax2.detail = "chi(" + g.label(x) + "," + g.label(y) + ") = " + row[y].str();
      }
      if (y > x && rows[y]) {
        ++ax3.cases;
        if (differ(row[y], (*rows[y])[x]) && ax3.passed) {
          ax3.passed = false;
          ax3.witness = {x, y};
          ax3.detail = "chi(" + g.label(x) + "," + g.label(y) + ") = " + row[y].str() + " but chi(" + g.label(y) +
                       "," + g.label(x) + ") = " + (*rows[y])[x].str();
        }
      }
    }
    const VertexSet nx = g.closed_neighborhood(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) {
        continue;
      }
      const VertexSet common_y = nx & g.closed_neighborhood(y);
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) {
          continue;
        }
        const VertexSet common_z = nx & g.closed_neighborhood(z);
        if (!common_z.is_subset_of(common_y)) {
          continue;
        }
        ++ax4.cases;
        if (less(row[y], row[z]) && ax4.passed) {
          ax4.passed = false;
          ax4.witness = {x, y, z};
          ax4.detail = "chi(" + g.label(x) + "," + g.label(y) + ") = " + row[y].str() + " < chi(" + g.label(x) +
                       "," + g.label(z) + ") = " + row[z].str();
        }
      }
    }
  }
  for (auto& r : report.results) {
    if (!r.checked) {
      r.passed = true;
      r.cases = 0;
      r.witness.clear();
      r.detail.clear();
    }
  }
  return report;
}

}  // namespace clonewt
