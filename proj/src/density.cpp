#include "clonewt/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clonewt/errors.hpp"

namespace clonewt {

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

double parse_double(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double v = std::stod(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw ValidationError("density: cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
}

}  // namespace

Density Density::uniform(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("density: alpha must be positive and finite");
  }
  Density d = piecewise_linear({{alpha, 1.0}}, 1.0 / alpha);
  d.uniform_ = true;
  return d;
}

Density Density::piecewise_linear(std::vector<std::pair<double, double>> knots, double nu_bar) {
  if (knots.empty() || knots.front() != std::pair<double, double>{0.0, 0.0}) {
    knots.insert(knots.begin(), {0.0, 0.0});
  }
  if (knots.size() < 2) {
    throw ValidationError("density: need at least one knot after the origin");
  }
  if (!(nu_bar > 0.0) || !std::isfinite(nu_bar)) {
    throw ValidationError("density: pdf bound must be positive and finite");
  }
  Density d;
  d.nu_bar_ = nu_bar;
  d.alpha_ = knots.back().first;
  if (!(d.alpha_ > 0.0) || !std::isfinite(d.alpha_)) {
    throw ValidationError("density: alpha must be positive and finite");
  }
  if (knots.back().second != 1.0) {
    throw ValidationError("density: CDF must reach 1 at alpha");
  }
  const Rational bar = decimal_rational(nu_bar);
  for (const auto& [r, g] : knots) {
    d.exact_knots_.emplace_back(decimal_rational(r), decimal_rational(g));
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const auto& [r0, g0] = d.exact_knots_[i - 1];
    const auto& [r1, g1] = d.exact_knots_[i];
    if (!(r1 > r0)) {
      throw ValidationError("density: knot radii must be strictly increasing");
    }
    if (g1 < g0) {
      throw ValidationError("density: CDF must be nondecreasing");
    }
    if ((g1 - g0) / (r1 - r0) > bar * Rational(1'000'000'000'001LL, 1'000'000'000'000LL)) {
      throw ValidationError("density: segment slope exceeds the declared pdf bound " + format_double(nu_bar));
    }
  }
  d.knots_ = std::move(knots);
  return d;
}

Density Density::parse(std::string_view spec, double alpha) {
  if (spec == "uniform") {
    return uniform(alpha);
  }
  if (spec.substr(0, 4) != "pwl:") {
    throw ValidationError("density: expected 'uniform' or 'pwl:r=g,...;bar=B', got '" + std::string(spec) + "'");
  }
  std::string_view body = spec.substr(4);
  const auto semi = body.find(";bar=");
  if (semi == std::string_view::npos) {
    throw ValidationError("density: missing ';bar=B' in '" + std::string(spec) + "'");
  }
  const double bar = parse_double(body.substr(semi + 5), "pdf bound");
  body = body.substr(0, semi);
  std::vector<std::pair<double, double>> knots;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("density: knot '" + std::string(item) + "' is not r=g");
    }
    knots.emplace_back(parse_double(item.substr(0, eq), "knot radius"), parse_double(item.substr(eq + 1), "knot CDF"));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  Density d = piecewise_linear(std::move(knots), bar);
  if (d.alpha() != alpha) {
    throw ValidationError("density: last knot radius " + format_double(d.alpha()) + " differs from alpha " +
                          format_double(alpha));
  }
  return d;
}

double Density::cdf(double r) const {
  if (r <= 0.0) {
    return 0.0;
  }
  if (r >= alpha_) {
    return 1.0;
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), r,
                                   [](double v, const auto& k) { return v < k.first; });
  const auto& [r1, g1] = *it;
  const auto& [r0, g0] = *(it - 1);
  return g0 + (g1 - g0) * (r - r0) / (r1 - r0);
}

Rational Density::cdf_exact(const Rational& r) const {
  if (r <= 0) {
    return Rational(0);
  }
  if (r >= exact_knots_.back().first) {
    return Rational(1);
  }
  const auto it = std::upper_bound(exact_knots_.begin(), exact_knots_.end(), r,
                                   [](const Rational& v, const auto& k) { return v < k.first; });
  const auto& [r1, g1] = *it;
  const auto& [r0, g0] = *(it - 1);
  return g0 + (g1 - g0) * (r - r0) / (r1 - r0);
}

double Density::pdf(double r) const {
  if (r < 0.0 || r >= alpha_) {
    return 0.0;
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), r,
                                   [](double v, const auto& k) { return v < k.first; });
  const auto& [r1, g1] = *it;
  const auto& [r0, g0] = *(it - 1);
  return (g1 - g0) / (r1 - r0);
}

std::vector<double> Density::knot_radii() const {
  std::vector<double> out;
  out.reserve(knots_.size());
  for (const auto& k : knots_) {
    out.push_back(k.first);
  }
  return out;
}

std::string Density::describe() const {
  if (is_uniform()) {
    return "uniform";
  }
  std::ostringstream out;
  out << "pwl:";
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    out << (i > 1 ? "," : "") << format_double(knots_[i].first) << '=' << format_double(knots_[i].second);
  }
  out << ";bar=" << format_double(nu_bar_);
  return out.str();
}

}  // namespace clonewt
