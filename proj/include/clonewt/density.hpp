#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clonewt/rational.hpp"

namespace clonewt {

// Probability density on [0, alpha] given through its exact CDF Γ and a
// declared pdf bound ν̄.
class Density {
 public:
  static Density uniform(double alpha);
  // Knots (r, Γ(r)) from (0, 0) to (alpha, 1), r strictly increasing, Γ
  // nondecreasing; every segment slope must be <= nu_bar.
  static Density piecewise_linear(std::vector<std::pair<double, double>> knots, double nu_bar);
  // "uniform" or "pwl:r1=g1,r2=g2,...;bar=B" (the (0,0) knot is implicit).
  static Density parse(std::string_view spec, double alpha);

  double alpha() const { return alpha_; }
  double nu_bar() const { return nu_bar_; }
  bool is_uniform() const { return knots_.size() == 2 && uniform_; }

  double cdf(double r) const;
  Rational cdf_exact(const Rational& r) const;
  double pdf(double r) const;
  // Knot radii including 0 and alpha.
  std::vector<double> knot_radii() const;
  std::string describe() const;

 private:
  Density() = default;

  double alpha_ = 1.0;
  double nu_bar_ = 1.0;
  bool uniform_ = false;
  std::vector<std::pair<double, double>> knots_;
  std::vector<std::pair<Rational, Rational>> exact_knots_;
};

}  // namespace clonewt
