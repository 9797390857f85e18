#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clonewt/rational.hpp"

namespace clonewt {

// Probability distribution over elements, held either as exact rationals or
// as doubles. Exact vectors also carry their double images.
class WeightVector {
 public:
  WeightVector() = default;
  static WeightVector exact(std::vector<Rational> values);
  static WeightVector approx(std::vector<double> values);

  bool is_exact() const { return exact_; }
  std::size_t size() const { return approx_.size(); }
  double operator[](std::size_t i) const { return approx_[i]; }
  const std::vector<double>& values() const { return approx_; }
  // Throws std::logic_error on a floating vector.
  const Rational& rational(std::size_t i) const;
  const std::vector<Rational>& rationals() const;

  // Exact: sum is exactly 1. Float: |sum - 1| <= 1e-12. All entries >= 0.
  bool is_distribution() const;
  std::string str(std::size_t i) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b);

 private:
  bool exact_ = false;
  std::vector<Rational> rational_;
  std::vector<double> approx_;
};

}  // namespace clonewt
