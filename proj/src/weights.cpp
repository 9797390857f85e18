#include "clonewt/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace clonewt {

WeightVector WeightVector::exact(std::vector<Rational> values) {
  WeightVector w;
  w.exact_ = true;
  w.approx_.reserve(values.size());
  for (const auto& q : values) {
    w.approx_.push_back(to_double(q));
  }
  w.rational_ = std::move(values);
  return w;
}

WeightVector WeightVector::approx(std::vector<double> values) {
  WeightVector w;
  w.approx_ = std::move(values);
  return w;
}

const Rational& WeightVector::rational(std::size_t i) const {
  if (!exact_) {
    throw std::logic_error("weight vector is not exact");
  }
  return rational_.at(i);
}

const std::vector<Rational>& WeightVector::rationals() const {
  if (!exact_) {
    throw std::logic_error("weight vector is not exact");
  }
  return rational_;
}

bool WeightVector::is_distribution() const {
  if (exact_) {
    Rational sum = 0;
    for (const auto& q : rational_) {
      if (q < 0) {
        return false;
      }
      sum += q;
    }
    return sum == 1;
  }
  double sum = 0.0;
  for (double v : approx_) {
    if (!(v >= 0.0)) {
      return false;
    }
    sum += v;
  }
  return std::abs(sum - 1.0) <= 1e-12;
}

std::string WeightVector::str(std::size_t i) const {
  if (exact_) {
    return to_string(rational_.at(i));
  }
  return shortest(approx_.at(i));
}

bool operator==(const WeightVector& a, const WeightVector& b) {
  if (a.exact_ != b.exact_) {
    return false;
  }
  return a.exact_ ? a.rational_ == b.rational_ : a.approx_ == b.approx_;
}

}  // namespace clonewt
