#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clonewt/density.hpp"
#include "clonewt/metric_instance.hpp"

namespace clonewt {

// Value with a 99% confidence half-width (zero for exact 1-D results).
struct Estimate {
  double value = 0.0;
  double half_width = 0.0;
};

struct McConfig {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
  unsigned streams = 8;   // fixed, recorded; recombined in stream order
  unsigned threads = 1;
};

struct EstimatorInfo {
  std::string method;  // "exact-1d" or "monte-carlo"
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned streams = 0;
  double confidence = 0.99;
  std::string radius_quadrature;  // f_ν only
};

// Sharing coefficients of g_r (or f_ν): weight[x] = g(x), chi[x][y] for
// x != y, chi[x][x] = g(x) - Σ_{y≠x} chi[x][y]. private_direct[x] is the
// uncovered-region integral estimated independently of chi[x][x].
struct SharingMatrix {
  std::string rule;  // "gr" or "fnu"
  double radius = 0.0;
  std::vector<Estimate> weight;
  std::vector<std::vector<Estimate>> chi;
  std::vector<Estimate> private_direct;
  Estimate union_volume;
  EstimatorInfo info;
};

// Balls B_r(c) around the given centers.
class BallSystem {
 public:
  BallSystem(std::vector<Point> centers, double r);
  std::size_t size() const { return centers_.size(); }
  std::size_t dim() const { return dim_; }
  double radius() const { return r_; }
  const std::vector<Point>& centers() const { return centers_; }
  // |S ∩ B_r(z)|.
  std::size_t count(const Point& z) const;
  bool covers(std::size_t i, const Point& z) const;
  // Bounding box of the union.
  std::pair<Point, Point> bounds() const;

 private:
  std::vector<Point> centers_;
  std::size_t dim_ = 0;
  double r_ = 0.0;
};

// Full sharing matrix of g_r. 1-D: exact by breakpoint arrangement.
// dim >= 2: Monte-Carlo; throws ValidationError when samples == 0.
SharingMatrix sharing_gr(const std::vector<Point>& points, double r, const McConfig& mc = {});

Estimate g_r(const std::vector<Point>& points, double r, std::size_t x, const McConfig& mc = {});
Estimate chi_gr(const std::vector<Point>& points, double r, std::size_t x, std::size_t y, const McConfig& mc = {});

struct RemovalRow {
  std::size_t y = 0;
  double lhs = 0.0;  // g_r(S \ {x})(y)
  double rhs = 0.0;  // (g_r(S)(y) + chi(x, y)) (1 + eta)
  double residual = 0.0;
  double half_width = 0.0;  // combined estimator half-width (0 when exact)
};

struct RemovalReport {
  std::size_t x = 0;
  double private_volume = 0.0;  // absolute volume of B_r(x) minus the other balls
  double union_volume = 0.0;
  double eta = 0.0;
  std::vector<RemovalRow> rows;
  double max_residual = 0.0;
  // Every residual within 1e-9 (exact) or 3x its half-width (MC).
  bool holds = true;
  // g_r(S \ {x})(y) >= g_r(S)(y) for all y (within the same tolerance).
  bool monotone = true;
};

RemovalReport removal_effect_gr(const std::vector<Point>& points, double r, std::size_t x, const McConfig& mc = {});

// Sharing matrix of f_ν = ∫ ν(r) g_r dr. 1-D: adaptive Gauss–Kronrod on each
// piece between breakpoints |c_i - c_j| / 2 and density knots. dim >= 2:
// Gauss–Legendre radius nodes, each a Monte-Carlo g_r matrix.
SharingMatrix sharing_fnu(const std::vector<Point>& points, const Density& density, const McConfig& mc = {});
Estimate chi_fnu(const std::vector<Point>& points, const Density& density, std::size_t x, std::size_t y,
                 const McConfig& mc = {});

struct DominanceResult {
  bool dominates = false;     // B_r(x) ∩ B_r(z) ⊆ B_r(x) ∩ B_r(y)
  Estimate chi_y;
  Estimate chi_z;
  bool ordering_holds = true;  // chi_y >= chi_z - tolerance whenever dominates
  std::optional<Point> witness;  // point of B_r(x) ∩ B_r(z) outside B_r(y)
};

DominanceResult dominance_check(const std::vector<Point>& points, double r, std::size_t x, std::size_t y,
                                std::size_t z, const McConfig& mc = {});

// Vol(B_r(0) ∩ B_r(p)) with |p| = separation, 1-D.
double lens_length_1d(double r, double separation);

}  // namespace clonewt
