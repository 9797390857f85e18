#include "clonewt/euclid_sharing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "clonewt/errors.hpp"
#include "clonewt/random.hpp"

namespace clonewt {

namespace {

constexpr double z99 = 2.5758293035489004;

void check_points(const std::vector<Point>& points) {
  if (points.empty()) {
    throw ValidationError("point set is empty");
  }
  const std::size_t dim = points.front().size();
  if (dim == 0) {
    throw ValidationError("points need at least one coordinate");
  }
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw ValidationError("points have mixed dimensions");
    }
    for (double c : p) {
      if (!std::isfinite(c)) {
        throw ValidationError("non-finite coordinate");
      }
    }
  }
}

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ValidationError("radius must be positive and finite");
  }
}

SharingMatrix empty_matrix(std::size_t n, double r) {
  SharingMatrix m;
  m.rule = "gr";
  m.radius = r;
  m.weight.assign(n, {});
  m.chi.assign(n, std::vector<Estimate>(n));
  m.private_direct.assign(n, {});
  return m;
}

void fill_diagonal(SharingMatrix& m) {
  const std::size_t n = m.weight.size();
  for (std::size_t x = 0; x < n; ++x) {
    double shared = 0.0;
    double hw = m.weight[x].half_width;
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x) {
        shared += m.chi[x][y].value;
        hw += m.chi[x][y].half_width;
      }
    }
    m.chi[x][x] = {m.weight[x].value - shared, hw};
  }
}

// Exact arrangement of the intervals [c - r, c + r].
SharingMatrix exact_1d(const std::vector<Point>& points, double r) {
  const std::size_t n = points.size();
  SharingMatrix m = empty_matrix(n, r);
  std::vector<double> ends;
  for (const auto& p : points) {
    ends.push_back(p[0] - r);
    ends.push_back(p[0] + r);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  double volume = 0.0;
  std::vector<std::size_t> cover;
  for (std::size_t e = 0; e + 1 < ends.size(); ++e) {
    const double len = ends[e + 1] - ends[e];
    const double mid = 0.5 * (ends[e] + ends[e + 1]);
    cover.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(points[i][0] - mid) < r) {
        cover.push_back(i);
      }
    }
    if (cover.empty()) {
      continue;
    }
    volume += len;
    const auto k = static_cast<double>(cover.size());
    for (std::size_t i : cover) {
      m.weight[i].value += len / k;
      if (cover.size() == 1) {
        m.private_direct[i].value += len;
      }
      for (std::size_t j : cover) {
        if (j != i) {
          m.chi[i][j].value += len / (k * (k - 1.0));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    m.weight[i].value /= volume;
    m.private_direct[i].value /= volume;
    for (std::size_t j = 0; j < n; ++j) {
      m.chi[i][j].value /= volume;
    }
  }
  m.union_volume = {volume, 0.0};
  fill_diagonal(m);
  m.info.method = "exact-1d";
  return m;
}

struct Tally {
  std::size_t samples = 0;
  double covered = 0.0;
  std::vector<double> w, w2, chi, chi2, priv, priv2;
  double priv_covered = 0.0;
  std::size_t priv_samples = 0;

  explicit Tally(std::size_t n)
      : w(n, 0.0), w2(n, 0.0), chi(n * n, 0.0), chi2(n * n, 0.0), priv(n, 0.0), priv2(n, 0.0) {}

  void merge(const Tally& o) {
    samples += o.samples;
    covered += o.covered;
    priv_samples += o.priv_samples;
    priv_covered += o.priv_covered;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] += o.w[i];
      w2[i] += o.w2[i];
      priv[i] += o.priv[i];
      priv2[i] += o.priv2[i];
    }
    for (std::size_t i = 0; i < chi.size(); ++i) {
      chi[i] += o.chi[i];
      chi2[i] += o.chi2[i];
    }
  }
};

// Ratio estimator ΣY / ΣX for X the union indicator and Y supported on it.
Estimate ratio(double sum_y, double sum_y2, double sum_x, std::size_t n) {
  if (sum_x <= 0.0 || n < 2) {
    return {0.0, 0.0};
  }
  const double r = sum_y / sum_x;
  const double s2 = std::max(0.0, (sum_y2 - 2.0 * r * sum_y + r * r * sum_x) / static_cast<double>(n - 1));
  const double xbar = sum_x / static_cast<double>(n);
  return {r, z99 * std::sqrt(s2 / static_cast<double>(n)) / xbar};
}

SharingMatrix monte_carlo(const std::vector<Point>& points, double r, const McConfig& mc) {
  if (mc.samples == 0) {
    throw ValidationError("Monte-Carlo estimation needs samples > 0");
  }
  if (mc.streams == 0) {
    throw ValidationError("Monte-Carlo estimation needs at least one stream");
  }
  const std::size_t n = points.size();
  const BallSystem balls(points, r);
  const auto [lo, hi] = balls.bounds();
  const std::size_t dim = balls.dim();
  double box = 1.0;
  for (std::size_t a = 0; a < dim; ++a) {
    box *= hi[a] - lo[a];
  }
  const std::size_t total = mc.samples;
  const unsigned streams = mc.streams;

  // Stream s covers strata [s N / S, (s + 1) N / S) of the first axis; streams
  // S..2S-1 estimate the private regions independently.
  auto run_stream = [&](unsigned s, Tally& t) {
    const bool private_pass = s >= streams;
    const unsigned block = private_pass ? s - streams : s;
    const std::size_t begin = total * block / streams;
    const std::size_t end = total * (block + 1) / streams;
    auto rng = make_rng(mc.seed, s);
    Point z(dim);
    std::vector<std::size_t> cover;
    for (std::size_t i = begin; i < end; ++i) {
      z[0] = lo[0] + (hi[0] - lo[0]) * (static_cast<double>(i) + uniform01(rng)) / static_cast<double>(total);
      for (std::size_t a = 1; a < dim; ++a) {
        z[a] = uniform(rng, lo[a], hi[a]);
      }
      cover.clear();
      for (std::size_t c = 0; c < n; ++c) {
        if (balls.covers(c, z)) {
          cover.push_back(c);
        }
      }
      if (private_pass) {
        ++t.priv_samples;
        if (!cover.empty()) {
          t.priv_covered += 1.0;
        }
        if (cover.size() == 1) {
          t.priv[cover[0]] += 1.0;
          t.priv2[cover[0]] += 1.0;
        }
        continue;
      }
      ++t.samples;
      if (cover.empty()) {
        continue;
      }
      t.covered += 1.0;
      const auto k = static_cast<double>(cover.size());
      const double share = 1.0 / k;
      const double pair = cover.size() > 1 ? 1.0 / (k * (k - 1.0)) : 0.0;
      for (std::size_t i : cover) {
        t.w[i] += share;
        t.w2[i] += share * share;
        for (std::size_t j : cover) {
          if (j != i) {
            t.chi[i * n + j] += pair;
            t.chi2[i * n + j] += pair * pair;
          }
        }
      }
    }
  };

  std::vector<Tally> tallies(2 * streams, Tally(n));
  const unsigned workers = std::max(1U, std::min(mc.threads, 2 * streams));
  if (workers == 1) {
    for (unsigned s = 0; s < 2 * streams; ++s) {
      run_stream(s, tallies[s]);
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (unsigned s = w; s < 2 * streams; s += workers) {
          run_stream(s, tallies[s]);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  Tally sum(n);
  for (const auto& t : tallies) {
    sum.merge(t);
  }

  SharingMatrix m = empty_matrix(n, r);
  for (std::size_t i = 0; i < n; ++i) {
    m.weight[i] = ratio(sum.w[i], sum.w2[i], sum.covered, sum.samples);
    m.private_direct[i] = ratio(sum.priv[i], sum.priv2[i], sum.priv_covered, sum.priv_samples);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) {
        m.chi[i][j] = ratio(sum.chi[i * n + j], sum.chi2[i * n + j], sum.covered, sum.samples);
      }
    }
  }
  const double p = sum.covered / static_cast<double>(sum.samples);
  m.union_volume = {box * p,
                    sum.samples > 1 ? z99 * box * std::sqrt(p * (1.0 - p) / static_cast<double>(sum.samples - 1))
                                    : 0.0};
  fill_diagonal(m);
  m.info.method = "monte-carlo";
  m.info.samples = mc.samples;
  m.info.seed = mc.seed;
  m.info.streams = mc.streams;
  return m;
}

// Adaptive Gauss–Kronrod (15-point Gauss inside 31-point Kronrod) for a
// vector-valued integrand; the error is the max-norm Gauss/Kronrod gap.
using VectorFn = std::function<std::vector<double>(double)>;

void gk_piece(const VectorFn& f, double a, double b, std::vector<double>& out, double& err) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
  using gauss = boost::math::quadrature::gauss<double, 15>;
  const auto& xk = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::vector<double> f0 = f(mid);
  std::vector<double> kr(f0.size()), ga(f0.size());
  for (std::size_t c = 0; c < f0.size(); ++c) {
    kr[c] = f0[c] * wk[0];
    ga[c] = f0[c] * wg[0];
  }
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const std::vector<double> fp = f(mid + half * xk[i]);
    const std::vector<double> fm = f(mid - half * xk[i]);
    for (std::size_t c = 0; c < f0.size(); ++c) {
      kr[c] += (fp[c] + fm[c]) * wk[i];
      if (i % 2 == 0) {
        ga[c] += (fp[c] + fm[c]) * wg[i / 2];
      }
    }
  }
  err = 0.0;
  out.assign(f0.size(), 0.0);
  for (std::size_t c = 0; c < f0.size(); ++c) {
    out[c] = kr[c] * half;
    err = std::max(err, std::abs((kr[c] - ga[c]) * half));
  }
}

void integrate_adaptive(const VectorFn& f, double a, double b, double tol, unsigned depth, std::vector<double>& acc,
                        double& err) {
  std::vector<double> piece;
  double e = 0.0;
  gk_piece(f, a, b, piece, e);
  if (e > tol && depth > 0) {
    const double m = 0.5 * (a + b);
    integrate_adaptive(f, a, m, tol / 2, depth - 1, acc, err);
    integrate_adaptive(f, m, b, tol / 2, depth - 1, acc, err);
    return;
  }
  if (acc.empty()) {
    acc.assign(piece.size(), 0.0);
  }
  for (std::size_t c = 0; c < piece.size(); ++c) {
    acc[c] += piece[c];
  }
  err += e;
}

// Flattened per-radius layout: n weights, n private parts, n*n chi, volume.
std::vector<double> flatten(const SharingMatrix& m) {
  const std::size_t n = m.weight.size();
  std::vector<double> v;
  v.reserve(2 * n + n * n + 1);
  for (const auto& e : m.weight) v.push_back(e.value);
  for (const auto& e : m.private_direct) v.push_back(e.value);
  for (const auto& row : m.chi) {
    for (const auto& e : row) v.push_back(e.value);
  }
  v.push_back(m.union_volume.value);
  return v;
}

std::vector<double> radius_breaks(const std::vector<Point>& points, const Density& density) {
  std::vector<double> breaks = density.knot_radii();
  const double alpha = density.alpha();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double h = 0.5 * std::abs(points[i][0] - points[j][0]);
      if (h > 0.0 && h < alpha) {
        breaks.push_back(h);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

}  // namespace

BallSystem::BallSystem(std::vector<Point> centers, double r) : centers_(std::move(centers)), r_(r) {
  check_points(centers_);
  check_radius(r);
  dim_ = centers_.front().size();
}

bool BallSystem::covers(std::size_t i, const Point& z) const {
  double d2 = 0.0;
  for (std::size_t a = 0; a < dim_; ++a) {
    const double t = centers_[i][a] - z[a];
    d2 += t * t;
  }
  return d2 <= r_ * r_;
}

std::size_t BallSystem::count(const Point& z) const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    k += covers(i, z) ? 1 : 0;
  }
  return k;
}

std::pair<Point, Point> BallSystem::bounds() const {
  Point lo = centers_.front();
  Point hi = centers_.front();
  for (const auto& c : centers_) {
    for (std::size_t a = 0; a < dim_; ++a) {
      lo[a] = std::min(lo[a], c[a]);
      hi[a] = std::max(hi[a], c[a]);
    }
  }
  for (std::size_t a = 0; a < dim_; ++a) {
    lo[a] -= r_;
    hi[a] += r_;
  }
  return {lo, hi};
}

SharingMatrix sharing_gr(const std::vector<Point>& points, double r, const McConfig& mc) {
  check_points(points);
  check_radius(r);
  return points.front().size() == 1 ? exact_1d(points, r) : monte_carlo(points, r, mc);
}

Estimate g_r(const std::vector<Point>& points, double r, std::size_t x, const McConfig& mc) {
  if (x >= points.size()) {
    throw ValidationError("element index out of range");
  }
  return sharing_gr(points, r, mc).weight[x];
}

Estimate chi_gr(const std::vector<Point>& points, double r, std::size_t x, std::size_t y, const McConfig& mc) {
  if (x >= points.size() || y >= points.size()) {
    throw ValidationError("element index out of range");
  }
  return sharing_gr(points, r, mc).chi[x][y];
}

RemovalReport removal_effect_gr(const std::vector<Point>& points, double r, std::size_t x, const McConfig& mc) {
  if (x >= points.size()) {
    throw ValidationError("element index out of range");
  }
  if (points.size() < 2) {
    throw ValidationError("removal needs at least two elements");
  }
  const SharingMatrix full = sharing_gr(points, r, mc);
  std::vector<Point> rest = points;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(x));
  const SharingMatrix reduced = sharing_gr(rest, r, mc);

  RemovalReport rep;
  rep.x = x;
  rep.union_volume = full.union_volume.value;
  rep.private_volume = full.chi[x][x].value * rep.union_volume;
  rep.eta = rep.private_volume / (rep.union_volume - rep.private_volume);
  const bool exact = full.info.method == "exact-1d";
  const double eta_hw =
      exact ? 0.0
            : (full.chi[x][x].half_width + full.union_volume.half_width / rep.union_volume) * (1.0 + rep.eta) *
                  (1.0 + rep.eta);
  for (std::size_t y = 0; y < points.size(); ++y) {
    if (y == x) {
      continue;
    }
    const std::size_t k = y < x ? y : y - 1;
    RemovalRow row;
    row.y = y;
    row.lhs = reduced.weight[k].value;
    const double base = full.weight[y].value + full.chi[x][y].value;
    row.rhs = base * (1.0 + rep.eta);
    row.residual = row.lhs - row.rhs;
    row.half_width = exact ? 0.0
                           : reduced.weight[k].half_width +
                                 (full.weight[y].half_width + full.chi[x][y].half_width) * (1.0 + rep.eta) +
                                 base * eta_hw;
    const double allowed = exact ? 1e-9 : 3.0 * row.half_width;
    rep.max_residual = std::max(rep.max_residual, std::abs(row.residual));
    rep.holds = rep.holds && std::abs(row.residual) <= allowed;
    rep.monotone = rep.monotone && row.lhs >= full.weight[y].value - allowed;
    rep.rows.push_back(row);
  }
  return rep;
}

SharingMatrix sharing_fnu(const std::vector<Point>& points, const Density& density, const McConfig& mc) {
  check_points(points);
  const std::size_t n = points.size();
  const bool one_d = points.front().size() == 1;
  const std::vector<double> breaks =
      one_d ? radius_breaks(points, density) : density.knot_radii();

  std::vector<double> sum;
  std::vector<double> var;
  double err = 0.0;
  std::size_t node_index = 0;
  constexpr unsigned nodes = 8;
  for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
    const double lo = breaks[b];
    const double hi = breaks[b + 1];
    if (hi <= lo) {
      continue;
    }
    if (one_d) {
      const VectorFn f = [&](double r) {
        std::vector<double> v = flatten(exact_1d(points, r));
        const double nu = density.pdf(r);
        for (double& e : v) {
          e *= nu;
        }
        return v;
      };
      integrate_adaptive(f, lo, hi, 1e-10 * (hi - lo) / density.alpha(), 30, sum, err);
      continue;
    }
    using gauss = boost::math::quadrature::gauss<double, nodes>;
    const auto& xs = gauss::abscissa();
    const auto& ws = gauss::weights();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    auto add_node = [&](double r, double weight) {
      McConfig node = mc;
      node.seed = mc.seed + 0x9E3779B97F4A7C15ULL * ++node_index;
      node.samples = std::max<std::size_t>(1, mc.samples / (nodes * (breaks.size() - 1)));
      const SharingMatrix m = monte_carlo(points, r, node);
      const double scale = weight * half * density.pdf(r);
      std::vector<double> v = flatten(m);
      std::vector<double> h;
      for (const auto& e : m.weight) h.push_back(e.half_width);
      for (const auto& e : m.private_direct) h.push_back(e.half_width);
      for (const auto& row : m.chi) {
        for (const auto& e : row) h.push_back(e.half_width);
      }
      h.push_back(m.union_volume.half_width);
      if (sum.empty()) {
        sum.assign(v.size(), 0.0);
        var.assign(v.size(), 0.0);
      }
      for (std::size_t c = 0; c < v.size(); ++c) {
        sum[c] += scale * v[c];
        var[c] += scale * scale * h[c] * h[c];
      }
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] == 0.0) {
        add_node(mid, ws[i]);
      } else {
        add_node(mid + half * xs[i], ws[i]);
        add_node(mid - half * xs[i], ws[i]);
      }
    }
  }

  SharingMatrix m = empty_matrix(n, 0.0);
  m.rule = "fnu";
  m.radius = density.alpha();
  auto entry = [&](std::size_t c) {
    return Estimate{sum[c], one_d ? 0.0 : std::sqrt(var[c])};
  };
  for (std::size_t i = 0; i < n; ++i) {
    m.weight[i] = entry(i);
    m.private_direct[i] = entry(n + i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) {
        m.chi[i][j] = entry(2 * n + i * n + j);
      }
    }
  }
  m.union_volume = entry(2 * n + n * n);
  fill_diagonal(m);
  if (one_d) {
    m.info.method = "exact-1d";
    m.info.radius_quadrature = "adaptive-gauss-kronrod-31";
  } else {
    m.info.method = "monte-carlo";
    m.info.samples = mc.samples;
    m.info.seed = mc.seed;
    m.info.streams = mc.streams;
    m.info.radius_quadrature = "gauss-legendre-8";
  }
  return m;
}

Estimate chi_fnu(const std::vector<Point>& points, const Density& density, std::size_t x, std::size_t y,
                 const McConfig& mc) {
  if (x >= points.size() || y >= points.size()) {
    throw ValidationError("element index out of range");
  }
  return sharing_fnu(points, density, mc).chi[x][y];
}

DominanceResult dominance_check(const std::vector<Point>& points, double r, std::size_t x, std::size_t y,
                                std::size_t z, const McConfig& mc) {
  check_points(points);
  check_radius(r);
  const std::size_t n = points.size();
  if (x >= n || y >= n || z >= n) {
    throw ValidationError("element index out of range");
  }
  if (x == y || x == z || y == z) {
    throw ValidationError("dominance needs three distinct elements");
  }
  DominanceResult res;
  const SharingMatrix m = sharing_gr(points, r, mc);
  res.chi_y = m.chi[x][y];
  res.chi_z = m.chi[x][z];
  const BallSystem balls(points, r);

  if (balls.dim() == 1) {
    const double cx = points[x][0];
    auto lens = [&](std::size_t o) {
      return std::make_pair(std::max(cx, points[o][0]) - r, std::min(cx, points[o][0]) + r);
    };
    const auto [zl, zh] = lens(z);
    const auto [yl, yh] = lens(y);
    if (zh - zl <= 0.0) {
      res.dominates = true;
    } else if (yl <= zl && zh <= yh) {
      res.dominates = true;
    } else {
      const double w = zl < yl ? 0.5 * (zl + std::min(yl, zh)) : 0.5 * (std::max(yh, zl) + zh);
      res.witness = Point{w};
    }
  } else {
    // Rejection sampling inside B_r(x) ∩ B_r(z).
    auto rng = make_rng(mc.seed, 0xD0D0ULL);
    const std::size_t dim = balls.dim();
    const std::size_t tries = std::max<std::size_t>(1, std::min<std::size_t>(mc.samples, 200'000));
    Point p(dim);
    res.dominates = true;
    for (std::size_t t = 0; t < tries; ++t) {
      for (std::size_t a = 0; a < dim; ++a) {
        p[a] = uniform(rng, points[x][a] - r, points[x][a] + r);
      }
      if (balls.covers(x, p) && balls.covers(z, p) && !balls.covers(y, p)) {
        res.dominates = false;
        res.witness = p;
        break;
      }
    }
  }
  if (res.dominates) {
    const double tol = res.chi_y.half_width + res.chi_z.half_width + 1e-12;
    res.ordering_holds = res.chi_y.value >= res.chi_z.value - tol;
  }
  return res;
}

double lens_length_1d(double r, double separation) {
  check_radius(r);
  return std::max(0.0, 2.0 * r - std::abs(separation));
}

}  // namespace clonewt
