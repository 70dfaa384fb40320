#include "catkit/cat/quadruple.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "catkit/error.hpp"

namespace catkit::cat {

using metric::Curvature;
using metric::ModelConfig;
using metric::ModelPoint;

namespace {

void check_triple(double a, double b, double c, double tol, const char* name) {
  if (a > b + c + tol || b > a + c + tol || c > a + b + tol) {
    throw Error(std::string("quadruple violates the triangle inequality in triple ") + name);
  }
}

// Model point at distance `r` from the base point x~, making angle `theta`
// with [x~ y~]; `side` = +1 / -1 selects the half-plane.
ModelPoint place(Curvature kappa, double r, double theta, int side) {
  return metric::polar_point(kappa, r, side * theta);
}

double angle_or_zero(double a1, double a2, double opp, const ModelConfig& cfg) {
  return metric::model_angle(a1, a2, opp, cfg).value_or(0.0);
}

// Closed form in E^2: p~ and q~ lie on opposite sides of the x-axis, so the
// unconstrained minimizer of |p~z| + |z q~| over the line is where [p~ q~]
// crosses it. The objective is convex in z, hence the constrained minimizer
// is that crossing clamped to [0, L].
double flat_minimizer(const ModelPoint& p, const ModelPoint& q, double length) {
  const double dy = p.y() - q.y();
  double t;
  if (dy > 0.0) {
    t = p.x() + (q.x() - p.x()) * (p.y() / dy);
  } else {
    // Both on the axis: any point between them is optimal.
    t = 0.5 * (p.x() + q.x());
  }
  return std::clamp(t, 0.0, length);
}

double golden_section(const auto& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void Quadruple::validate(double tol) const {
  for (double v : {pq, px, py, qx, qy, xy}) {
    if (!std::isfinite(v)) throw Error("quadruple distances must be finite");
    if (v < 0) throw Error("quadruple distances must be nonnegative");
  }
  check_triple(pq, px, qx, tol, "(p q x)");
  check_triple(pq, py, qy, tol, "(p q y)");
  check_triple(px, py, xy, tol, "(p x y)");
  check_triple(qx, qy, xy, tol, "(q x y)");
}

namespace {

CatVerdict compare(const Quadruple& quad, const ModelConfig& cfg) {
  CatVerdict verdict;
  if (cfg.kappa == Curvature::Spherical) {
    const double two_pi = 2 * std::numbers::pi;
    if (quad.px + quad.py + quad.xy >= two_pi || quad.qx + quad.qy + quad.xy >= two_pi) {
      verdict.auto_pass = true;
      verdict.slack = std::numeric_limits<double>::infinity();
      return verdict;
    }
  }
  // x~ is the base point and y~ lies on the first axis, so z~(t) = polar(t, 0).
  const double length = quad.xy;
  const ModelPoint p = place(cfg.kappa, quad.px, angle_or_zero(quad.px, length, quad.py, cfg), +1);
  const ModelPoint q = place(cfg.kappa, quad.qx, angle_or_zero(quad.qx, length, quad.qy, cfg), -1);

  auto sum_at = [&](double t) {
    const ModelPoint z = metric::polar_point(cfg.kappa, t, 0.0);
    return metric::model_distance(cfg.kappa, p, z) + metric::model_distance(cfg.kappa, z, q);
  };

  double t_best;
  if (cfg.kappa == Curvature::Flat) {
    t_best = flat_minimizer(p, q, length);
  } else {
    t_best = golden_section(sum_at, 0.0, length, 1e-10);
    // Guard the endpoints, where the bracket cannot land exactly.
    for (double t : {0.0, length}) {
      if (sum_at(t) < sum_at(t_best)) t_best = t;
    }
  }
  const double best = sum_at(t_best);
  verdict.slack = best - quad.pq;
  verdict.witness_t = length > 0.0 ? t_best / length : 0.0;
  verdict.pass = verdict.slack >= -cfg.tol;
  return verdict;
}

}  // namespace

CatVerdict cat_quadruple(const Quadruple& quad, const ModelConfig& cfg) {
  quad.validate(cfg.tol);
  // Evaluate on a canonical representative of the p<->q, x<->y symmetry class
  // so that relabelings give bitwise identical slacks.
  const std::array<Quadruple, 4> variants{{
      quad,
      {quad.pq, quad.qx, quad.qy, quad.px, quad.py, quad.xy},
      {quad.pq, quad.py, quad.px, quad.qy, quad.qx, quad.xy},
      {quad.pq, quad.qy, quad.qx, quad.py, quad.px, quad.xy},
  }};
  auto key = [](const Quadruple& v) { return std::array<double, 4>{v.px, v.py, v.qx, v.qy}; };
  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (key(variants[k]) < key(variants[best])) best = k;
  }
  CatVerdict verdict = compare(variants[best], cfg);
  if (best >= 2) verdict.witness_t = 1.0 - verdict.witness_t;
  return verdict;
}

FourPoints FourPoints::from_six(double d01, double d02, double d03, double d12, double d13, double d23) {
  FourPoints pts;
  auto set = [&](int i, int j, double v) { pts.d[i][j] = pts.d[j][i] = v; };
  set(0, 1, d01);
  set(0, 2, d02);
  set(0, 3, d03);
  set(1, 2, d12);
  set(1, 3, d13);
  set(2, 3, d23);
  return pts;
}

Quadruple assign_roles(const FourPoints& pts, int p, int q, int x, int y) {
  return Quadruple{pts(p, q), pts(p, x), pts(p, y), pts(q, x), pts(q, y), pts(x, y)};
}

SplitVerdict cat_quadruple_all_splittings(const FourPoints& pts, const ModelConfig& cfg) {
  // Pairs {a,b} | {c,d}; each partition is tried with either pair as {p,q}.
  static constexpr std::array<std::array<int, 4>, 6> kRoles{{
      {0, 1, 2, 3}, {2, 3, 0, 1},
      {0, 2, 1, 3}, {1, 3, 0, 2},
      {0, 3, 1, 2}, {1, 2, 0, 3},
  }};
  SplitVerdict worst;
  bool first = true;
  for (const auto& r : kRoles) {
    const CatVerdict v = cat_quadruple(assign_roles(pts, r[0], r[1], r[2], r[3]), cfg);
    ++worst.assignments_checked;
    if (first || v.slack < worst.verdict.slack) {
      worst.verdict = v;
      worst.roles = r;
      first = false;
    }
  }
  return worst;
}

}  // namespace catkit::cat
