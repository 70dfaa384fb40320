#include "catkit/metric/model_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Geometry>

#include "catkit/error.hpp"

namespace catkit::metric {

namespace {

constexpr double kPi = std::numbers::pi;

double minkowski(const ModelPoint& a, const ModelPoint& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// sin, identity or sinh: the function entering the half-angle formulas.
double curvature_fn(Curvature kappa, double v) {
  switch (kappa) {
    case Curvature::Spherical: return std::sin(v);
    case Curvature::Hyperbolic: return std::sinh(v);
    case Curvature::Flat: break;
  }
  return v;
}

void check_sides(double a, double b, double c, double tol) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
    throw Error("side lengths must be finite");
  }
  if (a < 0 || b < 0 || c < 0) throw Error("side lengths must be nonnegative");
  if (a > b + c + tol || b > a + c + tol || c > a + b + tol) {
    throw Error("side lengths (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                std::to_string(c) + ") violate the triangle inequality");
  }
}

bool spherical_undefined(const ModelConfig& cfg, double a, double b, double c) {
  return cfg.kappa == Curvature::Spherical && a + b + c >= 2 * kPi;
}

}  // namespace

ModelConfig ModelConfig::make(int kappa, double tol) {
  if (!(tol > 0)) throw Error("tolerance must be positive");
  return ModelConfig{curvature_from_int(kappa), tol};
}

Curvature curvature_from_int(int kappa) {
  switch (kappa) {
    case -1: return Curvature::Hyperbolic;
    case 0: return Curvature::Flat;
    case 1: return Curvature::Spherical;
    default: break;
  }
  throw Error("curvature must be -1, 0 or 1 (got " + std::to_string(kappa) + ")");
}

const char* to_string(Curvature kappa) {
  switch (kappa) {
    case Curvature::Hyperbolic: return "H2";
    case Curvature::Flat: return "E2";
    case Curvature::Spherical: return "S2";
  }
  return "?";
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "neg";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "pos";
  }
  return "?";
}

double model_distance(Curvature kappa, const ModelPoint& a, const ModelPoint& b) {
  switch (kappa) {
    case Curvature::Flat: return (a - b).norm();
    case Curvature::Spherical: return std::atan2(a.cross(b).norm(), a.dot(b));
    case Curvature::Hyperbolic: {
      const ModelPoint diff = a - b;
      const double chord2 = std::max(0.0, minkowski(diff, diff));
      return 2.0 * std::asinh(std::sqrt(chord2) / 2.0);
    }
  }
  return 0.0;
}

ModelPoint polar_point(Curvature kappa, double r, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  switch (kappa) {
    case Curvature::Flat: return {r * c, r * s, 0.0};
    case Curvature::Spherical: return {std::cos(r), std::sin(r) * c, std::sin(r) * s};
    case Curvature::Hyperbolic: return {std::cosh(r), std::sinh(r) * c, std::sinh(r) * s};
  }
  return ModelPoint::Zero();
}

ModelPoint along_segment(Curvature kappa, const ModelPoint& a, const ModelPoint& b, double t) {
  const double d = model_distance(kappa, a, b);
  if (d == 0.0) return a;
  switch (kappa) {
    case Curvature::Flat: return a + (t / d) * (b - a);
    case Curvature::Spherical: {
      const ModelPoint w = (b - a * std::cos(d)) / std::sin(d);
      return a * std::cos(t) + w * std::sin(t);
    }
    case Curvature::Hyperbolic: {
      const ModelPoint w = (b - a * std::cosh(d)) / std::sinh(d);
      return a * std::cosh(t) + w * std::sinh(t);
    }
  }
  return a;
}

std::optional<double> model_angle(double adjacent1, double adjacent2, double opposite,
                                  const ModelConfig& cfg) {
  check_sides(adjacent1, adjacent2, opposite, cfg.tol);
  if (adjacent1 == 0.0 || adjacent2 == 0.0) return std::nullopt;
  if (spherical_undefined(cfg, adjacent1, adjacent2, opposite)) return std::nullopt;
  // Half-angle formula: tan^2(A/2) = f(s-b) f(s-c) / (f(s) f(s-a)), with
  // f = id, sin, sinh. Stable for thin and degenerate triangles.
  const double s = 0.5 * (adjacent1 + adjacent2 + opposite);
  const double sa = std::max(0.0, 0.5 * (adjacent1 + adjacent2 - opposite));
  const double sb = std::max(0.0, 0.5 * (opposite + adjacent2 - adjacent1));
  const double sc = std::max(0.0, 0.5 * (opposite + adjacent1 - adjacent2));
  const double num = curvature_fn(cfg.kappa, sb) * curvature_fn(cfg.kappa, sc);
  const double den = curvature_fn(cfg.kappa, s) * curvature_fn(cfg.kappa, sa);
  return 2.0 * std::atan2(std::sqrt(std::max(0.0, num)), std::sqrt(std::max(0.0, den)));
}

std::optional<ModelTriangle> model_triangle(double pq, double qr, double rp, const ModelConfig& cfg) {
  check_sides(pq, qr, rp, cfg.tol);
  if (spherical_undefined(cfg, pq, qr, rp)) return std::nullopt;
  double angle_at_p = 0.0;
  if (auto a = model_angle(pq, rp, qr, cfg)) angle_at_p = *a;
  return ModelTriangle{cfg.kappa, polar_point(cfg.kappa, 0.0, 0.0), polar_point(cfg.kappa, pq, 0.0),
                       polar_point(cfg.kappa, rp, angle_at_p)};
}

AngleCurvatureGap angle_curvature_gap(double px, double py, double xy, double tol) {
  if (px <= 0.0 || py <= 0.0) throw Error("angle at p is undefined: zero adjacent side");
  const auto sphere = model_angle(px, py, xy, {Curvature::Spherical, tol});
  if (!sphere) throw Error("spherical model triangle is undefined (perimeter >= 2*pi)");
  AngleCurvatureGap gap;
  gap.angle_spherical = *sphere;
  gap.angle_flat = *model_angle(px, py, xy, {Curvature::Flat, tol});
  gap.angle_hyperbolic = *model_angle(px, py, xy, {Curvature::Hyperbolic, tol});
  gap.gap_sphere = std::abs(gap.angle_spherical - gap.angle_flat);
  gap.gap_hyp = std::abs(gap.angle_hyperbolic - gap.angle_flat);
  gap.bound = px * py;
  return gap;
}

namespace {

Sign sign_of(double v, double tol) {
  if (v > tol) return Sign::Positive;
  if (v < -tol) return Sign::Negative;
  return Sign::Zero;
}

double required_angle(double a1, double a2, double opp, const ModelConfig& cfg, const char* what) {
  auto angle = model_angle(a1, a2, opp, cfg);
  if (!angle) throw Error(std::string("model triangle ") + what + " is undefined");
  return *angle;
}

}  // namespace

bool AlexandrovSignReport::consistent(double tol) const {
  if (!signs_agree()) return false;
  if (angle_inequality_slack < -tol) return false;
  // The slack is second order in the sign defects, so near-equality with
  // small nonzero signs is expected; only vanish => equality is checkable.
  const bool vanish = sign_a == Sign::Zero && sign_b == Sign::Zero;
  return !vanish || std::abs(angle_inequality_slack) <= tol;
}

AlexandrovSignReport alexandrov_lemma(const AlexandrovInput& in, const ModelConfig& cfg) {
  if (!(in.xz > 0.0 && in.zy > 0.0)) throw Error("z must lie strictly between x and y");
  if (std::abs(in.xz + in.zy - in.xy) > cfg.tol) {
    throw Error("z is not metrically between x and y: |xz| + |zy| != |xy|");
  }
  if (cfg.kappa == Curvature::Spherical && in.pz + in.py + in.xy >= 2 * kPi) {
    throw Error("spherical case requires |pz| + |py| + |xy| < 2*pi");
  }
  const double x_pz = required_angle(in.px, in.xz, in.pz, cfg, "(x p z)");
  const double x_py = required_angle(in.px, in.xy, in.py, cfg, "(x p y)");
  const double z_px = required_angle(in.pz, in.xz, in.px, cfg, "(z p x)");
  const double z_py = required_angle(in.pz, in.zy, in.py, cfg, "(z p y)");
  const double p_xy = required_angle(in.px, in.py, in.xy, cfg, "(p x y)");
  const double p_xz = required_angle(in.px, in.pz, in.xz, cfg, "(p x z)");
  const double p_zy = required_angle(in.pz, in.py, in.zy, cfg, "(p z y)");

  AlexandrovSignReport report;
  report.difference_a = x_py - x_pz;
  report.difference_b = z_px + z_py - std::numbers::pi;
  report.sign_a = sign_of(report.difference_a, cfg.tol);
  report.sign_b = sign_of(report.difference_b, cfg.tol);
  report.angle_inequality_slack = p_xy - p_xz - p_zy;
  return report;
}

}  // namespace catkit::metric
