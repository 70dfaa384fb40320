#pragma once

#include <array>
#include <optional>

#include <Eigen/Core>

namespace catkit::metric {

// Curvature of the model plane: H^2, E^2 or S^2.
enum class Curvature : int { Hyperbolic = -1, Flat = 0, Spherical = 1 };

struct ModelConfig {
  Curvature kappa = Curvature::Flat;
  double tol = 1e-9;

  /// Throws unless kappa is in {-1, 0, 1} and tol > 0.
  static ModelConfig make(int kappa, double tol = 1e-9);
};

Curvature curvature_from_int(int kappa);
const char* to_string(Curvature kappa);

/// Points of the model plane, all stored in R^3:
///   E^2: (x, y, 0); S^2: unit vectors; H^2: hyperboloid model, <u,u>_L = -1, u0 > 0.
using ModelPoint = Eigen::Vector3d;

double model_distance(Curvature kappa, const ModelPoint& a, const ModelPoint& b);

/// Model triangle for a triple p, q, r with the given side lengths.
/// Vertex p sits at the base point, q on the first coordinate axis and r on
/// the positive side of the line pq.
struct ModelTriangle {
  Curvature kappa;
  ModelPoint p;
  ModelPoint q;
  ModelPoint r;
};

/// Returns nullopt for a spherical triple with perimeter >= 2*pi.
/// Throws catkit::Error on a negative side or a triangle-inequality violation
/// beyond cfg.tol.
std::optional<ModelTriangle> model_triangle(double pq, double qr, double rp, const ModelConfig& cfg);

/// Model angle at a vertex with adjacent sides `adjacent1`, `adjacent2` and
/// opposite side `opposite`. Undefined (nullopt) when an adjacent side is
/// zero or, for S^2, the perimeter reaches 2*pi.
std::optional<double> model_angle(double adjacent1, double adjacent2, double opposite,
                                  const ModelConfig& cfg);

/// Point at distance `r` from the base point of the model plane in direction
/// `theta` measured from the first axis.
ModelPoint polar_point(Curvature kappa, double r, double theta);

/// Point at parameter t (arc length) on the segment from a to b.
ModelPoint along_segment(Curvature kappa, const ModelPoint& a, const ModelPoint& b, double t);

/// Angle-vs-curvature comparison for an angle at p with |px|, |py| and
/// opposite |xy|: gaps |S^2 - E^2| and |H^2 - E^2| against the bound |px||py|.
struct AngleCurvatureGap {
  double angle_hyperbolic = 0.0;
  double angle_flat = 0.0;
  double angle_spherical = 0.0;
  double gap_sphere = 0.0;
  double gap_hyp = 0.0;
  double bound = 0.0;
  bool holds(double slack) const { return gap_sphere <= bound + slack && gap_hyp <= bound + slack; }
};

/// Throws if the spherical model triangle is undefined or an adjacent side is zero.
AngleCurvatureGap angle_curvature_gap(double px, double py, double xy, double tol = 1e-9);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
const char* to_string(Sign s);

struct AlexandrovInput {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
  double xz = 0.0;
  double zy = 0.0;
  double xy = 0.0;  // must equal xz + zy within tol
};

/// sign_a: sign of  angle(x; p, y) - angle(x; p, z)
/// sign_b: sign of  angle(z; p, x) + angle(z; p, y) - pi
/// angle_inequality_slack: angle(p; x, y) - angle(p; x, z) - angle(p; z, y)
struct AlexandrovSignReport {
  Sign sign_a = Sign::Zero;
  Sign sign_b = Sign::Zero;
  double difference_a = 0.0;
  double difference_b = 0.0;
  double angle_inequality_slack = 0.0;

  bool signs_agree() const { return sign_a == sign_b; }
  /// Both signs agree, the angle inequality holds, and it is an equality
  /// when both signs vanish. The converse is not checked: the slack is
  /// quadratic in the sign defects and drops below tol before they do.
  bool consistent(double tol) const;
};

/// Throws when z is not strictly between x and y, or a needed model triangle
/// is undefined (including pz + py + xy >= 2*pi on S^2).
AlexandrovSignReport alexandrov_lemma(const AlexandrovInput& in, const ModelConfig& cfg);

}  // namespace catkit::metric
