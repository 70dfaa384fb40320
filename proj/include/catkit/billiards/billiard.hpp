#pragma once

#include <limits>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catkit/geometry/convex_body.hpp"

namespace catkit::billiards {

using geometry::ConvexBody;
using geometry::Vec;

/// Closure of the complement of the union of the walls.
struct BilliardTable {
  int dim = 0;
  std::vector<ConvexBody> walls;

  /// Throws catkit::Error on dimension mismatch or a non-smooth wall.
  void validate() const;
};

enum class Termination { MaxEvents, Horizon, Escape, Degenerate };

const char* to_string(Termination t);

struct Event {
  double time = 0.0;
  int wall = -1;
  Vec point;
  Vec direction;  // outgoing
};

struct Trajectory {
  Vec start;
  Vec direction;
  std::vector<Event> events;
  Termination reason = Termination::Escape;
  std::string detail;  // why a degenerate run stopped
  double end_time = 0.0;
  Vec end_point;
  Vec end_direction;
};

/// Hits closer than this to the previous event are ignored; two walls hit
/// within this time of each other make the run degenerate.
constexpr double kTimeTol = 1e-12;

/// Event-driven specular billiard. `direction` must be a unit vector and
/// `start` must not lie inside a wall.
Trajectory simulate(const BilliardTable& table, const Vec& start, const Vec& direction, long max_events,
                    double horizon = std::numeric_limits<double>::infinity());

using BigInt = boost::multiprecision::cpp_int;

/// (ceil(pi/eps) + 1)^(n^2).
BigInt collision_bound(int n, double eps);

enum class CornerMethod { CompactFormula, SymmetricArgument, Sampled };

const char* to_string(CornerMethod m);

struct CornerWidthEstimate {
  double eps = 0.0;
  CornerMethod method = CornerMethod::CompactFormula;
  long samples_used = 0;
};

/// Walls containing B(0, r1) and contained in B(0, r2): eps = 2 asin(r1/r2).
CornerWidthEstimate corner_width_compact(double r1, double r2);

/// Sampled upper estimate of the corner width: at points on the common
/// boundary of random subsets of walls, the widest cone between the active
/// normals has aperture 2 asin(s), s the distance from 0 to the convex hull of
/// the unit normals. Non-rigorous; reported with method = Sampled.
CornerWidthEstimate corner_width_sampled(const BilliardTable& table, std::mt19937_64& rng, long samples,
                                         double spread = 3.0);

/// Distance from the origin to the convex hull of the given vectors.
double min_norm_in_hull(const std::vector<Vec>& vectors);

struct WedgeCount {
  long simulated = 0;
  long unfolding = 0;
  long long bound = 0;  // ceil(pi/alpha)
  bool degenerate = false;
};

/// Planar wedge {0 <= polar angle <= alpha} with walls {y <= 0} and
/// {x sin(alpha) - y cos(alpha) <= 0}.
BilliardTable wedge_table(double alpha);

/// Simulated event count against the number of wedge copies the straight
/// unfolded ray crosses. Throws if the start is outside the wedge.
WedgeCount wedge_reflection_count(double alpha, const Vec& start, const Vec& direction);

}  // namespace catkit::billiards
