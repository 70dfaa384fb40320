#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "catkit/geometry/convex_body.hpp"

namespace catkit::pastry {

using geometry::ConvexBody;
using geometry::Vec;

/// Levels 0..N of E^m; level k-1 and level k are glued along bodies[k-1].
class PuffPastry {
 public:
  explicit PuffPastry(std::vector<ConvexBody> bodies);

  int dimension() const { return dim_; }
  int size() const { return static_cast<int>(bodies_.size()); }
  const std::vector<ConvexBody>& bodies() const { return bodies_; }
  /// Body glued between levels k-1 and k, 1 <= k <= N.
  const ConvexBody& body(int k) const { return bodies_.at(k - 1); }

 private:
  std::vector<ConvexBody> bodies_;
  int dim_ = 0;
};

struct LiftedPoint {
  int level = 0;
  Vec x;
};

struct SolverOptions {
  double gap_tol = 1e-10;     // stop once the barrier duality gap is below this
  int max_newton_steps = 2000;  // over all centering rounds
};

/// Shortest polygonal chain x -> p_1 -> ... -> p_K -> y with p_k in the
/// intersection of slots[k-1]. Interior-point method on the second-order cone
/// formulation; `residual` bounds the suboptimality of `length`.
struct ChainResult {
  std::vector<Vec> points;
  double length = 0.0;
  double residual = 0.0;
  int newton_steps = 0;
  bool converged = true;
  /// Barrier objective after each accepted Newton step, one list per
  /// centering round.
  std::vector<std::vector<double>> barrier_objective;
};

using Slot = std::vector<const ConvexBody*>;

ChainResult shortest_chain(const Vec& x, const std::vector<Slot>& slots, const Vec& y,
                           const SolverOptions& opts = {});

/// Geodesic between two lifted points. Crossings are listed in the order
/// traversed from `from` to `to`.
struct PastryGeodesic {
  LiftedPoint from;
  LiftedPoint to;
  std::vector<Vec> crossings;
  double length = 0.0;
  double residual = 0.0;
  bool converged = true;
};

/// Throws catkit::Error on level or dimension mismatch, or a crossing body
/// with empty interior.
PastryGeodesic pastry_distance(const PuffPastry& p, const LiftedPoint& a, const LiftedPoint& b,
                               const SolverOptions& opts = {});

/// Point of the common intersection found by cyclic projections, if the
/// largest excess drops below tol within max_sweeps.
std::optional<Vec> intersection_point(const std::vector<ConvexBody>& bodies, double tol = 1e-8,
                                      int max_sweeps = 100000);

struct EndToEndReport {
  bool pass = true;
  double worst_slack = 0.0;  // intersection route minus pastry distance, maximized over pairs
  std::size_t pairs_checked = 0;
  std::optional<std::size_t> witness_index;  // first failing pair
  double witness_pastry_length = 0.0;
  double witness_intersection_length = 0.0;
  std::vector<double> slacks;
};

/// Compares the bottom-to-top pastry distance with the shortest route through
/// the intersection of all bodies, for each pair (x, y).
/// Throws catkit::Error if the intersection is empty.
EndToEndReport end_to_end_convex_check(const PuffPastry& p, const std::vector<std::pair<Vec, Vec>>& pairs,
                                       double tol = 1e-7, const SolverOptions& opts = {});

/// ceil(pi/eps), treating eps within 1e-12 (relative) of pi/k as exactly pi/k.
long long ceil_pi_over(double eps);

/// Index array j_eps(n), 1-based entries.
std::vector<int> build_bfk_array(int n, double eps);

struct ZigzagCheck {
  long long arcs = 0;
  double total = 0.0;
  bool ok = false;
};

ZigzagCheck zigzag_length_check(double alpha);

}  // namespace catkit::pastry
