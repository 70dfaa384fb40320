#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "catkit/billiards/billiard.hpp"

namespace catkit::billiards {

using Vec3 = Eigen::Vector3d;

struct HardBallSystem {
  std::vector<double> radii;
  std::vector<double> masses;
  std::vector<Vec3> positions;
  std::vector<Vec3> velocities;

  int size() const { return static_cast<int>(radii.size()); }
  /// Throws catkit::Error on size mismatch, nonpositive radius/mass or
  /// overlapping balls.
  void validate() const;
  double kinetic_energy() const;
  Vec3 momentum() const;
};

/// Configuration-space billiard: coordinates y_i = sqrt(M_i) a_i, walls are
/// the cylinders |y_i/sqrt(M_i) - y_j/sqrt(M_j)| <= R_i + R_j for i < j in
/// lexicographic order. Billiard time equals physical time times `speed`.
struct ConfigurationBilliard {
  BilliardTable table;
  Vec start;
  Vec direction;
  double speed = 0.0;
  std::vector<std::pair<int, int>> wall_pairs;
};

ConfigurationBilliard hard_ball_to_billiard(const HardBallSystem& sys);

/// Physical velocities from a unit configuration-space direction.
std::vector<Vec3> velocities_from_direction(const HardBallSystem& sys, const Vec& direction, double speed);

struct BallEvent {
  double time = 0.0;
  int i = 0;
  int j = 0;
  std::vector<Vec3> velocities;  // after the collision
};

struct HardBallRun {
  std::vector<BallEvent> events;
  Termination reason = Termination::Escape;
  std::string detail;
  double end_time = 0.0;
  HardBallSystem final_state;
};

/// Direct event-driven simulation with elastic two-ball collisions.
HardBallRun simulate_hard_balls(const HardBallSystem& sys, double horizon, long max_events);

struct CrossCheck {
  bool match = true;
  std::string mismatch;
  std::size_t events = 0;
  double max_time_error = 0.0;
  double max_velocity_error = 0.0;
  double max_energy_drift = 0.0;    // relative, per event
  double max_momentum_drift = 0.0;  // relative to sum M_i |v_i|, per event
};

/// Runs both simulations and compares them event by event.
CrossCheck cross_check_hard_balls(const HardBallSystem& sys, double horizon, long max_events,
                                  double time_tol = 1e-8);

}  // namespace catkit::billiards
