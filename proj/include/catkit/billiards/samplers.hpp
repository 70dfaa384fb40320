#pragma once

#include <random>

#include "catkit/billiards/billiard.hpp"
#include "catkit/billiards/hard_balls.hpp"

namespace catkit::billiards {

using Rng = std::mt19937_64;

Vec random_unit_vector(Rng& rng, int dim);

/// `walls` balls in E^dim, each containing B(0, r1) and contained in B(0, r2).
BilliardTable compact_ball_table(Rng& rng, int walls, int dim, double r1, double r2);

/// Start on the sphere of radius 1.5 r2 aimed into B(0, r2).
std::pair<Vec, Vec> compact_table_shot(Rng& rng, int dim, double r2);

/// Point in the wedge of angle alpha at distance in [0.5, 2] from the corner,
/// with a uniform direction.
std::pair<Vec, Vec> wedge_shot(Rng& rng, double alpha);

/// n non-overlapping balls in [-3, 3]^3 with radii in [0.2, 0.6], masses in
/// [0.5, 3] and velocities pointing roughly at the origin.
HardBallSystem random_hard_ball_system(Rng& rng, int n, bool identical = false);

}  // namespace catkit::billiards
