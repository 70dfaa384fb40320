#include "catkit/billiards/samplers.hpp"

#include <cmath>

#include "catkit/error.hpp"

namespace catkit::billiards {

Vec random_unit_vector(Rng& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = g(rng);
  } while (v.norm() < 1e-8);
  return v.normalized();
}

BilliardTable compact_ball_table(Rng& rng, int walls, int dim, double r1, double r2) {
  if (!(0.0 < r1 && r1 < r2)) throw Error("need 0 < r1 < r2");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BilliardTable t;
  t.dim = dim;
  for (int w = 0; w < walls; ++w) {
    // |c| + r1 <= rho <= r2 - |c| needs |c| <= (r2 - r1) / 2.
    const double c = unit(rng) * 0.5 * (r2 - r1);
    const double lo = c + r1;
    const double hi = r2 - c;
    const double rho = lo + unit(rng) * (hi - lo);
    t.walls.emplace_back(geometry::Ball{c * random_unit_vector(rng, dim), rho});
  }
  return t;
}

std::pair<Vec, Vec> compact_table_shot(Rng& rng, int dim, double r2) {
  const Vec start = 1.5 * r2 * random_unit_vector(rng, dim);
  const Vec target = r2 * std::pow(std::uniform_real_distribution<double>(0.0, 1.0)(rng), 1.0 / dim) *
                     random_unit_vector(rng, dim);
  return {start, (target - start).normalized()};
}

std::pair<Vec, Vec> wedge_shot(Rng& rng, double alpha) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta = alpha * (0.01 + 0.98 * unit(rng));
  const double r = 0.5 + 1.5 * unit(rng);
  Vec start(2);
  start << r * std::cos(theta), r * std::sin(theta);
  return {start, random_unit_vector(rng, 2)};
}

HardBallSystem random_hard_ball_system(Rng& rng, int n, bool identical) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> g(0.0, 1.0);
  HardBallSystem s;
  const double shared_radius = 0.2 + 0.4 * unit(rng);
  const double shared_mass = 0.5 + 2.5 * unit(rng);
  for (int i = 0; i < n; ++i) {
    const double radius = identical ? shared_radius : 0.2 + 0.4 * unit(rng);
    const double mass = identical ? shared_mass : 0.5 + 2.5 * unit(rng);
    Vec3 pos;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw Error("could not place non-overlapping balls");
      for (int k = 0; k < 3; ++k) pos(k) = -3.0 + 6.0 * unit(rng);
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = (pos - s.positions[j]).norm() >= radius + s.radii[j] + 1e-3;
      if (ok) break;
    }
    Vec3 noise(g(rng), g(rng), g(rng));
    s.radii.push_back(radius);
    s.masses.push_back(mass);
    s.positions.push_back(pos);
    s.velocities.push_back(-(0.5 + unit(rng)) * pos + 0.5 * noise);
  }
  return s;
}

}  // namespace catkit::billiards
