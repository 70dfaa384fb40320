#include "catkit/billiards/hard_balls.hpp"

#include <cmath>

#include "catkit/error.hpp"

namespace catkit::billiards {

void HardBallSystem::validate() const {
  const std::size_t n = radii.size();
  if (masses.size() != n || positions.size() != n || velocities.size() != n) {
    throw Error("hard-ball arrays differ in length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i])) throw Error("ball radius must be positive");
    if (!(masses[i] > 0.0) || !std::isfinite(masses[i])) throw Error("ball mass must be positive");
    if (!positions[i].allFinite() || !velocities[i].allFinite()) throw Error("non-finite ball state");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((positions[i] - positions[j]).norm() < radii[i] + radii[j]) {
        throw Error("balls " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
}

double HardBallSystem::kinetic_energy() const {
  double e = 0.0;
  for (int i = 0; i < size(); ++i) e += 0.5 * masses[i] * velocities[i].squaredNorm();
  return e;
}

Vec3 HardBallSystem::momentum() const {
  Vec3 p = Vec3::Zero();
  for (int i = 0; i < size(); ++i) p += masses[i] * velocities[i];
  return p;
}

ConfigurationBilliard hard_ball_to_billiard(const HardBallSystem& sys) {
  sys.validate();
  const int n = sys.size();
  ConfigurationBilliard cb;
  cb.table.dim = 3 * n;
  cb.start = Vec(3 * n);
  Vec vel(3 * n);
  for (int i = 0; i < n; ++i) {
    const double root = std::sqrt(sys.masses[i]);
    cb.start.segment<3>(3 * i) = root * sys.positions[i];
    vel.segment<3>(3 * i) = root * sys.velocities[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      geometry::Cylinder c;
      c.dim = 3 * n;
      c.block = 3;
      c.i = i;
      c.j = j;
      c.radius = sys.radii[i] + sys.radii[j];
      c.weight_i = 1.0 / std::sqrt(sys.masses[i]);
      c.weight_j = 1.0 / std::sqrt(sys.masses[j]);
      cb.table.walls.emplace_back(c);
      cb.wall_pairs.emplace_back(i, j);
    }
  }
  cb.speed = vel.norm();
  if (cb.speed > 0.0) {
    cb.direction = vel / cb.speed;
  } else {
    cb.direction = Vec::Zero(3 * n);
  }
  return cb;
}

std::vector<Vec3> velocities_from_direction(const HardBallSystem& sys, const Vec& direction, double speed) {
  std::vector<Vec3> v(sys.size());
  for (int i = 0; i < sys.size(); ++i) v[i] = speed * direction.segment<3>(3 * i) / std::sqrt(sys.masses[i]);
  return v;
}

HardBallRun simulate_hard_balls(const HardBallSystem& sys, double horizon, long max_events) {
  sys.validate();
  HardBallRun run;
  HardBallSystem state = sys;
  const int n = state.size();
  double now = 0.0;
  while (true) {
    if (static_cast<long>(run.events.size()) >= max_events) {
      run.reason = Termination::MaxEvents;
      break;
    }
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    int bi = -1, bj = -1;
    bool grazing = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Vec3 r = state.positions[j] - state.positions[i];
        const Vec3 w = state.velocities[j] - state.velocities[i];
        const double reach = state.radii[i] + state.radii[j];
        const auto hit = geometry::quadratic_entry(w.squaredNorm(), 2.0 * r.dot(w), r.squaredNorm() - reach * reach,
                                                   kTimeTol);
        if (!hit) continue;
        if (hit->t < best) {
          second = best;
          best = hit->t;
          bi = i;
          bj = j;
          grazing = hit->grazing;
        } else if (hit->t < second) {
          second = hit->t;
        }
      }
    }
    if (bi < 0) {
      run.reason = Termination::Escape;
      break;
    }
    if (now + best > horizon) {
      for (int i = 0; i < n; ++i) state.positions[i] += (horizon - now) * state.velocities[i];
      now = horizon;
      run.reason = Termination::Horizon;
      break;
    }
    if (second - best <= kTimeTol) {
      run.reason = Termination::Degenerate;
      run.detail = "simultaneous collisions";
      break;
    }
    if (grazing) {
      run.reason = Termination::Degenerate;
      run.detail = "tangential collision of balls " + std::to_string(bi) + " and " + std::to_string(bj);
      break;
    }
    for (int i = 0; i < n; ++i) state.positions[i] += best * state.velocities[i];
    now += best;
    // Impulse along the line of centers.
    const Vec3 nhat = (state.positions[bj] - state.positions[bi]).normalized();
    const Vec3 w = state.velocities[bj] - state.velocities[bi];
    const double mi = state.masses[bi];
    const double mj = state.masses[bj];
    const double wn = w.dot(nhat);
    state.velocities[bi] += (2.0 * mj / (mi + mj)) * wn * nhat;
    state.velocities[bj] -= (2.0 * mi / (mi + mj)) * wn * nhat;
    run.events.push_back({now, bi, bj, state.velocities});
  }
  run.end_time = now;
  run.final_state = state;
  return run;
}

CrossCheck cross_check_hard_balls(const HardBallSystem& sys, double horizon, long max_events, double time_tol) {
  CrossCheck cc;
  const HardBallRun direct = simulate_hard_balls(sys, horizon, max_events);
  const ConfigurationBilliard cb = hard_ball_to_billiard(sys);
  if (cb.speed == 0.0) {
    cc.match = direct.events.empty();
    if (!cc.match) cc.mismatch = "resting system collided";
    return cc;
  }
  const Trajectory tr = simulate(cb.table, cb.start, cb.direction, max_events, horizon * cb.speed);

  if (tr.events.size() != direct.events.size()) {
    cc.match = false;
    cc.mismatch = "event counts differ: " + std::to_string(direct.events.size()) + " direct vs " +
                  std::to_string(tr.events.size()) + " billiard";
  }
  if ((tr.reason == Termination::Degenerate) != (direct.reason == Termination::Degenerate)) {
    cc.match = false;
    cc.mismatch = "only one simulation was degenerate";
  }
  const std::size_t common = std::min(tr.events.size(), direct.events.size());
  cc.events = common;
  double energy = sys.kinetic_energy();
  Vec3 momentum = sys.momentum();
  for (std::size_t e = 0; e < common; ++e) {
    const auto& be = tr.events[e];
    const auto& de = direct.events[e];
    const auto [i, j] = cb.wall_pairs[be.wall];
    if (i != de.i || j != de.j) {
      cc.match = false;
      if (cc.mismatch.empty()) cc.mismatch = "pair mismatch at event " + std::to_string(e);
    }
    const double terr = std::abs(be.time / cb.speed - de.time);
    cc.max_time_error = std::max(cc.max_time_error, terr);
    if (terr > time_tol) {
      cc.match = false;
      if (cc.mismatch.empty()) cc.mismatch = "time mismatch at event " + std::to_string(e);
    }
    const auto v = velocities_from_direction(sys, be.direction, cb.speed);
    double scale = 0.0;
    for (int b = 0; b < sys.size(); ++b) {
      cc.max_velocity_error = std::max(cc.max_velocity_error, (v[b] - de.velocities[b]).norm());
      scale += sys.masses[b] * de.velocities[b].norm();
    }
    HardBallSystem after = sys;
    after.velocities = de.velocities;
    const double e1 = after.kinetic_energy();
    const Vec3 p1 = after.momentum();
    cc.max_energy_drift = std::max(cc.max_energy_drift, std::abs(e1 - energy) / energy);
    if (scale > 0.0) cc.max_momentum_drift = std::max(cc.max_momentum_drift, (p1 - momentum).norm() / scale);
    energy = e1;
    momentum = p1;
  }
  return cc;
}

}  // namespace catkit::billiards
