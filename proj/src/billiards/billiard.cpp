#include "catkit/billiards/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catkit/error.hpp"
#include "catkit/pastry/puff_pastry.hpp"

namespace catkit::billiards {

void BilliardTable::validate() const {
  if (dim <= 0) throw Error("table dimension must be positive");
  for (const auto& w : walls) {
    if (w.dimension() != dim) throw Error("wall dimension does not match the table");
    if (!w.smooth()) throw Error("billiard walls must have smooth boundary");
  }
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::MaxEvents: return "max_events";
    case Termination::Horizon: return "horizon";
    case Termination::Escape: return "escape";
    case Termination::Degenerate: return "degenerate";
  }
  return "?";
}

Trajectory simulate(const BilliardTable& table, const Vec& start, const Vec& direction, long max_events,
                    double horizon) {
  table.validate();
  if (start.size() != table.dim || direction.size() != table.dim) throw Error("start/direction dimension mismatch");
  if (std::abs(direction.norm() - 1.0) > 1e-9) throw Error("direction must be a unit vector");
  for (std::size_t w = 0; w < table.walls.size(); ++w) {
    if (table.walls[w].excess(start) < -kTimeTol) throw Error("start lies inside wall " + std::to_string(w));
  }
  Trajectory tr;
  tr.start = start;
  tr.direction = direction;
  Vec x = start;
  Vec d = direction;
  double now = 0.0;
  while (true) {
    if (static_cast<long>(tr.events.size()) >= max_events) {
      tr.reason = Termination::MaxEvents;
      break;
    }
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    int wall = -1;
    bool grazing = false;
    for (std::size_t w = 0; w < table.walls.size(); ++w) {
      const auto hit = table.walls[w].ray_entry(x, d, kTimeTol);
      if (!hit) continue;
      if (hit->t < best) {
        second = best;
        best = hit->t;
        wall = static_cast<int>(w);
        grazing = hit->grazing;
      } else if (hit->t < second) {
        second = hit->t;
      }
    }
    if (wall < 0) {
      tr.reason = Termination::Escape;
      break;
    }
    if (now + best > horizon) {
      x += (horizon - now) * d;
      now = horizon;
      tr.reason = Termination::Horizon;
      break;
    }
    if (second - best <= kTimeTol) {
      tr.reason = Termination::Degenerate;
      tr.detail = "two walls hit at the same time";
      break;
    }
    if (grazing) {
      tr.reason = Termination::Degenerate;
      tr.detail = "tangential hit on wall " + std::to_string(wall);
      break;
    }
    x += best * d;
    now += best;
    const Vec n = table.walls[wall].outward_normal(x);
    d -= 2.0 * d.dot(n) * n;
    tr.events.push_back({now, wall, x, d});
  }
  tr.end_time = now;
  tr.end_point = x;
  tr.end_direction = d;
  return tr;
}

BigInt collision_bound(int n, double eps) {
  if (n < 1) throw Error("wall count must be at least 1");
  if (!(eps > 0.0) || eps > std::numbers::pi + 1e-12) throw Error("eps must lie in (0, pi]");
  const BigInt base = pastry::ceil_pi_over(eps) + 1;
  return boost::multiprecision::pow(base, static_cast<unsigned>(n * n));
}

const char* to_string(CornerMethod m) {
  switch (m) {
    case CornerMethod::CompactFormula: return "compact-formula";
    case CornerMethod::SymmetricArgument: return "symmetric-argument";
    case CornerMethod::Sampled: return "sampled";
  }
  return "?";
}

CornerWidthEstimate corner_width_compact(double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > r1) || !std::isfinite(r2)) throw Error("need 0 < r1 < r2");
  return {2.0 * std::asin(r1 / r2), CornerMethod::CompactFormula, 0};
}

double min_norm_in_hull(const std::vector<Vec>& vectors) {
  const int k = static_cast<int>(vectors.size());
  if (k == 0) throw Error("convex hull of no vectors");
  if (k > 16) throw Error("too many vectors for exact hull search");
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    const int s = static_cast<int>(idx.size());
    // Minimize |sum l_i v_i| on the affine hull: [G 1; 1^T 0] [l; mu] = [0; 1].
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(s + 1, s + 1);
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) kkt(a, b) = vectors[idx[a]].dot(vectors[idx[b]]);
      kkt(a, s) = kkt(s, a) = 1.0;
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
    rhs(s) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd sol = lu.solve(rhs);
    if (sol.head(s).minCoeff() < -1e-12) continue;
    Vec p = Vec::Zero(vectors[0].size());
    for (int a = 0; a < s; ++a) p += sol(a) * vectors[idx[a]];
    best = std::min(best, p.norm());
  }
  return best;
}

CornerWidthEstimate corner_width_sampled(const BilliardTable& table, std::mt19937_64& rng, long samples,
                                         double spread) {
  table.validate();
  CornerWidthEstimate est{std::numbers::pi, CornerMethod::Sampled, 0};
  const int n = static_cast<int>(table.walls.size());
  if (n == 0) return est;
  std::normal_distribution<double> gauss(0.0, spread);
  std::uniform_int_distribution<unsigned> pick(1, (1u << std::min(n, 16)) - 1);
  for (long s = 0; s < samples; ++s) {
    const unsigned mask = pick(rng);
    std::vector<int> active;
    for (int w = 0; w < std::min(n, 16); ++w) {
      if (mask & (1u << w)) active.push_back(w);
    }
    Vec z(table.dim);
    for (int i = 0; i < table.dim; ++i) z(i) = gauss(rng);
    bool converged = false;
    for (int sweep = 0; sweep < 2000 && !converged; ++sweep) {
      for (int w : active) z = table.walls[w].project_to_boundary(z);
      double worst = 0.0;
      for (int w : active) worst = std::max(worst, std::abs(table.walls[w].excess(z)));
      converged = worst < 1e-10;
    }
    if (!converged) continue;
    std::vector<Vec> normals;
    try {
      for (int w : active) normals.push_back(table.walls[w].outward_normal(z));
    } catch (const Error&) {
      continue;
    }
    const double hull = std::min(1.0, min_norm_in_hull(normals));
    est.eps = std::min(est.eps, 2.0 * std::asin(hull));
    ++est.samples_used;
  }
  return est;
}

BilliardTable wedge_table(double alpha) {
  if (!(alpha > 0.0) || !(alpha < std::numbers::pi)) throw Error("wedge angle must lie in (0, pi)");
  BilliardTable t;
  t.dim = 2;
  t.walls.emplace_back(geometry::HalfSpace{Vec::Unit(2, 1), 0.0});
  Vec n(2);
  n << std::sin(alpha), -std::cos(alpha);
  t.walls.emplace_back(geometry::HalfSpace{n, 0.0});
  return t;
}

WedgeCount wedge_reflection_count(double alpha, const Vec& start, const Vec& direction) {
  const BilliardTable table = wedge_table(alpha);
  if (start.size() != 2 || direction.size() != 2) throw Error("wedge points are planar");
  const double theta0 = std::atan2(start(1), start(0));
  if (!(theta0 > 0.0 && theta0 < alpha)) throw Error("start must lie strictly inside the wedge");
  WedgeCount out;
  out.bound = pastry::ceil_pi_over(alpha);

  const Trajectory tr = simulate(table, start, direction, 1000);
  out.simulated = static_cast<long>(tr.events.size());
  out.degenerate = tr.reason == Termination::Degenerate;

  // Unfolded ray: polar angle sweeps monotonically from theta0 towards the
  // direction angle; each mirror line at angle k*alpha crossed is one bounce.
  const double cross = start(0) * direction(1) - start(1) * direction(0);
  const double phi = std::atan2(direction(1), direction(0));
  const double two_pi = 2.0 * std::numbers::pi;
  if (std::abs(cross) <= 1e-14 * start.norm()) {
    out.unfolding = 0;
    if (start.dot(direction) < 0.0) out.degenerate = true;  // aimed at the corner
    return out;
  }
  double lo, hi;
  if (cross > 0.0) {
    lo = theta0;
    hi = theta0 + std::fmod(std::fmod(phi - theta0, two_pi) + two_pi, two_pi);
  } else {
    hi = theta0;
    lo = theta0 - std::fmod(std::fmod(theta0 - phi, two_pi) + two_pi, two_pi);
  }
  long count = 0;
  for (long k = static_cast<long>(std::floor(lo / alpha)) - 1; k * alpha < hi + alpha; ++k) {
    const double a = k * alpha;
    if (a > lo && a < hi) ++count;
  }
  out.unfolding = count;
  return out;
}

}  // namespace catkit::billiards
