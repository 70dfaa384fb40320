#include "catkit/pastry/puff_pastry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "catkit/error.hpp"

namespace catkit::pastry {

using geometry::Mat;

PuffPastry::PuffPastry(std::vector<ConvexBody> bodies) : bodies_(std::move(bodies)) {
  if (bodies_.empty()) throw Error("puff pastry needs at least one body");
  dim_ = bodies_.front().dimension();
  for (const auto& b : bodies_) {
    if (b.dimension() != dim_) throw Error("puff pastry bodies differ in dimension");
  }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Barrier terms -sum log(-g) of one slot at point p; accumulates into the
// given gradient/Hessian blocks. Returns +inf outside the strict interior.
double slot_barrier(const Slot& slot, const Vec& p, Vec* grad, Mat* hess, double shift = 0.0) {
  double value = 0.0;
  for (const ConvexBody* body : slot) {
    for (int c = 0; c < body->constraint_count(); ++c) {
      const auto e = body->constraint(c, p);
      const double slack = shift - e.value;
      if (!(slack > 0.0)) return kInf;
      value -= std::log(slack);
      if (grad) *grad += e.grad / slack;
      if (hess) {
        *hess += (e.grad * e.grad.transpose()) / (slack * slack);
        if (e.hess.size() > 0) *hess += e.hess / slack;
      }
    }
  }
  return value;
}

int slot_constraints(const Slot& slot) {
  int n = 0;
  for (const ConvexBody* b : slot) n += b->constraint_count();
  return n;
}

double max_constraint(const Slot& slot, const Vec& p) {
  double worst = -kInf;
  for (const ConvexBody* body : slot) {
    for (int c = 0; c < body->constraint_count(); ++c) worst = std::max(worst, body->constraint(c, p).value);
  }
  return worst;
}

// Damped Newton on a self-concordant objective; `eval` returns the value and
// fills gradient/Hessian, or +inf when infeasible. Accepted values are
// appended to `trace` when given.
template <class Eval>
int newton_center(Vec& z, Eval&& eval, int max_steps, double decrement_tol, std::vector<double>* trace = nullptr) {
  const int n = static_cast<int>(z.size());
  Vec g(n);
  Mat h(n, n);
  int steps = 0;
  for (; steps < max_steps; ++steps) {
    g.setZero();
    h.setZero();
    const double f0 = eval(z, &g, &h);
    if (trace && trace->empty()) trace->push_back(f0);
    const Vec dz = h.ldlt().solve(-g);
    const double lambda2 = -g.dot(dz);
    if (!std::isfinite(lambda2) || lambda2 / 2.0 <= decrement_tol) break;
    double step = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 80; ++bt, step *= 0.5) {
      const Vec trial = z + step * dz;
      const double f1 = eval(trial, nullptr, nullptr);
      if (std::isfinite(f1) && f1 <= f0 - 0.25 * step * lambda2) {
        z = trial;
        moved = true;
        if (trace) trace->push_back(f1);
        break;
      }
    }
    if (!moved) break;
    // Further steps would only chase rounding noise.
    if (f0 - eval(z, nullptr, nullptr) <= 1e-14 * std::abs(f0)) break;
  }
  return steps;
}

// Strictly interior point of a slot near `guess`.
Vec interior_point(const Slot& slot, const Vec& guess) {
  if (slot_constraints(slot) == 0) return guess;
  if (max_constraint(slot, guess) < 0.0) return guess;
  const int m = static_cast<int>(guess.size());
  // Variables (p, s): minimize s subject to g(p) <= s, s >= -1, with a weak
  // proximal term keeping p bounded in flat directions.
  Vec z(m + 1);
  z.head(m) = guess;
  z(m) = std::max(max_constraint(slot, guess), 0.0) + 1.0;
  const double mu = 1e-4;
  for (double tau = 1.0; tau <= 1e6; tau *= 10.0) {
    auto eval = [&](const Vec& v, Vec* grad, Mat* hess) -> double {
      const Vec p = v.head(m);
      const double s = v(m);
      if (!(s + 1.0 > 0.0)) return kInf;
      double f = tau * s - std::log(s + 1.0) + 0.5 * mu * (p - guess).squaredNorm();
      if (grad) {
        (*grad)(m) += tau - 1.0 / (s + 1.0);
        grad->head(m) += mu * (p - guess);
      }
      if (hess) {
        (*hess)(m, m) += 1.0 / ((s + 1.0) * (s + 1.0));
        hess->topLeftCorner(m, m).diagonal().array() += mu;
      }
      for (const ConvexBody* body : slot) {
        for (int c = 0; c < body->constraint_count(); ++c) {
          const auto e = body->constraint(c, p);
          const double slack = s - e.value;
          if (!(slack > 0.0)) return kInf;
          f -= std::log(slack);
          if (grad) {
            grad->head(m) += e.grad / slack;
            (*grad)(m) -= 1.0 / slack;
          }
          if (hess) {
            Vec a(m + 1);
            a.head(m) = -e.grad;
            a(m) = 1.0;
            *hess += (a * a.transpose()) / (slack * slack);
            if (e.hess.size() > 0) hess->topLeftCorner(m, m) += e.hess / slack;
          }
        }
      }
      return f;
    };
    newton_center(z, eval, 100, 1e-12);
    if (max_constraint(slot, z.head(m)) < 0.0 && z(m) < -0.5) break;
  }
  const Vec p = z.head(m);
  if (!(max_constraint(slot, p) < 0.0)) throw Error("crossing body has empty interior");
  return p;
}

}  // namespace

ChainResult shortest_chain(const Vec& x, const std::vector<Slot>& slots, const Vec& y, const SolverOptions& opts) {
  const int m = static_cast<int>(x.size());
  if (y.size() != m) throw Error("chain endpoints differ in dimension");
  const int k_slots = static_cast<int>(slots.size());
  ChainResult out;
  if (k_slots == 0) {
    out.length = (x - y).norm();
    return out;
  }
  for (const auto& slot : slots) {
    for (const ConvexBody* b : slot) {
      if (b->dimension() != m) throw Error("body dimension does not match the points");
    }
  }
  const int np = k_slots * m;
  const int n = np + k_slots + 1;
  auto point = [&](const Vec& z, int idx) -> Vec {
    if (idx < 0) return x;
    if (idx >= k_slots) return y;
    return z.segment(idx * m, m);
  };

  Vec z(n);
  for (int k = 0; k < k_slots; ++k) {
    const double s = (k + 1.0) / (k_slots + 1.0);
    z.segment(k * m, m) = interior_point(slots[k], (1.0 - s) * x + s * y);
  }
  for (int s = 0; s <= k_slots; ++s) z(np + s) = (point(z, s) - point(z, s - 1)).norm() + 1.0;

  int nu = 2 * (k_slots + 1);
  for (const auto& slot : slots) nu += slot_constraints(slot);

  double tau = 1.0;
  auto eval_at = [&](double t_weight) {
    return [&, t_weight](const Vec& v, Vec* grad, Mat* hess) -> double {
      double f = 0.0;
      for (int s = 0; s <= k_slots; ++s) {
        const double t = v(np + s);
        const Vec q = point(v, s) - point(v, s - 1);
        const double d = t * t - q.squaredNorm();
        if (!(t > 0.0) || !(d > 0.0)) return kInf;
        f += t_weight * t - std::log(d);
        if (!grad) continue;
        const Vec gq = 2.0 * q / d;
        const double gt = t_weight - 2.0 * t / d;
        (*grad)(np + s) += gt;
        const Mat hqq = (2.0 / d) * Mat::Identity(m, m) + (4.0 / (d * d)) * (q * q.transpose());
        const Vec hqt = (-4.0 * t / (d * d)) * q;
        (*hess)(np + s, np + s) += -2.0 / d + 4.0 * t * t / (d * d);
        const int ends[2] = {s, s - 1};
        const double sign[2] = {1.0, -1.0};
        for (int a = 0; a < 2; ++a) {
          if (ends[a] < 0 || ends[a] >= k_slots) continue;
          const int ia = ends[a] * m;
          grad->segment(ia, m) += sign[a] * gq;
          hess->block(ia, np + s, m, 1) += sign[a] * hqt;
          hess->block(np + s, ia, 1, m) += sign[a] * hqt.transpose();
          for (int b = 0; b < 2; ++b) {
            if (ends[b] < 0 || ends[b] >= k_slots) continue;
            hess->block(ia, ends[b] * m, m, m) += sign[a] * sign[b] * hqq;
          }
        }
      }
      for (int k = 0; k < k_slots; ++k) {
        if (!grad) {
          const double b = slot_barrier(slots[k], v.segment(k * m, m), nullptr, nullptr);
          if (!std::isfinite(b)) return kInf;
          f += b;
          continue;
        }
        Vec g = Vec::Zero(m);
        Mat h = Mat::Zero(m, m);
        const double b = slot_barrier(slots[k], v.segment(k * m, m), &g, &h);
        if (!std::isfinite(b)) return kInf;
        f += b;
        grad->segment(k * m, m) += g;
        hess->block(k * m, k * m, m, m) += h;
      }
      return f;
    };
  };

  // Initial weight balances the linear term against the barrier.
  tau = std::max(1e-3, nu / std::max(1.0, z.tail(k_slots + 1).sum()));
  int budget = opts.max_newton_steps;
  while (true) {
    out.barrier_objective.emplace_back();
    const int used = newton_center(z, eval_at(tau), std::min(budget, 100), 1e-9, &out.barrier_objective.back());
    out.newton_steps += used;
    budget -= used;
    if (nu / tau < opts.gap_tol) break;
    if (budget <= 0) {
      out.converged = false;
      break;
    }
    tau *= 20.0;
  }
  out.residual = nu / tau;
  for (int k = 0; k < k_slots; ++k) out.points.push_back(z.segment(k * m, m));
  out.length = 0.0;
  for (int s = 0; s <= k_slots; ++s) out.length += (point(z, s) - point(z, s - 1)).norm();
  return out;
}

PastryGeodesic pastry_distance(const PuffPastry& p, const LiftedPoint& a, const LiftedPoint& b,
                               const SolverOptions& opts) {
  for (const auto* lp : {&a, &b}) {
    if (lp->level < 0 || lp->level > p.size()) throw Error("level out of range: " + std::to_string(lp->level));
    if (lp->x.size() != p.dimension()) throw Error("point dimension does not match the pastry");
  }
  PastryGeodesic g;
  g.from = a;
  g.to = b;
  const bool swapped = a.level > b.level;
  const LiftedPoint& lo = swapped ? b : a;
  const LiftedPoint& hi = swapped ? a : b;
  // Same level: any detour through a neighboring level can be replaced by the
  // straight segment, so the distance is Euclidean.
  std::vector<Slot> slots;
  for (int k = lo.level + 1; k <= hi.level; ++k) slots.push_back({&p.body(k)});
  const ChainResult r = shortest_chain(lo.x, slots, hi.x, opts);
  g.crossings = r.points;
  if (swapped) std::reverse(g.crossings.begin(), g.crossings.end());
  g.length = r.length;
  g.residual = r.residual;
  g.converged = r.converged;
  return g;
}

std::optional<Vec> intersection_point(const std::vector<ConvexBody>& bodies, double tol, int max_sweeps) {
  if (bodies.empty()) throw Error("intersection of an empty family");
  Vec z = Vec::Zero(bodies.front().dimension());
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double worst = -kInf;
    for (const auto& b : bodies) worst = std::max(worst, b.excess(z));
    if (worst <= tol) return z;
    for (const auto& b : bodies) z = b.project(z);
  }
  return std::nullopt;
}

EndToEndReport end_to_end_convex_check(const PuffPastry& p, const std::vector<std::pair<Vec, Vec>>& pairs,
                                       double tol, const SolverOptions& opts) {
  if (!intersection_point(p.bodies())) throw Error("bodies have empty intersection");
  Slot all;
  for (const auto& b : p.bodies()) all.push_back(&b);
  EndToEndReport rep;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const double through = shortest_chain(x, {all}, y, opts).length;
    const double direct = pastry_distance(p, {0, x}, {p.size(), y}, opts).length;
    const double slack = through - direct;
    rep.slacks.push_back(slack);
    ++rep.pairs_checked;
    if (i == 0 || std::abs(slack) > std::abs(rep.worst_slack)) rep.worst_slack = slack;
    if (std::abs(slack) > tol && !rep.witness_index) {
      rep.pass = false;
      rep.witness_index = i;
      rep.witness_pastry_length = direct;
      rep.witness_intersection_length = through;
    }
  }
  return rep;
}

long long ceil_pi_over(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error("angle must be positive");
  const double c = std::numbers::pi / eps;
  const double r = std::round(c);
  if (r >= 1.0 && std::abs(c - r) <= 1e-12 * c) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(c));
}

std::vector<int> build_bfk_array(int n, double eps) {
  if (n < 1) throw Error("array order must be at least 1");
  if (!(eps > 0.0) || eps > std::numbers::pi + 1e-12) throw Error("eps must lie in (0, pi]");
  const long long run = ceil_pi_over(eps) + 1;
  std::vector<int> arr{1};
  for (int k = 1; k < n; ++k) {
    std::vector<int> next;
    for (int v : arr) {
      if (v != k) {
        next.push_back(v);
        continue;
      }
      for (long long r = 0; r < run; ++r) next.push_back(r % 2 == 0 ? k : k + 1);
    }
    arr = std::move(next);
  }
  return arr;
}

ZigzagCheck zigzag_length_check(double alpha) {
  if (!(alpha > 0.0) || alpha > std::numbers::pi + 1e-12) throw Error("alpha must lie in (0, pi]");
  ZigzagCheck z;
  z.arcs = ceil_pi_over(alpha);
  z.total = static_cast<double>(z.arcs) * alpha;
  z.ok = z.total >= std::numbers::pi - 1e-12;
  return z;
}

}  // namespace catkit::pastry
