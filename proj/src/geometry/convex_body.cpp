#include "catkit/geometry/convex_body.hpp"

#include <cmath>
#include <limits>

#include "catkit/error.hpp"

namespace catkit::geometry {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Relative width below which a quadratic's discriminant counts as a tangency.
constexpr double kGrazingTol = 1e-12;

Vec cylinder_u(const Cylinder& c, const Vec& x) {
  return c.weight_i * x.segment(c.i * c.block, c.block) - c.weight_j * x.segment(c.j * c.block, c.block);
}

Vec project_halfspace(const HalfSpace& h, const Vec& x) {
  const double excess = h.normal.dot(x) - h.offset;
  if (excess <= 0.0) return x;
  return x - (excess / h.normal.squaredNorm()) * h.normal;
}

}  // namespace

std::optional<RayHit> quadratic_entry(double a, double b, double c0, double t_min) {
  // |u0 + t du|^2 - r^2 = a t^2 + b t + c0.
  if (a <= 0.0) return std::nullopt;
  const double disc = b * b - 4.0 * a * c0;
  const double scale = std::max(b * b, std::abs(4.0 * a * c0));
  if (disc < -kGrazingTol * scale) return std::nullopt;
  const bool grazing = disc <= kGrazingTol * scale;
  const double sq = std::sqrt(std::max(disc, 0.0));
  double entry;
  if (b == 0.0 && c0 == 0.0) {
    entry = 0.0;
  } else {
    // Citardauq: avoid cancellation by computing the larger-magnitude root first.
    const double q = -0.5 * (b + std::copysign(sq, b));
    const double r1 = q / a;
    const double r2 = q != 0.0 ? c0 / q : r1;
    entry = std::min(r1, r2);
  }
  if (entry <= t_min) return std::nullopt;
  return RayHit{entry, grazing};
}

ConvexBody::ConvexBody(Shape shape) : shape_(std::move(shape)) {
  std::visit(Overloaded{
                 [](const HalfSpace& h) {
                   if (h.normal.size() == 0 || h.normal.norm() == 0.0) throw Error("half-space normal must be nonzero");
                   if (!std::isfinite(h.offset) || !h.normal.allFinite()) throw Error("half-space has non-finite data");
                 },
                 [](const Ball& b) {
                   if (b.center.size() == 0) throw Error("ball center is empty");
                   if (!(b.radius > 0.0) || !std::isfinite(b.radius) || !b.center.allFinite()) {
                     throw Error("ball radius must be positive");
                   }
                 },
                 [](const Polytope& p) {
                   if (p.dim <= 0) throw Error("polytope dimension must be positive");
                   for (const auto& h : p.faces) {
                     if (h.normal.size() != p.dim) throw Error("polytope face dimension mismatch");
                     if (h.normal.norm() == 0.0) throw Error("polytope face normal must be nonzero");
                   }
                 },
                 [](const Cylinder& c) {
                   if (c.block <= 0 || c.i < 0 || c.j < 0 || c.i == c.j) throw Error("cylinder blocks are invalid");
                   if ((std::max(c.i, c.j) + 1) * c.block > c.dim) throw Error("cylinder block outside ambient dimension");
                   if (!(c.radius > 0.0)) throw Error("cylinder radius must be positive");
                   if (!(c.weight_i > 0.0) || !(c.weight_j > 0.0)) throw Error("cylinder weights must be positive");
                 },
             },
             shape_);
}

int ConvexBody::dimension() const {
  return std::visit(Overloaded{
                        [](const HalfSpace& h) { return static_cast<int>(h.normal.size()); },
                        [](const Ball& b) { return static_cast<int>(b.center.size()); },
                        [](const Polytope& p) { return p.dim; },
                        [](const Cylinder& c) { return c.dim; },
                    },
                    shape_);
}

double ConvexBody::excess(const Vec& x) const {
  return std::visit(Overloaded{
                        [&](const HalfSpace& h) { return (h.normal.dot(x) - h.offset) / h.normal.norm(); },
                        [&](const Ball& b) { return (x - b.center).norm() - b.radius; },
                        [&](const Polytope& p) {
                          double worst = -std::numeric_limits<double>::infinity();
                          for (const auto& h : p.faces) worst = std::max(worst, (h.normal.dot(x) - h.offset) / h.normal.norm());
                          return worst;
                        },
                        [&](const Cylinder& c) {
                          // Distance-like: divide by the gradient scale of |u|.
                          const double scale = std::sqrt(c.weight_i * c.weight_i + c.weight_j * c.weight_j);
                          return (cylinder_u(c, x).norm() - c.radius) / scale;
                        },
                    },
                    shape_);
}

bool ConvexBody::contains(const Vec& x, double tol) const { return excess(x) <= tol; }

Vec ConvexBody::project(const Vec& x) const {
  return std::visit(Overloaded{
                        [&](const HalfSpace& h) { return project_halfspace(h, x); },
                        [&](const Ball& b) -> Vec {
                          const Vec r = x - b.center;
                          const double n = r.norm();
                          if (n <= b.radius) return x;
                          return b.center + (b.radius / n) * r;
                        },
                        [&](const Polytope& p) -> Vec {
                          // Dykstra's alternating projections with correction terms.
                          const size_t k = p.faces.size();
                          if (k == 0) return x;
                          std::vector<Vec> incr(k, Vec::Zero(x.size()));
                          Vec y = x;
                          for (int sweep = 0; sweep < 100000; ++sweep) {
                            // A sweep can leave y fixed while the corrections still
                            // move, so both must settle.
                            double change = 0.0;
                            for (size_t f = 0; f < k; ++f) {
                              const Vec z = y + incr[f];
                              const Vec proj = project_halfspace(p.faces[f], z);
                              const Vec next_incr = z - proj;
                              change = std::max({change, (proj - y).norm(), (next_incr - incr[f]).norm()});
                              incr[f] = next_incr;
                              y = proj;
                            }
                            if (change <= 1e-15 * (1.0 + x.norm())) break;
                          }
                          return y;
                        },
                        [&](const Cylinder& c) -> Vec {
                          const Vec u = cylinder_u(c, x);
                          const double n = u.norm();
                          if (n <= c.radius) return x;
                          const double alpha = (n - c.radius) / (c.weight_i * c.weight_i + c.weight_j * c.weight_j);
                          const Vec uhat = u / n;
                          Vec y = x;
                          y.segment(c.i * c.block, c.block) -= alpha * c.weight_i * uhat;
                          y.segment(c.j * c.block, c.block) += alpha * c.weight_j * uhat;
                          return y;
                        },
                    },
                    shape_);
}

Vec ConvexBody::project_to_boundary(const Vec& x) const {
  return std::visit(Overloaded{
                        [&](const HalfSpace& h) -> Vec {
                          return x - ((h.normal.dot(x) - h.offset) / h.normal.squaredNorm()) * h.normal;
                        },
                        [&](const Ball& b) -> Vec {
                          Vec r = x - b.center;
                          if (r.norm() == 0.0) r = Vec::Unit(x.size(), 0);
                          return b.center + (b.radius / r.norm()) * r;
                        },
                        [&](const Polytope&) -> Vec { throw Error("boundary projection needs a smooth body"); },
                        [&](const Cylinder& c) -> Vec {
                          Vec u = cylinder_u(c, x);
                          double n = u.norm();
                          if (n == 0.0) {
                            u = Vec::Unit(c.block, 0) * 1e-300;
                            n = 1e-300;
                          }
                          const double alpha = (n - c.radius) / (c.weight_i * c.weight_i + c.weight_j * c.weight_j);
                          const Vec uhat = u / n;
                          Vec y = x;
                          y.segment(c.i * c.block, c.block) -= alpha * c.weight_i * uhat;
                          y.segment(c.j * c.block, c.block) += alpha * c.weight_j * uhat;
                          return y;
                        },
                    },
                    shape_);
}

Vec ConvexBody::outward_normal(const Vec& x) const {
  return std::visit(Overloaded{
                        [&](const HalfSpace& h) -> Vec { return h.normal.normalized(); },
                        [&](const Ball& b) -> Vec {
                          const Vec r = x - b.center;
                          if (r.norm() == 0.0) throw Error("normal undefined at the ball center");
                          return r.normalized();
                        },
                        [&](const Polytope&) -> Vec { throw Error("normal needs a smooth body"); },
                        [&](const Cylinder& c) -> Vec {
                          const Vec u = cylinder_u(c, x);
                          if (u.norm() == 0.0) throw Error("normal undefined on the cylinder axis");
                          Vec g = Vec::Zero(c.dim);
                          g.segment(c.i * c.block, c.block) = c.weight_i * u;
                          g.segment(c.j * c.block, c.block) = -c.weight_j * u;
                          return g.normalized();
                        },
                    },
                    shape_);
}

int ConvexBody::constraint_count() const {
  if (const auto* p = std::get_if<Polytope>(&shape_)) return static_cast<int>(p->faces.size());
  return 1;
}

ConstraintEval ConvexBody::constraint(int k, const Vec& x) const {
  ConstraintEval e;
  std::visit(Overloaded{
                 [&](const HalfSpace& h) {
                   e.value = h.normal.dot(x) - h.offset;
                   e.grad = h.normal;
                 },
                 [&](const Ball& b) {
                   const Vec r = x - b.center;
                   e.value = r.squaredNorm() - b.radius * b.radius;
                   e.grad = 2.0 * r;
                   e.hess = 2.0 * Mat::Identity(x.size(), x.size());
                 },
                 [&](const Polytope& p) {
                   const auto& h = p.faces.at(k);
                   e.value = h.normal.dot(x) - h.offset;
                   e.grad = h.normal;
                 },
                 [&](const Cylinder& c) {
                   const Vec u = cylinder_u(c, x);
                   const int bi = c.i * c.block;
                   const int bj = c.j * c.block;
                   e.value = u.squaredNorm() - c.radius * c.radius;
                   e.grad = Vec::Zero(c.dim);
                   e.grad.segment(bi, c.block) = 2.0 * c.weight_i * u;
                   e.grad.segment(bj, c.block) = -2.0 * c.weight_j * u;
                   e.hess = Mat::Zero(c.dim, c.dim);
                   const Mat id = Mat::Identity(c.block, c.block);
                   e.hess.block(bi, bi, c.block, c.block) = 2.0 * c.weight_i * c.weight_i * id;
                   e.hess.block(bj, bj, c.block, c.block) = 2.0 * c.weight_j * c.weight_j * id;
                   e.hess.block(bi, bj, c.block, c.block) = -2.0 * c.weight_i * c.weight_j * id;
                   e.hess.block(bj, bi, c.block, c.block) = -2.0 * c.weight_i * c.weight_j * id;
                 },
             },
             shape_);
  return e;
}

std::optional<RayHit> ConvexBody::ray_entry(const Vec& x, const Vec& d, double t_min) const {
  return std::visit(Overloaded{
                        [&](const HalfSpace& h) -> std::optional<RayHit> {
                          const double dn = h.normal.dot(d);
                          // Entering {<n,x> <= b} from outside means moving against n.
                          if (dn >= 0.0) return std::nullopt;
                          const double t = (h.offset - h.normal.dot(x)) / dn;
                          if (t <= t_min) return std::nullopt;
                          return RayHit{t, -dn <= kGrazingTol * h.normal.norm() * d.norm()};
                        },
                        [&](const Ball& b) -> std::optional<RayHit> {
                          const Vec r = x - b.center;
                          return quadratic_entry(d.squaredNorm(), 2.0 * r.dot(d), r.squaredNorm() - b.radius * b.radius,
                                                 t_min);
                        },
                        [&](const Polytope&) -> std::optional<RayHit> {
                          throw Error("ray entry needs a smooth body");
                        },
                        [&](const Cylinder& c) -> std::optional<RayHit> {
                          const Vec u = cylinder_u(c, x);
                          const Vec du = cylinder_u(c, d);
                          return quadratic_entry(du.squaredNorm(), 2.0 * u.dot(du), u.squaredNorm() - c.radius * c.radius,
                                                 t_min);
                        },
                    },
                    shape_);
}

}  // namespace catkit::geometry
