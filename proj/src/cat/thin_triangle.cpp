#include "catkit/cat/thin_triangle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "catkit/error.hpp"

namespace catkit::cat {

using metric::Curvature;
using metric::ModelPoint;

ThinTriangleResult thin_triangle_test(const std::array<double, 3>& sides,
                                      const SideDistanceOracle& oracle, int resolution,
                                      Curvature model, double tol) {
  if (resolution < 1) throw Error("grid resolution must be at least 1");
  if (model == Curvature::Hyperbolic) throw Error("thin-triangle test uses the E2 or S2 model");
  const metric::ModelConfig cfg{model, tol};
  // model_triangle(pq, qr, rp) with p = x1, q = x2, r = x3.
  const auto tri = metric::model_triangle(sides[0], sides[1], sides[2], cfg);
  if (!tri) throw Error("spherical model triangle is undefined (perimeter >= 2*pi)");
  const std::array<ModelPoint, 3> vertex{tri->p, tri->q, tri->r};

  // Vertex bookkeeping: side i runs from vertex i to vertex (i+1) % 3.
  auto endpoint = [&](int side, int end) { return end == 0 ? 0.0 : sides[side]; };
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (int ea = 0; ea < 2; ++ea) {
        for (int eb = 0; eb < 2; ++eb) {
          const int va = (a + ea) % 3;
          const int vb = (b + eb) % 3;
          double expected = 0.0;
          if (va != vb) {
            // The side joining va and vb.
            const int side = ((va + 1) % 3 == vb) ? va : vb;
            expected = sides[side];
          }
          const double got = oracle(a, endpoint(a, ea), b, endpoint(b, eb));
          if (std::abs(got - expected) > 1e3 * tol + 1e-9) {
            throw Error("oracle inconsistent at vertices: sides " + std::to_string(a) + "/" +
                        std::to_string(b) + " expected " + std::to_string(expected) + ", got " +
                        std::to_string(got));
          }
        }
      }
    }
  }

  auto model_point = [&](int side, double param) {
    return metric::along_segment(model, vertex[side], vertex[(side + 1) % 3], param);
  };

  ThinTriangleResult result;
  result.worst_violation = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (int i = 0; i <= resolution; ++i) {
        const double s = sides[a] * i / resolution;
        const ModelPoint za = model_point(a, s);
        for (int j = 0; j <= resolution; ++j) {
          const double t = sides[b] * j / resolution;
          const double model_d = metric::model_distance(model, za, model_point(b, t));
          const double excess = oracle(a, s, b, t) - model_d;
          ++result.pairs_checked;
          if (excess > result.worst_violation) {
            result.worst_violation = excess;
            result.side_a = a;
            result.s = s;
            result.side_b = b;
            result.t = t;
          }
        }
      }
    }
  }
  result.pass = result.worst_violation <= tol;
  return result;
}

}  // namespace catkit::cat
