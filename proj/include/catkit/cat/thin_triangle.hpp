#pragma once

#include <array>
#include <functional>

#include "catkit/metric/model_plane.hpp"

namespace catkit::cat {

/// Sides of a triangle x1 x2 x3: side 0 = [x1 x2], side 1 = [x2 x3],
/// side 2 = [x3 x1]. A point on side i is given by its arc-length parameter
/// from the side's first endpoint.
///
/// The oracle returns the distance in the space under test between the
/// point at parameter s on side `side_a` and the point at parameter t on
/// side `side_b`.
using SideDistanceOracle = std::function<double(int side_a, double s, int side_b, double t)>;

struct ThinTriangleResult {
  bool pass = true;
  double worst_violation = 0.0;  // max(oracle - model), may be negative
  int side_a = 0;
  double s = 0.0;
  int side_b = 1;
  double t = 0.0;
  int pairs_checked = 0;
};

/// Samples the natural map on a (resolution+1)-point grid per side and checks
/// oracle <= model distance + tol for every pair of points on distinct sides.
/// `model` is Flat (thin) or Spherical (spherically thin).
/// Throws if the oracle disagrees with the side lengths at the vertices.
ThinTriangleResult thin_triangle_test(const std::array<double, 3>& sides,
                                      const SideDistanceOracle& oracle, int resolution,
                                      metric::Curvature model = metric::Curvature::Flat,
                                      double tol = 1e-9);

}  // namespace catkit::cat
