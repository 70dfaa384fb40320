#pragma once

#include <array>

#include "catkit/cat/quadruple.hpp"

namespace catkit::cat {

enum class FourPointClass { E4, P4, N4, Boundary };

const char* to_string(FourPointClass c);

/// Combinatorics of the 4 vertices of a fixed tetrahedron projected along a
/// direction v with W(v) < 0.
enum class Picture { None, OneInside, ConvexPosition, Degenerate };

const char* to_string(Picture p);

// Calibration of the two indefinite pictures, fixed from seeded samples of
// intrinsic spherical and hyperbolic quadruples (see tests/unit/four_point_test.cpp
// and README): convex position occurs on spheres, one-inside on H^2.
inline constexpr FourPointClass kConvexPositionClass = FourPointClass::P4;
inline constexpr FourPointClass kOneInsideClass = FourPointClass::N4;

struct FourPointDiagnostic {
  FourPointClass cls = FourPointClass::Boundary;
  std::array<double, 3> eigenvalues{};  // of W, ascending
  double band = 0.0;                    // |lambda_min| <= band -> Boundary
  Picture picture = Picture::None;
  int inside_vertex = -1;               // for Picture::OneInside
};

/// Quadratic form W on R^3 with W(x_i - x_j) = |x_i x_j|^2 for the tetrahedron
/// x_0 = 0, x_i = e_i: W_ij = (d0i^2 + d0j^2 - dij^2) / 2.
Eigen::Matrix3d four_point_form(const FourPoints& pts);

/// E4 when W is positive definite beyond the band, Boundary inside the band
/// |lambda_min| <= tol * trace(W), otherwise P4 / N4 by the projection picture.
FourPointDiagnostic classify_four_point(const FourPoints& pts, double tol = 1e-9);

/// Picture obtained by projecting x_0 = 0, e_1, e_2, e_3 along `direction`.
Picture projection_picture(const Eigen::Vector3d& direction, int* inside_vertex = nullptr,
                           double tol = 1e-12);

}  // namespace catkit::cat
