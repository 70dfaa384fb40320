#include "catkit/cat/four_point.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace catkit::cat {

const char* to_string(FourPointClass c) {
  switch (c) {
    case FourPointClass::E4: return "E4";
    case FourPointClass::P4: return "P4";
    case FourPointClass::N4: return "N4";
    case FourPointClass::Boundary: return "Boundary";
  }
  return "?";
}

const char* to_string(Picture p) {
  switch (p) {
    case Picture::None: return "none";
    case Picture::OneInside: return "one-inside";
    case Picture::ConvexPosition: return "convex-position";
    case Picture::Degenerate: return "degenerate";
  }
  return "?";
}

Eigen::Matrix3d four_point_form(const FourPoints& pts) {
  Eigen::Matrix3d w;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const double d0i = pts(0, i);
      const double d0j = pts(0, j);
      const double dij = i == j ? 0.0 : pts(i, j);
      w(i - 1, j - 1) = 0.5 * (d0i * d0i + d0j * d0j - dij * dij);
    }
  }
  return w;
}

namespace {

double orient(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const Eigen::Vector2d u = b - a;
  const Eigen::Vector2d v = c - a;
  return u.x() * v.y() - u.y() * v.x();
}

}  // namespace

Picture projection_picture(const Eigen::Vector3d& direction, int* inside_vertex, double tol) {
  const Eigen::Vector3d v = direction.normalized();
  // Orthonormal basis of the plane orthogonal to v.
  Eigen::Vector3d helper = std::abs(v.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d u1 = (helper - helper.dot(v) * v).normalized();
  const Eigen::Vector3d u2 = v.cross(u1);
  std::array<Eigen::Vector3d, 4> vertices{Eigen::Vector3d::Zero(), Eigen::Vector3d::UnitX(),
                                          Eigen::Vector3d::UnitY(), Eigen::Vector3d::UnitZ()};
  std::array<Eigen::Vector2d, 4> img;
  for (int i = 0; i < 4; ++i) img[i] = {u1.dot(vertices[i]), u2.dot(vertices[i])};

  // A transversal direction never makes three projected vertices collinear.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (std::abs(orient(img[i], img[j], img[k])) <= tol) return Picture::Degenerate;
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    const int a = (i + 1) % 4;
    const int b = (i + 2) % 4;
    const int c = (i + 3) % 4;
    const double s1 = orient(img[a], img[b], img[i]);
    const double s2 = orient(img[b], img[c], img[i]);
    const double s3 = orient(img[c], img[a], img[i]);
    if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)) {
      if (inside_vertex != nullptr) *inside_vertex = i;
      return Picture::OneInside;
    }
  }
  return Picture::ConvexPosition;
}

FourPointDiagnostic classify_four_point(const FourPoints& pts, double tol) {
  const Eigen::Matrix3d w = four_point_form(pts);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(w);
  FourPointDiagnostic diag;
  for (int i = 0; i < 3; ++i) diag.eigenvalues[i] = eig.eigenvalues()[i];
  const double scale = std::abs(w.trace());
  diag.band = tol * scale;
  const double lambda_min = diag.eigenvalues[0];
  if (scale == 0.0 || std::abs(lambda_min) <= diag.band) {
    diag.cls = FourPointClass::Boundary;
    return diag;
  }
  if (lambda_min > 0.0) {
    diag.cls = FourPointClass::E4;
    return diag;
  }
  diag.picture = projection_picture(eig.eigenvectors().col(0), &diag.inside_vertex);
  switch (diag.picture) {
    case Picture::OneInside: diag.cls = kOneInsideClass; break;
    case Picture::ConvexPosition: diag.cls = kConvexPositionClass; break;
    default: diag.cls = FourPointClass::Boundary; break;
  }
  return diag;
}

}  // namespace catkit::cat
