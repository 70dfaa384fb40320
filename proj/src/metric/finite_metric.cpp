#include "catkit/metric/finite_metric.hpp"

#include <cmath>

#include "catkit/error.hpp"

namespace catkit::metric {

namespace {

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, Eigen::MatrixXd dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  if (dist_.rows() != dist_.cols()) {
    throw Error("distance matrix is not square (" + std::to_string(dist_.rows()) + "x" +
                std::to_string(dist_.cols()) + ")");
  }
  if (static_cast<Eigen::Index>(labels_.size()) != dist_.rows()) {
    throw Error("label count " + std::to_string(labels_.size()) + " does not match matrix size " +
                std::to_string(dist_.rows()));
  }
  if (!dist_.allFinite()) throw Error("distance matrix has NaN or infinite entries");
}

FiniteMetricSpace::FiniteMetricSpace(Eigen::MatrixXd dist)
    : FiniteMetricSpace(index_labels(static_cast<int>(dist.rows())), dist) {}

FiniteMetricSpace FiniteMetricSpace::restrict_to(const std::vector<int>& indices) const {
  const auto n = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd sub(n, n);
  std::vector<std::string> labels;
  labels.reserve(indices.size());
  for (Eigen::Index a = 0; a < n; ++a) {
    const int i = indices[a];
    if (i < 0 || i >= size()) throw Error("point index out of range: " + std::to_string(i));
    labels.push_back(labels_[i]);
    for (Eigen::Index b = 0; b < n; ++b) sub(a, b) = dist_(i, indices[b]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(sub));
}

ValidationReport validate_metric(const FiniteMetricSpace& m, double tol) {
  ValidationReport report;
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    if (std::abs(m(i, i)) > tol) {
      report.violations.push_back({ViolationKind::Diagonal, i, i, 0, std::abs(m(i, i))});
    }
    for (int j = i + 1; j < n; ++j) {
      const double asym = std::abs(m(i, j) - m(j, i));
      if (asym > tol) report.violations.push_back({ViolationKind::Symmetry, i, j, 0, asym});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double excess = m(i, k) - (m(i, j) + m(j, k));
        if (excess > tol) report.violations.push_back({ViolationKind::Triangle, i, j, k, excess});
      }
    }
  }
  return report;
}

FiniteMetricSpace product(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const int nx = x.size();
  const int ny = y.size();
  Eigen::MatrixXd d(nx * ny, nx * ny);
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(nx) * ny);
  for (int a = 0; a < nx; ++a) {
    for (int b = 0; b < ny; ++b) labels.push_back("(" + x.labels()[a] + "," + y.labels()[b] + ")");
  }
  for (int a = 0; a < nx; ++a) {
    for (int b = 0; b < ny; ++b) {
      for (int a2 = 0; a2 < nx; ++a2) {
        for (int b2 = 0; b2 < ny; ++b2) {
          d(a * ny + b, a2 * ny + b2) = std::hypot(x(a, a2), y(b, b2));
        }
      }
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

FiniteMetricSpace from_points(const Eigen::MatrixXd& points) {
  const auto n = points.rows();
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = (points.row(i) - points.row(j)).norm();
  }
  return FiniteMetricSpace(std::move(d));
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Diagonal: return "diagonal";
    case ViolationKind::Symmetry: return "symmetry";
    case ViolationKind::Triangle: return "triangle";
  }
  return "unknown";
}

}  // namespace catkit::metric
