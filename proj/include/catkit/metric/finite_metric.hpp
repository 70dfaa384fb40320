#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

namespace catkit::metric {

/// Labeled points with a distance matrix. Construction only checks shape and
/// finiteness; the metric axioms are checked by validate_metric so that
/// broken inputs can still be reported on.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> labels, Eigen::MatrixXd dist);

  /// Labels default to "0", "1", ...
  explicit FiniteMetricSpace(Eigen::MatrixXd dist);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::MatrixXd& matrix() const { return dist_; }
  double operator()(int i, int j) const { return dist_(i, j); }

  /// Sub-space on the given point indices, in that order.
  FiniteMetricSpace restrict_to(const std::vector<int>& indices) const;

 private:
  std::vector<std::string> labels_;
  Eigen::MatrixXd dist_;
};

enum class ViolationKind { Diagonal, Symmetry, Triangle };

struct Violation {
  ViolationKind kind;
  int i = 0;
  int j = 0;
  int k = 0;  // unused for Diagonal/Symmetry
  double amount = 0.0;
};

struct ValidationReport {
  bool ok() const { return violations.empty(); }
  std::vector<Violation> violations;
};

/// Every zero-diagonal, symmetry and triangle-inequality violation larger
/// than tol. Triangle violations are reported as (i, j, k) with
/// d(i,k) > d(i,j) + d(j,k) + tol, once per unordered outer pair i < k.
ValidationReport validate_metric(const FiniteMetricSpace& m, double tol = 1e-9);

/// Euclidean (l2) product: d((a,b),(a',b'))^2 = d(a,a')^2 + d(b,b')^2.
FiniteMetricSpace product(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Distance matrix of a point cloud (rows are points).
FiniteMetricSpace from_points(const Eigen::MatrixXd& points);

const char* to_string(ViolationKind kind);

}  // namespace catkit::metric
