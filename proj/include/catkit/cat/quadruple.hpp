#pragma once

#include <array>

#include "catkit/metric/model_plane.hpp"

namespace catkit::cat {

/// Six distances of a labeled quadruple. p and q are the outer pair; the two
/// model triangles share the side [x y].
struct Quadruple {
  double pq = 0.0;
  double px = 0.0;
  double py = 0.0;
  double qx = 0.0;
  double qy = 0.0;
  double xy = 0.0;

  /// Throws catkit::Error on negative/non-finite entries or a triangle
  /// inequality violation beyond tol in any sub-triple.
  void validate(double tol) const;
};

/// Outcome of the CAT(kappa) comparison for one quadruple.
/// slack = min over z on [x y] of |p z| + |z q| in the model plane, minus |pq|.
/// For kappa = +1 with an undefined model triangle the comparison passes
/// automatically; slack is then +infinity and auto_pass is set.
struct CatVerdict {
  bool pass = true;
  double witness_t = 0.0;  // position of the minimizer along [x y], in [0, 1]
  double slack = 0.0;
  bool auto_pass = false;
};

CatVerdict cat_quadruple(const Quadruple& q, const metric::ModelConfig& cfg);

/// Four points with their pairwise distances; d[i][j] for i != j.
struct FourPoints {
  std::array<std::array<double, 4>, 4> d{};

  static FourPoints from_six(double d01, double d02, double d03, double d12, double d13, double d23);
  double operator()(int i, int j) const { return d[i][j]; }
};

/// Worst case over every role assignment. `roles` holds (p, q, x, y) of the
/// worst one.
struct SplitVerdict {
  CatVerdict verdict;
  std::array<int, 4> roles{};
  int assignments_checked = 0;
};

/// Runs cat_quadruple for all three partitions {p,q} | {x,y} and both choices
/// of which pair spans the shared side; returns the minimum-slack verdict.
SplitVerdict cat_quadruple_all_splittings(const FourPoints& pts, const metric::ModelConfig& cfg);

Quadruple assign_roles(const FourPoints& pts, int p, int q, int x, int y);

}  // namespace catkit::cat
