#pragma once

#include "catkit/metric/finite_metric.hpp"

namespace catkit::metric {

inline constexpr int kMaxGhPoints = 8;

/// Least eps such that there are maps f: X -> Y and g: Y -> X with
///   |x x'| <= |f(x) f(x')| + eps   and   |y y'| <= |g(y) g(y')| + eps
/// for all pairs. Exhaustive branch-and-bound over all maps in both
/// directions; both spaces must have at most kMaxGhPoints points.
double gh_distance_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// One direction of the above: min over f: X -> Y of the worst one-sided
/// distortion max(0, |x x'| - |f(x) f(x')|).
double one_sided_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace catkit::metric
