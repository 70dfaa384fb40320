#pragma once

#include <random>

#include "catkit/cat/quadruple.hpp"
#include "catkit/metric/finite_metric.hpp"

namespace catkit::cat {

using Rng = std::mt19937_64;

/// Four i.i.d. Gaussian points in E^dim.
FourPoints sample_euclidean_quadruple(Rng& rng, int dim);

/// Four uniform points on the unit sphere S^2, intrinsic (great-circle) distances.
FourPoints sample_spherical_quadruple(Rng& rng);

/// Four points in H^2 (hyperboloid model) with polar radius uniform in
/// [0, max_radius], intrinsic distances.
FourPoints sample_hyperbolic_quadruple(Rng& rng, double max_radius = 3.0);

/// Random weighted tree on `nodes` vertices (random recursive attachment,
/// edge lengths uniform in [0.1, 2]) with its path metric.
metric::FiniteMetricSpace random_metric_tree(Rng& rng, int nodes);

/// Four distinct random points of a finite metric space.
FourPoints sample_quadruple_from(Rng& rng, const metric::FiniteMetricSpace& space);

}  // namespace catkit::cat
