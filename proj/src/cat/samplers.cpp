#include "catkit/cat/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <Eigen/Geometry>

#include "catkit/error.hpp"
#include "catkit/metric/model_plane.hpp"

namespace catkit::cat {

namespace {

template <typename Dist>
FourPoints from_points(const std::array<Eigen::Vector3d, 4>& p, Dist dist) {
  FourPoints pts;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) pts.d[i][j] = i == j ? 0.0 : dist(p[i], p[j]);
  }
  return pts;
}

}  // namespace

FourPoints sample_euclidean_quadruple(Rng& rng, int dim) {
  std::normal_distribution<double> gauss;
  std::array<Eigen::VectorXd, 4> p;
  for (auto& v : p) {
    v.resize(dim);
    for (int k = 0; k < dim; ++k) v[k] = gauss(rng);
  }
  FourPoints pts;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) pts.d[i][j] = i == j ? 0.0 : (p[i] - p[j]).norm();
  }
  return pts;
}

FourPoints sample_spherical_quadruple(Rng& rng) {
  std::normal_distribution<double> gauss;
  std::array<Eigen::Vector3d, 4> p;
  for (auto& v : p) {
    do {
      v = {gauss(rng), gauss(rng), gauss(rng)};
    } while (v.norm() < 1e-6);
    v.normalize();
  }
  return from_points(p, [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return metric::model_distance(metric::Curvature::Spherical, a, b);
  });
}

FourPoints sample_hyperbolic_quadruple(Rng& rng, double max_radius) {
  std::uniform_real_distribution<double> radius(0.0, max_radius);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::array<Eigen::Vector3d, 4> p;
  for (auto& v : p) v = metric::polar_point(metric::Curvature::Hyperbolic, radius(rng), angle(rng));
  return from_points(p, [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return metric::model_distance(metric::Curvature::Hyperbolic, a, b);
  });
}

metric::FiniteMetricSpace random_metric_tree(Rng& rng, int nodes) {
  if (nodes < 1) throw Error("tree needs at least one node");
  std::uniform_real_distribution<double> length(0.1, 2.0);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(nodes, nodes);
  for (int v = 1; v < nodes; ++v) {
    std::uniform_int_distribution<int> parent_pick(0, v - 1);
    const int parent = parent_pick(rng);
    const double w = length(rng);
    for (int u = 0; u < v; ++u) d(u, v) = d(v, u) = d(u, parent) + w;
  }
  return metric::FiniteMetricSpace(std::move(d));
}

FourPoints sample_quadruple_from(Rng& rng, const metric::FiniteMetricSpace& space) {
  if (space.size() < 4) throw Error("space has fewer than 4 points");
  std::vector<int> idx(space.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (int k = 0; k < 4; ++k) {
    std::uniform_int_distribution<int> pick(k, space.size() - 1);
    std::swap(idx[k], idx[pick(rng)]);
  }
  FourPoints pts;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) pts.d[i][j] = space(idx[i], idx[j]);
  }
  return pts;
}

}  // namespace catkit::cat
