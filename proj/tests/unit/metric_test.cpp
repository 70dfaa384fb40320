#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "catkit/error.hpp"
#include "catkit/metric/finite_metric.hpp"
#include "catkit/metric/gh_distance.hpp"
#include "catkit/metric/model_plane.hpp"
#include "oracles.hpp"

using namespace catkit::metric;
using std::numbers::pi;

namespace {

FiniteMetricSpace space(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXd d(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) d(i, j++) = v;
    ++i;
  }
  return FiniteMetricSpace(d);
}

// Random triple with a valid triangle; spherical perimeter kept below 2pi.
struct Triple {
  double a, b, c;
};

Triple random_triple(std::mt19937_64& rng, double max_side) {
  std::uniform_real_distribution<double> u(0.01, max_side);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (;;) {
    const double a = u(rng);
    const double b = u(rng);
    const double c = std::abs(a - b) + t(rng) * (a + b - std::abs(a - b));
    if (a + b + c < 2 * pi - 1e-6 && c > 1e-6) return {a, b, c};
  }
}

}  // namespace

TEST(FiniteMetric, EquilateralIsValid) {
  EXPECT_TRUE(validate_metric(space({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})).ok());
}

TEST(FiniteMetric, BrokenTriangleReported) {
  auto rep = validate_metric(space({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}));
  ASSERT_EQ(rep.violations.size(), 1u);
  const auto& v = rep.violations[0];
  EXPECT_EQ(v.kind, ViolationKind::Triangle);
  EXPECT_EQ(v.i, 0);
  EXPECT_EQ(v.j, 1);
  EXPECT_EQ(v.k, 2);
  EXPECT_NEAR(v.amount, 1.0, 1e-15);
}

TEST(FiniteMetric, AsymmetryReported) {
  auto rep = validate_metric(space({{0, 1, 1}, {2, 0, 1}, {1, 1, 0}}));
  bool found = false;
  for (const auto& v : rep.violations) found |= v.kind == ViolationKind::Symmetry && v.i == 0 && v.j == 1;
  EXPECT_TRUE(found);
}

TEST(FiniteMetric, NonzeroDiagonalReported) {
  auto rep = validate_metric(space({{0.5, 1}, {1, 0}}));
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::Diagonal);
}

TEST(FiniteMetric, ShapeErrors) {
  EXPECT_THROW(FiniteMetricSpace(Eigen::MatrixXd(2, 3)), catkit::Error);
  EXPECT_THROW(FiniteMetricSpace({"a"}, Eigen::MatrixXd::Zero(2, 2)), catkit::Error);
}

TEST(FiniteMetric, ProductAndRestriction) {
  auto seg = space({{0, 3}, {3, 0}});
  auto seg2 = space({{0, 4}, {4, 0}});
  auto prod = product(seg, seg2);
  ASSERT_EQ(prod.size(), 4);
  EXPECT_DOUBLE_EQ(prod(0, 3), 5.0);
  EXPECT_TRUE(validate_metric(prod).ok());
  auto sub = prod.restrict_to({3, 0});
  EXPECT_EQ(sub.labels()[0], "(1,1)");
  EXPECT_DOUBLE_EQ(sub(0, 1), 5.0);
}

TEST(ModelTriangle, EquilateralFlatAngles) {
  auto cfg = ModelConfig::make(0);
  auto tri = model_triangle(1, 1, 1, cfg);
  ASSERT_TRUE(tri);
  EXPECT_NEAR(model_distance(Curvature::Flat, tri->p, tri->q), 1.0, 1e-14);
  EXPECT_NEAR(model_distance(Curvature::Flat, tri->q, tri->r), 1.0, 1e-14);
  EXPECT_NEAR(model_distance(Curvature::Flat, tri->r, tri->p), 1.0, 1e-14);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(*model_angle(1, 1, 1, cfg), pi / 3, 1e-14);
}

TEST(ModelTriangle, SphericalLuneUndefined) {
  EXPECT_FALSE(model_triangle(pi, pi / 2, pi / 2, ModelConfig::make(1)));
  EXPECT_FALSE(model_angle(pi / 2, pi / 2, pi, ModelConfig::make(1)));
}

TEST(ModelTriangle, PythagoreanRightAngle) {
  auto cfg = ModelConfig::make(0);
  EXPECT_NEAR(*model_angle(3, 4, 5, cfg), pi / 2, 1e-15);
  EXPECT_NEAR(*model_angle(3, 4, 5, cfg), oracle::cosine_law_angle(0, 3, 4, 5), 1e-15);
  auto tri = model_triangle(3, 4, 5, cfg);
  ASSERT_TRUE(tri);
  // Side 5 is rp, opposite q.
  const Eigen::Vector3d u = tri->p - tri->q;
  const Eigen::Vector3d v = tri->r - tri->q;
  EXPECT_NEAR(u.dot(v), 0.0, 1e-12);
}

TEST(ModelTriangle, OctantAngle) {
  EXPECT_NEAR(*model_angle(pi / 2, pi / 2, pi / 2, ModelConfig::make(1)), pi / 2, 1e-14);
}

TEST(ModelTriangle, ZeroAdjacentSideUndefined) {
  EXPECT_FALSE(model_angle(0, 1, 1, ModelConfig::make(0)));
}

TEST(ModelTriangle, RejectsBadInput) {
  EXPECT_THROW(model_triangle(1, 1, 3, ModelConfig::make(0)), catkit::Error);
  EXPECT_THROW(model_triangle(-1, 1, 1, ModelConfig::make(0)), catkit::Error);
  EXPECT_THROW(ModelConfig::make(2), catkit::Error);
  EXPECT_THROW(ModelConfig::make(0, 0.0), catkit::Error);
}

TEST(ModelTriangle, SidesRealizedAllCurvatures) {
  std::mt19937_64 rng(11);
  for (int kappa : {-1, 0, 1}) {
    auto cfg = ModelConfig::make(kappa);
    for (int i = 0; i < 500; ++i) {
      auto t = random_triple(rng, 2.0);
      auto tri = model_triangle(t.a, t.b, t.c, cfg);
      ASSERT_TRUE(tri);
      EXPECT_NEAR(model_distance(cfg.kappa, tri->p, tri->q), t.a, 1e-9);
      EXPECT_NEAR(model_distance(cfg.kappa, tri->q, tri->r), t.b, 1e-9);
      EXPECT_NEAR(model_distance(cfg.kappa, tri->r, tri->p), t.c, 1e-9);
    }
  }
}

TEST(ModelAngle, MatchesCosineLawOracle) {
  std::mt19937_64 rng(12);
  for (int kappa : {-1, 0, 1}) {
    auto cfg = ModelConfig::make(kappa);
    for (int i = 0; i < 2000; ++i) {
      auto t = random_triple(rng, 2.5);
      auto got = model_angle(t.a, t.b, t.c, cfg);
      ASSERT_TRUE(got);
      EXPECT_NEAR(*got, oracle::cosine_law_angle(kappa, t.a, t.b, t.c), 2e-7) << kappa;
    }
  }
}

TEST(ModelAngle, FlatCosineLawToMachinePrecision) {
  std::mt19937_64 rng(13);
  auto cfg = ModelConfig::make(0);
  for (int i = 0; i < 10000; ++i) {
    auto t = random_triple(rng, 3.0);
    const double ang = *model_angle(t.a, t.b, t.c, cfg);
    const double expect = (t.a * t.a + t.b * t.b - t.c * t.c) / (2 * t.a * t.b);
    EXPECT_NEAR(std::cos(ang), expect, 1e-12);
  }
}

TEST(ModelAngle, StrictlyIncreasingInOppositeSide) {
  for (int kappa : {-1, 0, 1}) {
    auto cfg = ModelConfig::make(kappa);
    for (double a : {0.3, 1.0, 1.7}) {
      for (double b : {0.4, 1.1}) {
        double prev = -1.0;
        const int steps = 200;
        for (int k = 1; k < steps; ++k) {
          const double c = std::abs(a - b) + (a + b - std::abs(a - b)) * k / steps;
          auto ang = model_angle(a, b, c, cfg);
          ASSERT_TRUE(ang);
          EXPECT_GT(*ang, prev);
          prev = *ang;
        }
      }
    }
  }
}

TEST(ModelAngle, CurvatureOrdering) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100000; ++i) {
    auto t = random_triple(rng, 2.0);
    const double h = *model_angle(t.a, t.b, t.c, ModelConfig::make(-1));
    const double e = *model_angle(t.a, t.b, t.c, ModelConfig::make(0));
    const double s = *model_angle(t.a, t.b, t.c, ModelConfig::make(1));
    ASSERT_LE(h, e + 1e-9);
    ASSERT_LE(e, s + 1e-9);
  }
}

TEST(PolarPoint, DistanceFromBaseAndAlongSegment) {
  for (auto k : {Curvature::Hyperbolic, Curvature::Flat, Curvature::Spherical}) {
    const ModelPoint o = polar_point(k, 0.0, 0.0);
    const ModelPoint a = polar_point(k, 1.2, 0.3);
    const ModelPoint b = polar_point(k, 0.7, 2.0);
    EXPECT_NEAR(model_distance(k, o, a), 1.2, 1e-12);
    const double ab = model_distance(k, a, b);
    const ModelPoint m = along_segment(k, a, b, 0.4 * ab);
    EXPECT_NEAR(model_distance(k, a, m), 0.4 * ab, 1e-10);
    EXPECT_NEAR(model_distance(k, m, b), 0.6 * ab, 1e-10);
  }
}

TEST(AngleGap, SmallTriangle) {
  auto g = angle_curvature_gap(0.1, 0.1, 0.1);
  EXPECT_LE(g.gap_sphere, 0.01);
  EXPECT_LE(g.gap_hyp, 0.01);
  EXPECT_TRUE(g.holds(1e-12));
}

TEST(AngleGap, DegenerateAllPi) {
  auto g = angle_curvature_gap(0.5, 0.7, 1.2);
  EXPECT_NEAR(g.angle_flat, pi, 1e-6);
  EXPECT_NEAR(g.angle_spherical, pi, 1e-6);
  EXPECT_NEAR(g.angle_hyperbolic, pi, 1e-6);
  EXPECT_NEAR(g.gap_sphere, 0.0, 1e-6);
  EXPECT_NEAR(g.gap_hyp, 0.0, 1e-6);
}

TEST(AngleGap, UnitTriangleAgainstOracle) {
  auto g = angle_curvature_gap(1, 1, 1);
  EXPECT_NEAR(g.gap_sphere, std::abs(oracle::cosine_law_angle(1, 1, 1, 1) - pi / 3), 1e-12);
  EXPECT_NEAR(g.gap_hyp, std::abs(oracle::cosine_law_angle(-1, 1, 1, 1) - pi / 3), 1e-12);
  EXPECT_LE(g.gap_sphere, 1.0);
  EXPECT_LE(g.gap_hyp, 1.0);
  EXPECT_DOUBLE_EQ(g.bound, 1.0);
}

TEST(AngleGap, NearlyAntipodalSideBreaksBound) {
  // One side close to pi: the spherical triangle is almost a lune and its
  // area exceeds |px||py|.
  const double px = 0.1135, py = 3.1305, xy = 3.0379;
  const double oracle_gap = oracle::cosine_law_angle(1, px, py, xy) - oracle::cosine_law_angle(0, px, py, xy);
  EXPECT_GT(oracle_gap, px * py + 1.0);
  auto g = angle_curvature_gap(px, py, xy);
  EXPECT_NEAR(g.gap_sphere, oracle_gap, 1e-9);
  EXPECT_FALSE(g.holds(1e-12));
}

TEST(AngleGap, HoldsWithShortSides) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100000; ++i) {
    auto t = random_triple(rng, 2.5);
    auto g = angle_curvature_gap(t.a, t.b, t.c);
    ASSERT_TRUE(g.holds(1e-12)) << t.a << " " << t.b << " " << t.c;
    ASSERT_LE(g.angle_hyperbolic, g.angle_flat + 1e-12);
    ASSERT_LE(g.angle_flat, g.angle_spherical + 1e-12);
  }
}

namespace {

// Angle at x of a planar triangle rebuilt from its sides by intersecting
// circles: x at the origin, y on the positive axis.
double planar_angle_at_first(double xp, double xy, double py) {
  const double px = (xp * xp + xy * xy - py * py) / (2 * xy);
  const double pyc = std::sqrt(std::max(0.0, xp * xp - px * px));
  return std::atan2(pyc, px);
}

}  // namespace

TEST(Alexandrov, PlanarConcatenationIsZero) {
  AlexandrovInput in{1.0, std::sqrt(5.0), std::sqrt(2.0), 1.0, 1.0, 2.0};
  auto r = alexandrov_lemma(in, ModelConfig::make(0));
  EXPECT_EQ(r.sign_a, Sign::Zero);
  EXPECT_EQ(r.sign_b, Sign::Zero);
  EXPECT_NEAR(r.angle_inequality_slack, 0.0, 1e-9);
  EXPECT_TRUE(r.consistent(1e-9));
}

TEST(Alexandrov, InflatedAndDeflated) {
  for (double f : {1.05, 0.95}) {
    AlexandrovInput in{1.0, std::sqrt(5.0) * f, std::sqrt(2.0), 1.0, 1.0, 2.0};
    auto r = alexandrov_lemma(in, ModelConfig::make(0));
    const Sign expect = f > 1 ? Sign::Positive : Sign::Negative;
    EXPECT_EQ(r.sign_a, expect);
    EXPECT_EQ(r.sign_b, expect);
    // Planar reconstruction of each model triangle.
    const double a1 = planar_angle_at_first(in.px, in.xy, in.py);
    const double a2 = planar_angle_at_first(in.px, in.xz, in.pz);
    EXPECT_NEAR(r.difference_a, a1 - a2, 1e-9);
    const double b1 = planar_angle_at_first(in.pz, in.xz, in.px);
    const double b2 = planar_angle_at_first(in.pz, in.zy, in.py);
    EXPECT_NEAR(r.difference_b, b1 + b2 - pi, 1e-9);
    EXPECT_TRUE(r.consistent(1e-9));
  }
}

TEST(Alexandrov, RejectsZNotBetween) {
  AlexandrovInput in{1.0, std::sqrt(5.0), std::sqrt(2.0), 1.0, 1.0, 2.5};
  EXPECT_THROW(alexandrov_lemma(in, ModelConfig::make(0)), catkit::Error);
}

TEST(Alexandrov, RandomConfigurationsAllCurvatures) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int kappa : {-1, 0, 1}) {
    auto cfg = ModelConfig::make(kappa);
    int done = 0;
    while (done < 10000) {
      AlexandrovInput in;
      in.xz = u(rng);
      in.zy = u(rng);
      in.pz = u(rng);
      in.px = std::abs(in.pz - in.xz) + t(rng) * (in.pz + in.xz - std::abs(in.pz - in.xz));
      in.py = std::abs(in.pz - in.zy) + t(rng) * (in.pz + in.zy - std::abs(in.pz - in.zy));
      in.xy = in.xz + in.zy;
      if (in.px + in.py < in.xy + 1e-9 || in.px < 1e-6 || in.py < 1e-6) continue;
      auto r = alexandrov_lemma(in, cfg);
      ASSERT_TRUE(r.signs_agree()) << kappa;
      ASSERT_TRUE(r.consistent(1e-9)) << kappa;
      // Clearly nonzero signs give a strict inequality.
      if (std::abs(r.difference_a) > 1e-3) ASSERT_GT(r.angle_inequality_slack, 0.0);
      ++done;
    }
  }
}

TEST(GromovHausdorff, IdenticalSpacesZero) {
  auto x = space({{0, 1, 2}, {1, 0, 1.5}, {2, 1.5, 0}});
  EXPECT_DOUBLE_EQ(gh_distance_bruteforce(x, x), 0.0);
}

TEST(GromovHausdorff, PointVersusPair) {
  auto x = space({{0}});
  auto y = space({{0, 2.5}, {2.5, 0}});
  EXPECT_DOUBLE_EQ(gh_distance_bruteforce(x, y), 2.5);
}

TEST(GromovHausdorff, TwoPairs) {
  const double delta = 0.125;
  auto x = space({{0, 1}, {1, 0}});
  auto y = space({{0, 1 + 2 * delta}, {1 + 2 * delta, 0}});
  EXPECT_NEAR(gh_distance_bruteforce(x, y), 2 * delta, 1e-15);
}

TEST(GromovHausdorff, RejectsLargeSpaces) {
  EXPECT_THROW(gh_distance_bruteforce(FiniteMetricSpace(Eigen::MatrixXd::Zero(9, 9)),
                                      FiniteMetricSpace(Eigen::MatrixXd::Zero(2, 2))),
               catkit::Error);
}

TEST(GromovHausdorff, SymmetricAndTriangleOnRandomPool) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> sz(1, 4);
  std::vector<FiniteMetricSpace> pool;
  for (int k = 0; k < 12; ++k) {
    const int n = sz(rng);
    Eigen::MatrixXd pts(n, 2);
    for (int i = 0; i < n; ++i) pts.row(i) << u(rng), u(rng);
    pool.push_back(from_points(pts));
  }
  const int m = static_cast<int>(pool.size());
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) g(i, j) = gh_distance_bruteforce(pool[i], pool[j]);
  }
  for (int i = 0; i < m; ++i) {
    EXPECT_DOUBLE_EQ(g(i, i), 0.0);
    for (int j = 0; j < m; ++j) {
      EXPECT_DOUBLE_EQ(g(i, j), g(j, i));
      for (int k = 0; k < m; ++k) EXPECT_LE(g(i, k), g(i, j) + g(j, k) + 1e-12);
    }
  }
}
