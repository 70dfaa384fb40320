#include <gtest/gtest.h>

#include "catkit/complex/cubical.hpp"
#include "catkit/error.hpp"
#include "oracles.hpp"

using namespace catkit::complex;

namespace {

SimplicialComplex from_mask(oracle::FaceMask m, int n) {
  return SimplicialComplex::with_index_labels(n, oracle::maximal_faces(m, n));
}

using FVec = std::vector<std::size_t>;

}  // namespace

TEST(Cubical, EdgeGivesFullSquare) {
  auto q = cubical_analog(SimplicialComplex::with_index_labels(2, {{0, 1}}));
  EXPECT_EQ(q.f_vector(), FVec({4, 4, 1}));
  EXPECT_EQ(q.maximal_faces().size(), 1u);
  auto l = cubical_vertex_link(q, 0b10);
  EXPECT_EQ(l.vertex_count(), 2);
  EXPECT_EQ(l.maximal_faces(), std::vector<Simplex>({{0, 1}}));
}

TEST(Cubical, TwoPointsGiveSquareBoundary) {
  auto q = cubical_analog(SimplicialComplex::with_index_labels(2, {}));
  EXPECT_EQ(q.f_vector(), FVec({4, 4}));
  for (std::uint64_t v = 0; v < 4; ++v) {
    auto l = cubical_vertex_link(q, v);
    EXPECT_EQ(l.vertex_count(), 2);
    EXPECT_EQ(l.dimension(), 0);
  }
}

TEST(Cubical, HollowTriangle) {
  auto s = SimplicialComplex::with_index_labels(3, {{0, 1}, {1, 2}, {0, 2}});
  auto q = cubical_analog(s);
  EXPECT_EQ(q.f_vector(), FVec({8, 12, 6}));
  EXPECT_FALSE(q.contains({0b111, 0}));
  for (std::uint64_t v = 0; v < 8; ++v) {
    auto l = cubical_vertex_link(q, v);
    EXPECT_EQ(l, s);
    EXPECT_TRUE(find_isomorphism(l, s).has_value());
  }
}

TEST(Cubical, FaceStringsAndClosure) {
  EXPECT_EQ(to_string(CubeFace{0b100, 0b001}, 3), "10*");
  CubicalComplex q({"a", "b"}, {CubeFace{0b01, 0b10}});
  EXPECT_EQ(q.faces().size(), 3u);
  EXPECT_TRUE(q.has_vertex(0b10));
  EXPECT_TRUE(q.has_vertex(0b11));
  EXPECT_FALSE(q.has_vertex(0b00));
  EXPECT_THROW(cubical_vertex_link(q, 0b00), catkit::Error);
  EXPECT_THROW(CubicalComplex({"a"}, {CubeFace{0b10, 0}}), catkit::Error);
  EXPECT_EQ(CubeFace({0b101, 0}).dimension(), 2);
}

TEST(Cubical, FacesAreDownwardClosed) {
  auto q = cubical_analog(SimplicialComplex::with_index_labels(4, {{0, 1, 2}, {2, 3}}));
  for (const auto& f : q.faces()) {
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t bit = 1ULL << i;
      if (!(f.free_mask & bit)) continue;
      EXPECT_TRUE(q.contains({f.free_mask & ~bit, f.fixed_bits}));
      EXPECT_TRUE(q.contains({f.free_mask & ~bit, f.fixed_bits | bit}));
    }
  }
}

TEST(Cubical, VertexLinksReproduceSExhaustiveUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    for (auto m : oracle::complexes_up_to_iso(n)) {
      auto s = from_mask(m, n);
      auto q = cubical_analog(s);
      for (std::uint64_t v = 0; v < (1ULL << n); ++v) ASSERT_EQ(cubical_vertex_link(q, v), s);
    }
  }
}
