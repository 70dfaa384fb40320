#pragma once

#include <cstdint>
#include <vector>

#include "catkit/complex/simplicial.hpp"

namespace catkit::complex {

/// Link of the cone point in the space of rooted metric trees on leaves
/// 1..n (root labeled 0). Vertices are clades: leaf sets hanging below an
/// internal edge, 2 <= |clade| <= n-1. Maximal faces are the clade sets of
/// rooted binary trees.
struct BhvComplex {
  int leaves = 0;
  std::vector<std::uint32_t> clades;  // bit i = leaf i, indexed like the complex vertices
  long long tree_count = 0;
  SimplicialComplex complex;
  FlagResult flag;
};

/// 3 <= n <= 7.
BhvComplex bhv_link_complex(int n);

/// All rooted binary trees on leaves 1..n as clade sets (each including the
/// singleton leaves and the full set).
std::vector<std::vector<std::uint32_t>> rooted_binary_trees(int n);

/// Two clades are compatible when nested or disjoint.
bool clades_compatible(std::uint32_t a, std::uint32_t b);

}  // namespace catkit::complex
