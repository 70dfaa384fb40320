#include "catkit/complex/bhv.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "catkit/error.hpp"

namespace catkit::complex {

bool clades_compatible(std::uint32_t a, std::uint32_t b) {
  return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

std::vector<std::vector<std::uint32_t>> rooted_binary_trees(int n) {
  if (n < 1 || n > 12) throw Error("leaf count out of range");
  std::vector<std::vector<std::uint32_t>> trees{{1u << 1}};
  for (int leaf = 2; leaf <= n; ++leaf) {
    const std::uint32_t bit = 1u << leaf;
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& tree : trees) {
      // Attach the new leaf on the edge above each node (root edge included).
      for (std::uint32_t c : tree) {
        std::vector<std::uint32_t> t;
        for (std::uint32_t d : tree) {
          t.push_back((d != c && (d & c) == c) ? (d | bit) : d);
        }
        t.push_back(c | bit);
        t.push_back(bit);
        std::sort(t.begin(), t.end());
        next.push_back(std::move(t));
      }
    }
    trees = std::move(next);
  }
  return trees;
}

BhvComplex bhv_link_complex(int n) {
  if (n < 3 || n > 7) throw Error("bhv_link_complex needs 3 <= n <= 7, got " + std::to_string(n));
  BhvComplex out;
  out.leaves = n;
  const auto trees = rooted_binary_trees(n);
  out.tree_count = static_cast<long long>(trees.size());

  auto internal = [n](std::uint32_t c) {
    const int size = std::popcount(c);
    return size >= 2 && size <= n - 1;
  };
  std::map<std::uint32_t, int> index;
  for (const auto& t : trees) {
    for (std::uint32_t c : t) {
      if (internal(c)) index.emplace(c, 0);
    }
  }
  std::vector<std::string> labels;
  for (auto& [clade, id] : index) {
    id = static_cast<int>(out.clades.size());
    out.clades.push_back(clade);
    std::string label = "{";
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (clade & (1u << leaf)) label += (label.size() > 1 ? "," : "") + std::to_string(leaf);
    }
    labels.push_back(label + "}");
  }
  std::vector<Simplex> faces;
  for (const auto& t : trees) {
    Simplex s;
    for (std::uint32_t c : t) {
      if (internal(c)) s.push_back(index.at(c));
    }
    faces.push_back(std::move(s));
  }
  out.complex = SimplicialComplex(std::move(labels), std::move(faces));
  out.flag = is_flag(out.complex);
  return out;
}

}  // namespace catkit::complex
