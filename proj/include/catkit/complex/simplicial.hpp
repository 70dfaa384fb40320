#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace catkit::complex {

/// Sorted, duplicate-free vertex indices.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex, stored by its maximal faces. Every
/// listed vertex is a 0-simplex; the empty simplex is implicit.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// `faces` may contain any simplices (not necessarily maximal, in any
  /// order); they are sorted and reduced to the maximal ones. Vertex
  /// indices refer to `labels`. Throws on out-of-range or repeated vertices.
  SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> faces);

  /// Vertices labeled "0".."n-1".
  static SimplicialComplex with_index_labels(int vertex_count, std::vector<Simplex> faces);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Simplex>& maximal_faces() const { return maximal_; }
  int dimension() const;

  bool contains(const Simplex& s) const;
  bool has_edge(int a, int b) const;
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

  /// All nonempty faces, sorted by size then lexicographically (closure on demand).
  std::vector<Simplex> faces() const;

  /// Complexes with identical labels and maximal faces.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.maximal_ == b.maximal_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> maximal_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> cofaces_;  // vertex -> indices into maximal_
};

/// Result of a flag test. `witness` is a minimal clique of the 1-skeleton that
/// does not span a simplex (every proper subset does).
struct FlagResult {
  bool flag = true;
  std::optional<Simplex> witness;
};

FlagResult is_flag(const SimplicialComplex& s);

/// Every 3-clique spans a 2-simplex.
bool no_triangle_condition(const SimplicialComplex& s);

/// First 3-clique that spans no 2-simplex, if any.
std::optional<Simplex> empty_triangle(const SimplicialComplex& s);

struct Link {
  Simplex base;
  SimplicialComplex complex;
  std::vector<int> to_parent;  // link vertex index -> vertex index in the parent complex
};

/// Faces t with t disjoint from sigma and t u sigma in S. Throws if sigma is
/// not a simplex of S. The link of a maximal face is the empty complex.
Link link(const SimplicialComplex& s, const Simplex& sigma);

/// Vertices are the nonempty simplices of S (labeled "{a,b,...}"); simplices
/// are chains under inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& s);

/// Clique (flag) complex of a graph given by an edge list.
SimplicialComplex clique_complex(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& edges);

/// Generic backtracking isomorphism search; returns the vertex map a -> b.
std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& a,
                                                 const SimplicialComplex& b);

/// Downward closure and vertex-set sanity (used by tests as a post-hoc check).
bool is_valid_complex(const SimplicialComplex& s);

// --- Curvature verdict for the all-right spherical metric -----------------

/// AllRight: every edge pi/2 and all angles right. SidesAtLeastHalfPi: only
/// the sufficient direction (flag => CAT(1)) is available.
enum class SphericalMetric { AllRight, SidesAtLeastHalfPi };

enum class Cat1Status { Cat1, NotCat1, Inconclusive };

const char* to_string(Cat1Status s);

/// Three pairwise-adjacent vertices of link(S, base) spanning no 2-simplex
/// there (base is empty when the triangle sits in S itself). Under the
/// all-right metric its edge loop is a closed local geodesic of length 3*pi/2.
struct GeodesicLoopWitness {
  Simplex base;
  std::array<int, 3> vertices{};  // indices in S
  double loop_length = 0.0;
};

struct Cat1Verdict {
  Cat1Status status = Cat1Status::Cat1;
  std::optional<GeodesicLoopWitness> witness;
};

/// CAT(1) iff flag for the all-right metric; a non-flag complex yields a
/// short geodesic loop in S or in the link of some simplex.
Cat1Verdict all_right_cat1_verdict(const SimplicialComplex& s,
                                   SphericalMetric metric = SphericalMetric::AllRight);

}  // namespace catkit::complex
