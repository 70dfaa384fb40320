#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catkit/complex/simplicial.hpp"

namespace catkit::complex {

/// A face of the unit cube [0,1]^N: coordinates in `free_mask` range over
/// [0,1], the others are pinned to the matching bit of `fixed_bits`.
struct CubeFace {
  std::uint64_t free_mask = 0;
  std::uint64_t fixed_bits = 0;  // zero on free coordinates

  int dimension() const;
  bool contains_vertex(std::uint64_t v) const { return (v & ~free_mask) == fixed_bits; }
  friend auto operator<=>(const CubeFace&, const CubeFace&) = default;
};

/// Downward-closed family of faces of the unit N-cube.
class CubicalComplex {
 public:
  static constexpr int kMaxDimension = 24;
  static constexpr std::size_t kMaxFaces = 1u << 24;

  CubicalComplex() = default;
  /// Faces are closed downward. `coordinate_labels` has size N.
  CubicalComplex(std::vector<std::string> coordinate_labels, std::vector<CubeFace> faces);

  int ambient_dimension() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& coordinate_labels() const { return labels_; }
  /// All faces, sorted.
  const std::vector<CubeFace>& faces() const { return faces_; }
  bool contains(const CubeFace& f) const;
  bool has_vertex(std::uint64_t v) const { return contains({0, v}); }
  /// Number of faces of each dimension, up to the top nonempty one.
  std::vector<std::size_t> f_vector() const;
  /// Faces not contained in a larger face.
  std::vector<CubeFace> maximal_faces() const;

 private:
  std::vector<std::string> labels_;
  std::vector<CubeFace> faces_;
};

/// Cubical analog of S: for every simplex sigma of S (including the empty
/// one) all faces of the N-cube whose free coordinates are exactly sigma.
CubicalComplex cubical_analog(const SimplicialComplex& s);

/// Simplicial link of Q at the vertex v (bit pattern). Vertices are the
/// coordinates of edges at v, carrying the coordinate labels; a set of
/// coordinates is a simplex iff the cube it spans at v lies in Q.
/// Throws if v is not a vertex of Q.
SimplicialComplex cubical_vertex_link(const CubicalComplex& q, std::uint64_t v);

/// "0110"-style string, coordinate 0 first; free coordinates print as '*'.
std::string to_string(const CubeFace& f, int n);

}  // namespace catkit::complex
