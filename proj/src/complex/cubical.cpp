#include "catkit/complex/cubical.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "catkit/error.hpp"

namespace catkit::complex {

int CubeFace::dimension() const { return std::popcount(free_mask); }

CubicalComplex::CubicalComplex(std::vector<std::string> coordinate_labels, std::vector<CubeFace> faces)
    : labels_(std::move(coordinate_labels)) {
  const int n = ambient_dimension();
  if (n > kMaxDimension) throw Error("cubical complex dimension too large: " + std::to_string(n));
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  std::set<CubeFace> closed;
  std::vector<CubeFace> stack;
  for (auto f : faces) {
    if ((f.free_mask & ~all) || (f.fixed_bits & ~all)) throw Error("cube face outside ambient dimension");
    f.fixed_bits &= ~f.free_mask;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    CubeFace f = stack.back();
    stack.pop_back();
    if (!closed.insert(f).second) continue;
    if (closed.size() > kMaxFaces) throw Error("cubical complex too large");
    for (std::uint64_t m = f.free_mask; m; m &= m - 1) {
      const std::uint64_t bit = m & (~m + 1);
      stack.push_back({f.free_mask & ~bit, f.fixed_bits});
      stack.push_back({f.free_mask & ~bit, f.fixed_bits | bit});
    }
  }
  faces_.assign(closed.begin(), closed.end());
}

bool CubicalComplex::contains(const CubeFace& f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::vector<std::size_t> CubicalComplex::f_vector() const {
  std::vector<std::size_t> out(ambient_dimension() + 1, 0);
  for (const auto& f : faces_) ++out[f.dimension()];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<CubeFace> CubicalComplex::maximal_faces() const {
  std::vector<CubeFace> out;
  const int n = ambient_dimension();
  for (const auto& f : faces_) {
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) {
      const std::uint64_t bit = 1ULL << i;
      if (f.free_mask & bit) continue;
      maximal = !contains({f.free_mask | bit, f.fixed_bits & ~bit});
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

CubicalComplex cubical_analog(const SimplicialComplex& s) {
  const int n = s.vertex_count();
  if (n > CubicalComplex::kMaxDimension) throw Error("too many vertices for a cubical analog");
  // Marking the top cubes for each maximal face suffices; closure adds the rest.
  std::vector<CubeFace> top;
  for (const auto& m : s.maximal_faces()) {
    std::uint64_t free = 0;
    for (int v : m) free |= 1ULL << v;
    const std::uint64_t rest = ((n == 64 ? ~0ULL : (1ULL << n) - 1)) & ~free;
    // Enumerate all fixed assignments on the complementary coordinates.
    std::uint64_t sub = 0;
    do {
      top.push_back({free, sub});
      sub = (sub - rest) & rest;
    } while (sub != 0);
  }
  if (n > 0 && s.maximal_faces().empty()) top.push_back({0, 0});
  return CubicalComplex(s.labels(), std::move(top));
}

SimplicialComplex cubical_vertex_link(const CubicalComplex& q, std::uint64_t v) {
  if (!q.has_vertex(v)) throw Error("vertex " + to_string(CubeFace{0, v}, q.ambient_dimension()) + " is not in the complex");
  const int n = q.ambient_dimension();
  std::vector<int> local(n, -1);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = 1ULL << i;
    if (q.contains({bit, v & ~bit})) {
      local[i] = static_cast<int>(labels.size());
      labels.push_back(q.coordinate_labels()[i]);
    }
  }
  std::vector<Simplex> simplices;
  for (const auto& f : q.faces()) {
    if (f.free_mask == 0 || !f.contains_vertex(v)) continue;
    Simplex s;
    for (int i = 0; i < n; ++i) {
      if (f.free_mask & (1ULL << i)) s.push_back(local[i]);
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(labels), std::move(simplices));
}

std::string to_string(const CubeFace& f, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = 1ULL << i;
    out += (f.free_mask & bit) ? '*' : ((f.fixed_bits & bit) ? '1' : '0');
  }
  return out;
}

}  // namespace catkit::complex
