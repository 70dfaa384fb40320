#include "catkit/complex/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "catkit/error.hpp"

namespace catkit::complex {

namespace {

bool is_subset(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string simplex_label(const std::vector<std::string>& labels, const Simplex& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += labels[s[i]];
  }
  return out + "}";
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> faces)
    : labels_(std::move(labels)) {
  const int n = vertex_count();
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw Error("simplex repeats a vertex");
    for (int v : f) {
      if (v < 0 || v >= n) throw Error("simplex vertex out of range: " + std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v) faces.push_back({v});
  std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  cofaces_.assign(n, {});
  for (auto& f : faces) {
    if (f.empty()) continue;
    bool covered = false;
    for (int m : cofaces_[f.front()]) {
      if (is_subset(f, maximal_[m])) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    const int id = static_cast<int>(maximal_.size());
    for (int v : f) cofaces_[v].push_back(id);
    maximal_.push_back(std::move(f));
  }
  // Canonical order: by size, then lexicographic. Rebuild the index to match.
  std::sort(maximal_.begin(), maximal_.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cofaces_.assign(n, {});
  std::vector<std::set<int>> adj(n);
  for (int id = 0; id < static_cast<int>(maximal_.size()); ++id) {
    const auto& m = maximal_[id];
    for (int v : m) {
      cofaces_[v].push_back(id);
      for (int u : m) {
        if (u != v) adj[v].insert(u);
      }
    }
  }
  adjacency_.resize(n);
  for (int v = 0; v < n; ++v) adjacency_[v].assign(adj[v].begin(), adj[v].end());
}

SimplicialComplex SimplicialComplex::with_index_labels(int vertex_count, std::vector<Simplex> faces) {
  std::vector<std::string> labels;
  for (int v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  return SimplicialComplex(std::move(labels), std::move(faces));
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& m : maximal_) dim = std::max(dim, static_cast<int>(m.size()) - 1);
  return dim;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  if (s.front() < 0 || s.back() >= vertex_count()) return false;
  for (int m : cofaces_[s.front()]) {
    if (is_subset(s, maximal_[m])) return true;
  }
  return false;
}

bool SimplicialComplex::has_edge(int a, int b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Simplex> SimplicialComplex::faces() const {
  std::set<Simplex> all;
  for (const auto& m : maximal_) {
    const size_t k = m.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      Simplex s;
      for (size_t i = 0; i < k; ++i) {
        if (mask & (1UL << i)) s.push_back(m[i]);
      }
      all.insert(std::move(s));
    }
  }
  std::vector<Simplex> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return out;
}

FlagResult is_flag(const SimplicialComplex& s) {
  // A minimal non-spanning clique K is a non-face whose facets are all faces.
  // Enumerate K as (K minus its largest vertex) + largest vertex.
  for (const auto& sigma : s.faces()) {
    if (sigma.size() < 2) continue;
    for (int v : s.neighbors(sigma.front())) {
      if (v <= sigma.back()) continue;
      bool clique = true;
      for (int u : sigma) {
        if (!s.has_edge(u, v)) {
          clique = false;
          break;
        }
      }
      if (!clique) continue;
      Simplex k = sigma;
      k.push_back(v);
      if (s.contains(k)) continue;
      bool minimal = true;
      for (size_t drop = 0; drop < k.size() && minimal; ++drop) {
        Simplex facet = k;
        facet.erase(facet.begin() + static_cast<long>(drop));
        minimal = s.contains(facet);
      }
      if (minimal) return {false, k};
    }
  }
  return {true, std::nullopt};
}

std::optional<Simplex> empty_triangle(const SimplicialComplex& s) {
  for (int a = 0; a < s.vertex_count(); ++a) {
    for (int b : s.neighbors(a)) {
      if (b <= a) continue;
      for (int c : s.neighbors(b)) {
        if (c <= b || !s.has_edge(a, c)) continue;
        if (!s.contains({a, b, c})) return Simplex{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool no_triangle_condition(const SimplicialComplex& s) { return !empty_triangle(s).has_value(); }

Link link(const SimplicialComplex& s, const Simplex& sigma_in) {
  Simplex sigma = sigma_in;
  std::sort(sigma.begin(), sigma.end());
  if (!s.contains(sigma)) throw Error("link base " + simplex_label(s.labels(), sigma) + " is not a simplex");
  std::vector<Simplex> rest;
  std::set<int> verts;
  for (const auto& m : s.maximal_faces()) {
    if (!is_subset(sigma, m)) continue;
    Simplex r;
    std::set_difference(m.begin(), m.end(), sigma.begin(), sigma.end(), std::back_inserter(r));
    if (r.empty()) continue;
    verts.insert(r.begin(), r.end());
    rest.push_back(std::move(r));
  }
  Link out;
  out.base = sigma;
  out.to_parent.assign(verts.begin(), verts.end());
  std::map<int, int> local;
  std::vector<std::string> labels;
  for (int v : out.to_parent) {
    local[v] = static_cast<int>(labels.size());
    labels.push_back(s.labels()[v]);
  }
  for (auto& r : rest) {
    for (int& v : r) v = local[v];
  }
  out.complex = SimplicialComplex(std::move(labels), std::move(rest));
  return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& s) {
  const auto faces = s.faces();
  std::map<Simplex, int> index;
  std::vector<std::string> labels;
  for (const auto& f : faces) {
    index[f] = static_cast<int>(labels.size());
    labels.push_back(simplex_label(s.labels(), f));
  }
  std::vector<Simplex> chains;
  for (const auto& m : s.maximal_faces()) {
    Simplex order = m;
    do {
      Simplex chain;
      Simplex prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(index.at(prefix));
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex(std::move(labels), std::move(chains));
}

SimplicialComplex clique_complex(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw Error("invalid edge");
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<Simplex> cliques;
  // Bron-Kerbosch with pivoting.
  std::function<void(Simplex, std::set<int>, std::set<int>)> expand =
      [&](Simplex r, std::set<int> p, std::set<int> x) {
        if (p.empty() && x.empty()) {
          cliques.push_back(r);
          return;
        }
        int pivot = p.empty() ? *x.begin() : *p.begin();
        size_t best = 0;
        for (const auto* set : {&p, &x}) {
          for (int u : *set) {
            size_t c = 0;
            for (int w : p) c += adj[u].count(w);
            if (c >= best) {
              best = c;
              pivot = u;
            }
          }
        }
        std::vector<int> candidates;
        for (int v : p) {
          if (!adj[pivot].count(v)) candidates.push_back(v);
        }
        for (int v : candidates) {
          Simplex r2 = r;
          r2.push_back(v);
          std::set<int> p2, x2;
          for (int w : p) {
            if (adj[v].count(w)) p2.insert(w);
          }
          for (int w : x) {
            if (adj[v].count(w)) x2.insert(w);
          }
          expand(std::move(r2), std::move(p2), std::move(x2));
          p.erase(v);
          x.insert(v);
        }
      };
  std::set<int> all;
  for (int v = 0; v < n; ++v) all.insert(v);
  if (n > 0) expand({}, all, {});
  return SimplicialComplex(std::move(labels), std::move(cliques));
}

std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& a,
                                                 const SimplicialComplex& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.maximal_faces().size() != b.maximal_faces().size()) return std::nullopt;
  auto signature = [](const SimplicialComplex& c, int v) {
    std::vector<size_t> sizes;
    for (const auto& m : c.maximal_faces()) {
      if (std::binary_search(m.begin(), m.end(), v)) sizes.push_back(m.size());
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.push_back(c.neighbors(v).size());
    return sizes;
  };
  std::vector<std::vector<size_t>> sig_a(n), sig_b(n);
  for (int v = 0; v < n; ++v) {
    sig_a[v] = signature(a, v);
    sig_b[v] = signature(b, v);
  }
  std::set<Simplex> target(b.maximal_faces().begin(), b.maximal_faces().end());
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);

  std::function<bool(int)> assign = [&](int v) -> bool {
    if (v == n) {
      for (const auto& m : a.maximal_faces()) {
        Simplex img;
        for (int u : m) img.push_back(map[u]);
        std::sort(img.begin(), img.end());
        if (!target.count(img)) return false;
      }
      return true;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || sig_a[v] != sig_b[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (assign(v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  if (assign(0)) return map;
  return std::nullopt;
}

bool is_valid_complex(const SimplicialComplex& s) {
  const auto& maximal = s.maximal_faces();
  for (size_t i = 0; i < maximal.size(); ++i) {
    const auto& m = maximal[i];
    if (m.empty() || !std::is_sorted(m.begin(), m.end())) return false;
    if (std::adjacent_find(m.begin(), m.end()) != m.end()) return false;
    for (size_t j = 0; j < maximal.size(); ++j) {
      if (i != j && is_subset(m, maximal[j])) return false;
    }
  }
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (!s.contains({v})) return false;
  }
  // Downward closure: every facet of every listed face is again a face.
  for (const auto& f : s.faces()) {
    for (size_t drop = 0; drop < f.size() && f.size() > 1; ++drop) {
      Simplex facet = f;
      facet.erase(facet.begin() + static_cast<long>(drop));
      if (!s.contains(facet)) return false;
    }
  }
  return true;
}

const char* to_string(Cat1Status s) {
  switch (s) {
    case Cat1Status::Cat1: return "CAT1";
    case Cat1Status::NotCat1: return "NotCAT1";
    case Cat1Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Cat1Verdict all_right_cat1_verdict(const SimplicialComplex& s, SphericalMetric metric) {
  Cat1Verdict verdict;
  if (is_flag(s).flag) return verdict;
  verdict.status = metric == SphericalMetric::AllRight ? Cat1Status::NotCat1 : Cat1Status::Inconclusive;

  GeodesicLoopWitness witness;
  witness.loop_length = 3 * std::numbers::pi / 2;
  if (auto tri = empty_triangle(s)) {
    witness.vertices = {(*tri)[0], (*tri)[1], (*tri)[2]};
    verdict.witness = witness;
    return verdict;
  }
  // A non-flag complex with no empty triangle has one in some link.
  for (const auto& sigma : s.faces()) {
    const Link lk = link(s, sigma);
    if (auto tri = empty_triangle(lk.complex)) {
      witness.base = sigma;
      witness.vertices = {lk.to_parent[(*tri)[0]], lk.to_parent[(*tri)[1]], lk.to_parent[(*tri)[2]]};
      verdict.witness = witness;
      return verdict;
    }
  }
  throw Error("internal: non-flag complex without an empty triangle in any link");
}

}  // namespace catkit::complex
