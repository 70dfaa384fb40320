#include "catkit/metric/gh_distance.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "catkit/error.hpp"

namespace catkit::metric {

namespace {

struct MapSearch {
  const FiniteMetricSpace& from;
  const FiniteMetricSpace& to;
  std::vector<int> image;
  double best = std::numeric_limits<double>::infinity();

  void extend(int i, double current) {
    if (current >= best) return;
    if (i == from.size()) {
      best = current;
      return;
    }
    for (int target = 0; target < to.size(); ++target) {
      double worst = current;
      for (int k = 0; k < i && worst < best; ++k) {
        worst = std::max(worst, from(i, k) - to(target, image[k]));
      }
      if (worst >= best) continue;
      image[i] = target;
      extend(i + 1, worst);
    }
  }
};

void check_size(const FiniteMetricSpace& s) {
  if (s.size() > kMaxGhPoints) {
    throw Error("brute-force GH distance supports at most " + std::to_string(kMaxGhPoints) +
                " points (got " + std::to_string(s.size()) + ")");
  }
}

}  // namespace

double one_sided_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  check_size(x);
  check_size(y);
  if (x.size() == 0) return 0.0;
  if (y.size() == 0) throw Error("no maps from a nonempty space into the empty space");
  MapSearch search{x, y, std::vector<int>(x.size(), 0)};
  search.extend(0, 0.0);
  return search.best;
}

double gh_distance_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return std::max(one_sided_distortion(x, y), one_sided_distortion(y, x));
}

}  // namespace catkit::metric
