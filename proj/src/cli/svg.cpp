#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "catkit/error.hpp"

namespace catkit::cli {

namespace {

constexpr double kSize = 600.0;

struct Frame {
  double x0, y0, x1, y1;
  double sx(double x) const { return (x - x0) / (x1 - x0) * kSize; }
  double sy(double y) const { return kSize - (y - y0) / (y1 - y0) * kSize; }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

using P2 = Eigen::Vector2d;

// Sutherland-Hodgman clip of a convex polygon against <n, p> <= b.
std::vector<P2> clip(const std::vector<P2>& poly, const P2& n, double b) {
  std::vector<P2> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& a = poly[i];
    const P2& c = poly[(i + 1) % poly.size()];
    const double fa = n.dot(a) - b;
    const double fc = n.dot(c) - b;
    if (fa <= 0) out.push_back(a);
    if ((fa < 0 && fc > 0) || (fa > 0 && fc < 0)) out.push_back(a + (fa / (fa - fc)) * (c - a));
  }
  return out;
}

}  // namespace

std::string billiard_svg(const billiards::BilliardTable& table, const std::vector<billiards::Trajectory>& runs) {
  if (table.dim != 2) throw Error("svg plots need a planar table");
  std::vector<std::vector<P2>> paths;
  double lo_x = -1, lo_y = -1, hi_x = 1, hi_y = 1;
  auto grow = [&](const P2& p) {
    lo_x = std::min(lo_x, p.x());
    hi_x = std::max(hi_x, p.x());
    lo_y = std::min(lo_y, p.y());
    hi_y = std::max(hi_y, p.y());
  };
  for (const auto& w : table.walls) {
    if (const auto* b = std::get_if<geometry::Ball>(&w.shape())) {
      grow(P2(b->center(0) - b->radius, b->center(1) - b->radius));
      grow(P2(b->center(0) + b->radius, b->center(1) + b->radius));
    }
  }
  for (const auto& r : runs) {
    std::vector<P2> path{P2(r.start(0), r.start(1))};
    for (const auto& e : r.events) path.emplace_back(e.point(0), e.point(1));
    path.emplace_back(r.end_point(0), r.end_point(1));
    for (const auto& p : path) grow(p);
    paths.push_back(std::move(path));
  }
  const double pad = 0.1 * std::max(hi_x - lo_x, hi_y - lo_y);
  const double span = std::max(hi_x - lo_x, hi_y - lo_y) + 2 * pad;
  const double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
  const Frame f{cx - span / 2, cy - span / 2, cx + span / 2, cy + span / 2};
  // Escaping runs get a final leg of a quarter of the picture.
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].reason == billiards::Termination::Escape) {
      paths[i].back() += 0.25 * span * P2(runs[i].end_direction(0), runs[i].end_direction(1));
    }
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const std::vector<P2> box{P2(f.x0, f.y0), P2(f.x1, f.y0), P2(f.x1, f.y1), P2(f.x0, f.y1)};
  for (const auto& w : table.walls) {
    if (const auto* h = std::get_if<geometry::HalfSpace>(&w.shape())) {
      const auto poly = clip(box, P2(h->normal(0), h->normal(1)), h->offset);
      if (poly.empty()) continue;
      os << "<polygon fill=\"#bbbbbb\" fill-opacity=\"0.5\" stroke=\"#555555\" points=\"";
      for (const auto& p : poly) os << fmt(f.sx(p.x())) << ',' << fmt(f.sy(p.y())) << ' ';
      os << "\"/>\n";
    } else if (const auto* b = std::get_if<geometry::Ball>(&w.shape())) {
      os << "<circle fill=\"#bbbbbb\" fill-opacity=\"0.5\" stroke=\"#555555\" cx=\"" << fmt(f.sx(b->center(0)))
         << "\" cy=\"" << fmt(f.sy(b->center(1))) << "\" r=\"" << fmt(b->radius / span * kSize) << "\"/>\n";
    }
  }
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    os << "<polyline fill=\"none\" stroke-width=\"1.2\" stroke=\"" << colors[i % 6] << "\" points=\"";
    for (const auto& p : paths[i]) os << fmt(f.sx(p.x())) << ',' << fmt(f.sy(p.y())) << ' ';
    os << "\"/>\n";
    os << "<circle r=\"3\" fill=\"" << colors[i % 6] << "\" cx=\"" << fmt(f.sx(paths[i][0].x())) << "\" cy=\""
       << fmt(f.sy(paths[i][0].y())) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string mds_scatter_svg(const std::vector<std::array<double, 6>>& rows, const std::vector<std::string>& classes) {
  const long n = static_cast<long>(rows.size());
  Eigen::MatrixXd x(n, 6);
  for (long i = 0; i < n; ++i) {
    const double scale = *std::max_element(rows[i].begin(), rows[i].end());
    for (int k = 0; k < 6; ++k) x(i, k) = scale > 0 ? rows[i][k] / scale : 0.0;
  }
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(n, 2);
  if (n > 1) {
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.transpose() * x);
    // Eigenvalues ascend; the last two give the principal plane.
    coords.col(0) = x * es.eigenvectors().col(5);
    coords.col(1) = x * es.eigenvectors().col(4);
  }
  double lo = -1e-9, hi = 1e-9;
  for (long i = 0; i < n; ++i) {
    lo = std::min({lo, coords(i, 0), coords(i, 1)});
    hi = std::max({hi, coords(i, 0), coords(i, 1)});
  }
  const double pad = 0.05 * (hi - lo);
  const Frame f{lo - pad, lo - pad, hi + pad, hi + pad};
  static const std::map<std::string, std::string> color{
      {"E4", "#1f77b4"}, {"P4", "#ff7f0e"}, {"N4", "#2ca02c"}, {"Boundary", "#7f7f7f"}};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize + 30
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize + 30 << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (long i = 0; i < n; ++i) {
    auto it = color.find(classes[i]);
    os << "<circle r=\"2\" fill=\"" << (it == color.end() ? "black" : it->second) << "\" cx=\""
       << fmt(f.sx(coords(i, 0))) << "\" cy=\"" << fmt(f.sy(coords(i, 1))) << "\"/>\n";
  }
  double lx = 10;
  for (const auto& [name, c] : color) {
    os << "<circle r=\"5\" fill=\"" << c << "\" cx=\"" << fmt(lx) << "\" cy=\"" << kSize + 15 << "\"/>";
    os << "<text font-size=\"12\" x=\"" << fmt(lx + 8) << "\" y=\"" << kSize + 19 << "\">" << name << "</text>\n";
    lx += 90;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace catkit::cli
