// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "catkit/billiards/billiard.hpp"
#include "catkit/billiards/hard_balls.hpp"
#include "catkit/billiards/samplers.hpp"
#include "catkit/cat/four_point.hpp"
#include "catkit/cat/quadruple.hpp"
#include "catkit/cat/samplers.hpp"
#include "catkit/cli/app.hpp"
#include "catkit/complex/bhv.hpp"
#include "catkit/complex/cubical.hpp"
#include "catkit/complex/simplicial.hpp"
#include "catkit/error.hpp"
#include "catkit/metric/finite_metric.hpp"
#include "catkit/metric/model_plane.hpp"
#include "catkit/pastry/puff_pastry.hpp"
#include "oracles.hpp"

using std::numbers::pi;
namespace cat = catkit::cat;
namespace cx = catkit::complex;
namespace bl = catkit::billiards;
namespace pp = catkit::pastry;
namespace mt = catkit::metric;
using catkit::geometry::Vec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed checks; the first few messages end up in the detail line.
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  Outcome done() const {
    std::string d = info_;
    if (failures_) d += (d.empty() ? "" : " | ") + std::to_string(failures_) + " failed: " + notes_;
    return {failures_ == 0, d};
  }

 private:
  long failures_ = 0;
  std::string notes_;
  std::string info_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

// --- 1 --------------------------------------------------------------------

Outcome four_point_calibration() {
  Checker c;
  cat::Rng rng(1001);
  const int n = 10000;
  int flat_e4 = 0, flat_boundary = 0, sphere_n4 = 0, sphere_boundary = 0, hyp_p4 = 0, hyp_boundary = 0;
  for (int i = 0; i < n; ++i) {
    const auto f = cat::classify_four_point(cat::sample_euclidean_quadruple(rng, 3)).cls;
    flat_e4 += f == cat::FourPointClass::E4;
    flat_boundary += f == cat::FourPointClass::Boundary;
  }
  for (int i = 0; i < n; ++i) {
    const auto s = cat::classify_four_point(cat::sample_spherical_quadruple(rng)).cls;
    sphere_n4 += s == cat::FourPointClass::N4;
    sphere_boundary += s == cat::FourPointClass::Boundary;
  }
  for (int i = 0; i < n; ++i) {
    const auto h = cat::classify_four_point(cat::sample_hyperbolic_quadruple(rng)).cls;
    hyp_p4 += h == cat::FourPointClass::P4;
    hyp_boundary += h == cat::FourPointClass::Boundary;
  }
  const int band = n / 200;
  c.require(flat_e4 + flat_boundary == n, "E3 samples outside E4/Boundary");
  c.require(flat_boundary <= band, "E3 boundary band too wide");
  c.require(sphere_n4 == 0, "sphere N4 = " + std::to_string(sphere_n4));
  c.require(sphere_boundary <= band, "sphere boundary band too wide");
  c.require(hyp_p4 == 0, "hyperbolic P4 = " + std::to_string(hyp_p4));
  c.require(hyp_boundary <= band, "hyperbolic boundary band too wide");
  c.note("E3 E4 " + std::to_string(flat_e4) + "/" + std::to_string(n) + " boundary " + std::to_string(flat_boundary));
  c.note("S2 N4 " + std::to_string(sphere_n4) + " boundary " + std::to_string(sphere_boundary));
  c.note("H2 P4 " + std::to_string(hyp_p4) + " boundary " + std::to_string(hyp_boundary));
  return c.done();
}

// --- 2 --------------------------------------------------------------------

Outcome cat0_quadruples() {
  Checker c;
  const auto cfg = mt::ModelConfig::make(0);
  cat::Rng rng(1002);
  const int n = 10000;
  auto run = [&](const char* name, const std::function<cat::FourPoints()>& draw) {
    double worst = std::numeric_limits<double>::infinity();
    int failed = 0;
    for (int i = 0; i < n; ++i) {
      const auto sv = cat::cat_quadruple_all_splittings(draw(), cfg);
      worst = std::min(worst, sv.verdict.slack);
      failed += !(sv.verdict.pass && sv.verdict.slack >= -1e-9 && sv.assignments_checked == 6);
    }
    c.require(failed == 0, std::string(name) + " failures " + std::to_string(failed));
    c.note(std::string(name) + " min slack " + fmt(worst));
  };
  run("E4", [&] { return cat::sample_euclidean_quadruple(rng, 4); });
  const auto tree = cat::random_metric_tree(rng, 20);
  c.require(mt::validate_metric(tree).ok(), "tree metric invalid");
  run("tree20", [&] { return cat::sample_quadruple_from(rng, tree); });
  const auto prod = mt::product(cat::random_metric_tree(rng, 20), cat::random_metric_tree(rng, 20));
  run("tree x tree", [&] { return cat::sample_quadruple_from(rng, prod); });

  const auto circle = cat::cat_quadruple({2, 1, 1, 1, 1, 2}, cfg);
  c.require(!circle.pass && std::abs(circle.slack + 2.0) <= 1e-9, "circle slack " + fmt(circle.slack));
  const auto circle_all = cat::cat_quadruple_all_splittings(cat::FourPoints::from_six(1, 2, 1, 1, 2, 1), cfg);
  c.require(!circle_all.verdict.pass && std::abs(circle_all.verdict.slack + 2.0) <= 1e-9, "circle all-splittings");
  c.note("circle slack " + fmt(circle.slack));
  return c.done();
}

// --- 3 --------------------------------------------------------------------

Outcome angle_curvature_gap() {
  Checker c;
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> side(1e-3, pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  long violations = 0, done = 0, short_sides = 0, short_violations = 0;
  double smallest_long_side = pi;
  std::string first;
  while (done < 100000) {
    const double px = side(rng);
    const double py = side(rng);
    const double lo = std::abs(px - py);
    const double xy = lo + unit(rng) * (px + py - lo);
    if (px + py + xy >= 2 * pi - 1e-9 || xy <= 0.0) continue;
    const auto g = mt::angle_curvature_gap(px, py, xy);
    const bool ok = g.holds(1e-12);
    if (!ok) {
      ++violations;
      smallest_long_side = std::min(smallest_long_side, std::max(px, py));
      if (first.empty()) {
        first = "(" + fmt(px) + "," + fmt(py) + "," + fmt(xy) + ") gap " + fmt(g.gap_sphere) + " > bound " +
                fmt(g.bound);
      }
    }
    if (std::max(px, py) <= 2.5) {
      ++short_sides;
      short_violations += !ok;
    }
    ++done;
  }
  c.require(violations == 0, "violations " + std::to_string(violations) + "/" + std::to_string(done) + ", e.g. " +
                                 first + ", all with a side at p >= " + fmt(smallest_long_side));
  c.note("admissible triples " + std::to_string(done) + "; with sides at p <= 2.5: " +
         std::to_string(short_violations) + "/" + std::to_string(short_sides) + " violations");
  return c.done();
}

// --- 4 --------------------------------------------------------------------

Outcome alexandrov() {
  Checker c;
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int kappa : {-1, 0, 1}) {
    const auto cfg = mt::ModelConfig::make(kappa);
    int done = 0, disagree = 0, inconsistent = 0, nonstrict = 0;
    while (done < 10000) {
      mt::AlexandrovInput in;
      in.xz = u(rng);
      in.zy = u(rng);
      in.pz = u(rng);
      in.px = std::abs(in.pz - in.xz) + t(rng) * (in.pz + in.xz - std::abs(in.pz - in.xz));
      in.py = std::abs(in.pz - in.zy) + t(rng) * (in.pz + in.zy - std::abs(in.pz - in.zy));
      in.xy = in.xz + in.zy;
      if (in.px + in.py < in.xy + 1e-9 || in.px < 1e-6 || in.py < 1e-6) continue;
      const auto r = mt::alexandrov_lemma(in, cfg);
      disagree += !r.signs_agree();
      inconsistent += !r.consistent(1e-9);
      if (std::abs(r.difference_a) > 1e-3 && !(r.angle_inequality_slack > 0.0)) ++nonstrict;
      ++done;
    }
    const std::string k = "kappa " + std::to_string(kappa);
    c.require(disagree == 0, k + " sign disagreements " + std::to_string(disagree));
    c.require(inconsistent == 0, k + " angle inequality " + std::to_string(inconsistent));
    c.require(nonstrict == 0, k + " non-strict " + std::to_string(nonstrict));
    c.note(k + " " + std::to_string(done) + " ok");
  }
  return c.done();
}

// --- 5 --------------------------------------------------------------------

Outcome flag_machinery() {
  Checker c;
  long complexes = 0, links = 0, cube_links = 0;
  // Complexes on exactly n vertices; together with the void and empty
  // complexes these are the 16353 inequivalent antichains on 6 points.
  const std::size_t expected[7] = {0, 1, 2, 5, 20, 180, 16143};
  for (int n = 1; n <= 6; ++n) {
    const auto reps = oracle::complexes_up_to_iso(n);
    c.require(reps.size() == expected[n], "complex count for n=" + std::to_string(n));
    for (auto m : reps) {
      const auto s = cx::SimplicialComplex::with_index_labels(n, oracle::maximal_faces(m, n));
      const bool flag = cx::is_flag(s).flag;
      c.require(flag == oracle::flag_by_cliques(m, n), "is_flag disagrees with clique oracle");
      bool all_links = cx::no_triangle_condition(s);
      for (const auto& f : s.faces()) {
        all_links = all_links && cx::no_triangle_condition(cx::link(s, f).complex);
        ++links;
      }
      c.require(flag == all_links, "flag vs no-triangle links, n=" + std::to_string(n));
      const auto q = cx::cubical_analog(s);
      for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
        c.require(cx::cubical_vertex_link(q, v) == s, "cubical link differs from S");
        ++cube_links;
      }
      ++complexes;
    }
  }
  std::mt19937_64 rng(1005);
  int bary_flag = 0;
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> nv(3, 7);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nf(1, 6);
    std::uniform_int_distribution<int> sz(1, std::min(n, 4));
    std::vector<cx::Simplex> faces;
    const int count = nf(rng);
    for (int k = 0; k < count; ++k) {
      std::vector<int> verts(n);
      for (int v = 0; v < n; ++v) verts[v] = v;
      std::shuffle(verts.begin(), verts.end(), rng);
      verts.resize(sz(rng));
      faces.push_back(verts);
    }
    const auto b = cx::barycentric_subdivision(cx::SimplicialComplex::with_index_labels(n, faces));
    bary_flag += cx::is_flag(b).flag;
  }
  c.require(bary_flag == 200, "barycentric subdivisions flag " + std::to_string(bary_flag) + "/200");
  c.note("complexes " + std::to_string(complexes) + ", links " + std::to_string(links) + ", cube links " +
         std::to_string(cube_links) + ", barycentric flag " + std::to_string(bary_flag) + "/200");
  return c.done();
}

// --- 6 --------------------------------------------------------------------

Outcome bhv() {
  Checker c;
  for (int n : {3, 4, 5}) {
    const auto b = cx::bhv_link_complex(n);
    c.require(b.flag.flag && cx::is_flag(b.complex).flag, "n=" + std::to_string(n) + " not flag");
    c.require(b.tree_count == oracle::rooted_binary_tree_count(n), "tree count n=" + std::to_string(n));
    c.require(b.complex.vertex_count() == oracle::nontrivial_clade_count(n), "clade count n=" + std::to_string(n));
    c.require(static_cast<long long>(b.complex.maximal_faces().size()) == b.tree_count,
              "facets n=" + std::to_string(n));
    c.note("n=" + std::to_string(n) + " trees " + std::to_string(b.tree_count) + " flag");
  }
  return c.done();
}

// --- 7 --------------------------------------------------------------------

pp::PuffPastry halfplanes(const std::vector<double>& angles) {
  std::vector<pp::ConvexBody> b;
  for (double a : angles) b.push_back(catkit::geometry::HalfSpace{v2(std::cos(a), std::sin(a)), 0.0});
  return pp::PuffPastry(b);
}

std::vector<std::pair<Vec, Vec>> pairs_in_box(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<std::pair<Vec, Vec>> out;
  for (int i = 0; i < n; ++i) out.push_back({v2(u(rng), u(rng)), v2(u(rng), u(rng))});
  return out;
}

Outcome puff_pastry() {
  Checker c;
  std::mt19937_64 rng(1007);
  const double a = 0.0, b = pi / 2;

  const auto aba = pp::end_to_end_convex_check(halfplanes({a, b, a}), pairs_in_box(rng, 1000));
  double worst = 0.0;
  for (double s : aba.slacks) worst = std::max(worst, std::abs(s));
  c.require(aba.pass && aba.pairs_checked == 1000, "(A,B,A) not end-to-end convex");
  c.require(worst <= 1e-7, "(A,B,A) |slack| " + fmt(worst));
  c.note("(A,B,A) max |slack| " + fmt(worst));

  const auto ab_pairs = pairs_in_box(rng, 1000);
  const auto ab = pp::end_to_end_convex_check(halfplanes({a, b}), ab_pairs);
  c.require(!ab.pass && ab.witness_index.has_value(), "(A,B) not rejected");
  if (ab.witness_index) {
    const auto& [x, y] = ab_pairs[*ab.witness_index];
    const double gap = ab.witness_intersection_length - ab.witness_pastry_length;
    c.require(gap > 1e-7, "(A,B) witness gap " + fmt(gap));
    c.require(std::abs(ab.witness_pastry_length - oracle::halfplane_pastry_distance({a, b}, 0, x, 2, y)) <= 1e-7,
              "(A,B) witness length off the oracle");
    c.note("(A,B) witness #" + std::to_string(*ab.witness_index) + " gap " + fmt(gap));
  }

  std::uniform_real_distribution<double> ang(0.0, 2 * pi);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double max_err = 0.0, max_residual = 0.0;
  int unconverged = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> normals(len(rng));
    for (auto& t : normals) t = ang(rng);
    const auto p = halfplanes(normals);
    std::uniform_int_distribution<int> lev(0, p.size());
    const int la = lev(rng);
    const int lb = lev(rng);
    const Vec x = v2(u(rng), u(rng));
    const Vec y = v2(u(rng), u(rng));
    const auto g = pp::pastry_distance(p, {la, x}, {lb, y});
    max_err = std::max(max_err, std::abs(g.length - oracle::halfplane_pastry_distance(normals, la, x, lb, y)));
    max_residual = std::max(max_residual, g.residual);
    unconverged += !g.converged;
  }
  c.require(max_err <= 1e-7, "oracle error " + fmt(max_err));
  c.require(unconverged == 0 && max_residual <= 1e-8, "solver residual " + fmt(max_residual));
  c.note("oracle max error " + fmt(max_err) + " residual " + fmt(max_residual));

  c.require(pp::build_bfk_array(1, pi / 2) == std::vector<int>{1}, "j(1)");
  c.require(pp::build_bfk_array(2, pi / 2) == std::vector<int>{1, 2, 1}, "j(2)");
  c.require(pp::build_bfk_array(3, pi / 2) == std::vector<int>{1, 2, 3, 2, 1}, "j(3)");
  c.note("bfk arrays exact");
  return c.done();
}

// --- 8 --------------------------------------------------------------------

Outcome billiards() {
  Checker c;
  bl::Rng rng(1008);
  long single_max = 0;
  for (int i = 0; i < 1000; ++i) {
    const int dim = 2 + i % 2;
    bl::BilliardTable t;
    t.dim = dim;
    const Vec normal = bl::random_unit_vector(rng, dim);
    t.walls.emplace_back(catkit::geometry::HalfSpace{normal, 0.0});
    Vec start = bl::random_unit_vector(rng, dim) * 2.0;
    if (normal.dot(start) < 0) start = -start;
    const auto tr = bl::simulate(t, start, bl::random_unit_vector(rng, dim), 100);
    single_max = std::max<long>(single_max, static_cast<long>(tr.events.size()));
  }
  c.require(single_max <= 1, "single wall events " + std::to_string(single_max));
  c.note("single wall max events " + std::to_string(single_max));

  for (double alpha : {pi / 2, pi / 3, pi / 5, 1.0}) {
    const long bound = pp::ceil_pi_over(alpha);
    int mismatch = 0, over = 0, degenerate = 0;
    long most = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto [start, dir] = bl::wedge_shot(rng, alpha);
      const auto w = bl::wedge_reflection_count(alpha, start, dir);
      degenerate += w.degenerate;
      mismatch += w.simulated != w.unfolding || w.unfolding != oracle::wedge_unfolding_reflections(alpha, start, dir);
      over += w.simulated > bound;
      most = std::max(most, w.simulated);
    }
    const std::string tag = "alpha " + fmt(alpha);
    c.require(mismatch == 0 && degenerate == 0, tag + " mismatches " + std::to_string(mismatch) + " degenerate " +
                                                    std::to_string(degenerate));
    c.require(over == 0, tag + " above ceil(pi/alpha)");
    c.note(tag + " max " + std::to_string(most) + "<=" + std::to_string(bound));
  }

  const double eps = bl::corner_width_compact(1.0, 2.0).eps;
  for (int walls : {2, 3}) {
    const auto bound = bl::collision_bound(walls, eps);
    std::size_t most = 0;
    int over = 0, unfinished = 0;
    for (int i = 0; i < 1000; ++i) {
      const int dim = 2 + i % 2;
      const auto table = bl::compact_ball_table(rng, walls, dim, 1.0, 2.0);
      const auto [start, dir] = bl::compact_table_shot(rng, dim, 2.0);
      const auto tr = bl::simulate(table, start, dir, 1000000);
      unfinished += tr.reason == bl::Termination::MaxEvents;
      over += bl::BigInt(tr.events.size()) > bound;
      most = std::max(most, tr.events.size());
    }
    c.require(over == 0 && unfinished == 0, std::to_string(walls) + " walls over bound " + std::to_string(over));
    c.note(std::to_string(walls) + " balls max " + std::to_string(most) + "<=" + bound.str());
  }
  return c.done();
}

// --- 9 --------------------------------------------------------------------

Outcome hard_balls() {
  Checker c;
  bl::Rng rng(1009);
  for (int n : {2, 3}) {
    int mismatches = 0;
    std::size_t events = 0;
    double terr = 0.0, edrift = 0.0, pdrift = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto sys = bl::random_hard_ball_system(rng, n);
      const auto cc = bl::cross_check_hard_balls(sys, 50.0, 10000, 1e-8);
      mismatches += !cc.match;
      events += cc.events;
      terr = std::max(terr, cc.max_time_error);
      edrift = std::max(edrift, cc.max_energy_drift);
      pdrift = std::max(pdrift, cc.max_momentum_drift);
    }
    const std::string tag = std::to_string(n) + " balls";
    c.require(mismatches == 0, tag + " mismatches " + std::to_string(mismatches));
    c.require(terr <= 1e-8, tag + " time error " + fmt(terr));
    c.require(edrift <= 1e-12 && pdrift <= 1e-12, tag + " drift " + fmt(edrift) + "/" + fmt(pdrift));
    c.note(tag + " events " + std::to_string(events) + " dt " + fmt(terr) + " dE " + fmt(edrift) + " dP " +
           fmt(pdrift));
  }
  std::size_t most = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto run = bl::simulate_hard_balls(bl::random_hard_ball_system(rng, 2, true), 1e6, 100);
    most = std::max(most, run.events.size());
  }
  c.require(most <= 1, "identical pair collided " + std::to_string(most) + " times");
  c.note("identical pair max " + std::to_string(most));
  return c.done();
}

// --- 10 -------------------------------------------------------------------

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = catkit::cli::run(args, in, out, err);
  return {code, out.str()};
}

// Everything after the header line.
std::string body(const std::string& report) { return report.substr(report.find('\n') + 1); }

Outcome determinism() {
  Checker c;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("catkit-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string bodies = (dir / "aba.json").string();
  std::ofstream(bodies) << R"([{"halfspace":{"normal":[1,0],"offset":0}},{"halfspace":{"normal":[0,1],"offset":0}},)"
                        << R"({"halfspace":{"normal":[1,0],"offset":0}}])";
  const std::string table = (dir / "table.json").string();
  std::ofstream(table) << R"([{"ball":{"center":[0.2,0],"radius":1.3}},{"ball":{"center":[-0.1,0.3],"radius":1.2}}])";
  const std::string hollow = (dir / "hollow.json").string();
  std::ofstream(hollow) << R"({"vertices":["a","b","c"],"maximal":[["a","b"],["b","c"],["a","c"]]})";

  const std::vector<std::vector<std::string>> suite = {
      {"cat4", "sample", "--model", "euclidean", "--count", "300", "--dim", "4"},
      {"cat4", "sample", "--model", "sphere", "--count", "300"},
      {"cat4", "sample", "--model", "hyperbolic", "--count", "300"},
      {"cat4", "sample", "--model", "tree", "--count", "300"},
      {"cat4", "sample", "--model", "tree-product", "--count", "300"},
      {"complex", "bhv", "--n", "5", "--witness"},
      {"complex", "flag", "--witness", "--input", hollow},
      {"complex", "cubical", "--input", hollow},
      {"pastry", "check", "--bodies", bodies, "--samples", "200"},
      {"pastry", "bfk-array", "--n", "4", "--eps", "pi/3"},
      {"billiard", "run", "--table", table, "--trials", "300", "--r1", "1", "--r2", "2"},
      {"billiard", "wedge", "--alpha", "pi/5", "--trials", "500"},
      {"billiard", "bound", "--n", "3", "--r1", "1", "--r2", "2"},
      {"hardballs", "run", "--balls", "3", "--trials", "200", "--check"},
      {"hardballs", "run", "--balls", "2", "--trials", "200", "--identical"},
  };
  auto with = [](const std::string& seed, const std::string& workers, std::vector<std::string> args) {
    args.insert(args.begin(), {"--seed", seed, "--workers", workers});
    return args;
  };
  std::size_t bytes = 0;
  int commands = 0;
  for (const auto& args : suite) {
    const auto first = cli(with("2024", "1", args));
    const auto second = cli(with("2024", "1", args));
    const auto threaded = cli(with("2024", "3", args));
    std::string name;
    for (std::size_t k = 0; k < 2; ++k) name += (k ? " " : "") + args[k];
    c.require(first.code == 0, name + " exit " + std::to_string(first.code));
    c.require(first.out == second.out, name + " differs between runs");
    c.require(body(first.out) == body(threaded.out), name + " differs across worker counts");
    bytes += first.out.size();
    ++commands;
    // Sampled quadruples feed the checkers.
    if (args[0] == "cat4") {
      for (const char* sub : {"check", "classify"}) {
        const auto a = cli({"--workers", "1", "cat4", sub}, first.out);
        const auto b = cli({"--workers", "3", "cat4", sub}, first.out);
        c.require(body(a.out) == body(b.out), std::string("cat4 ") + sub + " differs across worker counts");
        bytes += a.out.size();
        ++commands;
      }
    }
  }
  c.require(cli(with("2024", "1", suite[0])).out != cli(with("2025", "1", suite[0])).out, "seed has no effect");
  fs::remove_all(dir);
  c.note(std::to_string(commands) + " reports, " + std::to_string(bytes) + " bytes identical");
  return c.done();
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 = none
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "four-point class calibration", 10.0, four_point_calibration},
      {2, "CAT(0) quadruple test", 0.0, cat0_quadruples},
      {3, "angle gap between curvatures", 0.0, angle_curvature_gap},
      {4, "Alexandrov sign agreement", 0.0, alexandrov},
      {5, "flag machinery", 60.0, flag_machinery},
      {6, "tree-space link complexes are flag", 0.0, bhv},
      {7, "puff pastry", 0.0, puff_pastry},
      {8, "billiards", 120.0, billiards},
      {9, "hard balls", 0.0, hard_balls},
      {10, "determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.time_limit > 0 && secs > cr.time_limit) {
      o.pass = false;
      o.detail += " | over time limit " + fmt(cr.time_limit) + " s";
    }
    failed += !o.pass;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
