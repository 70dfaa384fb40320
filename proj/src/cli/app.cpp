#include "catkit/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>

#include <CLI11.hpp>

#include "catkit/billiards/samplers.hpp"
#include "catkit/cat/four_point.hpp"
#include "catkit/cat/samplers.hpp"
#include "catkit/complex/bhv.hpp"
#include "catkit/complex/cubical.hpp"
#include "catkit/error.hpp"
#include "catkit/metric/gh_distance.hpp"
#include "catkit/pastry/puff_pastry.hpp"
#include "svg.hpp"

namespace catkit::cli {

namespace {

using geometry::Vec;

struct Io {
  std::istream& in;
  std::string input = "-";
};

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// Drops header/summary records so report streams can be piped back in.
std::vector<Json> payload_lines(const std::string& text, const std::string& source) {
  std::vector<Json> out;
  for (auto& j : parse_jsonl(text, source)) {
    if (j.is_object() && j.contains("type") && (j["type"] == "header" || j["type"] == "summary")) continue;
    out.push_back(std::move(j));
  }
  return out;
}

// --- metric ---------------------------------------------------------------

Report metric_validate(const RunConfig& cfg, Io& io) {
  const auto m = metric_from_json(parse_json(read_text(io.input, io.in), 0, io.input));
  Report r;
  r.command = "metric validate";
  const auto rep = metric::validate_metric(m, cfg.tol_or(1e-9));
  for (const auto& v : rep.violations) {
    Json c;
    c["kind"] = metric::to_string(v.kind);
    Json pts = {m.labels()[v.i], m.labels()[v.j]};
    if (v.kind == metric::ViolationKind::Triangle) pts.push_back(m.labels()[v.k]);
    c["points"] = pts;
    c["amount"] = v.amount;
    r.cases.push_back(c);
  }
  r.summary["points"] = m.size();
  r.summary["violations"] = rep.violations.size();
  r.ok = rep.ok();
  return r;
}

Report metric_gh(const std::string& xs, const std::string& ys, Io& io) {
  const auto x = metric_from_json(parse_json(read_text(xs, io.in), 0, xs));
  const auto y = metric_from_json(parse_json(read_text(ys, io.in), 0, ys));
  Report r;
  r.command = "metric gh";
  r.summary["x_points"] = x.size();
  r.summary["y_points"] = y.size();
  r.summary["x_to_y"] = metric::one_sided_distortion(x, y);
  r.summary["y_to_x"] = metric::one_sided_distortion(y, x);
  r.summary["gh_distance"] = metric::gh_distance_bruteforce(x, y);
  return r;
}

// --- cat4 -----------------------------------------------------------------

cat::FourPoints four_points_of(const Json& j) {
  if (j.contains("d")) {
    cat::FourPoints pts;
    const auto& d = j["d"];
    if (!d.is_array() || d.size() != 4) throw Error("\"d\" must be a 4x4 matrix");
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) pts.d[a][b] = d[a][b].get<double>();
    }
    return pts;
  }
  const auto q = quadruple_from_json(j);
  // Roles p, q, x, y become points 0..3.
  return cat::FourPoints::from_six(q.pq, q.px, q.py, q.qx, q.qy, q.xy);
}

Report cat4_check(const RunConfig& cfg, Io& io, int kappa, bool all_splittings) {
  const auto lines = payload_lines(read_text(io.input, io.in), io.input);
  const auto mc = metric::ModelConfig::make(kappa, cfg.tol_or(1e-9));
  Report r;
  r.command = "cat4 check";
  auto batch = run_cases(lines.size(), cfg.workers, [&](std::size_t i) {
    Json c;
    c["index"] = i;
    if (all_splittings) {
      const auto pts = four_points_of(lines[i]);
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          cat::assign_roles(pts, a, b, 0 == a ? 1 : 0, 0).validate(mc.tol);
        }
      }
      const auto sv = cat::cat_quadruple_all_splittings(pts, mc);
      c["pass"] = sv.verdict.pass;
      c["slack"] = number_or_null(sv.verdict.slack);
      c["witness_t"] = sv.verdict.witness_t;
      c["auto_pass"] = sv.verdict.auto_pass;
      c["roles"] = sv.roles;
      c["assignments"] = sv.assignments_checked;
    } else {
      const auto q = quadruple_from_json(lines[i]);
      q.validate(mc.tol);
      const auto v = cat::cat_quadruple(q, mc);
      c["pass"] = v.pass;
      c["slack"] = number_or_null(v.slack);
      c["witness_t"] = v.witness_t;
      c["auto_pass"] = v.auto_pass;
    }
    return c;
  });
  std::size_t failed = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (const auto& c : batch.results) {
    if (!c["pass"].get<bool>()) ++failed;
    if (!c["slack"].is_null()) min_slack = std::min(min_slack, c["slack"].get<double>());
  }
  r.cases = std::move(batch.results);
  r.summary["kappa"] = kappa;
  r.summary["cases"] = r.cases.size();
  r.summary["failed"] = failed;
  r.summary["min_slack"] = number_or_null(min_slack);
  if (batch.error) r.summary["error"] = *batch.error;
  r.ok = failed == 0 && !batch.error;
  return r;
}

Report cat4_classify(const RunConfig& cfg, Io& io) {
  const auto lines = payload_lines(read_text(io.input, io.in), io.input);
  const double tol = cfg.tol_or(1e-9);
  Report r;
  r.command = "cat4 classify";
  auto batch = run_cases(lines.size(), cfg.workers, [&](std::size_t i) {
    const auto pts = four_points_of(lines[i]);
    const auto diag = cat::classify_four_point(pts, tol);
    Json c;
    c["index"] = i;
    c["class"] = cat::to_string(diag.cls);
    c["picture"] = cat::to_string(diag.picture);
    c["eigenvalues"] = diag.eigenvalues;
    if (diag.inside_vertex >= 0) c["inside_vertex"] = diag.inside_vertex;
    return c;
  });
  std::map<std::string, std::size_t> counts{{"E4", 0}, {"P4", 0}, {"N4", 0}, {"Boundary", 0}};
  std::vector<std::array<double, 6>> rows;
  std::vector<std::string> classes;
  for (std::size_t i = 0; i < batch.results.size(); ++i) {
    const auto cls = batch.results[i]["class"].get<std::string>();
    ++counts[cls];
    const auto pts = four_points_of(lines[i]);
    rows.push_back({pts(0, 1), pts(0, 2), pts(0, 3), pts(1, 2), pts(1, 3), pts(2, 3)});
    classes.push_back(cls);
  }
  r.cases = std::move(batch.results);
  Json cj;
  for (const auto& [k, v] : counts) cj[k] = v;
  r.summary["cases"] = r.cases.size();
  r.summary["counts"] = cj;
  if (batch.error) r.summary["error"] = *batch.error;
  r.ok = !batch.error;
  if (cfg.format == "svg") r.svg = mds_scatter_svg(rows, classes);
  return r;
}

Report cat4_sample(const RunConfig& cfg, const std::string& model, long count, int dim, int nodes) {
  Report r;
  r.command = "cat4 sample";
  std::optional<metric::FiniteMetricSpace> space;
  if (model == "tree" || model == "tree-product") {
    cat::Rng rng(cfg.seed);
    auto t1 = cat::random_metric_tree(rng, nodes);
    space = model == "tree" ? t1 : metric::product(t1, cat::random_metric_tree(rng, nodes));
  } else if (model != "euclidean" && model != "sphere" && model != "hyperbolic") {
    throw Error("unknown model " + model + " (euclidean, sphere, hyperbolic, tree, tree-product)");
  }
  auto batch = run_cases(static_cast<std::size_t>(count), cfg.workers, [&](std::size_t i) {
    cat::Rng rng(case_seed(cfg.seed, i));
    cat::FourPoints pts;
    if (model == "euclidean") {
      pts = cat::sample_euclidean_quadruple(rng, dim);
    } else if (model == "sphere") {
      pts = cat::sample_spherical_quadruple(rng);
    } else if (model == "hyperbolic") {
      pts = cat::sample_hyperbolic_quadruple(rng);
    } else {
      pts = cat::sample_quadruple_from(rng, *space);
    }
    Json c = to_json(cat::assign_roles(pts, 0, 1, 2, 3));
    c["index"] = i;
    return c;
  });
  r.cases = std::move(batch.results);
  r.summary["model"] = model;
  r.summary["cases"] = r.cases.size();
  if (batch.error) r.summary["error"] = *batch.error;
  r.ok = !batch.error;
  return r;
}

// --- complex --------------------------------------------------------------

complex::SimplicialComplex read_complex(Io& io) {
  return complex_from_json(parse_json(read_text(io.input, io.in), 0, io.input));
}

Report complex_flag(Io& io, bool witness, const std::string& metric_name) {
  const auto s = read_complex(io);
  complex::SphericalMetric sm;
  if (metric_name == "all-right") {
    sm = complex::SphericalMetric::AllRight;
  } else if (metric_name == "sides-at-least-half-pi") {
    sm = complex::SphericalMetric::SidesAtLeastHalfPi;
  } else {
    throw Error("unknown metric " + metric_name);
  }
  Report r;
  r.command = "complex flag";
  const auto fr = complex::is_flag(s);
  const auto verdict = complex::all_right_cat1_verdict(s, sm);
  r.summary["vertices"] = s.vertex_count();
  r.summary["dimension"] = s.dimension();
  r.summary["flag"] = fr.flag;
  r.summary["no_triangle"] = complex::no_triangle_condition(s);
  r.summary["cat1"] = complex::to_string(verdict.status);
  if (witness && fr.witness) r.summary["witness"] = simplex_to_json(s, *fr.witness);
  if (witness && verdict.witness) {
    Json loop;
    loop["base"] = simplex_to_json(s, verdict.witness->base);
    const auto& v = verdict.witness->vertices;
    loop["vertices"] = simplex_to_json(s, {v[0], v[1], v[2]});
    loop["length"] = verdict.witness->loop_length;
    r.summary["loop"] = loop;
  }
  return r;
}

Report complex_link(Io& io, const std::string& ids) {
  const auto s = read_complex(io);
  const auto sigma = simplex_from_ids(s, ids);
  const auto lk = complex::link(s, sigma);
  Report r;
  r.command = "complex link";
  r.summary["base"] = simplex_to_json(s, sigma);
  r.summary["link"] = to_json(lk.complex);
  r.summary["flag"] = complex::is_flag(lk.complex).flag;
  return r;
}

Report complex_bary(Io& io) {
  const auto s = read_complex(io);
  const auto b = complex::barycentric_subdivision(s);
  Report r;
  r.command = "complex bary";
  const auto fr = complex::is_flag(b);
  r.summary["vertices"] = b.vertex_count();
  r.summary["maximal_faces"] = b.maximal_faces().size();
  r.summary["flag"] = fr.flag;
  r.summary["complex"] = to_json(b);
  r.ok = fr.flag;
  return r;
}

Report complex_cubical(Io& io) {
  const auto s = read_complex(io);
  if (s.vertex_count() > 16) throw Error("cubical analog limited to 16 vertices");
  const auto q = complex::cubical_analog(s);
  Report r;
  r.command = "complex cubical";
  const int n = q.ambient_dimension();
  bool match = true;
  for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
    if (!(complex::cubical_vertex_link(q, v) == s)) match = false;
  }
  Json maximal = Json::array();
  for (const auto& f : q.maximal_faces()) maximal.push_back(complex::to_string(f, n));
  r.summary["dimension"] = n;
  r.summary["coordinates"] = q.coordinate_labels();
  r.summary["f_vector"] = q.f_vector();
  r.summary["maximal"] = maximal;
  r.summary["vertex_links_match"] = match;
  r.ok = match;
  return r;
}

Report complex_bhv(int n, bool witness, bool emit_complex) {
  const auto b = complex::bhv_link_complex(n);
  Report r;
  r.command = "complex bhv";
  r.summary["n"] = n;
  r.summary["trees"] = b.tree_count;
  r.summary["vertices"] = b.complex.vertex_count();
  r.summary["maximal_faces"] = b.complex.maximal_faces().size();
  r.summary["dimension"] = b.complex.dimension();
  r.summary["flag"] = b.flag.flag;
  if (witness && b.flag.witness) r.summary["witness"] = simplex_to_json(b.complex, *b.flag.witness);
  if (emit_complex) r.summary["complex"] = to_json(b.complex);
  r.ok = b.flag.flag;
  return r;
}

// --- pastry ---------------------------------------------------------------

pastry::LiftedPoint parse_lifted(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("lifted point must look like LEVEL:x1,x2,...");
  pastry::LiftedPoint lp;
  try {
    lp.level = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw Error("bad level in " + text);
  }
  lp.x = parse_vector(text.substr(colon + 1));
  return lp;
}

std::vector<geometry::ConvexBody> read_bodies(const std::string& path, Io& io) {
  return bodies_from_json(parse_json(read_text(path, io.in), 0, path));
}

std::vector<geometry::ConvexBody> arrange(const std::vector<geometry::ConvexBody>& bodies, const std::string& array) {
  if (array.empty()) return bodies;
  std::vector<geometry::ConvexBody> out;
  for (int k : parse_int_list(array)) {
    if (k < 1 || k > static_cast<int>(bodies.size())) throw Error("array index out of range: " + std::to_string(k));
    out.push_back(bodies[k - 1]);
  }
  return out;
}

Json crossings_json(const std::vector<Vec>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

Report pastry_dist(const RunConfig& cfg, Io& io, const std::string& bodies, const std::string& array,
                   const std::string& from, const std::string& to) {
  const pastry::PuffPastry p(arrange(read_bodies(bodies, io), array));
  pastry::SolverOptions opts;
  if (cfg.tol) opts.gap_tol = *cfg.tol;
  const auto g = pastry::pastry_distance(p, parse_lifted(from), parse_lifted(to), opts);
  Report r;
  r.command = "pastry dist";
  r.summary["length"] = g.length;
  r.summary["crossings"] = crossings_json(g.crossings);
  r.summary["residual"] = g.residual;
  r.summary["converged"] = g.converged;
  r.ok = g.converged;
  return r;
}

Report pastry_check(const RunConfig& cfg, Io& io, const std::string& bodies, const std::string& array, long samples,
                    double box) {
  const pastry::PuffPastry p(arrange(read_bodies(bodies, io), array));
  const double tol = cfg.tol_or(1e-7);
  if (!pastry::intersection_point(p.bodies())) throw Error("bodies have empty intersection");
  Report r;
  r.command = "pastry check";
  const int m = p.dimension();
  pastry::Slot all;
  for (const auto& b : p.bodies()) all.push_back(&b);
  auto batch = run_cases(static_cast<std::size_t>(samples), cfg.workers, [&](std::size_t i) {
    std::mt19937_64 rng(case_seed(cfg.seed, i));
    std::uniform_real_distribution<double> u(-box, box);
    Vec x(m), y(m);
    for (int k = 0; k < m; ++k) x(k) = u(rng);
    for (int k = 0; k < m; ++k) y(k) = u(rng);
    const double direct = pastry::pastry_distance(p, {0, x}, {p.size(), y}).length;
    const double through = pastry::shortest_chain(x, {all}, y).length;
    const double slack = through - direct;
    Json c;
    c["index"] = i;
    c["x"] = to_json(x);
    c["y"] = to_json(y);
    c["pastry"] = direct;
    c["through_intersection"] = through;
    c["slack"] = slack;
    c["pass"] = std::abs(slack) <= tol;
    return c;
  });
  std::optional<std::size_t> witness;
  double worst = 0.0;
  for (std::size_t i = 0; i < batch.results.size(); ++i) {
    auto& c = batch.results[i];
    const double s = c["slack"].get<double>();
    if (std::abs(s) > std::abs(worst)) worst = s;
    if (!c["pass"].get<bool>() && !witness) witness = i;
  }
  r.cases = std::move(batch.results);
  r.summary["samples"] = r.cases.size();
  r.summary["array_length"] = p.size();
  r.summary["worst_slack"] = worst;
  r.summary["verdict"] = witness || batch.error ? "FAIL" : "PASS";
  if (witness) {
    const auto& c = r.cases[*witness];
    Json w;
    w["index"] = *witness;
    w["x"] = c["x"];
    w["y"] = c["y"];
    w["through_intersection"] = c["through_intersection"];
    w["pastry"] = c["pastry"];
    r.summary["witness"] = w;
  }
  if (batch.error) r.summary["error"] = *batch.error;
  r.ok = !witness && !batch.error;
  return r;
}

Report pastry_bfk(int n, const std::string& eps_text) {
  const double eps = parse_angle(eps_text);
  const auto arr = pastry::build_bfk_array(n, eps);
  Report r;
  r.command = "pastry bfk-array";
  const long long run = pastry::ceil_pi_over(eps) + 1;
  bool present = true;
  for (int k = 1; k <= n; ++k) present = present && std::find(arr.begin(), arr.end(), k) != arr.end();
  const double bound = std::pow(static_cast<double>(run), n);
  r.summary["n"] = n;
  r.summary["eps"] = eps;
  r.summary["array"] = arr;
  r.summary["length"] = arr.size();
  r.summary["length_bound"] = bound;
  r.summary["all_indices_present"] = present;
  r.ok = present && static_cast<double>(arr.size()) <= bound;
  return r;
}

// --- billiards ------------------------------------------------------------

std::optional<double> eps_from(const std::string& eps_text, std::optional<double> r1, std::optional<double> r2) {
  if (!eps_text.empty()) return parse_angle(eps_text);
  if (r1 && r2) return billiards::corner_width_compact(*r1, *r2).eps;
  if (r1 || r2) throw Error("--r1 and --r2 go together");
  return std::nullopt;
}

Json event_json(const billiards::Event& e, std::size_t k) {
  Json c;
  c["event"] = k;
  c["time"] = e.time;
  c["wall"] = e.wall;
  c["point"] = to_json(e.point);
  c["direction"] = to_json(e.direction);
  return c;
}

struct BilliardRunArgs {
  std::string table;
  std::string start;
  std::string direction;
  long trials = 1;
  long max_events = 100000;
  double horizon = std::numeric_limits<double>::infinity();
  double box = 2.0;
  std::string eps;
  std::optional<double> r1, r2;
};

Report billiard_run(const RunConfig& cfg, Io& io, const BilliardRunArgs& a) {
  const auto table = table_from_json(parse_json(read_text(a.table, io.in), 0, a.table));
  const auto eps = eps_from(a.eps, a.r1, a.r2);
  Report r;
  r.command = "billiard run";
  std::optional<billiards::BigInt> bound;
  if (eps) bound = billiards::collision_bound(static_cast<int>(std::max<std::size_t>(table.walls.size(), 1)), *eps);

  if (!a.start.empty()) {
    Vec d = parse_vector(a.direction.empty() ? throw Error("--start needs --direction") : a.direction);
    d.normalize();
    const auto tr = billiards::simulate(table, parse_vector(a.start), d, a.max_events, a.horizon);
    for (std::size_t k = 0; k < tr.events.size(); ++k) r.cases.push_back(event_json(tr.events[k], k));
    r.summary["events"] = tr.events.size();
    r.summary["reason"] = billiards::to_string(tr.reason);
    if (!tr.detail.empty()) r.summary["detail"] = tr.detail;
    r.summary["end_time"] = tr.end_time;
    r.summary["end_point"] = to_json(tr.end_point);
    if (bound) {
      r.summary["bound"] = bound->str();
      r.ok = tr.reason == billiards::Termination::MaxEvents || billiards::BigInt(tr.events.size()) <= *bound;
    }
    if (cfg.format == "svg") r.svg = billiard_svg(table, {tr});
    return r;
  }

  std::vector<billiards::Trajectory> runs(static_cast<std::size_t>(a.trials));
  auto batch = run_cases(runs.size(), cfg.workers, [&](std::size_t i) {
    billiards::Rng rng(case_seed(cfg.seed, i));
    std::uniform_real_distribution<double> u(-a.box, a.box);
    Vec x(table.dim);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100000) throw Error("no free start point found in the sampling box");
      for (int k = 0; k < table.dim; ++k) x(k) = u(rng);
      bool free = true;
      for (const auto& w : table.walls) free = free && w.excess(x) > 0.0;
      if (free) break;
    }
    const Vec d = billiards::random_unit_vector(rng, table.dim);
    runs[i] = billiards::simulate(table, x, d, a.max_events, a.horizon);
    Json c;
    c["index"] = i;
    c["start"] = to_json(x);
    c["direction"] = to_json(d);
    c["events"] = runs[i].events.size();
    c["reason"] = billiards::to_string(runs[i].reason);
    return c;
  });
  std::size_t max_events = 0, total = 0, degenerate = 0, violations = 0;
  for (const auto& c : batch.results) {
    const auto ev = c["events"].get<std::size_t>();
    max_events = std::max(max_events, ev);
    total += ev;
    if (c["reason"] == "degenerate") ++degenerate;
    if (bound && c["reason"] != "max_events" && billiards::BigInt(ev) > *bound) ++violations;
  }
  r.cases = std::move(batch.results);
  r.summary["trials"] = r.cases.size();
  r.summary["max_events"] = max_events;
  r.summary["mean_events"] = r.cases.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(r.cases.size());
  r.summary["degenerate"] = degenerate;
  if (bound) {
    r.summary["eps"] = *eps;
    r.summary["bound"] = bound->str();
    r.summary["bound_violations"] = violations;
  }
  if (batch.error) r.summary["error"] = *batch.error;
  r.ok = violations == 0 && !batch.error;
  if (cfg.format == "svg") {
    runs.resize(std::min<std::size_t>(r.cases.size(), 25));
    r.svg = billiard_svg(table, runs);
  }
  return r;
}

Report billiard_bound(int n, const std::string& eps_text, std::optional<double> r1, std::optional<double> r2) {
  const auto eps = eps_from(eps_text, r1, r2);
  if (!eps) throw Error("give --eps or --r1/--r2");
  const auto bound = billiards::collision_bound(n, *eps);
  Report r;
  r.command = "billiard bound";
  r.summary["n"] = n;
  r.summary["eps"] = *eps;
  r.summary["method"] = eps_text.empty() ? "compact-formula" : "given";
  r.summary["ceil_pi_over_eps"] = pastry::ceil_pi_over(*eps);
  const std::string digits = bound.str();
  r.summary["bound"] = digits;
  r.summary["digits"] = digits.size();
  return r;
}

Report billiard_wedge(const RunConfig& cfg, const std::string& alpha_text, long trials) {
  const double alpha = parse_angle(alpha_text);
  Report r;
  r.command = "billiard wedge";
  auto batch = run_cases(static_cast<std::size_t>(trials), cfg.workers, [&](std::size_t i) {
    billiards::Rng rng(case_seed(cfg.seed, i));
    const auto [x, d] = billiards::wedge_shot(rng, alpha);
    const auto w = billiards::wedge_reflection_count(alpha, x, d);
    Json c;
    c["index"] = i;
    c["start"] = to_json(x);
    c["direction"] = to_json(d);
    c["simulated"] = w.simulated;
    c["unfolding"] = w.unfolding;
    c["bound"] = w.bound;
    c["degenerate"] = w.degenerate;
    c["ok"] = w.degenerate || (w.simulated == w.unfolding && w.simulated <= w.bound);
    return c;
  });
  std::size_t bad = 0, degenerate = 0;
  long max_sim = 0;
  for (const auto& c : batch.results) {
    if (!c["ok"].get<bool>()) ++bad;
    if (c["degenerate"].get<bool>()) ++degenerate;
    max_sim = std::max(max_sim, c["simulated"].get<long>());
  }
  r.cases = std::move(batch.results);
  r.summary["alpha"] = alpha;
  r.summary["trials"] = r.cases.size();
  r.summary["bound"] = pastry::ceil_pi_over(alpha);
  r.summary["max_simulated"] = max_sim;
  r.summary["mismatches"] = bad;
  r.summary["degenerate"] = degenerate;
  if (batch.error) r.summary["error"] = *batch.error;
  r.ok = bad == 0 && !batch.error;
  return r;
}

// --- hard balls -----------------------------------------------------------

struct HardBallArgs {
  std::string system;
  int balls = 2;
  long trials = 0;
  bool identical = false;
  double horizon = 100.0;
  long max_events = 10000;
  bool check = false;
};

Json cross_check_json(const billiards::CrossCheck& cc) {
  Json c;
  c["match"] = cc.match;
  if (!cc.mismatch.empty()) c["mismatch"] = cc.mismatch;
  c["events_compared"] = cc.events;
  c["max_time_error"] = cc.max_time_error;
  c["max_velocity_error"] = cc.max_velocity_error;
  c["energy_drift"] = cc.max_energy_drift;
  c["momentum_drift"] = cc.max_momentum_drift;
  return c;
}

bool cross_check_ok(const billiards::CrossCheck& cc) {
  return cc.match && cc.max_energy_drift <= 1e-12 && cc.max_momentum_drift <= 1e-12;
}

Report hardballs_run(const RunConfig& cfg, Io& io, const HardBallArgs& a) {
  Report r;
  r.command = "hardballs run";
  const double time_tol = cfg.tol_or(1e-8);
  if (!a.system.empty()) {
    const auto sys = system_from_json(parse_json(read_text(a.system, io.in), 0, a.system));
    const auto run = billiards::simulate_hard_balls(sys, a.horizon, a.max_events);
    for (std::size_t k = 0; k < run.events.size(); ++k) {
      const auto& e = run.events[k];
      Json c;
      c["event"] = k;
      c["time"] = e.time;
      c["pair"] = {e.i, e.j};
      Json v = Json::array();
      for (const auto& w : e.velocities) v.push_back(to_json(Vec(w)));
      c["velocities"] = v;
      r.cases.push_back(c);
    }
    r.summary["collisions"] = run.events.size();
    r.summary["reason"] = billiards::to_string(run.reason);
    if (!run.detail.empty()) r.summary["detail"] = run.detail;
    r.summary["end_time"] = run.end_time;
    r.summary["final_state"] = to_json(run.final_state);
    if (a.check) {
      const auto cc = billiards::cross_check_hard_balls(sys, a.horizon, a.max_events, time_tol);
      r.summary["cross_check"] = cross_check_json(cc);
      r.ok = cross_check_ok(cc);
    }
    return r;
  }
  if (a.trials <= 0) throw Error("give --system FILE or --trials N");
  auto batch = run_cases(static_cast<std::size_t>(a.trials), cfg.workers, [&](std::size_t i) {
    billiards::Rng rng(case_seed(cfg.seed, i));
    const auto sys = billiards::random_hard_ball_system(rng, a.balls, a.identical);
    const auto cc = billiards::cross_check_hard_balls(sys, a.horizon, a.max_events, time_tol);
    Json c = cross_check_json(cc);
    c["index"] = i;
    c["collisions"] = cc.events;
    c["ok"] = cross_check_ok(cc);
    return c;
  });
  std::size_t bad = 0, max_coll = 0;
  for (const auto& c : batch.results) {
    if (!c["ok"].get<bool>()) ++bad;
    max_coll = std::max(max_coll, c["collisions"].get<std::size_t>());
  }
  r.cases = std::move(batch.results);
  r.summary["balls"] = a.balls;
  r.summary["trials"] = r.cases.size();
  r.summary["max_collisions"] = max_coll;
  r.summary["failures"] = bad;
  if (batch.error) r.summary["error"] = *batch.error;
  r.ok = bad == 0 && !batch.error;
  // Two identical balls meet at most once.
  if (a.identical && a.balls == 2) {
    r.summary["at_most_one_collision"] = max_coll <= 1;
    r.ok = r.ok && max_coll <= 1;
  }
  return r;
}

Report hardballs_reduce(const RunConfig& cfg, Io& io, const std::string& system, long samples) {
  const auto sys = system_from_json(parse_json(read_text(system, io.in), 0, system));
  const auto cb = billiards::hard_ball_to_billiard(sys);
  Report r;
  r.command = "hardballs reduce";
  Json walls = Json::array();
  for (const auto& w : cb.table.walls) walls.push_back(to_json(w));
  r.summary["dim"] = cb.table.dim;
  r.summary["walls"] = walls;
  r.summary["wall_pairs"] = cb.wall_pairs;
  r.summary["start"] = to_json(cb.start);
  r.summary["direction"] = to_json(cb.direction);
  r.summary["speed"] = cb.speed;
  if (samples > 0 && !cb.table.walls.empty()) {
    billiards::Rng rng(cfg.seed);
    const auto est = billiards::corner_width_sampled(cb.table, rng, samples);
    Json cw;
    cw["eps"] = est.eps;
    cw["method"] = billiards::to_string(est.method);
    cw["samples_used"] = est.samples_used;
    if (est.eps > 0.0) {
      cw["bound"] = billiards::collision_bound(static_cast<int>(cb.table.walls.size()), est.eps).str();
    }
    r.summary["corner_width"] = cw;
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"catkit: comparison geometry, flag complexes, puff pastries and billiards"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  app.add_option("--seed", seed, "Run seed (falls back to CATKIT_SEED, then 0)");
  app.add_option("--tol", tol, "Numeric tolerance (each command has its own default)");
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--out", cfg.out, "Write the report here instead of stdout");

  Io io{in};
  std::function<Report()> action;
  auto input_opt = [&](CLI::App* c) { c->add_option("--input,-i", io.input, "Input file ('-' for stdin)"); };
  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  // metric
  auto* metric = group("metric", "Finite metric spaces");
  auto* mv = metric->add_subcommand("validate", "Check the metric axioms");
  input_opt(mv);
  mv->callback([&] { action = [&] { return metric_validate(cfg, io); }; });
  std::string gh_x, gh_y;
  auto* mg = metric->add_subcommand("gh", "Brute-force Gromov-Hausdorff-type distance");
  mg->add_option("--x", gh_x)->required();
  mg->add_option("--y", gh_y)->required();
  mg->callback([&] { action = [&] { return metric_gh(gh_x, gh_y, io); }; });

  // cat4
  auto* cat4 = group("cat4", "Four-point comparison tests");
  int kappa = 0;
  bool all_splittings = false;
  auto* cc = cat4->add_subcommand("check", "CAT(kappa) test per quadruple (JSONL)");
  input_opt(cc);
  cc->add_option("--kappa", kappa)->check(CLI::IsMember({-1, 0, 1}));
  cc->add_flag("--all-splittings", all_splittings, "Worst case over every role assignment");
  cc->callback([&] { action = [&] { return cat4_check(cfg, io, kappa, all_splittings); }; });
  auto* cl = cat4->add_subcommand("classify", "E4/P4/N4 classification per quadruple (JSONL)");
  input_opt(cl);
  cl->callback([&] { action = [&] { return cat4_classify(cfg, io); }; });
  std::string model = "euclidean";
  long count = 100;
  int dim = 3, nodes = 20;
  auto* cs = cat4->add_subcommand("sample", "Emit seeded quadruples");
  cs->add_option("--model", model)->check(CLI::IsMember({"euclidean", "sphere", "hyperbolic", "tree", "tree-product"}));
  cs->add_option("--count", count)->check(CLI::NonNegativeNumber);
  cs->add_option("--dim", dim)->check(CLI::PositiveNumber);
  cs->add_option("--nodes", nodes)->check(CLI::Range(4, 1000));
  cs->callback([&] { action = [&] { return cat4_sample(cfg, model, count, dim, nodes); }; });

  // complex
  auto* cx = group("complex", "Simplicial and cubical complexes");
  bool witness = false;
  std::string sphere_metric = "all-right";
  auto* cf = cx->add_subcommand("flag", "Flag test and CAT(1) verdict");
  input_opt(cf);
  cf->add_flag("--witness", witness, "Emit the clique and loop witnesses");
  cf->add_option("--metric", sphere_metric)->check(CLI::IsMember({"all-right", "sides-at-least-half-pi"}));
  cf->callback([&] { action = [&] { return complex_flag(io, witness, sphere_metric); }; });
  std::string simplex_ids;
  auto* ck = cx->add_subcommand("link", "Link of a simplex");
  input_opt(ck);
  ck->add_option("--simplex", simplex_ids, "Comma-separated vertex ids (empty: whole complex)");
  ck->callback([&] { action = [&] { return complex_link(io, simplex_ids); }; });
  auto* cb = cx->add_subcommand("bary", "Barycentric subdivision");
  input_opt(cb);
  cb->callback([&] { action = [&] { return complex_bary(io); }; });
  auto* cu = cx->add_subcommand("cubical", "Cubical analog and its vertex links");
  input_opt(cu);
  cu->callback([&] { action = [&] { return complex_cubical(io); }; });
  int leaves = 4;
  bool emit_complex = false;
  auto* bh = cx->add_subcommand("bhv", "Link complex of the tree space");
  bh->add_option("--n", leaves)->check(CLI::Range(3, 7));
  bh->add_flag("--witness", witness);
  bh->add_flag("--emit-complex", emit_complex);
  bh->callback([&] { action = [&] { return complex_bhv(leaves, witness, emit_complex); }; });

  // pastry
  auto* pp = group("pastry", "Puff pastries");
  std::string bodies, array, from, to, eps_text;
  long samples = 1000;
  double box = 2.0;
  int order = 1;
  auto* pd = pp->add_subcommand("dist", "Geodesic between lifted points LEVEL:x,y,...");
  pd->add_option("--bodies", bodies)->required();
  pd->add_option("--array", array, "1-based indices into the bodies, e.g. 1,2,1");
  pd->add_option("--from", from)->required();
  pd->add_option("--to", to)->required();
  pd->callback([&] { action = [&] { return pastry_dist(cfg, io, bodies, array, from, to); }; });
  auto* pc = pp->add_subcommand("check", "End-to-end convexity on seeded pairs");
  pc->add_option("--bodies", bodies)->required();
  pc->add_option("--array", array);
  pc->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  pc->add_option("--box", box, "Pairs are uniform in [-box, box]^m")->check(CLI::PositiveNumber);
  pc->callback([&] { action = [&] { return pastry_check(cfg, io, bodies, array, samples, box); }; });
  auto* pb = pp->add_subcommand("bfk-array", "Index array j_eps(n)");
  pb->add_option("--n", order)->required()->check(CLI::Range(1, 12));
  pb->add_option("--eps", eps_text)->required();
  pb->callback([&] { action = [&] { return pastry_bfk(order, eps_text); }; });

  // billiard
  auto* bi = group("billiard", "Billiards with convex walls");
  BilliardRunArgs bra;
  auto* br = bi->add_subcommand("run", "Simulate one trajectory or a seeded suite");
  br->add_option("--table", bra.table)->required();
  br->add_option("--start", bra.start);
  br->add_option("--direction", bra.direction);
  br->add_option("--trials", bra.trials)->check(CLI::PositiveNumber);
  br->add_option("--max-events", bra.max_events)->check(CLI::PositiveNumber);
  br->add_option("--horizon", bra.horizon)->check(CLI::PositiveNumber);
  br->add_option("--box", bra.box)->check(CLI::PositiveNumber);
  br->add_option("--eps", bra.eps, "Corner width for the collision bound");
  br->add_option("--r1", bra.r1);
  br->add_option("--r2", bra.r2);
  br->callback([&] { action = [&] { return billiard_run(cfg, io, bra); }; });
  int walls = 1;
  std::optional<double> r1, r2;
  auto* bbd = bi->add_subcommand("bound", "Collision bound (ceil(pi/eps)+1)^(n^2)");
  bbd->add_option("--n", walls)->required()->check(CLI::PositiveNumber);
  bbd->add_option("--eps", eps_text);
  bbd->add_option("--r1", r1);
  bbd->add_option("--r2", r2);
  bbd->callback([&] { action = [&] { return billiard_bound(walls, eps_text, r1, r2); }; });
  std::string alpha;
  long trials = 1000;
  auto* bw = bi->add_subcommand("wedge", "Wedge reflection counts against unfolding");
  bw->add_option("--alpha", alpha)->required();
  bw->add_option("--trials", trials)->check(CLI::PositiveNumber);
  bw->callback([&] { action = [&] { return billiard_wedge(cfg, alpha, trials); }; });

  // hardballs
  auto* hb = group("hardballs", "Hard-ball gas");
  HardBallArgs hba;
  auto* hr = hb->add_subcommand("run", "Direct simulation (optionally cross-checked)");
  hr->add_option("--system", hba.system);
  hr->add_option("--balls", hba.balls)->check(CLI::Range(1, 8));
  hr->add_option("--trials", hba.trials)->check(CLI::NonNegativeNumber);
  hr->add_flag("--identical", hba.identical, "Random systems use one radius and mass");
  hr->add_option("--horizon", hba.horizon)->check(CLI::PositiveNumber);
  hr->add_option("--max-events", hba.max_events)->check(CLI::PositiveNumber);
  hr->add_flag("--check", hba.check, "Cross-check against the configuration-space billiard");
  hr->callback([&] { action = [&] { return hardballs_run(cfg, io, hba); }; });
  std::string system;
  long corner_samples = 0;
  auto* hd = hb->add_subcommand("reduce", "Configuration-space billiard of a system");
  hd->add_option("--system", system)->required();
  hd->add_option("--corner-samples", corner_samples, "Sampled corner-width estimate")->check(CLI::NonNegativeNumber);
  hd->callback([&] { action = [&] { return hardballs_reduce(cfg, io, system, corner_samples); }; });

  std::vector<std::string> argv_store{"catkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (seed) {
    cfg.seed = *seed;
  } else if (const char* env = std::getenv("CATKIT_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: CATKIT_SEED is not an integer\n";
      return 2;
    }
  }
  cfg.tol = tol;
  if (cfg.tol && !(*cfg.tol > 0.0)) {
    err << "error: --tol must be positive\n";
    return 2;
  }

  try {
    const Report report = action();
    const std::string text = report.render(cfg);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw Error("cannot write " + cfg.out);
      f << text;
    }
    if (report.summary.contains("error")) err << "error: " << report.summary["error"].get<std::string>() << '\n';
    if (report.summary.contains("error")) return 2;
    return report.ok ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace catkit::cli
