#include "catkit/cli/json_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <regex>
#include <sstream>

#include "catkit/error.hpp"

namespace catkit::cli {

Json parse_json(std::string_view text, std::size_t base_offset, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = base_offset + (e.byte > 0 ? e.byte - 1 : 0);
    // Drop nlohmann's "[json.exception...] parse error at line L, column C: " prefix.
    std::string what = e.what();
    const auto colon = what.find(": ", what.find("parse error"));
    throw Error(source + ": parse error at byte " + std::to_string(at) + ": " +
                (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

std::vector<Json> parse_jsonl(std::string_view text, const std::string& source) {
  std::vector<Json> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_json(line, pos, source));
    pos = end + 1;
  }
  return out;
}

std::string read_text(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream ss;
  if (path == "-" || path.empty()) {
    ss << stdin_stream.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  ss << f.rdbuf();
  return ss.str();
}

double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([0-9]*\.?[0-9]*(?:[eE][-+]?[0-9]+)?)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double factor = m[1].str().empty() ? 1.0 : std::stod(m[1].str());
    const double divisor = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (divisor == 0.0) throw Error("angle divides by zero: " + text);
    return factor * std::numbers::pi / divisor;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error("not an angle: " + text);
  }
  if (text.find_first_not_of(" \t", used) != std::string::npos) throw Error("not an angle: " + text);
  return v;
}

geometry::Vec parse_vector(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw Error("");
    } catch (const std::exception&) {
      throw Error("not a number list: " + text);
    }
  }
  if (vals.empty()) throw Error("empty vector");
  return Eigen::Map<geometry::Vec>(vals.data(), static_cast<long>(vals.size()));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw Error("");
    } catch (const std::exception&) {
      throw Error("not an integer list: " + text);
    }
  }
  return out;
}

Json to_json(const geometry::Vec& v) {
  Json a = Json::array();
  for (long i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw Error(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string label_of(const Json& id) { return id.is_string() ? id.get<std::string>() : id.dump(); }

Json id_json(const std::string& label) {
  // Labels that read back as integers are emitted as numbers.
  if (!label.empty() && label.find_first_not_of("-0123456789") == std::string::npos && label != "-") {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(label, &used);
      if (used == label.size() && std::to_string(v) == label) return v;
    } catch (const std::exception&) {
    }
  }
  return label;
}

geometry::HalfSpace halfspace_from(const Json& j) {
  return {vec_from_json(field(j, "normal"), "normal"), number(field(j, "offset"), "offset")};
}

Json halfspace_json(const geometry::HalfSpace& h) {
  Json o;
  o["normal"] = to_json(h.normal);
  o["offset"] = h.offset;
  return o;
}

geometry::Cylinder cylinder_from(const Json& j, int default_dim) {
  geometry::Cylinder c;
  c.i = integer(field(j, "i"), "i");
  c.j = integer(field(j, "j"), "j");
  c.radius = number(field(j, "radius"), "radius");
  c.block = j.contains("block") ? integer(j["block"], "block") : 3;
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_array() || w.size() != 2) throw Error("cylinder weights must be [w_i, w_j]");
    c.weight_i = number(w[0], "weight");
    c.weight_j = number(w[1], "weight");
  }
  c.dim = j.contains("dim") ? integer(j["dim"], "dim") : std::max(default_dim, c.block * (std::max(c.i, c.j) + 1));
  return c;
}

int implied_dim(const Json& body) {
  const Json* params = nullptr;
  if (body.contains("type") && body["type"] == "cylinder") params = &body;
  if (body.contains("cylinder")) params = &body["cylinder"];
  if (!params) return 0;
  const int block = params->contains("block") ? (*params)["block"].get<int>() : 3;
  if (params->contains("dim")) return (*params)["dim"].get<int>();
  return block * (std::max((*params)["i"].get<int>(), (*params)["j"].get<int>()) + 1);
}

}  // namespace

geometry::Vec vec_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw Error(std::string(what) + " must be a nonempty array of numbers");
  geometry::Vec v(static_cast<long>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<long>(i)) = number(j[i], what);
  return v;
}

metric::FiniteMetricSpace metric_from_json(const Json& j) {
  const auto& dist = field(j, "dist");
  if (!dist.is_array()) throw Error("dist must be an array of rows");
  const long n = static_cast<long>(dist.size());
  Eigen::MatrixXd m(n, n);
  for (long i = 0; i < n; ++i) {
    if (!dist[i].is_array() || static_cast<long>(dist[i].size()) != n) throw Error("dist must be a square matrix");
    for (long k = 0; k < n; ++k) m(i, k) = number(dist[i][k], "distance");
  }
  if (!j.contains("labels")) return metric::FiniteMetricSpace(m);
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) labels.push_back(label_of(l));
  return metric::FiniteMetricSpace(std::move(labels), m);
}

Json to_json(const metric::FiniteMetricSpace& m) {
  Json o;
  o["labels"] = m.labels();
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json r = Json::array();
    for (int k = 0; k < m.size(); ++k) r.push_back(m(i, k));
    rows.push_back(r);
  }
  o["dist"] = rows;
  return o;
}

cat::Quadruple quadruple_from_json(const Json& j) {
  cat::Quadruple q;
  q.pq = number(field(j, "pq"), "pq");
  q.px = number(field(j, "px"), "px");
  q.py = number(field(j, "py"), "py");
  q.qx = number(field(j, "qx"), "qx");
  q.qy = number(field(j, "qy"), "qy");
  q.xy = number(field(j, "xy"), "xy");
  return q;
}

Json to_json(const cat::Quadruple& q) {
  Json o;
  o["pq"] = q.pq;
  o["px"] = q.px;
  o["py"] = q.py;
  o["qx"] = q.qx;
  o["qy"] = q.qy;
  o["xy"] = q.xy;
  return o;
}

complex::SimplicialComplex complex_from_json(const Json& j) {
  const auto& verts = field(j, "vertices");
  if (!verts.is_array()) throw Error("vertices must be an array");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& v : verts) {
    const std::string l = label_of(v);
    if (!index.emplace(l, static_cast<int>(labels.size())).second) throw Error("duplicate vertex " + l);
    labels.push_back(l);
  }
  std::vector<complex::Simplex> faces;
  if (j.contains("maximal")) {
    for (const auto& f : j["maximal"]) {
      if (!f.is_array()) throw Error("faces must be arrays of vertices");
      complex::Simplex s;
      for (const auto& v : f) {
        auto it = index.find(label_of(v));
        if (it == index.end()) throw Error("face uses unknown vertex " + label_of(v));
        s.push_back(it->second);
      }
      faces.push_back(std::move(s));
    }
  }
  return complex::SimplicialComplex(std::move(labels), std::move(faces));
}

Json simplex_to_json(const complex::SimplicialComplex& s, const complex::Simplex& sigma) {
  Json a = Json::array();
  for (int v : sigma) a.push_back(id_json(s.labels()[v]));
  return a;
}

Json to_json(const complex::SimplicialComplex& s) {
  Json o;
  Json verts = Json::array();
  for (const auto& l : s.labels()) verts.push_back(id_json(l));
  o["vertices"] = verts;
  Json faces = Json::array();
  for (const auto& m : s.maximal_faces()) faces.push_back(simplex_to_json(s, m));
  o["maximal"] = faces;
  return o;
}

complex::Simplex simplex_from_ids(const complex::SimplicialComplex& s, const std::string& ids) {
  complex::Simplex sigma;
  std::stringstream ss(ids);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto& labels = s.labels();
    auto it = std::find(labels.begin(), labels.end(), item);
    if (it == labels.end()) throw Error("unknown vertex " + item);
    sigma.push_back(static_cast<int>(it - labels.begin()));
  }
  std::sort(sigma.begin(), sigma.end());
  return sigma;
}

geometry::ConvexBody body_from_json(const Json& j, int default_dim) {
  if (!j.is_object()) throw Error("a body must be a JSON object");
  if (j.contains("type")) {
    const std::string type = j["type"].get<std::string>();
    if (type == "cylinder") return cylinder_from(j, default_dim);
    if (type == "halfspace") return halfspace_from(j);
    if (type == "ball") return geometry::Ball{vec_from_json(field(j, "center"), "center"), number(field(j, "radius"), "radius")};
    throw Error("unknown body type " + type);
  }
  if (j.contains("halfspace")) return halfspace_from(j["halfspace"]);
  if (j.contains("ball")) {
    const auto& b = j["ball"];
    return geometry::Ball{vec_from_json(field(b, "center"), "center"), number(field(b, "radius"), "radius")};
  }
  if (j.contains("polytope")) {
    const auto& p = j["polytope"];
    geometry::Polytope poly;
    for (const auto& f : field(p, "faces")) poly.faces.push_back(halfspace_from(f));
    if (p.contains("dim")) {
      poly.dim = integer(p["dim"], "dim");
    } else if (!poly.faces.empty()) {
      poly.dim = static_cast<int>(poly.faces.front().normal.size());
    } else {
      poly.dim = default_dim;
    }
    return poly;
  }
  if (j.contains("cylinder")) return cylinder_from(j["cylinder"], default_dim);
  throw Error("unknown body; expected halfspace, ball, polytope or cylinder");
}

Json to_json(const geometry::ConvexBody& b) {
  Json o;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, geometry::HalfSpace>) {
          o["halfspace"] = halfspace_json(s);
        } else if constexpr (std::is_same_v<T, geometry::Ball>) {
          o["ball"] = {{"center", to_json(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, geometry::Polytope>) {
          Json faces = Json::array();
          for (const auto& h : s.faces) faces.push_back(halfspace_json(h));
          o["polytope"] = {{"dim", s.dim}, {"faces", faces}};
        } else {
          o["type"] = "cylinder";
          o["i"] = s.i;
          o["j"] = s.j;
          o["radius"] = s.radius;
          o["weights"] = {s.weight_i, s.weight_j};
          o["dim"] = s.dim;
          o["block"] = s.block;
        }
      },
      b.shape());
  return o;
}

std::vector<geometry::ConvexBody> bodies_from_json(const Json& j) {
  const Json* list = &j;
  int dim = 0;
  if (j.is_object()) {
    if (j.contains("bodies")) {
      list = &j["bodies"];
    } else if (j.contains("walls")) {
      list = &j["walls"];
    } else {
      throw Error("expected an array of bodies or an object with \"bodies\"/\"walls\"");
    }
    if (j.contains("dim")) dim = integer(j["dim"], "dim");
  }
  if (!list->is_array()) throw Error("bodies must be an array");
  for (const auto& b : *list) {
    if (b.is_object()) dim = std::max(dim, implied_dim(b));
  }
  std::vector<geometry::ConvexBody> out;
  for (const auto& b : *list) out.push_back(body_from_json(b, dim));
  return out;
}

billiards::BilliardTable table_from_json(const Json& j) {
  billiards::BilliardTable t;
  t.walls = bodies_from_json(j);
  if (j.is_object() && j.contains("dim")) {
    t.dim = integer(j["dim"], "dim");
  } else if (!t.walls.empty()) {
    t.dim = t.walls.front().dimension();
  } else {
    throw Error("a table without walls needs \"dim\"");
  }
  t.validate();
  return t;
}

billiards::HardBallSystem system_from_json(const Json& j) {
  billiards::HardBallSystem s;
  for (const auto& b : field(j, "balls")) {
    s.radii.push_back(number(field(b, "radius"), "radius"));
    s.masses.push_back(b.contains("mass") ? number(b["mass"], "mass") : 1.0);
    const auto p = vec_from_json(field(b, "position"), "position");
    const auto v = vec_from_json(field(b, "velocity"), "velocity");
    if (p.size() != 3 || v.size() != 3) throw Error("ball position/velocity must have 3 entries");
    s.positions.emplace_back(p);
    s.velocities.emplace_back(v);
  }
  s.validate();
  return s;
}

Json to_json(const billiards::HardBallSystem& s) {
  Json balls = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json b;
    b["radius"] = s.radii[i];
    b["mass"] = s.masses[i];
    b["position"] = to_json(geometry::Vec(s.positions[i]));
    b["velocity"] = to_json(geometry::Vec(s.velocities[i]));
    balls.push_back(b);
  }
  return Json{{"balls", balls}};
}

}  // namespace catkit::cli
