#include "hopf/scene.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace hopf {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw GeometryError(ErrorKind::invalid_scene, what); }

double round9(double x) {
  if (!std::isfinite(x)) invalid("non-finite number in scene");
  return std::strtod(format_number(x).c_str(), nullptr);
}

json number(double x) { return round9(x); }

json point_json(const Vector3<double>& p) { return json::array({number(p.x()), number(p.y()), number(p.z())}); }

json metadata_json(const Metadata& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

void check_finite(const Vector3<double>& p, const std::string& where) {
  if (!p.allFinite()) invalid(where + ": non-finite coordinate");
}

// Schema helpers: each takes the path of the value for error messages.
const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) invalid(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(path + ": missing required field '" + key + "'");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) invalid(path + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(path + ": non-finite number");
  return x;
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) invalid(path + ": expected a boolean");
  return v.get<bool>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) invalid(path + ": expected an array");
  return v;
}

Metadata as_metadata(const json& v, const std::string& path) {
  if (!v.is_object()) invalid(path + ": expected an object of strings");
  Metadata out;
  for (const auto& [k, item] : v.items()) {
    if (!item.is_string()) invalid(path + "." + k + ": expected a string");
    out[k] = item.get<std::string>();
  }
  return out;
}

Vector3<double> as_point3(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) invalid(path + ": expected [x, y, z]");
  return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]"), as_number(v[2], path + "[2]")};
}

std::complex<double> as_point2(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) invalid(path + ": expected [x, y]");
  return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]")};
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

void validate(const SceneDocument& scene) {
  if (scene.version != SceneDocument::kVersion) invalid("unsupported scene version " + std::to_string(scene.version));
  for (std::size_t i = 0; i < scene.curves.size(); ++i) {
    const auto& c = scene.curves[i];
    const std::string where = idx("curves", i);
    if (c.points.size() < 2) invalid(where + ": a curve needs at least 2 points");
    for (const auto& p : c.points) check_finite(p, where);
    if (c.closed && c.points.front() == c.points.back()) invalid(where + ": closed curve repeats its first point");
  }
  for (std::size_t i = 0; i < scene.meshes.size(); ++i) {
    const auto& m = scene.meshes[i];
    const std::string where = idx("meshes", i);
    for (const auto& p : m.vertices) check_finite(p, where);
    const int n = int(m.vertices.size());
    for (const auto& t : m.triangles) {
      for (int v : t) {
        if (v < 0 || v >= n) invalid(where + ": triangle index out of range");
      }
      if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) invalid(where + ": degenerate triangle");
    }
  }
  for (std::size_t i = 0; i < scene.planar.size(); ++i) {
    if (const auto* path = std::get_if<PlanarPath>(&scene.planar[i])) {
      if (path->points.size() < 2) invalid(idx("planar", i) + ": a path needs at least 2 points");
      for (const auto& z : path->points) {
        if (!is_finite(z)) invalid(idx("planar", i) + ": non-finite coordinate");
      }
    }
  }
}

Curve3 clip_curve(const Curve3& curve, double radius) {
  if (!curve.contains_infinity) return curve;
  const double limit = radius * (1.0 + 1e-6);
  const auto& pts = curve.points;
  const std::size_t n = pts.size();
  // Longest run of consecutive points inside the ball. The curve is open at
  // infinity, so runs do not wrap around.
  std::size_t best_start = 0, best_len = 0;
  for (std::size_t i = 0; i < n;) {
    if (pts[i].norm() > limit) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && pts[j].norm() <= limit) ++j;
    if (j - i > best_len) {
      best_start = i;
      best_len = j - i;
    }
    i = j;
  }
  // Point where the segment from inside point a to outside point b leaves the ball.
  auto exit_point = [radius](const Vector3<double>& a, const Vector3<double>& b) {
    const Vector3<double> d = b - a;
    const double qa = d.squaredNorm();
    const double qb = 2.0 * a.dot(d);
    const double qc = a.squaredNorm() - radius * radius;
    const double s = (-qb + std::sqrt(std::max(0.0, qb * qb - 4.0 * qa * qc))) / (2.0 * qa);
    return Vector3<double>(a + std::clamp(s, 0.0, 1.0) * d);
  };
  Curve3 out;
  out.metadata = curve.metadata;
  out.contains_infinity = true;
  out.closed = false;
  if (best_len > 0) {
    if (best_start > 0) out.points.push_back(exit_point(pts[best_start], pts[best_start - 1]));
    out.points.insert(out.points.end(), pts.begin() + long(best_start), pts.begin() + long(best_start + best_len));
    const std::size_t after = best_start + best_len;
    if (after < n) out.points.push_back(exit_point(pts[after - 1], pts[after]));
  }
  if (out.points.size() < 2) invalid("curve through infinity has fewer than 2 points inside the clip radius");
  return out;
}

std::string export_json(const SceneDocument& scene, const ExportOptions& options) {
  validate(scene);
  json curves = json::array();
  for (const auto& raw : scene.curves) {
    const Curve3 c = clip_curve(raw, options.clip_radius);
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(point_json(p));
    curves.push_back({{"points", std::move(pts)},
                      {"closed", c.closed},
                      {"metadata", metadata_json(c.metadata)},
                      {"contains_infinity", c.contains_infinity}});
  }
  json meshes = json::array();
  for (const auto& m : scene.meshes) {
    json verts = json::array();
    for (const auto& p : m.vertices) verts.push_back(point_json(p));
    json tris = json::array();
    for (const auto& t : m.triangles) tris.push_back(json::array({t[0], t[1], t[2]}));
    meshes.push_back({{"vertices", std::move(verts)}, {"triangles", std::move(tris)}, {"metadata", metadata_json(m.metadata)}});
  }
  json planar = json::array();
  for (const auto& item : scene.planar) {
    if (const auto* c = std::get_if<PlanarCircle>(&item)) {
      planar.push_back({{"type", "generalized_circle"},
                        {"alpha", number(c->circle.alpha())},
                        {"beta", json::array({number(c->circle.beta().real()), number(c->circle.beta().imag())})},
                        {"gamma", number(c->circle.gamma())},
                        {"metadata", metadata_json(c->metadata)}});
    } else {
      const auto& p = std::get<PlanarPath>(item);
      json pts = json::array();
      for (const auto& z : p.points) pts.push_back(json::array({number(z.real()), number(z.imag())}));
      planar.push_back({{"type", "path"}, {"points", std::move(pts)}, {"closed", p.closed}, {"metadata", metadata_json(p.metadata)}});
    }
  }
  const json doc = {{"version", scene.version},
                    {"curves", std::move(curves)},
                    {"meshes", std::move(meshes)},
                    {"planar", std::move(planar)},
                    {"annotations", metadata_json(scene.annotations)}};
  return doc.dump() + "\n";
}

SceneDocument import_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  SceneDocument scene;
  const json& version = field(doc, "version", "$");
  if (!version.is_number_integer()) invalid("$.version: expected an integer");
  scene.version = version.get<int>();
  if (scene.version != SceneDocument::kVersion) invalid("$.version: unsupported version " + std::to_string(scene.version));

  const json& curves = as_array(field(doc, "curves", "$"), "$.curves");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string path = idx("$.curves", i);
    Curve3 c;
    const json& pts = as_array(field(curves[i], "points", path), path + ".points");
    for (std::size_t k = 0; k < pts.size(); ++k) c.points.push_back(as_point3(pts[k], idx(path + ".points", k)));
    c.closed = as_bool(field(curves[i], "closed", path), path + ".closed");
    c.metadata = as_metadata(field(curves[i], "metadata", path), path + ".metadata");
    c.contains_infinity = as_bool(field(curves[i], "contains_infinity", path), path + ".contains_infinity");
    scene.curves.push_back(std::move(c));
  }

  const json& meshes = as_array(field(doc, "meshes", "$"), "$.meshes");
  for (std::size_t i = 0; i < meshes.size(); ++i) {
    const std::string path = idx("$.meshes", i);
    Mesh m;
    const json& verts = as_array(field(meshes[i], "vertices", path), path + ".vertices");
    for (std::size_t k = 0; k < verts.size(); ++k) m.vertices.push_back(as_point3(verts[k], idx(path + ".vertices", k)));
    const json& tris = as_array(field(meshes[i], "triangles", path), path + ".triangles");
    for (std::size_t k = 0; k < tris.size(); ++k) {
      const json& t = tris[k];
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
          !t[2].is_number_integer()) {
        invalid(idx(path + ".triangles", k) + ": expected three integer indices");
      }
      m.triangles.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    m.metadata = as_metadata(field(meshes[i], "metadata", path), path + ".metadata");
    scene.meshes.push_back(std::move(m));
  }

  const json& planar = as_array(field(doc, "planar", "$"), "$.planar");
  for (std::size_t i = 0; i < planar.size(); ++i) {
    const std::string path = idx("$.planar", i);
    const json& type = field(planar[i], "type", path);
    if (!type.is_string()) invalid(path + ".type: expected a string");
    const Metadata meta = as_metadata(field(planar[i], "metadata", path), path + ".metadata");
    if (type == "generalized_circle") {
      const double alpha = as_number(field(planar[i], "alpha", path), path + ".alpha");
      const auto beta = as_point2(field(planar[i], "beta", path), path + ".beta");
      const double gamma = as_number(field(planar[i], "gamma", path), path + ".gamma");
      try {
        scene.planar.emplace_back(PlanarCircle{GeneralizedCircle<double>(alpha, beta, gamma), meta});
      } catch (const GeometryError& e) {
        invalid(path + ": " + e.what());
      }
    } else if (type == "path") {
      PlanarPath p;
      const json& pts = as_array(field(planar[i], "points", path), path + ".points");
      for (std::size_t k = 0; k < pts.size(); ++k) p.points.push_back(as_point2(pts[k], idx(path + ".points", k)));
      p.closed = as_bool(field(planar[i], "closed", path), path + ".closed");
      p.metadata = meta;
      scene.planar.emplace_back(std::move(p));
    } else {
      invalid(path + ".type: unknown planar type '" + type.get<std::string>() + "'");
    }
  }
  scene.annotations = as_metadata(field(doc, "annotations", "$"), "$.annotations");
  validate(scene);
  return scene;
}

std::string export_obj(const SceneDocument& scene, const ExportOptions& options) {
  validate(scene);
  std::ostringstream out;
  std::unordered_map<std::string, int> index;
  int next = 1;
  auto vertex = [&](const Vector3<double>& p) {
    const std::string key = format_number(p.x()) + " " + format_number(p.y()) + " " + format_number(p.z());
    const auto [it, inserted] = index.emplace(key, next);
    if (inserted) {
      out << "v " << key << "\n";
      ++next;
    }
    return it->second;
  };
  out << "# hopf scene v" << scene.version << "\n";
  for (std::size_t i = 0; i < scene.curves.size(); ++i) {
    const Curve3 c = clip_curve(scene.curves[i], options.clip_radius);
    out << "o curve_" << i << "\n";
    std::vector<int> ids;
    for (const auto& p : c.points) ids.push_back(vertex(p));
    if (c.closed) ids.push_back(ids.front());
    out << "l";
    for (int id : ids) out << " " << id;
    out << "\n";
  }
  for (std::size_t i = 0; i < scene.meshes.size(); ++i) {
    const auto& m = scene.meshes[i];
    out << "o mesh_" << i << "\n";
    std::vector<int> ids;
    for (const auto& p : m.vertices) ids.push_back(vertex(p));
    for (const auto& t : m.triangles) {
      out << "f " << ids[std::size_t(t[0])] << " " << ids[std::size_t(t[1])] << " " << ids[std::size_t(t[2])] << "\n";
    }
  }
  return out.str();
}

namespace {

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  bool empty() const { return xmin > xmax; }
  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
};

const char* stroke_for(const Metadata& m) {
  const auto it = m.find("family");
  if (it == m.end()) return "#000000";
  if (it->second == "elliptic") return "#1f77b4";
  if (it->second == "hyperbolic") return "#d62728";
  return "#000000";
}

}  // namespace

std::string export_svg(const SceneDocument& scene) {
  validate(scene);
  if (!scene.curves.empty() || !scene.meshes.empty()) invalid("SVG export takes planar content only");

  Box box;
  std::vector<std::complex<double>> line_points;
  for (const auto& item : scene.planar) {
    if (const auto* c = std::get_if<PlanarCircle>(&item)) {
      if (c->circle.is_line()) {
        line_points.push_back(c->circle.line_point());
      } else {
        const auto z = c->circle.center();
        const double r = c->circle.radius();
        box.add(z.real() - r, z.imag() - r);
        box.add(z.real() + r, z.imag() + r);
      }
    } else {
      for (const auto& z : std::get<PlanarPath>(item).points) box.add(z.real(), z.imag());
    }
  }
  if (box.empty()) {
    for (const auto& z : line_points) {
      box.add(z.real() - 1, z.imag() - 1);
      box.add(z.real() + 1, z.imag() + 1);
    }
  }
  if (box.empty()) box = Box{-1, -1, 1, 1};
  if (box.xmax - box.xmin <= 0) {
    box.xmin -= 1;
    box.xmax += 1;
  }
  if (box.ymax - box.ymin <= 0) {
    box.ymin -= 1;
    box.ymax += 1;
  }
  const double margin = 0.05 * std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  box.xmin -= margin;
  box.ymin -= margin;
  box.xmax += margin;
  box.ymax += margin;
  const double width = box.xmax - box.xmin;
  const double height = box.ymax - box.ymin;
  const double stroke = 0.003 * std::max(width, height);

  std::ostringstream out;
  auto f = format_number;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << f(box.xmin) << " " << f(-box.ymax) << " "
      << f(width) << " " << f(height) << "\">\n";
  out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << f(stroke) << "\">\n";
  for (const auto& item : scene.planar) {
    if (const auto* c = std::get_if<PlanarCircle>(&item)) {
      const char* color = stroke_for(c->metadata);
      if (!c->circle.is_line()) {
        const auto z = c->circle.center();
        out << "<circle cx=\"" << f(z.real()) << "\" cy=\"" << f(z.imag()) << "\" r=\"" << f(c->circle.radius())
            << "\" stroke=\"" << color << "\"/>\n";
        continue;
      }
      // Liang-Barsky clip of p + t d against the viewBox.
      const auto p = c->circle.line_point();
      const auto d = std::complex<double>(0, 1) * c->circle.line_normal();
      double t0 = -std::numeric_limits<double>::infinity();
      double t1 = std::numeric_limits<double>::infinity();
      bool visible = true;
      auto clip = [&](double q, double dq, double lo, double hi) {
        if (dq == 0.0) {
          if (q < lo || q > hi) visible = false;
          return;
        }
        double a = (lo - q) / dq, b = (hi - q) / dq;
        if (a > b) std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
      };
      clip(p.real(), d.real(), box.xmin, box.xmax);
      clip(p.imag(), d.imag(), box.ymin, box.ymax);
      if (!visible || t0 >= t1) continue;
      const auto a = p + t0 * d;
      const auto b = p + t1 * d;
      out << "<line x1=\"" << f(a.real()) << "\" y1=\"" << f(a.imag()) << "\" x2=\"" << f(b.real()) << "\" y2=\""
          << f(b.imag()) << "\" stroke=\"" << color << "\"/>\n";
    } else {
      const auto& path = std::get<PlanarPath>(item);
      out << (path.closed ? "<polygon" : "<polyline") << " points=\"";
      for (std::size_t k = 0; k < path.points.size(); ++k) {
        out << (k ? " " : "") << f(path.points[k].real()) << "," << f(path.points[k].imag());
      }
      out << "\" stroke=\"" << stroke_for(path.metadata) << "\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

Mesh sample_torus_mesh(double R, double r, int nu, int nv) {
  if (!(R > r && r > 0.0)) throw GeometryError(ErrorKind::invalid_argument, "torus needs R > r > 0");
  if (nu < 8 || nv < 8) throw GeometryError(ErrorKind::invalid_argument, "torus mesh needs at least 8 steps each way");
  Mesh m;
  m.vertices.reserve(std::size_t(nu) * std::size_t(nv));
  for (int i = 0; i < nu; ++i) {
    const double theta = 2.0 * kPi<double> * i / nu;
    for (int j = 0; j < nv; ++j) {
      const double psi = 2.0 * kPi<double> * j / nv;
      const double w = R + r * std::cos(psi);
      m.vertices.emplace_back(w * std::cos(theta), w * std::sin(theta), r * std::sin(psi));
    }
  }
  auto at = [nu, nv](int i, int j) { return (i % nu) * nv + (j % nv); };
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      const int a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
      m.triangles.push_back({a, b, c});
      m.triangles.push_back({a, c, d});
    }
  }
  m.metadata = {{"kind", "torus"}, {"R", format_number(R)}, {"r", format_number(r)}};
  return m;
}

Mesh sample_sphere_mesh(int n_longitude, int n_latitude) {
  if (n_longitude < 3 || n_latitude < 2) throw GeometryError(ErrorKind::invalid_argument, "sphere mesh is too coarse");
  Mesh m;
  m.vertices.emplace_back(0.0, 0.0, 1.0);
  for (int k = 1; k < n_latitude; ++k) {
    const double polar = kPi<double> * k / n_latitude;
    for (int j = 0; j < n_longitude; ++j) {
      const double az = 2.0 * kPi<double> * j / n_longitude;
      m.vertices.emplace_back(std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az), std::cos(polar));
    }
  }
  m.vertices.emplace_back(0.0, 0.0, -1.0);
  const int south = int(m.vertices.size()) - 1;
  auto ring = [n_longitude](int k, int j) { return 1 + (k - 1) * n_longitude + (j % n_longitude); };
  for (int j = 0; j < n_longitude; ++j) m.triangles.push_back({0, ring(1, j), ring(1, j + 1)});
  for (int k = 1; k + 1 < n_latitude; ++k) {
    for (int j = 0; j < n_longitude; ++j) {
      m.triangles.push_back({ring(k, j), ring(k + 1, j), ring(k + 1, j + 1)});
      m.triangles.push_back({ring(k, j), ring(k + 1, j + 1), ring(k, j + 1)});
    }
  }
  for (int j = 0; j < n_longitude; ++j) m.triangles.push_back({ring(n_latitude - 1, j), south, ring(n_latitude - 1, j + 1)});
  m.metadata = {{"kind", "sphere"}, {"radius", "1"}};
  return m;
}

}  // namespace hopf
