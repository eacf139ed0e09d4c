#include "hopf/scenes.hpp"

#include "hopf/inversion.hpp"
#include "hopf/stereo.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace hopf {

int orientation_sign(HopfVariant variant) { return variant == HopfVariant::quat_left ? -1 : 1; }

std::string_view thread_handedness(HopfVariant variant) {
  return variant == HopfVariant::quat_left ? "left" : "right";
}

std::string format_point(const Vector3<double>& p) {
  return format_number(p.x()) + "," + format_number(p.y()) + "," + format_number(p.z());
}

Curve3 fiber_curve(const HopfConvention<double>& conv, const Vector3<double>& base, int samples) {
  const auto f = fiber(conv, base, samples);
  const auto projected = project_fiber(f);
  Curve3 c;
  c.points = projected.points;
  c.contains_infinity = projected.contains_infinity;
  c.closed = !projected.contains_infinity;
  c.metadata = {{"kind", "fiber"},
                {"base", format_point(f.base)},
                {"variant", std::string(to_string(conv.variant))},
                {"handedness", std::string(thread_handedness(conv.variant))}};
  const auto& rep = f.samples.front();
  if (std::abs(rep.z1()) > 0.0) c.metadata["rho"] = format_number(std::abs(rep.z2()) / std::abs(rep.z1()));
  return c;
}

SceneDocument fiber_scene(const HopfConvention<double>& conv, const Vector3<double>& base, int samples) {
  SceneDocument scene;
  scene.curves.push_back(fiber_curve(conv, base, samples));
  scene.annotations = {{"scene", "fiber"}, {"variant", std::string(to_string(conv.variant))}};
  return scene;
}

SceneDocument tori_scene(const std::vector<double>& latitudes, const ToriOptions& options) {
  if (latitudes.empty()) throw GeometryError(ErrorKind::invalid_argument, "at least one latitude is required");
  HopfConvention<double> conv;
  conv.variant = options.variant;
  SceneDocument scene;
  std::vector<Curve3> threads;
  for (double rho : latitudes) {
    const auto t = latitudinal_torus(rho, options.fibers_per_torus, options.samples_per_fiber, conv);
    Mesh m = sample_torus_mesh(t.torus.R, t.torus.r, options.mesh_nu, options.mesh_nv);
    m.metadata["rho"] = format_number(rho);
    m.metadata["residual"] = format_number(t.torus.residual);
    scene.meshes.push_back(std::move(m));
    for (const auto& base : t.bases) {
      Curve3 c = fiber_curve(conv, base, options.samples_per_fiber);
      c.metadata["rho"] = format_number(rho);
      threads.push_back(std::move(c));
    }
  }
  scene.curves = std::move(threads);
  scene.annotations = {{"scene", "tori"}, {"variant", std::string(to_string(options.variant))}};
  return scene;
}

SceneDocument hypercube_scene(int samples_per_edge) {
  const auto vertices = hypercube_vertices<double>();
  SceneDocument scene;
  for (const auto& [a, b] : hypercube_edges()) {
    Curve3 c;
    c.closed = false;
    for (const auto& x : great_arc(vertices[std::size_t(a)], vertices[std::size_t(b)], samples_per_edge)) {
      c.points.push_back(project(x).value());
    }
    c.metadata = {{"kind", "hypercube_edge"}, {"from", std::to_string(a)}, {"to", std::to_string(b)}};
    scene.curves.push_back(std::move(c));
  }
  scene.annotations = {{"scene", "hypercube"}, {"vertices", "16"}, {"edges", "32"}};
  return scene;
}

SceneDocument apollonius_scene(const Complex<double>& p, const Complex<double>& p2, int count) {
  const auto families = apollonian_families(p, p2, count, count);
  SceneDocument scene;
  for (const auto& c : families.elliptic) scene.planar.emplace_back(PlanarCircle{c, {{"family", "elliptic"}}});
  for (const auto& c : families.hyperbolic) scene.planar.emplace_back(PlanarCircle{c, {{"family", "hyperbolic"}}});
  scene.annotations = {{"scene", "apollonius"},
                       {"p", format_number(p.real()) + "," + format_number(p.imag())},
                       {"p2", format_number(p2.real()) + "," + format_number(p2.imag())}};
  return scene;
}

SceneDocument winding_scene(const Polynomial<double>& poly, double radius, int samples) {
  if (!(radius > 0.0)) throw GeometryError(ErrorKind::invalid_argument, "radius must be positive");
  const auto circle = circle_path(Complex<double>(0), radius, std::size_t(samples));
  const auto image = map_path([&poly](const Complex<double>& z) { return poly(z); }, circle);
  const int roots = count_roots_by_winding(poly, radius);
  SceneDocument scene;
  PlanarPath path;
  path.points = image.samples();
  path.closed = true;
  path.metadata = {{"kind", "image_of_circle"}};
  scene.planar.emplace_back(std::move(path));
  scene.annotations = {{"scene", "winding"},
                       {"radius", format_number(radius)},
                       {"degree", std::to_string(poly.degree())},
                       {"winding_number", std::to_string(roots)}};
  return scene;
}

SceneDocument base_sphere_scene(int n_longitude, int n_latitude) {
  SceneDocument scene;
  scene.meshes.push_back(sample_sphere_mesh(n_longitude, n_latitude));
  scene.annotations = {{"scene", "base-sphere"}};
  return scene;
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty()) throw GeometryError(ErrorKind::invalid_argument, "empty number in '" + std::string(whole) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value)) {
    throw GeometryError(ErrorKind::invalid_argument, "cannot parse '" + std::string(whole) + "' as a number");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Complex<double> parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw GeometryError(ErrorKind::invalid_argument, "empty complex literal");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imaginary = [&](std::string_view part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, text);
  };
  if (split == std::string_view::npos) return {0.0, imaginary(body)};
  return {parse_real(body.substr(0, split), text), imaginary(body.substr(split))};
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(trim(text.substr(start, comma - start)), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hopf
