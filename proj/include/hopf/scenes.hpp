#pragma once

#include "hopf/complex_plane.hpp"
#include "hopf/hopf.hpp"
#include "hopf/scene.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Sign of the linking number of two fibers oriented by increasing t.
int orientation_sign(HopfVariant variant);

/// "right" for riemann and quat-right fibers, "left" for quat-left.
std::string_view thread_handedness(HopfVariant variant);

/// The projected fiber over `base` with metadata base, variant, handedness
/// and, off the north pole, the latitude rho = |z2 / z1|.
Curve3 fiber_curve(const HopfConvention<double>& conv, const Vector3<double>& base, int samples);

SceneDocument fiber_scene(const HopfConvention<double>& conv, const Vector3<double>& base, int samples);

struct ToriOptions {
  int fibers_per_torus = 12;
  int samples_per_fiber = 256;
  int mesh_nu = 96;
  int mesh_nv = 48;
  HopfVariant variant = HopfVariant::riemann;
};

/// One mesh per latitude, built from the fitted (R, r), followed by the
/// fiber threads of every torus.
SceneDocument tori_scene(const std::vector<double>& latitudes, const ToriOptions& options = {});

/// The 32 hypercube edges as projected great-circle arcs, with endpoints
/// exactly at the projected vertices.
SceneDocument hypercube_scene(int samples_per_edge = 33);

/// Both Apollonian families of (p, p2), `count` circles each, and the two
/// points as annotations.
SceneDocument apollonius_scene(const Complex<double>& p, const Complex<double>& p2, int count);

/// The image of the circle |z| = radius under the polynomial as a planar path,
/// with the winding number about 0 and the root count as annotations.
SceneDocument winding_scene(const Polynomial<double>& poly, double radius, int samples = 1024);

SceneDocument base_sphere_scene(int n_longitude = 48, int n_latitude = 24);

/// Parses "1", "-2.5", "3i", "1+2i", "-i" style complex literals.
Complex<double> parse_complex(std::string_view text);

/// Splits on commas and parses each field as a real number.
std::vector<double> parse_reals(std::string_view text);

std::string format_point(const Vector3<double>& p);

}  // namespace hopf
