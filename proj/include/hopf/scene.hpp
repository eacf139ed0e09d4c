#pragma once

#include "hopf/common.hpp"
#include "hopf/generalized_circle.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace hopf {

using Metadata = std::map<std::string, std::string>;

/// A sampled space curve. Closed curves do not repeat their first point.
struct Curve3 {
  std::vector<Vector3<double>> points;
  bool closed = true;
  Metadata metadata;
  /// The curve passes through infinity (a projected fiber through the pole).
  /// Exporters clip such curves to a ball and write them as open.
  bool contains_infinity = false;
};

struct Mesh {
  std::vector<Vector3<double>> vertices;
  std::vector<std::array<int, 3>> triangles;
  Metadata metadata;
};

struct PlanarCircle {
  GeneralizedCircle<double> circle;
  Metadata metadata;
};

struct PlanarPath {
  std::vector<std::complex<double>> points;
  bool closed = true;
  Metadata metadata;
};

using PlanarItem = std::variant<PlanarCircle, PlanarPath>;

struct SceneDocument {
  static constexpr int kVersion = 1;
  int version = kVersion;
  std::vector<Curve3> curves;
  std::vector<Mesh> meshes;
  std::vector<PlanarItem> planar;
  Metadata annotations;
};

struct ExportOptions {
  /// Radius of the ball that curves through infinity are clipped to.
  double clip_radius = 10.0;
};

/// Checks the document invariants; throws GeometryError(invalid_scene).
void validate(const SceneDocument& scene);

/// Compact JSON with sorted keys and every number rounded to 9 significant
/// digits. Non-finite numbers are rejected.
std::string export_json(const SceneDocument& scene, const ExportOptions& options = {});
SceneDocument import_json(const std::string& text);

/// One `o` group per curve and mesh. Vertices are shared between records
/// whose formatted positions coincide; curves become `l` records (closed ones
/// end on their first index) and meshes `f` records.
std::string export_obj(const SceneDocument& scene, const ExportOptions& options = {});

/// Planar items only. The viewBox covers the finite content with a 5% margin;
/// the y axis points up; lines are clipped to the viewBox.
std::string export_svg(const SceneDocument& scene);

/// printf("%.9g") with negative zero written as 0.
std::string format_number(double x);

/// The curve as exporters write it: clipped to the ball and opened if it
/// contains infinity, untouched otherwise.
Curve3 clip_curve(const Curve3& curve, double radius);

/// Grid triangulation of ((R + r cos psi) cos theta, (R + r cos psi) sin theta, r sin psi)
/// with nu steps in theta and nv in psi.
Mesh sample_torus_mesh(double R, double r, int nu, int nv);

/// Latitude-longitude triangulation of the unit sphere with single pole vertices.
Mesh sample_sphere_mesh(int n_longitude, int n_latitude);

}  // namespace hopf
