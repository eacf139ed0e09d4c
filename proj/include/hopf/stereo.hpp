#pragma once

#include "hopf/common.hpp"
#include "hopf/generalized_circle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <utility>
#include <vector>

namespace hopf {

/// Point of the unit sphere S^N, stored as a vector in R^{N+1}.
template <typename Scalar, int N>
using PointSn = Vector<Scalar, N + 1>;

template <typename Derived>
bool on_unit_sphere(const Eigen::MatrixBase<Derived>& p, double tol = 1e-12) {
  return std::abs(p.norm() - 1) <= tol;
}

/// Stereographic projection of the unit sphere S^N from its last-coordinate
/// pole onto the hyperplane x_{N+1} = 0: x_i / (1 - x_{N+1}). The pole goes
/// to infinity.
template <typename Derived>
auto project(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  constexpr int kAmbient = Derived::RowsAtCompileTime;
  static_assert(kAmbient >= 2, "project needs a fixed-size vector");
  using Image = Vector<Scalar, kAmbient - 1>;
  const Scalar denom = Scalar(1) - p(kAmbient - 1);
  if (denom <= Scalar(0)) return Extended<Image>::infinity();
  return Extended<Image>(Image(p.template head<kAmbient - 1>() / denom));
}

/// Inverse chart: y -> (2y, |y|^2 - 1) / (|y|^2 + 1); infinity goes to the pole.
template <typename Scalar, int N>
PointSn<Scalar, N> unproject(const Extended<Vector<Scalar, N>>& y) {
  PointSn<Scalar, N> out = PointSn<Scalar, N>::Zero();
  if (y.is_infinite()) {
    out(N) = Scalar(1);
    return out;
  }
  const auto& v = y.value();
  const Scalar s = v.squaredNorm();
  out.template head<N>() = Scalar(2) * v / (s + Scalar(1));
  out(N) = (s - Scalar(1)) / (s + Scalar(1));
  return out;
}

template <typename Scalar, int N>
PointSn<Scalar, N> unproject(const Vector<Scalar, N>& y) {
  return unproject<Scalar, N>(Extended<Vector<Scalar, N>>(y));
}

/// The stereographic chart of S^N, N in {1, 2, 3}, on the unit sphere.
template <typename Scalar, int N>
struct StereoChart {
  static_assert(N >= 1 && N <= 3, "charts exist for S^1, S^2 and S^3");
  static constexpr int dimension = N;

  static PointSn<Scalar, N> pole() {
    PointSn<Scalar, N> p = PointSn<Scalar, N>::Zero();
    p(N) = Scalar(1);
    return p;
  }

  static Extended<Vector<Scalar, N>> project(const PointSn<Scalar, N>& p) { return hopf::project(p); }
  static PointSn<Scalar, N> unproject(const Extended<Vector<Scalar, N>>& y) { return hopf::unproject<Scalar, N>(y); }
};

/// Whether the circle/line in the plane is the projection of a great circle of
/// S^2. Such loci cross the unit circle at antipodal points, which for
/// alpha |z|^2 + 2 Re(conj(beta) z) + gamma = 0 means alpha + gamma = 0.
template <typename Scalar>
bool is_great_circle_image(const GeneralizedCircle<Scalar>& c, const Tolerance& tol = {}) {
  const Scalar scale = std::max({Scalar(1), std::abs(c.beta()), std::abs(c.gamma())});
  return std::abs(c.alpha() + c.gamma()) <= Scalar(tol.geometric) * scale;
}

/// Great-circle distance in radians.
template <typename Derived>
typename Derived::Scalar arc_distance(const Eigen::MatrixBase<Derived>& p, const Eigen::MatrixBase<Derived>& q) {
  using Scalar = typename Derived::Scalar;
  return std::acos(std::clamp(p.dot(q), Scalar(-1), Scalar(1)));
}

/// Area on the unit sphere of a triangle with the given angles: the angle excess.
template <typename Scalar>
Scalar spherical_triangle_area(Scalar alpha, Scalar beta, Scalar gamma) {
  const Scalar excess = alpha + beta + gamma - kPi<Scalar>;
  if (!(excess > Scalar(0))) {
    throw GeometryError(ErrorKind::invalid_argument, "angles of a spherical triangle sum to more than pi");
  }
  return excess;
}

/// The sixteen vertices (+-1/2, +-1/2, +-1/2, +-1/2) of the hypercube
/// inscribed in S^3. Bit k of the index set means coordinate k is negative.
template <typename Scalar = double>
std::vector<Vector4<Scalar>> hypercube_vertices() {
  std::vector<Vector4<Scalar>> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    Vector4<Scalar> v;
    for (int k = 0; k < 4; ++k) v(k) = (mask >> k & 1u) ? Scalar(-0.5) : Scalar(0.5);
    out.push_back(v);
  }
  return out;
}

/// Vertex index pairs whose sign patterns differ in exactly one coordinate.
inline std::vector<std::pair<int, int>> hypercube_edges() {
  std::vector<std::pair<int, int>> out;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = a + 1; b < 16; ++b) {
      if (std::popcount(a ^ b) == 1) out.emplace_back(int(a), int(b));
    }
  }
  return out;
}

/// Samples of the great-circle arc from a to b on S^3 (the chord renormalized),
/// endpoints included.
template <typename Scalar>
std::vector<Vector4<Scalar>> great_arc(const Vector4<Scalar>& a, const Vector4<Scalar>& b, int samples) {
  if (samples < 2) throw GeometryError(ErrorKind::invalid_argument, "an arc needs at least 2 samples");
  std::vector<Vector4<Scalar>> out;
  out.reserve(std::size_t(samples));
  for (int k = 0; k < samples; ++k) {
    const Scalar t = Scalar(k) / Scalar(samples - 1);
    out.push_back(((Scalar(1) - t) * a + t * b).normalized());
  }
  return out;
}

}  // namespace hopf
