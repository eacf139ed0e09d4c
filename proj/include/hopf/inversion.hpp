#pragma once

#include "hopf/common.hpp"
#include "hopf/generalized_circle.hpp"
#include "hopf/moebius.hpp"

#include <cmath>
#include <vector>

namespace hopf {

/// Sphere in R^Dim (a circle when Dim = 2).
template <typename Scalar, int Dim>
class SphereN {
 public:
  using Point = Vector<Scalar, Dim>;

  SphereN(const Point& center, Scalar radius) : center_(center), radius_(radius) {
    if (!(radius > Scalar(0)) || !std::isfinite(radius)) {
      throw GeometryError(ErrorKind::invalid_argument, "sphere radius must be positive");
    }
  }

  const Point& center() const noexcept { return center_; }
  Scalar radius() const noexcept { return radius_; }

 private:
  Point center_;
  Scalar radius_;
};

template <typename Scalar>
using Circle2 = SphereN<Scalar, 2>;

template <typename Scalar>
Complex<Scalar> to_complex(const Vector2<Scalar>& v) {
  return {v.x(), v.y()};
}

template <typename Scalar>
Vector2<Scalar> to_vector(const Complex<Scalar>& z) {
  return {z.real(), z.imag()};
}

template <typename Scalar>
Circle2<Scalar> make_circle(const Complex<Scalar>& center, Scalar radius) {
  return Circle2<Scalar>(to_vector(center), radius);
}

/// a + (r / |p - a|)^2 (p - a); the center and infinity are exchanged.
template <typename Scalar, int Dim>
Extended<Vector<Scalar, Dim>> invert_point(const SphereN<Scalar, Dim>& s, const Extended<Vector<Scalar, Dim>>& p) {
  if (p.is_infinite()) return s.center();
  const Vector<Scalar, Dim> offset = p.value() - s.center();
  const Scalar d2 = offset.squaredNorm();
  if (d2 == Scalar(0)) return Extended<Vector<Scalar, Dim>>::infinity();
  return Vector<Scalar, Dim>(s.center() + (s.radius() * s.radius() / d2) * offset);
}

template <typename Scalar>
RiemannPoint<Scalar> invert_point(const Circle2<Scalar>& s, const RiemannPoint<Scalar>& p) {
  const Complex<Scalar> a = to_complex(s.center());
  if (p.is_infinite()) return a;
  const Complex<Scalar> offset = p.value() - a;
  const Scalar d2 = std::norm(offset);
  if (d2 == Scalar(0)) return RiemannPoint<Scalar>::infinity();
  return RiemannPoint<Scalar>(a + (s.radius() * s.radius() / d2) * offset);
}

/// Image of a circle or line under inversion in s. In coordinates centered on
/// s and scaled by its radius, inversion is u -> 1 / conj(u), which swaps the
/// alpha and gamma coefficients.
template <typename Scalar>
GeneralizedCircle<Scalar> invert_circle(const Circle2<Scalar>& s, const GeneralizedCircle<Scalar>& k) {
  const Complex<Scalar> a = to_complex(s.center());
  const auto local = pull_back(k, a, s.radius());
  const GeneralizedCircle<Scalar> swapped(local.gamma(), local.beta(), local.alpha());
  return push_forward(swapped, a, s.radius());
}

/// The Moebius map equal to inversion in k followed by inversion in c. The two
/// complex conjugations cancel, leaving a holomorphic map.
template <typename Scalar>
MoebiusMap<Scalar> compose_inversions(const Circle2<Scalar>& c, const Circle2<Scalar>& k) {
  using C = Complex<Scalar>;
  const C cc = to_complex(c.center());
  const C kc = to_complex(k.center());
  const Scalar r2 = c.radius() * c.radius();
  const Scalar s2 = k.radius() * k.radius();
  // i_K(z) = k + s^2 / conj(z - k); i_C(w) = c + r^2 / conj(w - c).
  const C delta = std::conj(kc) - std::conj(cc);
  const C num_z = cc * delta + r2;
  const C num_1 = -(cc * kc * delta) + cc * s2 - r2 * kc;
  const C den_z = delta;
  const C den_1 = s2 - kc * delta;
  return MoebiusMap<Scalar>(num_z, num_1, den_z, den_1);
}

template <typename Scalar>
struct ApollonianFamilies {
  /// Circles through both points; the line through them is the degenerate member.
  std::vector<GeneralizedCircle<Scalar>> elliptic;
  /// Circles for which the two points are inverse; the perpendicular bisector
  /// is the degenerate member.
  std::vector<GeneralizedCircle<Scalar>> hyperbolic;
};

/// Both Apollonian families of the pair (p, p2). Each list starts with its
/// line member. Elliptic centers sit on the perpendicular bisector at
/// stations 0, +h/2, -h/2, +h, -h, ... (h is half the distance between the
/// points); hyperbolic radii follow h * 2^(k/2 - 1), alternating sides.
template <typename Scalar>
ApollonianFamilies<Scalar> apollonian_families(const Complex<Scalar>& p, const Complex<Scalar>& p2, int n_elliptic,
                                               int n_hyperbolic, const Tolerance& tol = {}) {
  using C = Complex<Scalar>;
  using G = GeneralizedCircle<Scalar>;
  if (std::abs(p - p2) <= Scalar(tol.geometric)) {
    throw GeometryError(ErrorKind::coincident_points, "apollonian families need two distinct points");
  }
  if (n_elliptic < 1 || n_hyperbolic < 1) {
    throw GeometryError(ErrorKind::invalid_argument, "each family needs at least its line member");
  }
  const C mid = (p + p2) / Scalar(2);
  const C axis = (p2 - p) / std::abs(p2 - p);
  const C normal = C(0, 1) * axis;
  const Scalar h = std::abs(p2 - p) / Scalar(2);

  ApollonianFamilies<Scalar> out;
  out.elliptic.push_back(G::line(p, axis));
  for (int j = 0; j + 1 < n_elliptic; ++j) {
    const Scalar sign = (j % 2 == 1) ? Scalar(1) : Scalar(-1);
    const Scalar t = sign * Scalar((j + 1) / 2) * h / Scalar(2);
    const C center = mid + t * normal;
    out.elliptic.push_back(G::circle(center, std::sqrt(h * h + t * t)));
  }

  out.hyperbolic.push_back(G::line(mid, normal));
  for (int k = 1; k < n_hyperbolic; ++k) {
    const int step = (k - 1) / 2;
    const Scalar side = (k % 2 == 1) ? Scalar(-1) : Scalar(1);
    const Scalar radius = h * std::pow(Scalar(2), Scalar(step) / Scalar(2) - Scalar(1));
    // |c - p| |c - p2| = radius^2 with c on the axis outside the segment.
    const Scalar offset = std::sqrt(radius * radius + h * h);
    out.hyperbolic.push_back(G::circle(mid + side * offset * axis, radius));
  }
  return out;
}

template <typename Scalar>
struct IntersectionAngle {
  Scalar angle;      ///< in [0, pi/2]
  bool orthogonal;   ///< angle within tolerance of pi/2
};

/// Angle between two intersecting circles or lines, from the inversive
/// product (beta1 conj(beta2) + conj(beta1) beta2 - alpha1 gamma2 - alpha2 gamma1)
/// / (2 sqrt(disc1 disc2)), which is the cosine of the angle between normals.
template <typename Scalar>
IntersectionAngle<Scalar> circles_orthogonal(const GeneralizedCircle<Scalar>& c1, const GeneralizedCircle<Scalar>& c2,
                                             const Tolerance& tol = {}) {
  const Scalar num = Scalar(2) * (c1.beta() * std::conj(c2.beta())).real() - c1.alpha() * c2.gamma() -
                     c2.alpha() * c1.gamma();
  const Scalar cosine = num / (Scalar(2) * std::sqrt(c1.discriminant() * c2.discriminant()));
  if (std::abs(cosine) > Scalar(1) + Scalar(tol.geometric)) {
    throw GeometryError(ErrorKind::disjoint_loci, "circles do not intersect");
  }
  const Scalar angle = std::acos(std::min(Scalar(1), std::abs(cosine)));
  return {angle, std::abs(angle - kPi<Scalar> / 2) <= Scalar(tol.geometric)};
}

}  // namespace hopf
