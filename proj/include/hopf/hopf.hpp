#pragma once

#include "hopf/common.hpp"
#include "hopf/fitting.hpp"
#include "hopf/quaternion.hpp"
#include "hopf/stereo.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Unit vector of C^2 = R^4: z1 = x1 + i x2, z2 = x3 + i x4.
template <typename Scalar>
class S3Point {
 public:
  using C = Complex<Scalar>;

  S3Point(const C& z1, const C& z2, const Tolerance& tol = {}) {
    const Scalar n = std::sqrt(std::norm(z1) + std::norm(z2));
    if (std::abs(n - Scalar(1)) > Scalar(tol.geometric)) {
      throw GeometryError(ErrorKind::non_unit, "|z1|^2 + |z2|^2 must be 1");
    }
    z1_ = z1 / n;
    z2_ = z2 / n;
  }

  static S3Point from_vector(const Vector4<Scalar>& x, const Tolerance& tol = {}) {
    return S3Point(C(x(0), x(1)), C(x(2), x(3)), tol);
  }

  /// The quaternion a + b i + c j + d k sits at (a, b, c, d), i.e. q = z1 + z2 j.
  static S3Point from_quaternion(const Quaternion<Scalar>& q, const Tolerance& tol = {}) {
    return from_vector(q.coeffs(), tol);
  }

  const C& z1() const noexcept { return z1_; }
  const C& z2() const noexcept { return z2_; }

  Vector4<Scalar> to_vector() const { return {z1_.real(), z1_.imag(), z2_.real(), z2_.imag()}; }
  Quaternion<Scalar> to_quaternion() const { return Quaternion<Scalar>::from_coeffs(to_vector()); }

 private:
  C z1_, z2_;
};

template <typename Scalar>
Vector2<Scalar> to_plane(const Complex<Scalar>& z) {
  return {z.real(), z.imag()};
}

/// Which pole the Riemann-sphere chart projects from.
enum class ChartPole { north, south };

/// The Hopf map (z1, z2) -> z2 / z1, taken to S^2 by inverse stereographic
/// projection. z1 = 0 is the point at infinity, i.e. the chart pole.
template <typename Scalar>
Vector3<Scalar> hopf_map(const S3Point<Scalar>& p, ChartPole pole = ChartPole::north) {
  const RiemannPoint<Scalar> z =
      p.z1() == Complex<Scalar>(0) ? RiemannPoint<Scalar>::infinity() : RiemannPoint<Scalar>(p.z2() / p.z1());
  const Extended<Vector2<Scalar>> plane =
      z.is_infinite() ? Extended<Vector2<Scalar>>::infinity() : Extended<Vector2<Scalar>>(to_plane(z.value()));
  Vector3<Scalar> out = unproject<Scalar, 2>(plane);
  if (pole == ChartPole::south) out(2) = -out(2);
  return out;
}

/// Closed form of hopf_map in real coordinates:
/// (2 Re(conj(z1) z2), 2 Im(conj(z1) z2), |z2|^2 - |z1|^2).
template <typename Scalar>
Vector3<Scalar> hopf_map_coordinates(const Vector4<Scalar>& x) {
  return {Scalar(2) * (x(0) * x(2) + x(1) * x(3)), Scalar(2) * (x(0) * x(3) - x(1) * x(2)),
          x(2) * x(2) + x(3) * x(3) - x(0) * x(0) - x(1) * x(1)};
}

enum class HopfVariant { riemann, quat_right, quat_left };

inline std::string_view to_string(HopfVariant v) {
  switch (v) {
    case HopfVariant::riemann: return "riemann";
    case HopfVariant::quat_right: return "quat-right";
    case HopfVariant::quat_left: return "quat-left";
  }
  return "riemann";
}

inline HopfVariant parse_variant(std::string_view s) {
  if (s == "riemann") return HopfVariant::riemann;
  if (s == "quat-right" || s == "quat_right") return HopfVariant::quat_right;
  if (s == "quat-left" || s == "quat_left") return HopfVariant::quat_left;
  throw GeometryError(ErrorKind::invalid_argument, "unknown Hopf variant '" + std::string(s) + "'");
}

/// Signed permutation taking R_q(i) (pure-quaternion coordinates) to
/// hopf_map(q) under q = z1 + z2 j, with the chart projecting from the north
/// pole. Produced by calibrate_frame and frozen here.
template <typename Scalar = double>
Eigen::Matrix<Scalar, 3, 3> canonical_frame() {
  Eigen::Matrix<Scalar, 3, 3> m;
  m << 0, 0, 1,
       0, -1, 0,
       -1, 0, 0;
  return m;
}

template <typename Scalar>
struct HopfConvention {
  HopfVariant variant = HopfVariant::riemann;
  /// The point p of g_p(q) = R_q(p) and h_p(q) = L_q(p), as a pure quaternion.
  Vector3<Scalar> base_point = Vector3<Scalar>::UnitX();
  /// Maps pure-quaternion coordinates to the Riemann-sphere coordinates used
  /// for every base point.
  Eigen::Matrix<Scalar, 3, 3> frame = canonical_frame<Scalar>();
  ChartPole pole = ChartPole::north;
};

/// g_p(q) = R_q(p), h_p(q) = L_q(p), in pure-quaternion coordinates. The
/// riemann variant reports hopf_map pulled back through the frame.
template <typename Scalar>
Vector3<Scalar> quat_hopf(const HopfConvention<Scalar>& conv, const UnitQuaternion<Scalar>& q) {
  switch (conv.variant) {
    case HopfVariant::quat_right: return rotate_right(q.quaternion(), conv.base_point);
    case HopfVariant::quat_left: return rotate_left(q.quaternion(), conv.base_point);
    case HopfVariant::riemann: break;
  }
  return conv.frame.transpose() * hopf_map(S3Point<Scalar>::from_quaternion(q.quaternion()), conv.pole);
}

/// The base point of p in Riemann-sphere coordinates, for any variant.
template <typename Scalar>
Vector3<Scalar> base_of(const HopfConvention<Scalar>& conv, const S3Point<Scalar>& p) {
  if (conv.variant == HopfVariant::riemann) return hopf_map(p, conv.pole);
  return conv.frame * quat_hopf(conv, UnitQuaternion<Scalar>(p.to_quaternion()));
}

template <typename Scalar>
struct FrameCalibration {
  Eigen::Matrix<Scalar, 3, 3> frame;
  ChartPole pole;
  Scalar max_error;
  bool found;
};

/// Searches the 48 signed coordinate permutations and both chart poles for
/// the alignment making g_(1,0,0) agree with hopf_map on random points of S^3.
/// The first match in (pole, permutation, sign) order wins.
template <typename Scalar = double>
FrameCalibration<Scalar> calibrate_frame(int samples = 1000, unsigned seed = 20240611u, Scalar tol = Scalar(1e-10)) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<Scalar> normal;
  std::vector<Quaternion<Scalar>> qs;
  for (int k = 0; k < samples; ++k) {
    qs.push_back(Quaternion<Scalar>(normal(rng), normal(rng), normal(rng), normal(rng)).normalized());
  }
  const Vector3<Scalar> p = Vector3<Scalar>::UnitX();
  for (ChartPole pole : {ChartPole::north, ChartPole::south}) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        Eigen::Matrix<Scalar, 3, 3> frame = Eigen::Matrix<Scalar, 3, 3>::Zero();
        for (int row = 0; row < 3; ++row) frame(row, perm[std::size_t(row)]) = (signs >> row & 1) ? -1 : 1;
        Scalar worst{0};
        for (const auto& q : qs) {
          const Vector3<Scalar> g = rotate_right(q, p);
          const Vector3<Scalar> f = hopf_map(S3Point<Scalar>::from_quaternion(q), pole);
          worst = std::max(worst, (frame * g - f).norm());
          if (worst > tol) break;
        }
        if (worst <= tol) return {frame, pole, worst, true};
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {Eigen::Matrix<Scalar, 3, 3>::Identity(), ChartPole::north, Scalar(0), false};
}

/// A sampled fiber: samples k = 0..n-1 are point_at(2 pi k / n).
template <typename Scalar>
struct FiberCurve {
  HopfVariant variant;
  Vector3<Scalar> base;            ///< Riemann-sphere coordinates
  Quaternion<Scalar> representative;
  Vector3<Scalar> generator;       ///< unit pure quaternion p of the circle action
  std::vector<S3Point<Scalar>> samples;

  /// The fiber point reached from the representative after turning by t.
  S3Point<Scalar> point_at(Scalar t) const {
    const Quaternion<Scalar> turn(std::cos(t), std::sin(t) * generator);
    const Quaternion<Scalar> q = variant == HopfVariant::quat_left ? representative * turn : turn * representative;
    return S3Point<Scalar>::from_quaternion(q);
  }

  std::vector<Vector4<Scalar>> sample_vectors() const {
    std::vector<Vector4<Scalar>> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.to_vector());
    return out;
  }
};

namespace detail {

/// Unit quaternion s with s u conj(s) = v for unit vectors u, v.
template <typename Scalar>
Quaternion<Scalar> rotation_between(const Vector3<Scalar>& u, const Vector3<Scalar>& v) {
  const Scalar c = u.dot(v);
  if (c < Scalar(-1) + Scalar(1e-12)) {
    Vector3<Scalar> axis = u.cross(Vector3<Scalar>::UnitX());
    if (axis.norm() < Scalar(1e-6)) axis = u.cross(Vector3<Scalar>::UnitY());
    return Quaternion<Scalar>::pure(axis.normalized());
  }
  return Quaternion<Scalar>(Scalar(1) + c, u.cross(v)).normalized();
}

}  // namespace detail

/// The fiber over `base` (Riemann-sphere coordinates, normalized here).
/// Riemann representative: (1, z) / sqrt(1 + |z|^2) for finite z = sigma(base),
/// (0, 1) at infinity; the fiber is then {(e^{it} z1, e^{it} z2)}.
template <typename Scalar>
FiberCurve<Scalar> fiber(const HopfConvention<Scalar>& conv, const Vector3<Scalar>& base, int n) {
  if (n < 8) throw GeometryError(ErrorKind::invalid_argument, "a fiber needs at least 8 samples");
  if (!(base.norm() > Scalar(1e-9))) throw GeometryError(ErrorKind::invalid_argument, "base point is zero");
  const Vector3<Scalar> b = base.normalized();
  FiberCurve<Scalar> out{conv.variant, b, Quaternion<Scalar>::one(), Vector3<Scalar>::UnitX(), {}};
  if (conv.variant == HopfVariant::riemann) {
    Vector3<Scalar> chart = b;
    if (conv.pole == ChartPole::south) chart(2) = -chart(2);
    const auto z = project(chart);
    Complex<Scalar> z1{1}, z2{0};
    if (z.is_infinite()) {
      z1 = 0;
      z2 = 1;
    } else {
      const Complex<Scalar> w(z.value()(0), z.value()(1));
      const Scalar s = std::sqrt(Scalar(1) + std::norm(w));
      z1 = Complex<Scalar>(1) / s;
      z2 = w / s;
    }
    out.representative = S3Point<Scalar>(z1, z2).to_quaternion();
    // Multiplying both coordinates by e^{it} is left multiplication by e^{it i}.
    out.generator = Vector3<Scalar>::UnitX();
  } else {
    const Vector3<Scalar> p = conv.base_point.normalized();
    const Vector3<Scalar> target = conv.frame.transpose() * b;
    const Quaternion<Scalar> s = detail::rotation_between(p, target);
    out.representative = conv.variant == HopfVariant::quat_right ? s.conj() : s;
    out.generator = p;
  }
  out.samples.reserve(std::size_t(n));
  for (int k = 0; k < n; ++k) out.samples.push_back(out.point_at(Scalar(2) * kPi<Scalar> * Scalar(k) / Scalar(n)));
  return out;
}

template <typename Scalar>
struct GreatCircleCheck {
  bool great;                          ///< unit norm and on a 2-plane through the origin
  Scalar norm_error;                   ///< max | |x| - 1 |
  Eigen::Matrix<Scalar, 4, 1> singular_values;  ///< of the n x 4 sample matrix, descending
  bool complex_line;                   ///< a z1 + b z2 = 0 for a fitted (a, b)
  Complex<Scalar> a, b;
  Scalar complex_residual;             ///< smallest singular value of the n x 2 complex matrix
};

template <typename Scalar>
GreatCircleCheck<Scalar> is_great_circle(const std::vector<Vector4<Scalar>>& samples, Scalar tol = Scalar(1e-9)) {
  if (samples.size() < 8) throw GeometryError(ErrorKind::invalid_argument, "great-circle check needs 8 samples");
  const Eigen::Index n = Eigen::Index(samples.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 4> real(n, 4);
  Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 2> cplx(n, 2);
  Scalar norm_error{0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& x = samples[std::size_t(i)];
    real.row(i) = x.transpose();
    cplx(i, 0) = Complex<Scalar>(x(0), x(1));
    cplx(i, 1) = Complex<Scalar>(x(2), x(3));
    norm_error = std::max(norm_error, std::abs(x.norm() - Scalar(1)));
  }
  Eigen::JacobiSVD<decltype(real)> svd(real);
  Eigen::JacobiSVD<decltype(cplx)> csvd(cplx, Eigen::ComputeFullV);
  GreatCircleCheck<Scalar> out;
  out.norm_error = norm_error;
  out.singular_values = svd.singularValues();
  out.great = norm_error <= tol && out.singular_values(2) < tol && out.singular_values(3) < tol &&
              out.singular_values(1) > tol;
  out.a = csvd.matrixV()(0, 1);
  out.b = csvd.matrixV()(1, 1);
  out.complex_residual = csvd.singularValues()(1);
  out.complex_line = out.complex_residual < tol;
  return out;
}

template <typename Scalar>
GreatCircleCheck<Scalar> is_great_circle(const FiberCurve<Scalar>& c, Scalar tol = Scalar(1e-9)) {
  return is_great_circle(c.sample_vectors(), tol);
}

/// A fiber taken to R^3 through the S^3 chart. A fiber through the chart
/// pole becomes a line: it is resampled to start just after the pole and end
/// just before it, and flagged.
template <typename Scalar>
struct ProjectedCurve {
  std::vector<Vector3<Scalar>> points;
  bool contains_infinity = false;
};

template <typename Scalar>
ProjectedCurve<Scalar> project_fiber(const FiberCurve<Scalar>& c) {
  const std::size_t n = c.samples.size();
  const Vector4<Scalar> pole = StereoChart<Scalar, 3>::pole();
  const Vector4<Scalar> start = c.point_at(Scalar(0)).to_vector();
  const Vector4<Scalar> quarter = c.point_at(kPi<Scalar> / 2).to_vector();
  const Scalar u = start.dot(pole);
  const Scalar v = quarter.dot(pole);
  ProjectedCurve<Scalar> out;
  out.points.reserve(n);
  if (std::abs(u * u + v * v - Scalar(1)) < Scalar(1e-12)) {
    out.contains_infinity = true;
    const Scalar t0 = std::atan2(v, u);
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar t = t0 + Scalar(2) * kPi<Scalar> * (Scalar(k) + Scalar(0.5)) / Scalar(n);
      out.points.push_back(project(c.point_at(t).to_vector()).value());
    }
    return out;
  }
  for (const auto& s : c.samples) out.points.push_back(project(s.to_vector()).value());
  return out;
}

template <typename Scalar>
struct LatitudinalTorus {
  Scalar rho;     ///< latitude |z2 / z1| on the Riemann sphere
  Scalar R;       ///< fitted major radius
  Scalar r;       ///< fitted minor radius
  Scalar residual;
};

template <typename Scalar>
struct LatitudinalTorusSample {
  LatitudinalTorus<Scalar> torus;
  std::vector<Vector3<Scalar>> bases;
  std::vector<FiberCurve<Scalar>> fibers;
  std::vector<std::vector<Vector3<Scalar>>> projected;
};

/// Fibers over n_fibers points of the latitude |z| = rho, projected to R^3,
/// and the torus of revolution about the x3-axis fitted to all their points.
template <typename Scalar>
LatitudinalTorusSample<Scalar> latitudinal_torus(Scalar rho, int n_fibers, int n_samples,
                                                 const HopfConvention<Scalar>& conv = {}) {
  if (!(rho > Scalar(0)) || !std::isfinite(rho)) throw GeometryError(ErrorKind::invalid_argument, "rho must be positive");
  if (n_fibers < 1) throw GeometryError(ErrorKind::invalid_argument, "need at least one fiber");
  LatitudinalTorusSample<Scalar> out;
  std::vector<Vector3<Scalar>> cloud;
  for (int k = 0; k < n_fibers; ++k) {
    const Complex<Scalar> z = std::polar(rho, Scalar(2) * kPi<Scalar> * Scalar(k) / Scalar(n_fibers));
    Vector3<Scalar> base = unproject<Scalar, 2>(to_plane(z));
    if (conv.pole == ChartPole::south) base(2) = -base(2);
    auto f = fiber(conv, base, n_samples);
    auto pc = project_fiber(f);
    cloud.insert(cloud.end(), pc.points.begin(), pc.points.end());
    out.bases.push_back(base);
    out.fibers.push_back(std::move(f));
    out.projected.push_back(std::move(pc.points));
  }
  const auto fit = fit_torus_of_revolution(cloud);
  out.torus = {rho, fit.major_radius, fit.minor_radius, fit.residual};
  if (!(out.torus.R > out.torus.r && out.torus.r > Scalar(0))) {
    throw GeometryError(ErrorKind::inconsistent, "fitted torus is not a ring torus");
  }
  return out;
}

template <typename Scalar>
struct LinkingResult {
  int value;
  Scalar integral;  ///< the Gauss double sum before rounding
};

/// Gauss double sum (1 / 4 pi) sum_ij (m_i - m_j) . (t_i x t_j) / |m_i - m_j|^3
/// over segment midpoints m and segment vectors t of two closed polylines.
template <typename Scalar>
Scalar gauss_linking_integral(const std::vector<Vector3<Scalar>>& c1, const std::vector<Vector3<Scalar>>& c2) {
  const std::size_t n1 = c1.size();
  const std::size_t n2 = c2.size();
  std::vector<Vector3<Scalar>> m2(n2), t2(n2);
  for (std::size_t j = 0; j < n2; ++j) {
    const auto& a = c2[j];
    const auto& b = c2[(j + 1) % n2];
    m2[j] = (a + b) / 2;
    t2[j] = b - a;
  }
  Scalar total{0};
  for (std::size_t i = 0; i < n1; ++i) {
    const auto& a = c1[i];
    const auto& b = c1[(i + 1) % n1];
    const Vector3<Scalar> m1 = (a + b) / 2;
    const Vector3<Scalar> t1 = b - a;
    Scalar row{0};
    for (std::size_t j = 0; j < n2; ++j) {
      const Vector3<Scalar> d = m1 - m2[j];
      const Scalar r = d.norm();
      row += d.dot(t1.cross(t2[j])) / (r * r * r);
    }
    total += row;
  }
  return total / (Scalar(4) * kPi<Scalar>);
}

/// Linking number of two disjoint closed curves. Curves closer than 1e-6, or
/// sums further than 0.05 from an integer, are rejected.
template <typename Scalar>
LinkingResult<Scalar> linking_number(const std::vector<Vector3<Scalar>>& c1, const std::vector<Vector3<Scalar>>& c2,
                                     Scalar max_residual = Scalar(0.05)) {
  if (c1.size() < 64 || c2.size() < 64) throw GeometryError(ErrorKind::invalid_argument, "need at least 64 samples per curve");
  Scalar closest = std::numeric_limits<Scalar>::infinity();
  for (const auto& a : c1) {
    for (const auto& b : c2) closest = std::min(closest, (a - b).squaredNorm());
  }
  if (std::sqrt(closest) <= Scalar(1e-6)) throw GeometryError(ErrorKind::touching_curves, "curves touch");
  const Scalar integral = gauss_linking_integral(c1, c2);
  const Scalar rounded = std::round(integral);
  if (std::abs(integral - rounded) >= max_residual) {
    throw GeometryError(ErrorKind::undersampled, "Gauss sum " + std::to_string(double(integral)) + " is not near an integer");
  }
  return {int(rounded), integral};
}

enum class Handedness { right, left };

inline std::string_view to_string(Handedness h) { return h == Handedness::right ? "right" : "left"; }

template <typename Scalar>
struct HandednessResult {
  Handedness handedness;
  Scalar slope;  ///< d theta2 / d theta1 along the fiber
};

/// Slope of the fiber in the torus angles theta1 = arg z1, theta2 = arg z2,
/// by least squares on the unwrapped angles. +1 winds as a right-handed
/// thread, -1 as a left-handed one.
template <typename Scalar>
HandednessResult<Scalar> handedness(const FiberCurve<Scalar>& c, Scalar rho, Scalar tol = Scalar(1e-9)) {
  const std::size_t n = c.samples.size();
  std::vector<Scalar> t1(n), t2(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = c.samples[k];
    if (std::abs(s.z1()) == Scalar(0) ||
        std::abs(std::abs(s.z2()) / std::abs(s.z1()) - rho) > tol * (Scalar(1) + rho)) {
      throw GeometryError(ErrorKind::not_on_torus, "fiber does not lie on the latitude-rho torus");
    }
    t1[k] = std::arg(s.z1());
    t2[k] = std::arg(s.z2());
    if (k > 0) {
      t1[k] = t1[k - 1] + std::remainder(t1[k] - t1[k - 1], Scalar(2) * kPi<Scalar>);
      t2[k] = t2[k - 1] + std::remainder(t2[k] - t2[k - 1], Scalar(2) * kPi<Scalar>);
    }
  }
  Scalar m1{0}, m2{0};
  for (std::size_t k = 0; k < n; ++k) {
    m1 += t1[k];
    m2 += t2[k];
  }
  m1 /= Scalar(n);
  m2 /= Scalar(n);
  Scalar sxy{0}, sxx{0};
  for (std::size_t k = 0; k < n; ++k) {
    sxy += (t1[k] - m1) * (t2[k] - m2);
    sxx += (t1[k] - m1) * (t1[k] - m1);
  }
  const Scalar slope = sxy / sxx;
  return {slope > 0 ? Handedness::right : Handedness::left, slope};
}

/// Slope k of the bitangent plane x3 = k x1 of the torus with radii R > r
/// about the x3-axis: the plane through the center tangent to both tube
/// cross-sections in the x1 x3 half-plane.
template <typename Scalar>
Scalar villarceau_slope(Scalar R, Scalar r) {
  if (!(R > r && r > Scalar(0))) throw GeometryError(ErrorKind::invalid_argument, "need R > r > 0");
  return r / std::sqrt(R * R - r * r);
}

/// Intersection of the plane x3 = slope * x1 with the torus
/// ((R + r cos psi) cos theta, (R + r cos psi) sin theta, r sin psi). For each
/// theta the plane meets the tube section in psi = phi0 +- delta. At the
/// bitangent slope delta vanishes at theta = 0, pi, where the two branches are
/// exchanged so that each returned curve is smooth.
template <typename Scalar>
std::array<std::vector<Vector3<Scalar>>, 2> torus_plane_section(Scalar R, Scalar r, Scalar slope, int n) {
  if (!(R > r && r > Scalar(0))) throw GeometryError(ErrorKind::invalid_argument, "need R > r > 0");
  if (n < 8) throw GeometryError(ErrorKind::invalid_argument, "need at least 8 samples");
  const Scalar bitangent = villarceau_slope(R, r);
  if (slope < Scalar(0) || slope > bitangent * (Scalar(1) + Scalar(1e-12))) {
    throw GeometryError(ErrorKind::invalid_argument, "slope must lie in [0, bitangent slope]");
  }
  const bool exchange = std::abs(slope - bitangent) <= Scalar(1e-12) * bitangent;
  std::array<std::vector<Vector3<Scalar>>, 2> out;
  for (int k = 0; k < n; ++k) {
    const Scalar theta = Scalar(2) * kPi<Scalar> * (Scalar(k) + Scalar(0.5)) / Scalar(n);
    // r sin psi - slope cos(theta) r cos psi = slope cos(theta) R
    const Scalar A = r;
    const Scalar B = -slope * std::cos(theta) * r;
    const Scalar C = slope * R * std::cos(theta);
    const Scalar amp = std::hypot(A, B);
    const Scalar phi0 = std::atan2(A, B);
    const Scalar delta = std::acos(std::clamp(C / amp, Scalar(-1), Scalar(1)));
    const Scalar sign = (exchange && std::sin(theta) < 0) ? Scalar(-1) : Scalar(1);
    for (int branch = 0; branch < 2; ++branch) {
      const Scalar psi = phi0 + (branch == 0 ? sign : -sign) * delta;
      const Scalar w = R + r * std::cos(psi);
      out[std::size_t(branch)].push_back({w * std::cos(theta), w * std::sin(theta), r * std::sin(psi)});
    }
  }
  return out;
}

/// The two Villarceau circles: the torus cut by its bitangent plane
/// x3 = r / sqrt(R^2 - r^2) x1.
template <typename Scalar>
std::array<std::vector<Vector3<Scalar>>, 2> villarceau_section(Scalar R, Scalar r, int n) {
  return torus_plane_section(R, r, villarceau_slope(R, r), n);
}

}  // namespace hopf
