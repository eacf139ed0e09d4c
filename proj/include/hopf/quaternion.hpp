#pragma once

#include "hopf/common.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

namespace hopf {

/// q = a + b i + c j + d k with i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
template <typename Scalar>
class Quaternion {
 public:
  using Vec3 = Vector3<Scalar>;
  using Vec4 = Vector4<Scalar>;

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar a, Scalar b, Scalar c, Scalar d) : a_(a), b_(b), c_(c), d_(d) {}
  Quaternion(Scalar real, const Vec3& pure) : a_(real), b_(pure.x()), c_(pure.y()), d_(pure.z()) {}

  static Quaternion from_coeffs(const Vec4& v) { return {v(0), v(1), v(2), v(3)}; }
  static Quaternion pure(const Vec3& v) { return {Scalar(0), v}; }
  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  Scalar a() const noexcept { return a_; }
  Scalar b() const noexcept { return b_; }
  Scalar c() const noexcept { return c_; }
  Scalar d() const noexcept { return d_; }

  Scalar real() const noexcept { return a_; }
  Vec3 vec() const { return {b_, c_, d_}; }
  Vec4 coeffs() const { return {a_, b_, c_, d_}; }

  Quaternion conj() const { return {a_, -b_, -c_, -d_}; }
  Scalar squared_norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
  Scalar norm() const { return std::sqrt(squared_norm()); }

  /// conj(q) / |q|^2.
  Quaternion inverse() const {
    const Scalar n2 = squared_norm();
    if (n2 == Scalar(0)) throw GeometryError(ErrorKind::invalid_argument, "zero quaternion has no inverse");
    return conj() / n2;
  }

  Quaternion normalized() const {
    const Scalar n = norm();
    if (n == Scalar(0)) throw GeometryError(ErrorKind::invalid_argument, "cannot normalize the zero quaternion");
    return *this / n;
  }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a_ + q.a_, p.b_ + q.b_, p.c_ + q.c_, p.d_ + q.d_};
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a_ - q.a_, p.b_ - q.b_, p.c_ - q.c_, p.d_ - q.d_};
  }
  friend Quaternion operator-(const Quaternion& q) { return {-q.a_, -q.b_, -q.c_, -q.d_}; }
  friend Quaternion operator*(Scalar s, const Quaternion& q) { return {s * q.a_, s * q.b_, s * q.c_, s * q.d_}; }
  friend Quaternion operator*(const Quaternion& q, Scalar s) { return s * q; }
  friend Quaternion operator/(const Quaternion& q, Scalar s) { return {q.a_ / s, q.b_ / s, q.c_ / s, q.d_ / s}; }

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a_ * q.a_ - p.b_ * q.b_ - p.c_ * q.c_ - p.d_ * q.d_,
            p.a_ * q.b_ + p.b_ * q.a_ + p.c_ * q.d_ - p.d_ * q.c_,
            p.a_ * q.c_ - p.b_ * q.d_ + p.c_ * q.a_ + p.d_ * q.b_,
            p.a_ * q.d_ + p.b_ * q.c_ - p.c_ * q.b_ + p.d_ * q.a_};
  }

 private:
  Scalar a_{0}, b_{0}, c_{0}, d_{0};
};

template <typename Scalar>
Scalar distance(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) {
  return (p - q).norm();
}

/// A quaternion of norm one. Construction accepts inputs within the
/// geometric tolerance of the sphere and renormalizes them.
template <typename Scalar>
class UnitQuaternion {
 public:
  explicit UnitQuaternion(const Quaternion<Scalar>& q, const Tolerance& tol = {}) {
    const Scalar n = q.norm();
    if (std::abs(n - Scalar(1)) > Scalar(tol.geometric)) {
      throw GeometryError(ErrorKind::non_unit, "|q| = " + std::to_string(double(n)));
    }
    q_ = q / n;
  }

  /// Normalizes any nonzero quaternion.
  static UnitQuaternion from_any(const Quaternion<Scalar>& q) { return UnitQuaternion(q.normalized()); }
  static UnitQuaternion identity() { return UnitQuaternion(Quaternion<Scalar>::one()); }

  const Quaternion<Scalar>& quaternion() const noexcept { return q_; }
  operator const Quaternion<Scalar>&() const noexcept { return q_; }  // NOLINT(google-explicit-constructor)

  UnitQuaternion operator-() const { return UnitQuaternion(-q_); }

 private:
  Quaternion<Scalar> q_;
};

/// R_q(p) = q^{-1} p q, with p read as the pure quaternion p.x i + p.y j + p.z k.
template <typename Scalar>
Vector3<Scalar> rotate_right(const Quaternion<Scalar>& q, const Vector3<Scalar>& p) {
  return (q.inverse() * Quaternion<Scalar>::pure(p) * q).vec();
}

/// L_q(p) = q p q^{-1}, which equals R_{conj(q)}(p).
template <typename Scalar>
Vector3<Scalar> rotate_left(const Quaternion<Scalar>& q, const Vector3<Scalar>& p) {
  return (q * Quaternion<Scalar>::pure(p) * q.inverse()).vec();
}

template <typename Scalar>
struct AxisAngle {
  Vector3<Scalar> axis;  ///< unit; first nonzero component positive
  Scalar angle;          ///< in [0, 2 pi)
};

/// Writes q = cos(t) + u sin(t) and returns (u, 2t), canonicalized so that
/// q and -q give the same answer. The angle is the right-handed rotation of
/// L_q about the axis; R_q turns by the same angle the other way. Near the
/// identity the axis is (1, 0, 0) and the angle 0.
template <typename Scalar>
AxisAngle<Scalar> axis_angle(const UnitQuaternion<Scalar>& uq, const Tolerance& tol = {}) {
  const Quaternion<Scalar>& q = uq;
  const Vector3<Scalar> v = q.vec();
  const Scalar s = v.norm();
  if (s < Scalar(tol.geometric)) return {Vector3<Scalar>::UnitX(), Scalar(0)};
  Vector3<Scalar> axis = v / s;
  Scalar angle = Scalar(2) * std::atan2(s, q.real());  // in (0, 2 pi)
  const Scalar eps = Scalar(tol.arithmetic);
  int first = 0;
  while (first < 2 && std::abs(axis(first)) <= eps) ++first;
  if (axis(first) < 0) {
    axis = -axis;
    angle = Scalar(2) * kPi<Scalar> - angle;
  }
  if (angle >= Scalar(2) * kPi<Scalar>) angle -= Scalar(2) * kPi<Scalar>;
  return {axis, angle};
}

template <typename Scalar>
UnitQuaternion<Scalar> from_axis_angle(const Vector3<Scalar>& axis, Scalar angle) {
  const Scalar n = axis.norm();
  if (!(n > Scalar(0))) throw GeometryError(ErrorKind::invalid_argument, "rotation axis is zero");
  return UnitQuaternion<Scalar>(Quaternion<Scalar>(std::cos(angle / 2), std::sin(angle / 2) * axis / n));
}

/// The complex 2x2 matrix [[w1, conj(w2)], [-w2, conj(w1)]] housing the
/// quaternion x1 + x2 i + x3 j + x4 k, with w1 = x1 + i x2 and w2 = x3 - i x4.
/// With this pairing the matrix product follows the quaternion product.
template <typename Scalar>
class SU2Matrix {
 public:
  using C = Complex<Scalar>;
  using Matrix = Eigen::Matrix<C, 2, 2>;

  explicit SU2Matrix(const Matrix& m, const Tolerance& tol = {}) : m_(m) {
    const Scalar scale = m.cwiseAbs().maxCoeff();
    const Scalar eps = Scalar(tol.arithmetic) * std::max(Scalar(1), scale);
    if (std::abs(m(1, 1) - std::conj(m(0, 0))) > eps || std::abs(m(0, 1) + std::conj(m(1, 0))) > eps) {
      throw GeometryError(ErrorKind::invalid_argument, "matrix is not of the form [[w1, conj(w2)], [-w2, conj(w1)]]");
    }
  }

  static SU2Matrix from_quaternion(const Quaternion<Scalar>& q) {
    const C w1(q.a(), q.b());
    const C w2(q.c(), -q.d());
    Matrix m;
    m << w1, std::conj(w2), -w2, std::conj(w1);
    return SU2Matrix(m);
  }

  Quaternion<Scalar> to_quaternion() const {
    const C w1 = m_(0, 0);
    const C w2 = -m_(1, 0);
    return {w1.real(), w1.imag(), w2.real(), -w2.imag()};
  }

  const Matrix& matrix() const noexcept { return m_; }

  /// |w1|^2 + |w2|^2, the squared quaternion norm.
  Scalar determinant() const { return (m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0)).real(); }

  friend SU2Matrix operator*(const SU2Matrix& x, const SU2Matrix& y) { return SU2Matrix(x.m_ * y.m_); }

 private:
  Matrix m_;
};

template <typename Scalar>
SU2Matrix<Scalar> to_su2(const Quaternion<Scalar>& q) {
  return SU2Matrix<Scalar>::from_quaternion(q);
}

template <typename Scalar>
Quaternion<Scalar> from_su2(const SU2Matrix<Scalar>& m) {
  return m.to_quaternion();
}

/// q -> g q h, the isometry of S^3 (and R^4) built from left and right
/// multiplication by unit quaternions.
template <typename Scalar>
Quaternion<Scalar> so4_action(const UnitQuaternion<Scalar>& g, const UnitQuaternion<Scalar>& h,
                              const Quaternion<Scalar>& q) {
  return g.quaternion() * q * h.quaternion();
}

/// Angle between two nonzero quaternions viewed as vectors of R^4.
template <typename Scalar>
Scalar angle_between(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) {
  const Scalar c = p.coeffs().dot(q.coeffs()) / (p.norm() * q.norm());
  return std::acos(std::clamp(c, Scalar(-1), Scalar(1)));
}

}  // namespace hopf
