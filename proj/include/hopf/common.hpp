#pragma once

#include <Eigen/Core>

#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopf {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar, int Dim>
using Vector = Eigen::Matrix<Scalar, Dim, 1>;

template <typename Scalar>
using Vector2 = Vector<Scalar, 2>;
template <typename Scalar>
using Vector3 = Vector<Scalar, 3>;
template <typename Scalar>
using Vector4 = Vector<Scalar, 4>;

template <typename Scalar>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

/// Comparison thresholds shared by every module. Geometric predicates use
/// `geometric`; exact-in-principle arithmetic identities use `arithmetic`.
struct Tolerance {
  double geometric = 1e-9;
  double arithmetic = 1e-12;
};

enum class ErrorKind {
  invalid_argument,
  degenerate_path,
  undersampled,
  inconsistent,
  degenerate_map,
  coincident_points,
  disjoint_loci,
  touching_curves,
  non_unit,
  rank_deficient,
  not_on_torus,
  invalid_scene,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::degenerate_path: return "degenerate path";
    case ErrorKind::undersampled: return "undersampled";
    case ErrorKind::inconsistent: return "inconsistent";
    case ErrorKind::degenerate_map: return "degenerate map";
    case ErrorKind::coincident_points: return "coincident points";
    case ErrorKind::disjoint_loci: return "disjoint loci";
    case ErrorKind::touching_curves: return "touching curves";
    case ErrorKind::non_unit: return "non-unit input";
    case ErrorKind::rank_deficient: return "rank deficient";
    case ErrorKind::not_on_torus: return "not on torus";
    case ErrorKind::invalid_scene: return "invalid scene";
  }
  return "unknown";
}

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A finite value or the single point at infinity. Used for the Riemann
/// sphere and for the images of stereographic charts and inversions.
template <typename T>
class Extended {
 public:
  Extended(const T& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static Extended infinity() { return Extended(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  const T& value() const {
    if (!value_) throw GeometryError(ErrorKind::invalid_argument, "point at infinity has no finite value");
    return *value_;
  }

 private:
  Extended() = default;
  std::optional<T> value_;
};

template <typename Scalar>
using RiemannPoint = Extended<Complex<Scalar>>;

template <typename Scalar>
Scalar distance(const Complex<Scalar>& a, const Complex<Scalar>& b) {
  return std::abs(a - b);
}

template <typename Scalar, int Dim>
Scalar distance(const Vector<Scalar, Dim>& a, const Vector<Scalar, Dim>& b) {
  return (a - b).norm();
}

/// Finite points compare by distance; infinity only equals infinity.
template <typename T, typename Scalar>
bool approx_equal(const Extended<T>& a, const Extended<T>& b, Scalar tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return distance(a.value(), b.value()) <= tol;
}

template <typename Scalar>
bool is_finite(const Complex<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename Derived>
bool is_finite(const Eigen::MatrixBase<Derived>& v) {
  return v.allFinite();
}

}  // namespace hopf
