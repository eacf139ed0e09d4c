#pragma once

#include "hopf/common.hpp"

#include <algorithm>
#include <cmath>

namespace hopf {

/// The locus alpha |z|^2 + conj(beta) z + beta conj(z) + gamma = 0 with real
/// alpha, gamma. alpha = 0 is a line; otherwise a circle with center -beta/alpha.
/// Stored normalized: alpha is 1 for circles, and lines have |beta| = 1 with
/// gamma <= 0 (beta pointing into the upper half-plane when gamma = 0).
template <typename Scalar>
class GeneralizedCircle {
 public:
  using C = Complex<Scalar>;

  GeneralizedCircle(Scalar alpha, const C& beta, Scalar gamma) {
    const Scalar scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
    if (!(scale > Scalar(0)) || !std::isfinite(scale)) {
      throw GeometryError(ErrorKind::invalid_argument, "generalized circle needs finite, not all zero coefficients");
    }
    if (std::abs(alpha) > kLineThreshold * scale) {
      alpha_ = Scalar(1);
      beta_ = beta / alpha;
      gamma_ = gamma / alpha;
      if (std::norm(beta_) - gamma_ <= Scalar(0)) {
        throw GeometryError(ErrorKind::invalid_argument, "circle has no real points");
      }
    } else {
      const Scalar m = std::abs(beta);
      if (!(m > kLineThreshold * scale)) {
        throw GeometryError(ErrorKind::invalid_argument, "line needs a nonzero normal");
      }
      alpha_ = Scalar(0);
      // Coefficients that are already unit up to rounding are kept verbatim so
      // that reading back exported (rounded) coefficients is a fixed point.
      const Scalar unit = std::abs(m - Scalar(1)) <= Scalar(1e-8) ? Scalar(1) : m;
      beta_ = beta / unit;
      gamma_ = gamma / unit;
      const Scalar eps = Scalar(1e-14);
      const bool flip = gamma_ > eps ||
                        (std::abs(gamma_) <= eps && (beta_.imag() < -eps ||
                                                     (std::abs(beta_.imag()) <= eps && beta_.real() < 0)));
      if (flip) {
        beta_ = -beta_;
        gamma_ = -gamma_;
      }
    }
  }

  static GeneralizedCircle circle(const C& center, Scalar radius) {
    if (!(radius > Scalar(0))) throw GeometryError(ErrorKind::invalid_argument, "radius must be positive");
    return GeneralizedCircle(Scalar(1), -center, std::norm(center) - radius * radius);
  }

  /// Line through `point` with the given direction.
  static GeneralizedCircle line(const C& point, const C& direction) {
    if (std::abs(direction) == Scalar(0)) throw GeometryError(ErrorKind::invalid_argument, "line direction is zero");
    // Normal n = i * direction; points satisfy Re(conj(n) z) = Re(conj(n) point).
    const C n = C(0, 1) * direction / std::abs(direction);
    // conj(beta) z + beta conj(z) = 2 Re(conj(beta) z), so beta = n / 2.
    return GeneralizedCircle(Scalar(0), n / Scalar(2), -(std::conj(n) * point).real());
  }

  Scalar alpha() const noexcept { return alpha_; }
  const C& beta() const noexcept { return beta_; }
  Scalar gamma() const noexcept { return gamma_; }

  bool is_line() const noexcept { return alpha_ == Scalar(0); }

  C center() const {
    if (is_line()) throw GeometryError(ErrorKind::invalid_argument, "a line has no center");
    return -beta_;
  }

  Scalar radius() const {
    if (is_line()) throw GeometryError(ErrorKind::invalid_argument, "a line has no radius");
    return std::sqrt(std::norm(beta_) - gamma_);
  }

  /// Unit normal and a point, for lines.
  C line_normal() const { return beta_ / std::abs(beta_); }
  C line_point() const { return -gamma_ * beta_ / (Scalar(2) * std::norm(beta_)); }

  Scalar evaluate(const C& z) const {
    return alpha_ * std::norm(z) + Scalar(2) * (std::conj(beta_) * z).real() + gamma_;
  }

  /// First-order distance from z to the locus.
  Scalar sampson_distance(const C& z) const {
    const Scalar g = Scalar(2) * std::abs(alpha_ * z + beta_);
    return g > Scalar(0) ? std::abs(evaluate(z)) / g : std::abs(evaluate(z));
  }

  /// Exact Euclidean distance from z to the locus.
  Scalar distance_to(const C& z) const {
    if (is_line()) return std::abs(evaluate(z)) / (Scalar(2) * std::abs(beta_));
    return std::abs(std::abs(z - center()) - radius());
  }

  /// Lines pass through infinity; circles do not.
  bool contains(const RiemannPoint<Scalar>& p, Scalar tol) const {
    if (p.is_infinite()) return is_line();
    return distance_to(p.value()) <= tol;
  }

  /// |beta|^2 - alpha gamma, the squared radius for circles.
  Scalar discriminant() const { return std::norm(beta_) - alpha_ * gamma_; }

 private:
  static constexpr Scalar kLineThreshold = Scalar(1e-12);

  Scalar alpha_{0};
  C beta_{0};
  Scalar gamma_{0};
};

/// Equality of normalized coefficients, relative to their magnitude.
template <typename Scalar>
bool approx_equal(const GeneralizedCircle<Scalar>& a, const GeneralizedCircle<Scalar>& b, Scalar rel_tol) {
  if (a.is_line() != b.is_line()) return false;
  const Scalar scale = std::max({Scalar(1), std::abs(a.beta()), std::abs(a.gamma()), std::abs(b.beta()),
                                 std::abs(b.gamma())});
  return std::abs(a.alpha() - b.alpha()) <= rel_tol * scale && std::abs(a.beta() - b.beta()) <= rel_tol * scale &&
         std::abs(a.gamma() - b.gamma()) <= rel_tol * scale;
}

/// Coefficients of the same locus in the coordinate u where z = origin + scale * u.
template <typename Scalar>
GeneralizedCircle<Scalar> pull_back(const GeneralizedCircle<Scalar>& k, const Complex<Scalar>& origin, Scalar scale) {
  const Scalar alpha = k.alpha() * scale * scale;
  const Complex<Scalar> beta = scale * (k.alpha() * origin + k.beta());
  const Scalar gamma = k.evaluate(origin);
  return GeneralizedCircle<Scalar>(alpha, beta, gamma);
}

/// Inverse of pull_back: coefficients in z given coefficients in u = (z - origin) / scale.
template <typename Scalar>
GeneralizedCircle<Scalar> push_forward(const GeneralizedCircle<Scalar>& k, const Complex<Scalar>& origin,
                                       Scalar scale) {
  const Scalar alpha = k.alpha() / (scale * scale);
  const Complex<Scalar> beta = k.beta() / scale - k.alpha() * origin / (scale * scale);
  const Scalar gamma =
      k.alpha() * std::norm(origin) / (scale * scale) - Scalar(2) * (std::conj(k.beta()) * origin).real() / scale +
      k.gamma();
  return GeneralizedCircle<Scalar>(alpha, beta, gamma);
}

}  // namespace hopf
