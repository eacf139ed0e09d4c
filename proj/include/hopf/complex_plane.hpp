#pragma once

#include "hopf/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace hopf {

/// Modulus and argument, with the argument in (-pi, pi].
template <typename Scalar>
struct PolarForm {
  Scalar r{0};
  Scalar theta{0};
};

template <typename Scalar>
PolarForm<Scalar> to_polar(const Complex<Scalar>& z) {
  const Scalar r = std::abs(z);
  if (r == Scalar(0)) return {Scalar(0), Scalar(0)};
  Scalar theta = std::atan2(z.imag(), z.real());
  // atan2 returns -pi for a negative real axis approached from below (-0.0).
  if (theta <= -kPi<Scalar>) theta = kPi<Scalar>;
  return {r, theta};
}

template <typename Scalar>
Complex<Scalar> from_polar(const PolarForm<Scalar>& p) {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

/// The n solutions of z^n = 1, starting at 1 and proceeding counter-clockwise.
template <typename Scalar = double>
std::vector<Complex<Scalar>> roots_of_unity(std::size_t n) {
  if (n == 0) throw GeometryError(ErrorKind::invalid_argument, "roots_of_unity requires n >= 1");
  std::vector<Complex<Scalar>> roots;
  roots.reserve(n);
  roots.emplace_back(Scalar(1), Scalar(0));
  for (std::size_t k = 1; k < n; ++k) {
    roots.push_back(std::polar(Scalar(1), Scalar(2) * kPi<Scalar> * Scalar(k) / Scalar(n)));
  }
  return roots;
}

/// A closed path stored as a list of samples; the last sample connects back
/// to the first.
template <typename Scalar>
class ClosedPath {
 public:
  explicit ClosedPath(std::vector<Complex<Scalar>> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 3) throw GeometryError(ErrorKind::invalid_argument, "a closed path needs at least 3 samples");
    for (const auto& z : samples_) {
      if (!is_finite(z)) throw GeometryError(ErrorKind::invalid_argument, "path sample is not finite");
    }
  }

  const std::vector<Complex<Scalar>>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  std::vector<Complex<Scalar>> samples_;
};

/// Circle center + radius * e^{2 pi i k / n}, k = 0..n-1.
template <typename Scalar>
ClosedPath<Scalar> circle_path(const Complex<Scalar>& center, Scalar radius, std::size_t n) {
  std::vector<Complex<Scalar>> samples;
  samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    samples.push_back(center + std::polar(radius, Scalar(2) * kPi<Scalar> * Scalar(k) / Scalar(n)));
  }
  return ClosedPath<Scalar>(std::move(samples));
}

/// Number of counter-clockwise turns of the path about the origin, from the
/// sum of wrapped argument increments. Undersampling is reported, never
/// repaired: every increment must stay below pi/2 in magnitude.
template <typename Scalar>
int winding_number(const ClosedPath<Scalar>& path, const Tolerance& tol = {}) {
  const auto& s = path.samples();
  Scalar scale{0};
  for (const auto& z : s) scale = std::max(scale, std::abs(z));
  for (const auto& z : s) {
    if (std::abs(z) <= Scalar(tol.arithmetic) * scale || std::abs(z) == Scalar(0)) {
      throw GeometryError(ErrorKind::degenerate_path, "path passes through the origin");
    }
  }
  Scalar total{0};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& a = s[i];
    const auto& b = s[(i + 1) % s.size()];
    const Scalar step = std::arg(b / a);
    if (std::abs(step) >= kPi<Scalar> / 2) {
      throw GeometryError(ErrorKind::undersampled, "argument increment of " + std::to_string(double(step)) + " rad");
    }
    total += step;
  }
  const Scalar turns = total / (Scalar(2) * kPi<Scalar>);
  const Scalar rounded = std::round(turns);
  if (std::abs(turns - rounded) >= Scalar(0.01)) {
    throw GeometryError(ErrorKind::inconsistent, "winding sum is not near an integer");
  }
  return static_cast<int>(rounded);
}

/// Pointwise image of a path. No resampling happens here.
template <typename Scalar, typename Fn>
ClosedPath<Scalar> map_path(Fn&& f, const ClosedPath<Scalar>& path) {
  std::vector<Complex<Scalar>> image;
  image.reserve(path.size());
  for (const auto& z : path.samples()) {
    const Complex<Scalar> w = f(z);
    if (!is_finite(w)) throw GeometryError(ErrorKind::invalid_argument, "mapped sample is not finite");
    image.push_back(w);
  }
  return ClosedPath<Scalar>(std::move(image));
}

/// Polynomial with ascending complex coefficients and a nonzero leading term.
template <typename Scalar>
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex<Scalar>> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw GeometryError(ErrorKind::invalid_argument, "polynomial needs a coefficient");
    if (coeffs_.back() == Complex<Scalar>(0)) {
      throw GeometryError(ErrorKind::invalid_argument, "leading coefficient must be nonzero");
    }
  }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Complex<Scalar>>& coeffs() const noexcept { return coeffs_; }

  Complex<Scalar> operator()(const Complex<Scalar>& z) const {
    Complex<Scalar> acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  /// 1 + sum |c_k| / |c_n|: every root has smaller modulus.
  Scalar root_bound() const {
    const Scalar lead = std::abs(coeffs_.back());
    Scalar sum{0};
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) sum += std::abs(coeffs_[k]);
    return Scalar(1) + sum / lead;
  }

 private:
  std::vector<Complex<Scalar>> coeffs_;
};

/// Roots of p inside |z| < radius, counted with multiplicity, as the winding
/// number of p applied to the circle of that radius. The circle is refined
/// until the image path is adequately sampled; a root on the circle
/// surfaces as a degenerate-path error.
template <typename Scalar>
int count_roots_by_winding(const Polynomial<Scalar>& p, Scalar radius, const Tolerance& tol = {},
                           std::size_t initial_samples = 256) {
  if (!(radius > Scalar(0))) throw GeometryError(ErrorKind::invalid_argument, "radius must be positive");
  constexpr std::size_t kMaxSamples = std::size_t(1) << 20;
  for (std::size_t n = std::max<std::size_t>(initial_samples, 8);; n *= 2) {
    const auto image = map_path(p, circle_path(Complex<Scalar>(0), radius, n));
    try {
      return winding_number(image, tol);
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::undersampled || n >= kMaxSamples) throw;
    }
  }
}

}  // namespace hopf
