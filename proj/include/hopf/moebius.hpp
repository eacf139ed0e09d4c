#pragma once

#include "hopf/common.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace hopf {

/// z -> (a z + b) / (c z + d) with ad - bc != 0. Two maps that differ by a
/// nonzero scalar are the same transformation; compare with approx_equal,
/// which works on the determinant-one normal form.
template <typename Scalar>
class MoebiusMap {
 public:
  using C = Complex<Scalar>;
  using Matrix = Eigen::Matrix<C, 2, 2>;

  MoebiusMap(const C& a, const C& b, const C& c, const C& d, const Tolerance& tol = {}) : a_(a), b_(b), c_(c), d_(d) {
    const Scalar scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (!(scale > Scalar(0)) || std::abs(determinant()) <= Scalar(tol.arithmetic) * scale * scale) {
      throw GeometryError(ErrorKind::degenerate_map, "ad - bc vanishes");
    }
  }

  explicit MoebiusMap(const Matrix& m, const Tolerance& tol = {}) : MoebiusMap(m(0, 0), m(0, 1), m(1, 0), m(1, 1), tol) {}

  static MoebiusMap identity() { return MoebiusMap(C(1), C(0), C(0), C(1)); }

  const C& a() const noexcept { return a_; }
  const C& b() const noexcept { return b_; }
  const C& c() const noexcept { return c_; }
  const C& d() const noexcept { return d_; }

  C determinant() const { return a_ * d_ - b_ * c_; }

  Matrix matrix() const {
    Matrix m;
    m << a_, b_, c_, d_;
    return m;
  }

  /// Determinant scaled to 1, sign chosen so the first nonzero entry has
  /// positive real part (positive imaginary part on a tie).
  MoebiusMap normalized() const {
    const C s = std::sqrt(determinant());
    std::array<C, 4> e{a_ / s, b_ / s, c_ / s, d_ / s};
    const Scalar eps = Scalar(1e-14);
    for (const auto& v : e) {
      if (std::abs(v) <= eps) continue;
      const bool flip = v.real() < -eps || (std::abs(v.real()) <= eps && v.imag() < 0);
      if (flip) {
        for (auto& w : e) w = -w;
      }
      break;
    }
    return MoebiusMap(e[0], e[1], e[2], e[3]);
  }

 private:
  C a_, b_, c_, d_;
};

template <typename Scalar>
bool approx_equal(const MoebiusMap<Scalar>& m1, const MoebiusMap<Scalar>& m2, Scalar tol) {
  const auto n1 = m1.normalized();
  const auto n2 = m2.normalized();
  return std::abs(n1.a() - n2.a()) <= tol && std::abs(n1.b() - n2.b()) <= tol && std::abs(n1.c() - n2.c()) <= tol &&
         std::abs(n1.d() - n2.d()) <= tol;
}

/// Action on the Riemann sphere. Infinity is handled by case analysis: a
/// pole (cz + d vanishing to rounding level) maps to infinity, and infinity
/// maps to a/c, or to itself when c vanishes.
template <typename Scalar>
RiemannPoint<Scalar> apply(const MoebiusMap<Scalar>& m, const RiemannPoint<Scalar>& p, const Tolerance& tol = {}) {
  const Scalar rel = Scalar(tol.arithmetic);
  if (p.is_infinite()) {
    if (std::abs(m.c()) <= rel * std::abs(m.a())) return RiemannPoint<Scalar>::infinity();
    return RiemannPoint<Scalar>(m.a() / m.c());
  }
  const auto& z = p.value();
  const Complex<Scalar> den = m.c() * z + m.d();
  if (std::abs(den) <= rel * (std::abs(m.c()) * std::abs(z) + std::abs(m.d()))) {
    return RiemannPoint<Scalar>::infinity();
  }
  return RiemannPoint<Scalar>((m.a() * z + m.b()) / den);
}

/// m1 after m2, i.e. the matrix product M1 M2.
template <typename Scalar>
MoebiusMap<Scalar> compose(const MoebiusMap<Scalar>& m1, const MoebiusMap<Scalar>& m2) {
  return MoebiusMap<Scalar>(m1.matrix() * m2.matrix());
}

template <typename Scalar>
MoebiusMap<Scalar> inverse(const MoebiusMap<Scalar>& m) {
  return MoebiusMap<Scalar>(m.d(), -m.b(), -m.c(), m.a());
}

namespace detail {

template <typename Scalar>
void require_distinct(const std::vector<RiemannPoint<Scalar>>& pts, const Tolerance& tol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (approx_equal(pts[i], pts[j], Scalar(tol.arithmetic))) {
        throw GeometryError(ErrorKind::coincident_points, "points must be pairwise distinct");
      }
    }
  }
}

}  // namespace detail

/// The map sending z1 -> 0, z2 -> 1, z3 -> infinity.
template <typename Scalar>
MoebiusMap<Scalar> from_three_points(const RiemannPoint<Scalar>& z1, const RiemannPoint<Scalar>& z2,
                                     const RiemannPoint<Scalar>& z3, const Tolerance& tol = {}) {
  using C = Complex<Scalar>;
  detail::require_distinct<Scalar>({z1, z2, z3}, tol);
  if (z1.is_infinite()) {
    const C& b = z2.value();
    const C& c = z3.value();
    return MoebiusMap<Scalar>(C(0), b - c, C(1), -c);
  }
  if (z2.is_infinite()) {
    return MoebiusMap<Scalar>(C(1), -z1.value(), C(1), -z3.value());
  }
  if (z3.is_infinite()) {
    return MoebiusMap<Scalar>(C(1), -z1.value(), C(0), z2.value() - z1.value());
  }
  const C& a = z1.value();
  const C& b = z2.value();
  const C& c = z3.value();
  const C num = b - c;
  const C den = b - a;
  return MoebiusMap<Scalar>(num, -(a * num), den, -(c * den));
}

/// The map sending z_i -> w_i for i = 1, 2, 3.
template <typename Scalar>
MoebiusMap<Scalar> between_triples(const RiemannPoint<Scalar>& z1, const RiemannPoint<Scalar>& z2,
                                   const RiemannPoint<Scalar>& z3, const RiemannPoint<Scalar>& w1,
                                   const RiemannPoint<Scalar>& w2, const RiemannPoint<Scalar>& w3,
                                   const Tolerance& tol = {}) {
  const auto h = from_three_points(z1, z2, z3, tol);
  const auto g = from_three_points(w1, w2, w3, tol);
  return compose(inverse(g), h);
}

/// (a,b;c,d) = (a-c)(b-d) / ((a-d)(b-c)). A single point at infinity cancels
/// its two factors.
template <typename Scalar>
Complex<Scalar> cross_ratio(const RiemannPoint<Scalar>& a, const RiemannPoint<Scalar>& b, const RiemannPoint<Scalar>& c,
                            const RiemannPoint<Scalar>& d, const Tolerance& tol = {}) {
  detail::require_distinct<Scalar>({a, b, c, d}, tol);
  if (a.is_infinite()) return (b.value() - d.value()) / (b.value() - c.value());
  if (b.is_infinite()) return (a.value() - c.value()) / (a.value() - d.value());
  if (c.is_infinite()) return (b.value() - d.value()) / (a.value() - d.value());
  if (d.is_infinite()) return (a.value() - c.value()) / (b.value() - c.value());
  const auto& av = a.value();
  const auto& bv = b.value();
  const auto& cv = c.value();
  const auto& dv = d.value();
  return ((av - cv) * (bv - dv)) / ((av - dv) * (bv - cv));
}

/// Distinct values of the cross ratio over all 24 orderings of a quadruple
/// whose cross ratio is lambda. Sorted by (real, imag).
template <typename Scalar>
std::vector<Complex<Scalar>> cross_ratio_orbit(const Complex<Scalar>& lambda, const Tolerance& tol = {}) {
  using C = Complex<Scalar>;
  using P = RiemannPoint<Scalar>;
  const Scalar eps = Scalar(tol.geometric);
  if (!is_finite(lambda) || std::abs(lambda) <= eps || std::abs(lambda - C(1)) <= eps) {
    throw GeometryError(ErrorKind::invalid_argument, "cross ratio orbit needs lambda outside {0, 1, infinity}");
  }
  // (0, 1; infinity, w) = (w - 1) / w, so w = 1 / (1 - lambda) realizes lambda.
  const std::array<P, 4> witness{P(C(0)), P(C(1)), P::infinity(), P(C(1) / (C(1) - lambda))};
  std::array<int, 4> order{0, 1, 2, 3};
  std::vector<C> orbit;
  do {
    const C value = cross_ratio(witness[order[0]], witness[order[1]], witness[order[2]], witness[order[3]], tol);
    const bool seen = std::any_of(orbit.begin(), orbit.end(), [&](const C& v) { return std::abs(v - value) <= eps; });
    if (!seen) orbit.push_back(value);
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(orbit.begin(), orbit.end(), [](const C& x, const C& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return orbit;
}

}  // namespace hopf
