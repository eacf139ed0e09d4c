#pragma once

#include "hopf/common.hpp"
#include "hopf/generalized_circle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hopf {

template <typename Scalar>
struct GeneralizedCircleFit {
  GeneralizedCircle<Scalar> circle;
  /// RMS first-order distance of the samples from the fit, divided by the RMS
  /// spread of the samples about their mean.
  Scalar residual;
};

/// Algebraic least-squares fit of alpha |z|^2 + 2 Re(conj(beta) z) + gamma = 0
/// over unit-norm coefficient vectors, on data centered and scaled to unit
/// spread. Lines come out with alpha = 0.
template <typename Scalar>
GeneralizedCircleFit<Scalar> fit_generalized_circle(const std::vector<Complex<Scalar>>& points) {
  using C = Complex<Scalar>;
  if (points.size() < 3) throw GeometryError(ErrorKind::rank_deficient, "a circle fit needs at least 3 points");
  C mean{0};
  for (const auto& z : points) mean += z;
  mean /= Scalar(points.size());
  Scalar spread{0};
  for (const auto& z : points) spread += std::norm(z - mean);
  spread = std::sqrt(spread / Scalar(points.size()));
  if (!(spread > Scalar(0))) throw GeometryError(ErrorKind::rank_deficient, "all points coincide");

  Eigen::Matrix<Scalar, Eigen::Dynamic, 4> design(points.size(), 4);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const C u = (points[i] - mean) / spread;
    design.row(Eigen::Index(i)) << std::norm(u), Scalar(2) * u.real(), Scalar(2) * u.imag(), Scalar(1);
  }
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, Eigen::Dynamic, 4>> svd(design, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(2) <= Scalar(1e-10) * sv(0)) throw GeometryError(ErrorKind::rank_deficient, "points do not determine a circle");
  const Vector4<Scalar> v = svd.matrixV().col(3);
  const GeneralizedCircle<Scalar> local(v(0), C(v(1), v(2)), v(3));
  const auto circle = push_forward(local, mean, spread);

  Scalar sum{0};
  for (const auto& z : points) {
    const Scalar d = circle.sampson_distance(z);
    sum += d * d;
  }
  return {circle, std::sqrt(sum / Scalar(points.size())) / spread};
}

template <typename Scalar>
struct PlaneFit {
  Vector3<Scalar> centroid;
  Vector3<Scalar> normal;
  Vector3<Scalar> singular_values;  ///< descending, of the centered samples
};

template <typename Scalar>
PlaneFit<Scalar> fit_plane(const std::vector<Vector3<Scalar>>& points) {
  if (points.size() < 3) throw GeometryError(ErrorKind::rank_deficient, "a plane fit needs at least 3 points");
  Vector3<Scalar> centroid = Vector3<Scalar>::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= Scalar(points.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 3> centered(points.size(), 3);
  for (std::size_t i = 0; i < points.size(); ++i) centered.row(Eigen::Index(i)) = (points[i] - centroid).transpose();
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, Eigen::Dynamic, 3>> svd(centered, Eigen::ComputeFullV);
  return {centroid, svd.matrixV().col(2), svd.singularValues()};
}

template <typename Scalar>
struct CircleFit3 {
  Vector3<Scalar> center;
  Scalar radius;
  Vector3<Scalar> normal;
  /// RMS Euclidean distance of the samples from the fitted circle.
  Scalar residual;
};

/// Plane by SVD, then an algebraic circle fit inside the plane.
template <typename Scalar>
CircleFit3<Scalar> fit_circle_3d(const std::vector<Vector3<Scalar>>& points) {
  if (points.size() < 8) throw GeometryError(ErrorKind::rank_deficient, "a circle fit needs at least 8 points");
  Vector3<Scalar> centroid = Vector3<Scalar>::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= Scalar(points.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 3> centered(points.size(), 3);
  for (std::size_t i = 0; i < points.size(); ++i) centered.row(Eigen::Index(i)) = (points[i] - centroid).transpose();
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, Eigen::Dynamic, 3>> svd(centered, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(1) > Scalar(1e-12) * sv(0))) throw GeometryError(ErrorKind::rank_deficient, "points are collinear");
  const Vector3<Scalar> e1 = svd.matrixV().col(0);
  const Vector3<Scalar> e2 = svd.matrixV().col(1);
  const Vector3<Scalar> normal = svd.matrixV().col(2);

  const Eigen::Index n = Eigen::Index(points.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 3> design(n, 3);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector3<Scalar> d = centered.row(i).transpose();
    const Scalar x = d.dot(e1);
    const Scalar y = d.dot(e2);
    design.row(i) << Scalar(2) * x, Scalar(2) * y, Scalar(1);
    rhs(i) = x * x + y * y;
  }
  const Vector3<Scalar> sol = design.colPivHouseholderQr().solve(rhs);
  const Scalar radius = std::sqrt(sol(2) + sol(0) * sol(0) + sol(1) * sol(1));
  const Vector3<Scalar> center = centroid + sol(0) * e1 + sol(1) * e2;

  Scalar sum{0};
  for (const auto& p : points) {
    const Vector3<Scalar> d = p - center;
    const Scalar h = d.dot(normal);
    const Scalar radial = (d - h * normal).norm() - radius;
    sum += h * h + radial * radial;
  }
  return {center, radius, normal, std::sqrt(sum / Scalar(points.size()))};
}

template <typename Scalar>
struct TorusFit {
  Scalar major_radius;  ///< R, distance from the axis to the tube center
  Scalar minor_radius;  ///< r, tube radius
  /// RMS of (|x|^2 + R^2 - r^2)^2 - 4 R^2 rho^2 over the samples, rho being
  /// the distance to the axis.
  Scalar residual;
};

/// Torus of revolution (|x|^2 + R^2 - r^2)^2 = 4 R^2 (x1^2 + x2^2) about the
/// given axis, fitted by damped Gauss-Newton on the implicit quartic from the
/// extremal distances to the axis.
template <typename Scalar>
TorusFit<Scalar> fit_torus_of_revolution(const std::vector<Vector3<Scalar>>& points,
                                         const Vector3<Scalar>& axis_origin = Vector3<Scalar>::Zero(),
                                         const Vector3<Scalar>& axis_direction = Vector3<Scalar>::UnitZ()) {
  if (points.size() < 64) throw GeometryError(ErrorKind::rank_deficient, "a torus fit needs at least 64 points");
  const Vector3<Scalar> axis = axis_direction.normalized();
  const Eigen::Index n = Eigen::Index(points.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> q(n), rho2(n);
  Scalar rho_min = std::numeric_limits<Scalar>::infinity();
  Scalar rho_max{0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector3<Scalar> d = points[std::size_t(i)] - axis_origin;
    const Scalar h = d.dot(axis);
    q(i) = d.squaredNorm();
    rho2(i) = std::max(Scalar(0), q(i) - h * h);
    rho_min = std::min(rho_min, std::sqrt(rho2(i)));
    rho_max = std::max(rho_max, std::sqrt(rho2(i)));
  }
  if (!(rho_max > rho_min)) throw GeometryError(ErrorKind::rank_deficient, "samples do not span a tube");

  auto residuals = [&](Scalar R, Scalar r) {
    return ((q.array() + R * R - r * r).square() - Scalar(4) * R * R * rho2.array()).matrix().eval();
  };
  auto cost = [&](Scalar R, Scalar r) { return residuals(R, r).squaredNorm(); };

  Scalar R = (rho_max + rho_min) / 2;
  Scalar r = (rho_max - rho_min) / 2;
  Scalar damping = Scalar(1e-6);
  Scalar current = cost(R, r);
  for (int iter = 0; iter < 200 && current > Scalar(0); ++iter) {
    const auto f = residuals(R, r);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 2> jac(n, 2);
    const auto inner = (q.array() + R * R - r * r).eval();
    jac.col(0) = (Scalar(4) * R * inner - Scalar(8) * R * rho2.array()).matrix();
    jac.col(1) = (Scalar(-4) * r * inner).matrix();
    const Eigen::Matrix<Scalar, 2, 2> jtj = jac.transpose() * jac;
    const Eigen::Matrix<Scalar, 2, 1> jtf = jac.transpose() * f;
    bool improved = false;
    for (int tries = 0; tries < 30 && !improved; ++tries) {
      Eigen::Matrix<Scalar, 2, 2> lhs = jtj;
      lhs.diagonal() *= (Scalar(1) + damping);
      const Eigen::Matrix<Scalar, 2, 1> step = lhs.ldlt().solve(-jtf);
      if (!step.allFinite()) break;
      const Scalar next = cost(R + step(0), r + step(1));
      if (next < current) {
        R += step(0);
        r += step(1);
        const Scalar gain = current - next;
        current = next;
        damping = std::max(damping / 10, Scalar(1e-12));
        improved = true;
        if (gain <= std::numeric_limits<Scalar>::epsilon() * current || step.norm() <= Scalar(1e-15) * R) iter = 200;
      } else {
        damping *= 10;
      }
    }
    if (!improved) break;
  }
  return {std::abs(R), std::abs(r), std::sqrt(current / Scalar(n))};
}

/// Value of the implicit torus quartic; negative inside the solid torus.
template <typename Scalar>
Scalar torus_implicit(const Vector3<Scalar>& x, Scalar R, Scalar r) {
  const Scalar s = x.squaredNorm() + R * R - r * r;
  return s * s - Scalar(4) * R * R * (x.x() * x.x() + x.y() * x.y());
}

}  // namespace hopf
