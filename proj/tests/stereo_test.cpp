#include "hopf/fitting.hpp"
#include "hopf/inversion.hpp"
#include "hopf/stereo.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

namespace {

using hopf::ErrorKind;
using hopf::GeometryError;
using C = hopf::Complex<double>;
using G = hopf::GeneralizedCircle<double>;
using oracle::V3;
using oracle::V4;
constexpr double kPi = oracle::kPi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorKind::invalid_argument;
}

TEST(Project, ReferencePoints) {
  EXPECT_EQ(hopf::project(V3(0, 0, -1)).value(), Eigen::Vector2d(0, 0));
  EXPECT_EQ(hopf::project(V3(1, 0, 0)).value(), Eigen::Vector2d(1, 0));
  EXPECT_EQ(hopf::project(V4(1, 0, 0, 0)).value(), V3(1, 0, 0));
  EXPECT_TRUE(hopf::project(V3(0, 0, 1)).is_infinite());
  EXPECT_TRUE(hopf::project(V4(0, 0, 0, 1)).is_infinite());
  EXPECT_TRUE(hopf::project(Eigen::Vector2d(0, 1)).is_infinite());
  EXPECT_EQ(hopf::project(Eigen::Vector2d(1, 0)).value()(0), 1.0);
}

TEST(Unproject, ReferencePoints) {
  EXPECT_EQ((hopf::unproject<double, 2>(Eigen::Vector2d(0, 0))), V3(0, 0, -1));
  EXPECT_EQ((hopf::unproject<double, 2>(Eigen::Vector2d(1, 0))), V3(1, 0, 0));
  EXPECT_EQ((hopf::unproject<double, 3>(hopf::Extended<V3>::infinity())), V4(0, 0, 0, 1));
  EXPECT_EQ((hopf::StereoChart<double, 3>::pole()), V4(0, 0, 0, 1));
}

TEST(Project, MatchesWrittenOutFormula) {
  oracle::Rng rng(40);
  for (int k = 0; k < 1000; ++k) {
    const V3 p = rng.unit3();
    const V4 q = rng.unit4();
    EXPECT_LT((hopf::project(p).value() - oracle::sigma2(p)).norm(), 1e-12 * (1 + oracle::sigma2(p).norm()));
    EXPECT_LT((hopf::project(q).value() - oracle::sigma3(q)).norm(), 1e-12 * (1 + oracle::sigma3(q).norm()));
  }
}

TEST(Project, RoundTripOnS2AndS3) {
  oracle::Rng rng(41);
  for (int k = 0; k < 10000; ++k) {
    const V3 p = rng.unit3();
    EXPECT_LT((hopf::unproject<double, 2>(hopf::project(p)) - p).norm(), 1e-12);
    const V4 q = rng.unit4();
    EXPECT_LT((hopf::unproject<double, 3>(hopf::project(q)) - q).norm(), 1e-12);

    const V3 y = rng.vec3();
    const V4 up = hopf::unproject<double, 3>(y);
    EXPECT_TRUE(hopf::on_unit_sphere(up));
    EXPECT_LT((hopf::project(up).value() - y).norm(), 1e-12 * (1 + y.norm()));
  }
}

TEST(Project, EquatorIsFixedPointwise) {
  oracle::Rng rng(42);
  for (int k = 0; k < 1000; ++k) {
    const double t = rng.uniform(-kPi, kPi);
    const V3 p(std::cos(t), std::sin(t), 0);
    EXPECT_LT((hopf::project(p).value() - p.head<2>()).norm(), 1e-15);
    const V4 q(rng.unit3().x(), 0, 0, 0);
    const V3 u = rng.unit3();
    const V4 eq(u.x(), u.y(), u.z(), 0);
    EXPECT_LT((hopf::project(eq).value() - u).norm(), 1e-15);
    (void)q;
  }
}

// Random circle on S^2: intersection with the plane n . x = d, |d| < 1.
std::vector<V3> sphere_circle(const V3& n, double d, int samples) {
  const V3 e1 = n.unitOrthogonal();
  const V3 e2 = n.cross(e1);
  const double rho = std::sqrt(1 - d * d);
  std::vector<V3> out;
  for (int j = 0; j < samples; ++j) {
    const double t = 2 * kPi * (j + 0.5) / samples;
    out.push_back(d * n + rho * (std::cos(t) * e1 + std::sin(t) * e2));
  }
  return out;
}

TEST(CirclePreservation, RandomCirclesOnS2) {
  oracle::Rng rng(43);
  for (int k = 0; k < 200; ++k) {
    const V3 n = rng.unit3();
    const double d = rng.uniform(-0.9, 0.9);
    std::vector<C> pts;
    for (const V3& p : sphere_circle(n, d, 96)) {
      const auto y = hopf::project(p).value();
      pts.emplace_back(y.x(), y.y());
    }
    const auto fit = hopf::fit_generalized_circle(pts);
    EXPECT_LT(fit.residual, 1e-8);
    // Independent check: the circle through three of the images contains the rest.
    const auto [center, radius] = oracle::circumcircle(pts[0], pts[32], pts[64]);
    if (radius < 1e3) {
      for (const C& z : pts) EXPECT_LT(std::abs(std::abs(z - center) - radius), 1e-8 * (1 + radius));
    }
  }
}

TEST(CirclePreservation, CirclesThroughThePoleBecomeLines) {
  oracle::Rng rng(44);
  for (int k = 0; k < 50; ++k) {
    // n . pole = d makes the pole lie on the circle.
    const V3 n = rng.unit3();
    const double d = n.z();
    std::vector<C> pts;
    for (const V3& p : sphere_circle(n, d, 64)) {
      const auto y = hopf::project(p);
      if (y.is_infinite() || y.value().norm() > 1e4) continue;
      pts.emplace_back(y.value().x(), y.value().y());
    }
    const auto fit = hopf::fit_generalized_circle(pts);
    EXPECT_TRUE(fit.circle.is_line());
    EXPECT_LT(fit.residual, 1e-8);
  }
}

TEST(GreatCircleImage, ReferenceCases) {
  EXPECT_TRUE(hopf::is_great_circle_image(G::line(C(0), C(1))));
  EXPECT_TRUE(hopf::is_great_circle_image(G::circle(C(0), 1.0)));
  EXPECT_FALSE(hopf::is_great_circle_image(G::circle(C(2, 0), 1.0)));
}

TEST(GreatCircleImage, AgreesWithPlaneThroughOriginOracle) {
  // The off-center circle lifts to a circle whose plane misses the origin.
  std::vector<V3> lifted;
  for (int j = 0; j < 64; ++j) {
    const C z = C(2, 0) + std::polar(1.0, 2 * kPi * j / 64);
    lifted.push_back(hopf::unproject<double, 2>(Eigen::Vector2d(z.real(), z.imag())));
  }
  const auto plane = hopf::fit_plane(lifted);
  EXPECT_GT(std::abs(plane.normal.dot(plane.centroid)), 1e-3);

  oracle::Rng rng(45);
  for (int k = 0; k < 200; ++k) {
    const V3 n = rng.unit3();
    const double d = (k % 2 == 0) ? 0.0 : rng.uniform(0.1, 0.9);
    std::vector<C> pts;
    for (const V3& p : sphere_circle(n, d, 64)) {
      const auto y = hopf::project(p);
      if (y.is_infinite() || y.value().norm() > 1e4) continue;
      pts.emplace_back(y.value().x(), y.value().y());
    }
    const auto fit = hopf::fit_generalized_circle(pts);
    EXPECT_EQ(hopf::is_great_circle_image(fit.circle, {1e-7, 1e-12}), d == 0.0) << "case " << k;
  }
}

TEST(ArcDistance, ReferenceValues) {
  const V3 x = V3::UnitX(), y = V3::UnitY();
  EXPECT_EQ(hopf::arc_distance(x, x), 0.0);
  EXPECT_NEAR(hopf::arc_distance(x, V3(-x)), kPi, 1e-15);
  EXPECT_NEAR(hopf::arc_distance(x, y), kPi / 2, 1e-15);
}

TEST(SphericalTriangle, AngleExcess) {
  EXPECT_NEAR(hopf::spherical_triangle_area(kPi / 2, kPi / 2, kPi / 2), kPi / 2, 1e-15);
  EXPECT_NEAR(hopf::spherical_triangle_area(1.05, 1.05, 1.05), 3 * 1.05 - kPi, 1e-15);
  EXPECT_NEAR(hopf::spherical_triangle_area(kPi / 2, kPi / 2, kPi), kPi, 1e-15);
  EXPECT_EQ(kind_of([] { hopf::spherical_triangle_area(1.0, 1.0, 1.0); }), ErrorKind::invalid_argument);
}

TEST(SphericalTriangle, MonteCarloOracle) {
  // Octant triangle: 1/8 of the sphere.
  const double octant = oracle::spherical_triangle_area_mc(V3::UnitX(), V3::UnitY(), V3::UnitZ(), 1000000, 46);
  EXPECT_NEAR(octant, hopf::spherical_triangle_area(kPi / 2, kPi / 2, kPi / 2), 0.01 * kPi / 2);

  // Triangle with vertices x, y and (1,1,1)/sqrt3; its angles from the tangent vectors.
  const V3 a = V3::UnitX(), b = V3::UnitY(), c = V3(1, 1, 1).normalized();
  auto angle_at = [](const V3& p, const V3& q, const V3& r) {
    const V3 tq = (q - p.dot(q) * p).normalized();
    const V3 tr = (r - p.dot(r) * p).normalized();
    return std::acos(tq.dot(tr));
  };
  const double area = hopf::spherical_triangle_area(angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b));
  EXPECT_NEAR(oracle::spherical_triangle_area_mc(a, b, c, 1000000, 47), area, 0.01 * area + 2e-3);
}

TEST(InversionCompatibility, SqrtTwoSphereAtThePoleAgreesWithProjection) {
  const hopf::SphereN<double, 3> r(V3(0, 0, 1), std::sqrt(2.0));
  const hopf::SphereN<double, 3> wrong(V3(0, 0, 1), 1.0);
  oracle::Rng rng(48);
  double worst = 0, wrong_best = 1e9;
  for (int k = 0; k < 1000; ++k) {
    const V3 p = rng.unit3();
    const V3 image = hopf::invert_point(r, hopf::Extended<V3>(p)).value();
    const auto y = oracle::sigma2(p);
    worst = std::max(worst, (image - V3(y.x(), y.y(), 0)).norm() / (1 + y.norm()));
    const V3 off = hopf::invert_point(wrong, hopf::Extended<V3>(p)).value();
    wrong_best = std::min(wrong_best, (off - V3(y.x(), y.y(), 0)).norm());
  }
  EXPECT_LT(worst, 1e-12);
  EXPECT_GT(wrong_best, 1e-3);
}

TEST(Hypercube, VerticesAndEdges) {
  const auto v = hopf::hypercube_vertices();
  ASSERT_EQ(v.size(), 16u);
  for (const auto& x : v) EXPECT_NEAR(x.norm(), 1.0, 1e-12);
  const auto e = hopf::hypercube_edges();
  ASSERT_EQ(e.size(), 32u);
  for (const auto& [a, b] : e) {
    int differing = 0;
    for (int k = 0; k < 4; ++k) differing += v[std::size_t(a)](k) != v[std::size_t(b)](k);
    EXPECT_EQ(differing, 1);
  }
  std::vector<int> degree(16, 0);
  for (const auto& [a, b] : e) ++degree[std::size_t(a)], ++degree[std::size_t(b)];
  for (int d : degree) EXPECT_EQ(d, 4);
}

TEST(Hypercube, EightCubicalSides) {
  const auto v = hopf::hypercube_vertices();
  const auto e = hopf::hypercube_edges();
  int sides = 0;
  for (int axis = 0; axis < 4; ++axis) {
    for (double sign : {-0.5, 0.5}) {
      std::set<int> members;
      for (int i = 0; i < 16; ++i)
        if (v[std::size_t(i)](axis) == sign) members.insert(i);
      int inner_edges = 0;
      for (const auto& [a, b] : e) inner_edges += members.count(a) && members.count(b);
      // a cube: 8 vertices, 12 edges
      sides += members.size() == 8 && inner_edges == 12;
    }
  }
  EXPECT_EQ(sides, 8);
}

TEST(Hypercube, ArcsStayOnSphereAndEndAtVertices) {
  const auto v = hopf::hypercube_vertices();
  for (const auto& [a, b] : hopf::hypercube_edges()) {
    const auto arc = hopf::great_arc(v[std::size_t(a)], v[std::size_t(b)], 17);
    ASSERT_EQ(arc.size(), 17u);
    for (const auto& x : arc) EXPECT_NEAR(x.norm(), 1.0, 1e-12);
    EXPECT_LT((hopf::project(arc.front()).value() - hopf::project(v[std::size_t(a)]).value()).norm(), 1e-12);
    EXPECT_LT((hopf::project(arc.back()).value() - hopf::project(v[std::size_t(b)]).value()).norm(), 1e-12);
  }
  EXPECT_EQ(kind_of([&] { hopf::great_arc(v[0], v[1], 1); }), ErrorKind::invalid_argument);
}

}  // namespace
