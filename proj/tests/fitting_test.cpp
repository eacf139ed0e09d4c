#include "hopf/fitting.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace {

using hopf::ErrorKind;
using hopf::GeometryError;
using C = hopf::Complex<double>;
using G = hopf::GeneralizedCircle<double>;
using oracle::V3;
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

TEST(CircleFit, ExactCircleAndLine) {
  std::vector<C> circle, line;
  for (int k = 0; k < 20; ++k) {
    circle.push_back(C(3, -1) + std::polar(2.5, 2 * kPi * k / 20));
    line.push_back(C(1, 1) + double(k - 10) * C(1, 2));
  }
  const auto c = hopf::fit_generalized_circle(circle);
  EXPECT_LT(c.residual, 1e-12);
  EXPECT_FALSE(c.circle.is_line());
  EXPECT_LT(std::abs(c.circle.center() - C(3, -1)), 1e-12);
  EXPECT_NEAR(c.circle.radius(), 2.5, 1e-12);

  const auto l = hopf::fit_generalized_circle(line);
  EXPECT_TRUE(l.circle.is_line());
  EXPECT_LT(l.residual, 1e-12);
  for (const C& z : line) EXPECT_LT(l.circle.distance_to(z), 1e-10);
}

TEST(CircleFit, ResidualReflectsNoise) {
  oracle::Rng rng(70);
  std::vector<C> pts;
  for (int k = 0; k < 200; ++k) pts.push_back(std::polar(1.0 + 1e-3 * rng.normal(), 2 * kPi * k / 200));
  const auto fit = hopf::fit_generalized_circle(pts);
  EXPECT_GT(fit.residual, 1e-4);
  EXPECT_LT(fit.residual, 1e-2);
}

TEST(CircleFit, RankDeficientInputs) {
  EXPECT_EQ(kind_of([] { hopf::fit_generalized_circle(std::vector<C>{C(0), C(1)}); }), ErrorKind::rank_deficient);
  EXPECT_EQ(kind_of([] { hopf::fit_generalized_circle(std::vector<C>(5, C(1))); }), ErrorKind::rank_deficient);
}

TEST(CircleFit, AgreesWithCircumcircleOracle) {
  oracle::Rng rng(71);
  for (int k = 0; k < 200; ++k) {
    const C center = rng.complex(3.0);
    const double radius = std::exp(rng.normal());
    std::vector<C> pts;
    for (int j = 0; j < 12; ++j) pts.push_back(center + std::polar(radius, rng.uniform(-kPi, kPi)));
    const auto [c, r] = oracle::circumcircle(pts[0], pts[1], pts[2]);
    const auto fit = hopf::fit_generalized_circle(pts);
    if (r > 1e3) continue;
    EXPECT_LT(std::abs(fit.circle.center() - c), 1e-7 * (1 + r));
    EXPECT_NEAR(fit.circle.radius(), r, 1e-7 * (1 + r));
  }
}

TEST(PlaneFit, RecoversNormal) {
  oracle::Rng rng(72);
  const V3 n = rng.unit3();
  const V3 e1 = n.unitOrthogonal(), e2 = n.cross(e1);
  std::vector<V3> pts;
  for (int k = 0; k < 50; ++k) pts.push_back(V3(1, 2, 3) + rng.normal() * e1 + rng.normal() * e2);
  const auto fit = hopf::fit_plane(pts);
  EXPECT_LT(fit.normal.cross(n).norm(), 1e-12);
  EXPECT_LT(fit.singular_values(2), 1e-12);
}

TEST(CircleFit3, RandomCircles) {
  oracle::Rng rng(73);
  for (int k = 0; k < 100; ++k) {
    const V3 n = rng.unit3(), center = rng.vec3();
    const double radius = std::exp(rng.normal());
    const V3 e1 = n.unitOrthogonal(), e2 = n.cross(e1);
    std::vector<V3> pts;
    for (int j = 0; j < 32; ++j) {
      const double t = 2 * kPi * j / 32;
      pts.push_back(center + radius * (std::cos(t) * e1 + std::sin(t) * e2));
    }
    const auto fit = hopf::fit_circle_3d(pts);
    EXPECT_LT(fit.residual, 1e-10 * (1 + radius));
    EXPECT_LT((fit.center - center).norm(), 1e-10 * (1 + radius));
    EXPECT_NEAR(fit.radius, radius, 1e-10 * (1 + radius));
    EXPECT_LT(fit.normal.cross(n).norm(), 1e-10);
    const auto [c3, r3, n3] = oracle::circle_through(pts[0], pts[11], pts[22]);
    EXPECT_LT((c3 - fit.center).norm(), 1e-9 * (1 + radius));
    EXPECT_NEAR(r3, fit.radius, 1e-9 * (1 + radius));
  }
}

TEST(CircleFit3, Errors) {
  std::vector<V3> few(5, V3::Zero());
  EXPECT_EQ(kind_of([&] { hopf::fit_circle_3d(few); }), ErrorKind::rank_deficient);
  std::vector<V3> collinear;
  for (int k = 0; k < 10; ++k) collinear.emplace_back(k, 0, 0);
  EXPECT_EQ(kind_of([&] { hopf::fit_circle_3d(collinear); }), ErrorKind::rank_deficient);
}

std::vector<V3> torus_samples(double R, double r, int nu, int nv) {
  std::vector<V3> out;
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      const double u = 2 * kPi * (i + 0.3) / nu, v = 2 * kPi * (j + 0.7) / nv;
      const double w = R + r * std::cos(v);
      out.emplace_back(w * std::cos(u), w * std::sin(u), r * std::sin(v));
    }
  }
  return out;
}

TEST(TorusFit, RecoversRadii) {
  for (auto [R, r] : {std::pair{2.0, 1.0}, std::pair{std::sqrt(5.0), 2.0}, std::pair{1.2, 0.1}}) {
    const auto pts = torus_samples(R, r, 16, 12);
    const auto fit = hopf::fit_torus_of_revolution(pts);
    EXPECT_NEAR(fit.major_radius, R, 1e-10);
    EXPECT_NEAR(fit.minor_radius, r, 1e-10);
    EXPECT_LT(fit.residual, 1e-10);
    for (const auto& x : pts) EXPECT_LT(std::abs(hopf::torus_implicit(x, R, r)), 1e-10 * std::pow(R + r, 4));
  }
}

TEST(TorusFit, OffsetAxisOrigin) {
  auto pts = torus_samples(3.0, 0.5, 12, 8);
  const V3 shift(1, -2, 0.5);
  for (auto& x : pts) x += shift;
  const auto fit = hopf::fit_torus_of_revolution(pts, shift);
  EXPECT_NEAR(fit.major_radius, 3.0, 1e-10);
  EXPECT_NEAR(fit.minor_radius, 0.5, 1e-10);
}

TEST(TorusFit, Errors) {
  EXPECT_EQ(kind_of([] { hopf::fit_torus_of_revolution(std::vector<V3>(10, V3::UnitX())); }), ErrorKind::rank_deficient);
  EXPECT_EQ(kind_of([] { hopf::fit_torus_of_revolution(std::vector<V3>(100, V3::UnitX())); }), ErrorKind::rank_deficient);
}

TEST(TorusImplicit, SignInsideAndOutside) {
  EXPECT_LT(hopf::torus_implicit(V3(2, 0, 0), 2.0, 1.0), 0);
  EXPECT_GT(hopf::torus_implicit(V3(0, 0, 0), 2.0, 1.0), 0);
  EXPECT_GT(hopf::torus_implicit(V3(4, 0, 0), 2.0, 1.0), 0);
  EXPECT_NEAR(hopf::torus_implicit(V3(3, 0, 0), 2.0, 1.0), 0, 1e-12);
}

}  // namespace
