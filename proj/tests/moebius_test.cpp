#include "hopf/moebius.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace {

using hopf::ErrorKind;
using hopf::GeometryError;
using C = hopf::Complex<double>;
using P = hopf::RiemannPoint<double>;
using M = hopf::MoebiusMap<double>;

constexpr double kBig = 1e8;  // finite stand-in for infinity in the oracles

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorKind::invalid_argument;
}

C direct(const M& m, C z) { return (m.a() * z + m.b()) / (m.c() * z + m.d()); }

M random_map(oracle::Rng& rng) {
  while (true) {
    const C a = rng.complex(), b = rng.complex(), c = rng.complex(), d = rng.complex();
    if (std::abs(a * d - b * c) > 0.1) return M(a, b, c, d);
  }
}

double dist(const P& p, const C& z) { return std::abs(p.value() - z); }

TEST(Apply, IdentityAndPoles) {
  oracle::Rng rng(10);
  for (int k = 0; k < 100; ++k) {
    const C z = rng.complex();
    EXPECT_EQ(hopf::apply(M::identity(), P(z)).value(), z);
  }
  EXPECT_TRUE(hopf::apply(M::identity(), P::infinity()).is_infinite());
  const M reciprocal(C(0), C(1), C(1), C(0));
  EXPECT_TRUE(hopf::apply(reciprocal, P(C(0))).is_infinite());
  EXPECT_EQ(hopf::apply(reciprocal, P::infinity()).value(), C(0));
}

TEST(Apply, InfinityGoesToAOverC) {
  const M f(C(2), C(1), C(1), C(-1));
  const C at_infinity = hopf::apply(f, P::infinity()).value();
  EXPECT_EQ(at_infinity, C(2));
  EXPECT_NEAR(std::abs(direct(f, C(kBig)) - at_infinity), 0, 1e-7);
}

TEST(Apply, DegenerateMapRejected) {
  EXPECT_EQ(kind_of([] { M(C(1), C(2), C(2), C(4)); }), ErrorKind::degenerate_map);
  EXPECT_EQ(kind_of([] { M(C(0), C(0), C(0), C(0)); }), ErrorKind::degenerate_map);
}

TEST(Compose, MatchesSubstitution) {
  const M shift(C(1), C(1), C(0), C(1));
  const M scale(C(2), C(0), C(0), C(1));
  EXPECT_TRUE(hopf::approx_equal(hopf::compose(shift, scale), M(C(2), C(1), C(0), C(1)), 1e-15));

  oracle::Rng rng(11);
  const M m = random_map(rng);
  EXPECT_TRUE(hopf::approx_equal(hopf::compose(M::identity(), m), m, 1e-14));
  EXPECT_TRUE(hopf::approx_equal(hopf::compose(m, M::identity()), m, 1e-14));
}

TEST(Compose, PointwiseAgreementOnRandomMaps) {
  oracle::Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const M m1 = random_map(rng), m2 = random_map(rng);
    const M both = hopf::compose(m1, m2);
    for (int j = 0; j < 100; ++j) {
      const C z = rng.complex();
      const C expected = direct(m1, direct(m2, z));
      if (std::abs(expected) > 1e4) continue;
      EXPECT_LT(std::abs(direct(both, z) - expected), 1e-10 * (1 + std::abs(expected)));
    }
  }
}

TEST(Compose, AssociativeUpToScalar) {
  oracle::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const M a = random_map(rng), b = random_map(rng), c = random_map(rng);
    EXPECT_TRUE(hopf::approx_equal(hopf::compose(hopf::compose(a, b), c), hopf::compose(a, hopf::compose(b, c)), 1e-10));
  }
}

TEST(Inverse, UndoesApply) {
  oracle::Rng rng(14);
  for (int k = 0; k < 1000; ++k) {
    const M m = random_map(rng);
    const C z = rng.complex();
    const P there = hopf::apply(m, P(z));
    ASSERT_TRUE(there.is_finite());
    EXPECT_LT(dist(hopf::apply(hopf::inverse(m), there), z), 1e-10 * (1 + std::abs(z)));
  }
}

TEST(Normalized, ScalarMultiplesAgree) {
  oracle::Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const M m = random_map(rng);
    const C s = rng.complex() + 0.5;
    const M scaled(s * m.a(), s * m.b(), s * m.c(), s * m.d());
    EXPECT_TRUE(hopf::approx_equal(m, scaled, 1e-10));
    EXPECT_LT(std::abs(m.normalized().determinant() - 1.0), 1e-12);
  }
}

void expect_three_conditions(const M& m, const P& z1, const P& z2, const P& z3, double tol) {
  EXPECT_LT(std::abs(hopf::apply(m, z1).value()), tol);
  EXPECT_LT(std::abs(hopf::apply(m, z2).value() - 1.0), tol);
  EXPECT_TRUE(hopf::apply(m, z3).is_infinite());
}

TEST(FromThreePoints, ReferenceTriples) {
  const M id = hopf::from_three_points(P(C(0)), P(C(1)), P::infinity());
  EXPECT_TRUE(hopf::approx_equal(id, M::identity(), 1e-15));

  const M flip = hopf::from_three_points(P(C(1)), P(C(0)), P::infinity());
  expect_three_conditions(flip, P(C(1)), P(C(0)), P::infinity(), 1e-15);
  EXPECT_TRUE(hopf::approx_equal(flip, M(C(-1), C(1), C(0), C(1)), 1e-15));

  const P a(C(0, 1)), b(C(0, -1)), c(C(1));
  expect_three_conditions(hopf::from_three_points(a, b, c), a, b, c, 1e-12);
}

TEST(FromThreePoints, InfinityInEachSlot) {
  oracle::Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    std::array<P, 3> z{P(rng.complex()), P(rng.complex()), P(rng.complex())};
    z[std::size_t(k % 3)] = P::infinity();
    const M m = hopf::from_three_points(z[0], z[1], z[2]);
    if (z[0].is_infinite()) {
      EXPECT_LT(std::abs(hopf::apply(m, z[0]).value()), 1e-12);
      EXPECT_LT(std::abs(hopf::apply(m, z[1]).value() - 1.0), 1e-12);
      EXPECT_TRUE(hopf::apply(m, z[2]).is_infinite());
    } else {
      expect_three_conditions(m, z[0], z[1], z[2], 1e-12);
    }
  }
}

TEST(FromThreePoints, RandomTriplesAndUniqueness) {
  oracle::Rng rng(17);
  for (int k = 0; k < 1000; ++k) {
    const P z1(rng.complex()), z2(rng.complex()), z3(rng.complex());
    const M m = hopf::from_three_points(z1, z2, z3);
    expect_three_conditions(m, z1, z2, z3, 1e-12);
    // Any map with the same three values is a scalar multiple: compare with
    // the cross-ratio form built directly from the definition.
    const C a = z1.value(), b = z2.value(), c = z3.value();
    const M other((b - c), -a * (b - c), (b - a), -c * (b - a));
    EXPECT_TRUE(hopf::approx_equal(m, other, 1e-9));
  }
}

TEST(FromThreePoints, CoincidentRejected) {
  EXPECT_EQ(kind_of([] { hopf::from_three_points(P(C(1)), P(C(1)), P(C(2))); }), ErrorKind::coincident_points);
  EXPECT_EQ(kind_of([] { hopf::from_three_points(P::infinity(), P(C(1)), P::infinity()); }),
            ErrorKind::coincident_points);
}

TEST(BetweenTriples, ReferenceAndRandom) {
  const P z0(C(0)), z1(C(1)), inf = P::infinity();
  EXPECT_TRUE(hopf::approx_equal(hopf::between_triples(z0, z1, inf, z0, z1, inf), M::identity(), 1e-15));
  const M flip = hopf::between_triples(z0, z1, inf, z1, z0, inf);
  EXPECT_LT(dist(hopf::apply(flip, P(C(0.5))), C(0.5)), 1e-15);

  oracle::Rng rng(18);
  for (int k = 0; k < 1000; ++k) {
    std::array<P, 3> z{P(rng.complex()), P(rng.complex()), P(rng.complex())};
    std::array<P, 3> w{P(rng.complex()), P(rng.complex()), P(rng.complex())};
    const M m = hopf::between_triples(z[0], z[1], z[2], w[0], w[1], w[2]);
    for (int i = 0; i < 3; ++i) {
      const C expected = w[std::size_t(i)].value();
      EXPECT_LT(dist(hopf::apply(m, z[std::size_t(i)]), expected), 1e-10 * (1 + std::abs(expected)));
    }
  }
}

TEST(CrossRatio, ReferenceValues) {
  EXPECT_LT(std::abs(hopf::cross_ratio(P(C(0)), P(C(1)), P(C(2)), P(C(3))) - 4.0 / 3.0), 1e-15);
  EXPECT_EQ(kind_of([] { hopf::cross_ratio(P(C(0)), P(C(1)), P(C(1)), P(C(3))); }), ErrorKind::coincident_points);
}

TEST(CrossRatio, InfinityMatchesLargeFiniteStandIn) {
  oracle::Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    std::array<C, 4> z{rng.complex(), rng.complex(), rng.complex(), rng.complex()};
    const int slot = k % 4;
    std::array<P, 4> p{P(z[0]), P(z[1]), P(z[2]), P(z[3])};
    p[std::size_t(slot)] = P::infinity();
    z[std::size_t(slot)] = C(kBig, 0);
    const C exact = hopf::cross_ratio(p[0], p[1], p[2], p[3]);
    const C approx = ((z[0] - z[2]) * (z[1] - z[3])) / ((z[0] - z[3]) * (z[1] - z[2]));
    EXPECT_LT(std::abs(exact - approx), 1e-6 * (1 + std::abs(exact)));
  }
  // (0, 1; infinity, lambda) = (lambda - 1) / lambda
  const C lambda(0.3, 1.7);
  const C value = hopf::cross_ratio(P(C(0)), P(C(1)), P::infinity(), P(lambda));
  EXPECT_LT(std::abs(value - (lambda - 1.0) / lambda), 1e-15);
}

TEST(CrossRatio, NormalizingMapSendsFourthPointToPermutedRatio) {
  // With z1 -> 0, z2 -> 1, z3 -> infinity, the fourth point lands on
  // (z4, z2; z1, z3), and (z1, z2; z3, z4) = 1 - 1 / f(z4).
  oracle::Rng rng(20);
  for (int k = 0; k < 1000; ++k) {
    const P z1(rng.complex()), z2(rng.complex()), z3(rng.complex()), z4(rng.complex());
    const C f4 = hopf::apply(hopf::from_three_points(z1, z2, z3), z4).value();
    EXPECT_LT(std::abs(f4 - hopf::cross_ratio(z4, z2, z1, z3)), 1e-10 * (1 + std::abs(f4)));
    const C literal = hopf::cross_ratio(z1, z2, z3, z4);
    EXPECT_LT(std::abs(literal - (1.0 - 1.0 / f4)), 1e-9 * (1 + std::abs(literal)));
  }
}

TEST(CrossRatio, InvariantUnderMoebiusMaps) {
  oracle::Rng rng(21);
  for (int k = 0; k < 1000; ++k) {
    const M m = random_map(rng);
    std::array<P, 4> z{P(rng.complex()), P(rng.complex()), P(rng.complex()), P(rng.complex())};
    const std::array<P, 4> w{hopf::apply(m, z[0]), hopf::apply(m, z[1]), hopf::apply(m, z[2]), hopf::apply(m, z[3])};
    const C before = hopf::cross_ratio(z[0], z[1], z[2], z[3]);
    const C after = hopf::cross_ratio(w[0], w[1], w[2], w[3]);
    EXPECT_LT(std::abs(before - after), 1e-9 * (1 + std::abs(before)));
  }
}

TEST(CrossRatioOrbit, HarmonicAndGeneric) {
  const auto harmonic = hopf::cross_ratio_orbit(C(-1));
  ASSERT_EQ(harmonic.size(), 3u);
  EXPECT_LT(std::abs(harmonic[0] - C(-1)), 1e-12);
  EXPECT_LT(std::abs(harmonic[1] - C(0.5)), 1e-12);
  EXPECT_LT(std::abs(harmonic[2] - C(2)), 1e-12);

  const auto generic = hopf::cross_ratio_orbit(C(3));
  ASSERT_EQ(generic.size(), 6u);
  auto contains = [&](const C& v) {
    return std::any_of(generic.begin(), generic.end(), [&](const C& g) { return std::abs(g - v) < 1e-12; });
  };
  for (const auto& v : generic) {
    EXPECT_TRUE(contains(1.0 / v));
    EXPECT_TRUE(contains(1.0 - v));
  }
  EXPECT_TRUE(contains(C(3)));
}

TEST(CrossRatioOrbit, ContainsLambdaAndRejectsDegenerate) {
  oracle::Rng rng(22);
  for (int k = 0; k < 100; ++k) {
    const C lambda = rng.complex() + 0.01;
    const auto orbit = hopf::cross_ratio_orbit(lambda);
    EXPECT_LE(orbit.size(), 6u);
    EXPECT_TRUE(std::any_of(orbit.begin(), orbit.end(), [&](const C& v) { return std::abs(v - lambda) < 1e-9; }));
  }
  EXPECT_EQ(kind_of([] { hopf::cross_ratio_orbit(C(1)); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { hopf::cross_ratio_orbit(C(0)); }), ErrorKind::invalid_argument);
}

}  // namespace
