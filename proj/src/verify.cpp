#include "hopf/verify.hpp"

#include "hopf/complex_plane.hpp"
#include "hopf/fitting.hpp"
#include "hopf/hopf.hpp"
#include "hopf/inversion.hpp"
#include "hopf/moebius.hpp"
#include "hopf/quaternion.hpp"
#include "hopf/stereo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace hopf {

namespace {

using C = Complex<double>;
using Q = Quaternion<double>;
using V3 = Vector3<double>;
using V4 = Vector4<double>;

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return normal_(rng_); }
  C complex(double scale = 1.0) { return {scale * normal(), scale * normal()}; }
  V3 vec3() { return {normal(), normal(), normal()}; }
  V3 unit3() { return vec3().normalized(); }
  V4 unit4() { return V4(normal(), normal(), normal(), normal()).normalized(); }
  Q quaternion() { return Q(normal(), normal(), normal(), normal()); }
  UnitQuaternion<double> unit_quaternion() { return UnitQuaternion<double>::from_any(quaternion()); }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

class Recorder {
 public:
  explicit Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  /// Runs body, which returns the worst error, and records it. An exception
  /// counts as a failure with an infinite error.
  void check(const std::string& name, double threshold, const std::function<double()>& body) {
    double measured = std::numeric_limits<double>::infinity();
    try {
      measured = body();
    } catch (const std::exception&) {
    }
    out_.push_back({suite_, name, measured < threshold, measured, threshold});
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

void quaternion_suite(std::vector<CheckResult>& out) {
  Recorder r("quaternion", out);
  Sampler s(101);
  r.check("composition R_q'(R_q(p)) = R_qq'(p)", 1e-10, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const Q q = s.unit_quaternion(), q2 = s.unit_quaternion();
      const V3 p = s.vec3();
      worst = std::max(worst, (rotate_right(q2, rotate_right(q, p)) - rotate_right(Q(q * q2), p)).norm());
    }
    return worst;
  });
  r.check("double cover R_q = R_-q", 1e-10, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const Q q = s.unit_quaternion();
      const V3 p = s.vec3();
      worst = std::max(worst, (rotate_right(q, p) - rotate_right(Q(-q), p)).norm());
    }
    return worst;
  });
  r.check("axis fixed", 1e-10, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const Q q = s.unit_quaternion();
      worst = std::max(worst, (rotate_right(q, q.vec()) - q.vec()).norm());
    }
    return worst;
  });
  r.check("norm preserved", 1e-10, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const V3 p = s.vec3();
      worst = std::max(worst, std::abs(rotate_right(s.quaternion(), p).norm() - p.norm()));
    }
    return worst;
  });
  r.check("rotation angle = arccos(2a^2 - 1)", 1e-9, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const Q q = s.unit_quaternion();
      const V3 axis = q.vec().normalized();
      V3 p = axis.cross(s.unit3());
      if (p.norm() < 1e-3) continue;
      p.normalize();
      const double measured = std::acos(std::clamp(p.dot(rotate_right(q, p)), -1.0, 1.0));
      const double expected = std::acos(std::clamp(2 * q.a() * q.a() - 1, -1.0, 1.0));
      worst = std::max(worst, std::abs(measured - expected));
    }
    return worst;
  });
  r.check("SU(2) product homomorphism", 1e-10, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const Q q1 = s.quaternion(), q2 = s.quaternion();
      const auto lhs = (to_su2(q1) * to_su2(q2)).matrix();
      const auto rhs = to_su2(Q(q1 * q2)).matrix();
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
  });
}

void stereo_suite(std::vector<CheckResult>& out) {
  Recorder r("stereo", out);
  Sampler s(202);
  r.check("S^2 round trip", 1e-12, [&] {
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      const V3 p = s.unit3();
      worst = std::max(worst, (unproject<double, 2>(project(p)) - p).norm());
    }
    return worst;
  });
  r.check("S^3 round trip", 1e-12, [&] {
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      const V4 p = s.unit4();
      worst = std::max(worst, (unproject<double, 3>(project(p)) - p).norm());
    }
    return worst;
  });
  r.check("circles on S^2 project to circles", 1e-8, [&] {
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
      const V3 n = s.unit3();
      const double h = s.uniform(-0.9, 0.9);
      const V3 e1 = n.unitOrthogonal();
      const V3 e2 = n.cross(e1);
      const double rad = std::sqrt(1 - h * h);
      std::vector<C> pts;
      for (int j = 0; j < 64; ++j) {
        const double t = 2 * kPi<double> * j / 64;
        const V3 x = h * n + rad * (std::cos(t) * e1 + std::sin(t) * e2);
        const auto y = project(x);
        if (y.is_finite() && y.value().norm() < 1e6) pts.emplace_back(y.value().x(), y.value().y());
      }
      worst = std::max(worst, fit_generalized_circle(pts).residual);
    }
    return worst;
  });
  r.check("equator fixed", 1e-15, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const double t = s.uniform(-kPi<double>, kPi<double>);
      const V3 p(std::cos(t), std::sin(t), 0);
      const auto y = project(p).value();
      worst = std::max(worst, (y - p.head<2>()).norm());
    }
    return worst;
  });
  r.check("inversion in the sqrt(2) sphere at the pole agrees with the chart", 1e-12, [&] {
    const SphereN<double, 3> big(V3(0, 0, 1), std::sqrt(2.0));
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const V3 p = s.unit3();
      const auto y = project(p);
      const auto image = invert_point(big, Extended<V3>(p));
      if (y.is_infinite() || image.is_infinite()) continue;
      const V3 chart(y.value().x(), y.value().y(), 0);
      worst = std::max(worst, (image.value() - chart).norm() / (1 + chart.norm()));
    }
    return worst;
  });
  r.check("hypercube: 16 unit vertices, 32 edges", 0.5, [&] {
    const auto v = hypercube_vertices<double>();
    double bad = (v.size() == 16 ? 0 : 1) + (hypercube_edges().size() == 32 ? 0 : 1);
    for (const auto& x : v) bad += std::abs(x.norm() - 1) > 1e-12;
    return bad;
  });
}

void inversion_suite(std::vector<CheckResult>& out) {
  Recorder r("inversion", out);
  Sampler s(303);
  r.check("inversion is an involution with |ap||aq| = r^2", 1e-10, [&] {
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      const auto circle = make_circle(s.complex(), std::exp(s.normal()));
      const C a = to_complex(circle.center());
      const C p = a + s.complex();
      const C q = invert_point(circle, RiemannPoint<double>(p)).value();
      const C back = invert_point(circle, RiemannPoint<double>(q)).value();
      const double rr = circle.radius() * circle.radius();
      worst = std::max({worst, std::abs(back - p) / (1 + std::abs(p)), std::abs(std::abs(p - a) * std::abs(q - a) - rr) / rr});
    }
    return worst;
  });
  r.check("inverted circles fit their predicted images", 1e-8, [&] {
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
      const auto inv = make_circle(s.complex(), std::exp(0.5 * s.normal()));
      const C a = to_complex(inv.center());
      GeneralizedCircle<double> g = k % 4 == 0 ? GeneralizedCircle<double>::line(a + s.complex(), s.complex())
                                    : k % 4 == 1 ? GeneralizedCircle<double>::circle(a + s.complex(), std::abs(s.complex()) + 0.1)
                                                 : GeneralizedCircle<double>::circle(s.complex(), std::exp(0.5 * s.normal()));
      if (k % 4 == 1) {  // through the center of inversion
        const C c = a + s.complex();
        g = GeneralizedCircle<double>::circle(c, std::abs(c - a));
      }
      const auto predicted = invert_circle(inv, g);
      std::vector<C> pts;
      for (int j = 0; j < 64; ++j) {
        C z;
        if (g.is_line()) {
          z = g.line_point() + std::tan(kPi<double> * (j + 0.5) / 64 - kPi<double> / 2) * C(0, 1) * g.line_normal();
        } else {
          z = g.center() + std::polar(g.radius(), 2 * kPi<double> * (j + 0.5) / 64);
        }
        const auto w = invert_point(inv, RiemannPoint<double>(z));
        if (w.is_finite() && std::abs(w.value()) < 1e6) pts.push_back(w.value());
      }
      const auto fit = fit_generalized_circle(pts);
      double dev = fit.residual;
      for (const auto& w : pts) dev = std::max(dev, predicted.sampson_distance(w) / (1 + std::abs(w)));
      worst = std::max(worst, dev);
    }
    return worst;
  });
  r.check("composed inversions equal the Moebius map", 1e-9, [&] {
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
      const auto c1 = make_circle(s.complex(), std::exp(0.3 * s.normal()));
      const auto c2 = make_circle(s.complex(), std::exp(0.3 * s.normal()));
      const auto m = compose_inversions(c1, c2);
      for (int j = 0; j < 20; ++j) {
        const C z = s.complex(2.0);
        const auto direct = invert_point(c1, invert_point(c2, RiemannPoint<double>(z)));
        const auto via = hopf::apply(m, RiemannPoint<double>(z));
        if (direct.is_infinite() || via.is_infinite()) continue;
        worst = std::max(worst, std::abs(direct.value() - via.value()) / (1 + std::abs(direct.value())));
      }
    }
    return worst;
  });
  r.check("Apollonian families are orthogonal", 1e-9, [&] {
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const auto fam = apollonian_families(s.complex(), s.complex(), 8, 8);
      for (const auto& e : fam.elliptic) {
        for (const auto& h : fam.hyperbolic) worst = std::max(worst, std::abs(circles_orthogonal(e, h).angle - kPi<double> / 2));
      }
    }
    return worst;
  });
  r.check("cross ratio is Moebius invariant", 1e-9, [&] {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const MoebiusMap<double> m(s.complex(), s.complex(), s.complex(), s.complex());
      std::array<RiemannPoint<double>, 4> z{s.complex(), s.complex(), s.complex(), s.complex()};
      std::array<RiemannPoint<double>, 4> w{hopf::apply(m, z[0]), hopf::apply(m, z[1]), hopf::apply(m, z[2]), hopf::apply(m, z[3])};
      const C before = cross_ratio(z[0], z[1], z[2], z[3]);
      const C after = cross_ratio(w[0], w[1], w[2], w[3]);
      worst = std::max(worst, std::abs(before - after) / (1 + std::abs(before)));
    }
    return worst;
  });
  r.check("winding numbers of the reference paths", 0.5, [&] {
    const auto unit = circle_path(C(0), 1.0, 256);
    const auto shifted = circle_path(C(2), 1.0, 256);
    double bad = 0;
    bad += winding_number(unit) != 1;
    bad += winding_number(shifted) != 0;
    bad += winding_number(map_path([](const C& z) { return z * z; }, unit)) != 2;
    bad += winding_number(map_path([](const C& z) { return z * (z - 2.0); }, unit)) != 1;
    return bad;
  });
}

void hopf_suite(std::vector<CheckResult>& out) {
  Recorder r("hopf", out);
  Sampler s(404);
  const HopfConvention<double> conv;
  r.check("fibers are great circles over their base", 1e-9, [&] {
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const V3 base = s.unit3();
      const auto f = fiber(conv, base, 64);
      const auto g = is_great_circle(f);
      worst = std::max({worst, g.singular_values(2), g.singular_values(3), g.great ? 0.0 : 1.0});
      for (const auto& p : f.samples) worst = std::max(worst, (hopf_map(p) - base).norm());
    }
    return worst;
  });
  r.check("points of one fiber differ by a unit complex factor", 1e-10, [&] {
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const auto f = fiber(conv, s.unit3(), 16);
      const auto& z = f.samples[0];
      const auto& w = f.samples[std::size_t(1 + k % 15)];
      const C lambda = w.z1() / z.z1();
      worst = std::max({worst, std::abs(std::abs(lambda) - 1), std::abs(lambda * z.z2() - w.z2())});
    }
    return worst;
  });
  r.check("calibrated frame reproduces the frozen convention", 0.5, [&] {
    const auto cal = calibrate_frame<double>();
    return (cal.found && cal.pole == ChartPole::north && cal.frame == canonical_frame<double>()) ? 0.0 : 1.0;
  });
  r.check("g_(1,0,0) agrees with hopf_map", 1e-10, [&] {
    HopfConvention<double> right;
    right.variant = HopfVariant::quat_right;
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto q = s.unit_quaternion();
      const V3 g = right.frame * quat_hopf(right, q);
      worst = std::max(worst, (g - hopf_map(S3Point<double>::from_quaternion(q))).norm());
    }
    return worst;
  });
  r.check("distinct fibers link once", 0.05, [&] {
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
      const auto a = project_fiber(fiber(conv, s.unit3(), 256));
      const auto b = project_fiber(fiber(conv, s.unit3(), 256));
      if (a.contains_infinity || b.contains_infinity) continue;
      const auto link = linking_number(a.points, b.points);
      worst = std::max({worst, std::abs(link.integral - link.value), std::abs(link.value) == 1 ? 0.0 : 1.0});
    }
    return worst;
  });
  r.check("latitudinal tori satisfy R^2 - r^2 = 1", 1e-6, [&] {
    double worst = 0;
    for (double rho : {0.5, 1.0, 2.0}) {
      const auto t = latitudinal_torus(rho, 16, 128).torus;
      worst = std::max({worst, std::abs(t.R * t.R - t.r * t.r - 1), t.residual});
    }
    return worst;
  });
  r.check("fiber threads: right slope +1, left slope -1", 1e-9, [&] {
    HopfConvention<double> left;
    left.variant = HopfVariant::quat_left;
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const V3 base = unproject<double, 2>(Vector2<double>(std::cos(k * 0.3), std::sin(k * 0.3)));
      const auto fr = fiber(conv, base, 64);
      const auto fl = fiber(left, base, 64);
      worst = std::max({worst, std::abs(handedness(fr, 1.0).slope - 1), std::abs(handedness(fl, 1.0).slope + 1)});
    }
    return worst;
  });
  r.check("Villarceau sections are circles", 1e-6, [&] {
    double worst = 0;
    for (const auto& c : villarceau_section(std::sqrt(2.0), 1.0, 256)) worst = std::max(worst, fit_circle_3d(c).residual);
    return worst;
  });
}

struct Suite {
  const char* name;
  void (*run)(std::vector<CheckResult>&);
};

constexpr Suite kSuites[] = {
    {"quaternion", quaternion_suite},
    {"stereo", stereo_suite},
    {"inversion", inversion_suite},
    {"hopf", hopf_suite},
};

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_verify(std::string_view suite) {
  std::vector<CheckResult> out;
  bool matched = false;
  for (const auto& s : kSuites) {
    if (suite == "all" || suite == s.name) {
      s.run(out);
      matched = true;
    }
  }
  if (!matched) throw GeometryError(ErrorKind::invalid_argument, "unknown suite '" + std::string(suite) + "'");
  return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  int failed = 0;
  char line[256];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-10s %-4s %-66s %10.3e < %.0e\n", r.suite.c_str(), r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.measured, r.threshold);
    out << line;
    failed += !r.passed;
  }
  out << results.size() - std::size_t(failed) << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace hopf
