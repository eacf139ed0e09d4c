#pragma once

// Checks shared by the unit tests and the acceptance runner that need the
// library itself (as opposed to the independent references in oracles.hpp).

#include "hopf/fitting.hpp"
#include "hopf/hopf.hpp"

#include <algorithm>
#include <vector>

namespace support {

using V3 = Eigen::Vector3d;

/// How far a projected curve is from the projection of the fiber through its
/// first point: the larger of the pointwise distance to the fiber's fitted
/// circle and the mismatch between the two fitted circles.
inline double fiber_coincidence(const std::vector<V3>& curve, hopf::HopfVariant variant) {
  hopf::HopfConvention<double> conv;
  conv.variant = variant;
  const auto lifted = hopf::S3Point<double>::from_vector(hopf::unproject<double, 3>(curve.front()));
  const auto f = hopf::fiber(conv, hopf::base_of(conv, lifted), int(curve.size()));
  const auto projected = hopf::project_fiber(f);
  const auto fiber_circle = hopf::fit_circle_3d(projected.points);
  const auto curve_circle = hopf::fit_circle_3d(curve);
  double worst = fiber_circle.residual;
  for (const auto& x : curve) {
    const V3 d = x - fiber_circle.center;
    const double h = d.dot(fiber_circle.normal);
    const double radial = (d - h * fiber_circle.normal).norm() - fiber_circle.radius;
    worst = std::max(worst, std::hypot(h, radial));
  }
  worst = std::max(worst, (fiber_circle.center - curve_circle.center).norm());
  worst = std::max(worst, std::abs(fiber_circle.radius - curve_circle.radius));
  worst = std::max(worst, fiber_circle.normal.cross(curve_circle.normal).norm());
  return worst;
}

}  // namespace support
