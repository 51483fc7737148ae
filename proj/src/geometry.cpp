// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/geometry.hpp"

#include <cmath>
#include <limits>

namespace framelab {

GroupElement affine_compose(const GroupElement& z0, const GroupElement& z) {
  if (z0.y <= 0.0 || z.y <= 0.0) throw std::invalid_argument("affine element needs y > 0");
  return {z0.y * z.x + z0.x, z0.y * z.y};
}

GroupElement affine_inverse(const GroupElement& z) {
  if (z.y <= 0.0) throw std::invalid_argument("affine element needs y > 0");
  return {-z.x / z.y, 1.0 / z.y};
}

PhasePoint affine_inverse_apply(const GroupElement& z0, const PhasePoint& z) {
  if (z0.y <= 0.0 || z.y <= 0.0) throw std::invalid_argument("half-plane point needs y > 0");
  return {(z.x - z0.x) / z0.y, z.y / z0.y};
}

PhasePoint affine_apply(const GroupElement& z0, const PhasePoint& z) {
  if (z0.y <= 0.0 || z.y <= 0.0) throw std::invalid_argument("half-plane point needs y > 0");
  return {z0.y * z.x + z0.x, z0.y * z.y};
}

double euclidean_distance(const PhasePoint& a, const PhasePoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double pseudohyperbolic_distance(const PhasePoint& a, const PhasePoint& b) {
  const cplx z1(a.x, a.y), z2(b.x, b.y);
  const double den = std::abs(z1 - std::conj(z2));
  if (den == 0.0) throw std::invalid_argument("pseudohyperbolic distance undefined");
  return std::abs(z1 - z2) / den;
}

double hyperbolic_distance(const PhasePoint& a, const PhasePoint& b) {
  if (a.y <= 0.0 || b.y <= 0.0) throw std::invalid_argument("hyperbolic distance needs y > 0");
  const double db = pseudohyperbolic_distance(a, b);
  // d = atanh(dbar); guard against rounding pushing dbar to 1.
  if (db >= 1.0) return std::numeric_limits<double>::infinity();
  return 0.5 * std::log((1.0 + db) / (1.0 - db));
}

double phase_distance(Geometry geom, const PhasePoint& a, const PhasePoint& b) {
  return geom == Geometry::Plane ? euclidean_distance(a, b) : hyperbolic_distance(a, b);
}

double hyperbolic_ball_area(double r) {
  if (r <= 0.0) throw std::invalid_argument("ball radius must be positive");
  const double s = std::sinh(r / 2.0);
  return 4.0 * kPi * s * s;
}

double ball_area(Geometry geom, double r) {
  if (geom == Geometry::Plane) {
    if (r <= 0.0) throw std::invalid_argument("ball radius must be positive");
    return kPi * r * r;
  }
  return hyperbolic_ball_area(r);
}

double measure_weight(Geometry geom, const PhasePoint& z) {
  if (geom == Geometry::Plane) return 1.0;
  if (z.y <= 0.0) throw std::invalid_argument("half-plane point needs y > 0");
  return 1.0 / (z.y * z.y);
}

EuclideanDisc hyperbolic_ball_disc(const PhasePoint& z0, double r) {
  if (z0.y <= 0.0) throw std::invalid_argument("half-plane point needs y > 0");
  return {z0.x, z0.y * std::cosh(2.0 * r), z0.y * std::sinh(2.0 * r)};
}

}  // namespace framelab
