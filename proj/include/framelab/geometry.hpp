// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <complex>
#include <stdexcept>

namespace framelab {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

/// Which phase space a point (or field, or point set) lives in.
/// Plane: z = x + iy with Lebesgue measure and Euclidean distance.
/// HalfPlane: y > 0 with the affine-invariant measure dx dy / y^2 and the
/// hyperbolic distance.
enum class Geometry { Plane, HalfPlane };

struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Element of the affine group on the upper half-plane.  The group law is
/// z0 . z = y0 * z + x0 (complex product by a positive real plus a real
/// shift); the identity is (0, 1).
struct GroupElement {
  double x = 0.0;
  double y = 1.0;
};

GroupElement affine_compose(const GroupElement& z0, const GroupElement& z);
GroupElement affine_inverse(const GroupElement& z);

/// z0^{-1} . z = (z - z0) / y0, applied to a half-plane point.
PhasePoint affine_inverse_apply(const GroupElement& z0, const PhasePoint& z);
PhasePoint affine_apply(const GroupElement& z0, const PhasePoint& z);

double euclidean_distance(const PhasePoint& a, const PhasePoint& b);

/// Pseudohyperbolic distance |(z1-z2)/(z1-conj(z2))|.
double pseudohyperbolic_distance(const PhasePoint& a, const PhasePoint& b);

/// Hyperbolic distance d = (1/2) log((1+dbar)/(1-dbar)).  Requires both
/// points in the open upper half-plane.
double hyperbolic_distance(const PhasePoint& a, const PhasePoint& b);

/// Distance in the metric selected by the geometry tag.
double phase_distance(Geometry geom, const PhasePoint& a, const PhasePoint& b);

/// Area of a hyperbolic ball of radius r under dmu: 4 pi sinh^2(r/2).
double hyperbolic_ball_area(double r);

/// Area of a metric ball of radius r in the given geometry.
double ball_area(Geometry geom, double r);

/// Density of the geometry's measure w.r.t. dx dy: 1 on the plane,
/// 1/y^2 on the half-plane.
double measure_weight(Geometry geom, const PhasePoint& z);

/// The hyperbolic ball B(z0, r) is the Euclidean disc with center
/// (x0, y0 cosh 2r) and radius y0 sinh 2r; used for fast ball scans.
struct EuclideanDisc {
  double cx, cy, radius;
};
EuclideanDisc hyperbolic_ball_disc(const PhasePoint& z0, double r);

}  // namespace framelab
