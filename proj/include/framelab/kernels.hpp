// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include "framelab/pointsets.hpp"
#include "framelab/transforms.hpp"

namespace framelab {

/// Reproducing kernel value k(z) = <atom, atom_z> in the given geometry.
cplx kernel(Geometry geom, const Signal& atom, const PhasePoint& z, const QuadratureSpec& q);

/// Two-point kernel k(z, z0) = <atom_{z0}, atom_z>, expressed through the
/// one-point kernel: plane k(z, z0) = e^{2 pi i x (y - y0)} conj(k(z0 - z));
/// half-plane k(z, z0) = conj(k(z^{-1} . z0)).
cplx two_point_kernel(Geometry geom, const Signal& atom, const PhasePoint& z,
                      const PhasePoint& z0, const QuadratureSpec& q);

struct KernelField {
  Geometry geom = Geometry::Plane;
  PhaseField k;        // kernel values on the grid
  PhaseField kmag;     // |k| (real, stored in re); interpolates better than k
  PhaseField mk;       // local maximal function Mk (real, stored in re)
  double l1 = 0.0;     // truncated L1 norm of k under the geometry's measure
  double mk_l1 = 0.0;  // truncated L1 norm of Mk
  double tail_estimate = 0.0;     // envelope-fit bound on |k| mass beyond the grid
  double mk_tail_estimate = 0.0;  // same for Mk

  /// |k| at an arbitrary offset via bilinear interpolation, 0 outside.
  double abs_at(const PhasePoint& z) const {
    return std::max(0.0, kmag.interpolate(z).real());
  }
};

/// Samples k on the grid, computes Mk and both truncated L1 norms with
/// tail estimates.  The maximal-function scan needs hx, hu < 0.25.
KernelField kernel_field(Geometry geom, const Signal& atom, const GridSpec& grid,
                         const QuadratureSpec& q);

/// Local maximal function: per-grid-point sup of |f| over the metric ball of
/// the given radius (Euclidean disc / hyperbolic ball).
PhaseField maximal_function(const PhaseField& f, double radius = 1.0);

struct MembershipReport {
  double k_l1 = 0.0, mk_l1 = 0.0;
  double k_tail = 0.0, mk_tail = 0.0;
  bool k_finite_looking = false, mk_finite_looking = false;
  double k_shell_ratio = 0.0, mk_shell_ratio = 0.0;  // outermost shell decay ratios
};

/// Numerical integrability verdicts for k and Mk, with explicit tails.
MembershipReport membership_report(const KernelField& K);
MembershipReport membership_report(Geometry geom, const Signal& atom, const GridSpec& grid,
                                   const QuadratureSpec& q);

/// Sum_j |k(z - lambda_j)| (plane) or |k(z^{-1} . lambda_j)| (half-plane),
/// evaluated from the sampled kernel field.
double kernel_sum(const KernelField& K, const PointSet& set, const PhasePoint& z);

}  // namespace framelab
