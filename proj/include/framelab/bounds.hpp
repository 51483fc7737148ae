// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <Eigen/Dense>

#include "framelab/kernels.hpp"

namespace framelab {

/// Sufficient bound on sum_j |k(z - lambda_j)| for an eps-separated set:
/// reciprocal ball area times ||Mk||_1.  Plane: (4 / (pi eps^2)) mk_l1
/// (proof-derived constant); half-plane: (4 pi sinh^2(eps/4))^{-1} mk_l1.
/// Requires 0 < eps <= 2.
double discrete_sum_bound(Geometry geom, double eps, double mk_l1);

/// The plane constant as stated (not as proved): eps^{-2} / (4 pi) times
/// mk_l1.  Reported alongside for comparison.
double discrete_sum_bound_stated(double eps, double mk_l1);

/// B_suff = ||k||_1 * sup_z kernel_sum(z) with the sup over the kernel grid
/// plus the set's own points.
double upper_frame_bound(const KernelField& K, const PointSet& set);

struct StabilityQuantities {
  double d1 = 0.0;
  double d2 = 0.0;            // proof-faithful form (see module notes)
  double d2_displayed = 0.0;  // the displayed sup_z sum_j |k_{z_j} - k_{w_j}|
  std::size_t worst_j = 0;    // index attaining d1
  PhasePoint worst_z{};       // sup point attaining d2
};

/// d1^2 = sup_j int |k_{z_j - w_j}(z) - k(z)| dm(z) and the two d2 variants,
/// with twisted phases on the plane and group translates on the half-plane.
StabilityQuantities stability_quantities(const KernelField& K, const PointSet& lambda,
                                         const PointSet& gamma);

struct CoveringQuantities {
  double d1t = 0.0;
  double d2t = 0.0;            // proof-faithful (phase centered per cell)
  double d2t_displayed = 0.0;  // displayed sup_w sum_j int_{V_j} |k_w - k_w(z_j)|
  double cap = 0.0;            // (||k||_1 + ||Mk||_1)^{1/2}, proved cap on d2t
};

CoveringQuantities covering_quantities(const KernelField& K, const Covering& cov);

struct CoveringBounds {
  bool valid = false;  // requires d1t * d2t < 1
  double A = 0.0, B = 0.0;
};

/// A = (1 - d1t d2t)^2 / c_max, B = (1 + d1t d2t)^2 / c_min.
CoveringBounds covering_frame_bounds(double d1t, double d2t, double c_min, double c_max);

/// A' = (A - 2 N sqrt(B) d1 d2) / N; may be <= 0 (no certificate).
double separated_margin(double A, double B, int N, double d1, double d2);

/// Finite-dimensional test space on which empirical frame bounds are
/// computed.  Reports must name it: true frame bounds live on all of L^2.
struct TestSpace {
  std::vector<Signal> basis;
  std::string name;

  static TestSpace hermites(int count);
  /// Modulated Gaussians e^{-2 pi i xi t} gaussian; analytic-signal test
  /// space for half-plane problems.
  static TestSpace modulated_gaussians(const std::vector<double>& freqs);
};

struct EmpiricalBounds {
  double A = 0.0, B = 0.0;
  double gram_condition = 1.0;
  Eigen::MatrixXcd coeffs;  // T, |set| x dim: T(l, m) = <e_m, atom_l>
  Eigen::MatrixXcd gram;    // basis Gram matrix
  TestSpace space;
};

/// Extreme eigenvalues of the test-space restriction of the frame operator.
/// A is an upper estimate of the true lower frame bound.  Throws on an
/// ill-conditioned basis Gram.
EmpiricalBounds empirical_frame_bounds(Geometry geom, const Signal& atom,
                                       const PointSet& set, const TestSpace& space,
                                       const QuadratureSpec& q);

struct FrameIteration {
  std::vector<double> errors;  // relative error per iterate vs. least squares
  Eigen::VectorXcd solution;   // final test-space coefficients
  bool diverged = false;
};

/// Frame-algorithm iteration a_{n+1} = a_n + (2/(A+B)) (T^H c - S a_n) on the
/// test space, for samples c on the set; predicted rate (B-A)/(B+A).
FrameIteration frame_reconstruct(const EmpiricalBounds& eb, const Eigen::VectorXcd& samples,
                                 int iterations);

}  // namespace framelab
