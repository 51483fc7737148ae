// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <functional>

#include "framelab/transforms.hpp"

namespace framelab {

/// Relative dbar residual ||dbar(M Gf)|| / ||M Gf|| over the interior of the
/// grid, dbar = (d/dx + i d/dy)/2 by centered differences.  The weight is the
/// Fock weight for a Gaussian window time-frequency shifted by window_shift
/// (the zero shift gives the plain Fock weight); see fock_weight().
/// A Gaussian window makes M Gf entire, so the residual sits at the
/// finite-difference floor; other windows plateau well above it.
/// Excludes a 2-cell boundary ring and cells with |M Gf| < 1e-8 of the max.
/// Requires grid steps <= 0.1.
double dbar_residual(const Signal& window, const PhasePoint& window_shift, const Signal& f,
                     const GridSpec& grid, const QuadratureSpec& q);

/// Relative 5-point Laplacian residual of y^{weight_exponent} Wf(x, y) on a
/// uniform (x, y) patch of the half-plane (grid tagged Plane, u = y > 0).
/// For psi = Re (t+i)^{-2} and weight y^{-3/2} the weighted transform is
/// harmonic, so the residual sits at the finite-difference floor.
double laplacian_residual(const Signal& psi, double weight_exponent, const Signal& f,
                          const GridSpec& grid, const QuadratureSpec& q);

/// Max residual of psi(t) = (t+i)^alpha, analytic derivatives, in the ODE
///   2 t psi' + alpha (alpha - 1) psi - 2 alpha t psi' + (t^2 + 1) psi'' = 0.
double ode_check_poisson(double alpha, double t_min, double t_max, int n);

/// Same ODE for an arbitrary function with supplied derivatives.
double poisson_ode_residual(const std::function<cplx(double)>& psi,
                            const std::function<cplx(double)>& dpsi,
                            const std::function<cplx(double)>& d2psi, double alpha,
                            double t_min, double t_max, int n);

/// Max residual of g(w) = e^{2 c1 w - pi w^2} in g'(w) = (2 c1 - 2 pi w) g(w)
/// with analytic derivatives (an algebraic identity; rounding-level).
double gaussian_ode_residual(cplx c1, double t_min, double t_max, int n);

/// Same first-order ODE for an arbitrary function with supplied derivative.
double first_order_ode_residual(const std::function<cplx(double)>& g,
                                const std::function<cplx(double)>& dg, cplx c1,
                                double t_min, double t_max, int n);

}  // namespace framelab
