// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include "framelab/phase_field.hpp"

namespace framelab {

/// Gabor transform Gf(z) = <f, g_z>, g_z(t) = e^{-2 pi i y t} g(t - x).
cplx gabor_transform_at(const Signal& f, const Signal& g, const PhasePoint& z,
                        const QuadratureSpec& q);
PhaseField gabor_transform(const Signal& f, const Signal& g, const GridSpec& grid,
                           const QuadratureSpec& q);

/// Wavelet transform Wf(z) = <f, psi_z>, psi_z(t) = y^{-1/2} psi((t-x)/y).
cplx wavelet_transform_at(const Signal& f, const Signal& psi, const PhasePoint& z,
                          const QuadratureSpec& q);
PhaseField wavelet_transform(const Signal& f, const Signal& psi, const GridSpec& grid,
                             const QuadratureSpec& q);

/// Bargmann transform, entire in w = x + iy:
///   Bf(w) = 2^{1/4} \int f(t) e^{2 pi t w - pi t^2 - (pi/2) w^2} dt.
/// For the unit Gaussian window, Gf(z) = e^{-pi |z|^2 / 2} e^{i pi x y} Bf(z).
cplx bargmann_transform_at(const Signal& f, const PhasePoint& z, const QuadratureSpec& q);
PhaseField bargmann_transform(const Signal& f, const GridSpec& grid, const QuadratureSpec& q);

/// Fock weight M(z) with M(z) Gf(z) = Bf(z) for the Gaussian window.  For a
/// window that is itself a time-frequency shift g_{z1} of the Gaussian, the
/// transform picks up a phase and a translation, and the weight becomes
/// M1(z) = e^{2 pi i y1 x} M(z + z1).
cplx fock_weight(const PhasePoint& z, const PhasePoint& window_shift = {0.0, 0.0});

/// Inversion formula f = \int Gf(z) g_z dm(z) for a unit-norm window,
/// evaluated by Riemann sum over the field's grid onto a uniform t-grid.
Signal gabor_reconstruct(const PhaseField& field, const Signal& g, double t_min,
                         double t_max, double dt);

/// Inversion formula f = \int Wf(z) psi_z dmu(z) for an admissibility-
/// normalized wavelet.
Signal wavelet_reconstruct(const PhaseField& field, const Signal& psi, double t_min,
                           double t_max, double dt);

}  // namespace framelab
