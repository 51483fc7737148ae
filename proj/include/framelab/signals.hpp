// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framelab/geometry.hpp"

namespace framelab {

/// Quadrature parameters shared by all numerical integrals.
///
/// truncation_radius / step drive the phase-space grids; time_step /
/// time_truncation drive the 1-D signal integrals; y_min / y_max bound the
/// half-plane strip.  Midpoint is the default scheme: it avoids endpoint
/// evaluations, which matters for slowly decaying Poisson wavelets.
struct QuadratureSpec {
  double truncation_radius = 4.0;  // R
  double step = 0.05;              // h (phase-space; also log-step on half-plane)
  enum class Scheme { Midpoint, Trapezoid } scheme = Scheme::Midpoint;
  double y_min = 1.0 / 16.0;
  double y_max = 16.0;
  double time_step = 1.0 / 32.0;
  double time_truncation = 8.0;

  void validate() const;
};

enum class SignalKind {
  Gaussian,
  Hermite,
  Box,
  MexicanHat,
  PoissonReal,
  PoissonImag,
  PoissonComplex,
  Samples,
};

/// A 1-D signal: either a closed-form descriptor or uniform samples.
///
/// Evaluation applies, in fixed order, a scalar factor, a modulation, and a
/// translated/dilated copy of the base shape:
///   f(t) = scale * exp(-2 pi i modulation t) * dilation^{-1/2}
///          * base((t - shift) / dilation).
/// This is exactly enough to express the Gabor atoms g_z and the wavelet
/// atoms psi_z used throughout.
struct Signal {
  SignalKind kind = SignalKind::Gaussian;
  int order = 0;            // hermite order
  double width = 1.0;       // box width
  double exponent = 0.0;    // poisson: raw exponent on (t + i), i.e. -(alpha+1)/2
  double norm_const = 1.0;  // poisson normalizing constant c_alpha
  cplx poisson_coeff{1.0, 0.0};  // real kind evaluates Re(coeff (t+i)^e)

  cplx scale{1.0, 0.0};
  double modulation = 0.0;
  double shift = 0.0;
  double dilation = 1.0;

  double support_radius = 8.0;  // truncation T of the base shape

  // Sampled kind: uniform grid from t0 with step dt; linear interpolation
  // inside, zero outside.
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<cplx> samples;

  cplx operator()(double t) const;

  // Support of the transformed signal: [center - radius, center + radius].
  double support_center() const { return shift; }
  double transformed_radius() const { return support_radius * dilation; }

  Signal translated(double x0) const;
  Signal modulated(double y0) const;
  Signal dilated(double a) const;
  Signal scaled(cplx c) const;

  static Signal gaussian();
  static Signal hermite(int n);
  static Signal box(double width);
  static Signal mexican_hat();
  /// Paper convention: psi^alpha(t) = c_alpha (t+i)^{-(alpha+1)/2}, alpha > 1.
  static Signal poisson_real(double alpha);
  static Signal poisson_imag(double alpha);
  static Signal poisson_complex(double alpha);
  /// Raw-exponent constructors (the harmonicity theorem's convention).
  static Signal poisson_real_raw(double exponent);
  static Signal poisson_imag_raw(double exponent);
  /// a Re(t+i)^e + b Im(t+i)^e expressed as Re((a - i b)(t+i)^e).
  static Signal poisson_mix_raw(double exponent, cplx coeff);
  static Signal from_samples(double t0, double dt, std::vector<cplx> samples);
  static Signal from_csv(const std::string& path);
  /// Parse a descriptor string such as "gaussian", "box:1", "poisson-real:3".
  static Signal from_descriptor(const std::string& descriptor);

  std::string descriptor() const;
};

/// Gabor atom g_z(t) = e^{-2 pi i y t} g(t - x).
Signal gabor_atom(const Signal& g, const PhasePoint& z);
/// Wavelet atom psi_z(t) = y^{-1/2} psi((t - x) / y), y > 0.
Signal wavelet_atom(const Signal& psi, const PhasePoint& z);

/// Quadrature approximation of \int f conj(g) dt over the overlap of the
/// two supports.  Throws if the supports do not overlap.
cplx inner_product(const Signal& f, const Signal& g, const QuadratureSpec& q);
double l2_norm(const Signal& f, const QuadratureSpec& q);

/// Discretized continuous Fourier transform on a uniform xi-grid,
/// convention \hat f(xi) = \int f(t) e^{-2 pi i xi t} dt.
Signal fourier(const Signal& f, double xi_min, double xi_max, double xi_step,
               const QuadratureSpec& q);
cplx fourier_at(const Signal& f, double xi, const QuadratureSpec& q);

struct AdmissibilityResult {
  double value = 0.0;        // \int_0^inf |psi_hat|^2 / xi dxi over [xi_lo, xi_hi]
  double tail_estimate = 0.0;
  bool divergent = false;    // integrand fails to decay toward xi = 0
};

AdmissibilityResult admissibility(const Signal& psi, const QuadratureSpec& q);

struct NormalizedWavelet {
  Signal psi;             // rescaled so the admissibility integral is 1
  double l2 = 0.0;        // resulting L2 norm (a single scalar cannot fix both)
  double admissibility_before = 0.0;
};

/// Rescales psi so its admissibility integral equals 1.  Throws on
/// non-admissible input.
NormalizedWavelet normalize_wavelet(const Signal& psi, const QuadratureSpec& q);

}  // namespace framelab
