// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/analytic.hpp"

#include <cmath>

namespace framelab {

namespace {

// Relative stencil-residual norm over the interior, skipping near-zeros.
double relative_residual(const PhaseField& F,
                         const std::function<cplx(const PhaseField&, std::size_t,
                                                  std::size_t)>& stencil) {
  const GridSpec& g = F.grid();
  double peak = 0.0;
  for (const auto& v : F.values()) peak = std::max(peak, std::abs(v));
  double num = 0.0, den = 0.0;
  for (std::size_t iu = 2; iu + 2 < g.nu(); ++iu)
    for (std::size_t ix = 2; ix + 2 < g.nx(); ++ix) {
      const double m = std::abs(F.at(ix, iu));
      if (m < 1e-8 * peak) continue;
      num += std::norm(stencil(F, ix, iu));
      den += m * m;
    }
  if (den == 0.0) throw std::invalid_argument("weighted field vanishes on the interior");
  return std::sqrt(num / den);
}

}  // namespace

double dbar_residual(const Signal& window, const PhasePoint& window_shift, const Signal& f,
                     const GridSpec& grid, const QuadratureSpec& q) {
  if (grid.geom != Geometry::Plane) throw std::invalid_argument("dbar residual lives on the plane");
  if (grid.hx > 0.1 || grid.hu > 0.1)
    throw std::invalid_argument("grid too coarse for the dbar stencil");
  const PhaseField F = gabor_transform(f, window, grid, q);
  const PhaseField W = F.map([&](const PhasePoint& z, cplx v) {
    return fock_weight(z, window_shift) * v;
  });
  const double hx = grid.hx, hu = grid.hu;
  return relative_residual(W, [hx, hu](const PhaseField& G, std::size_t ix, std::size_t iu) {
    const cplx dx = (G.at(ix + 1, iu) - G.at(ix - 1, iu)) / (2.0 * hx);
    const cplx dy = (G.at(ix, iu + 1) - G.at(ix, iu - 1)) / (2.0 * hu);
    return 0.5 * (dx + cplx(0.0, 1.0) * dy);
  });
}

double laplacian_residual(const Signal& psi, double weight_exponent, const Signal& f,
                          const GridSpec& grid, const QuadratureSpec& q) {
  // The grid is a uniform (x, y) patch: tagged Plane so u is y itself.
  if (grid.geom != Geometry::Plane)
    throw std::invalid_argument("laplacian residual needs a uniform (x, y) grid");
  if (grid.u_min <= 0.0) throw std::invalid_argument("patch must sit in the upper half-plane");
  if (grid.hx > 0.1 || grid.hu > 0.1)
    throw std::invalid_argument("grid too coarse for the laplacian stencil");
  PhaseField W(grid);
  W.fill([&](const PhasePoint& z) {
    return std::pow(z.y, weight_exponent) * wavelet_transform_at(f, psi, z, q);
  });
  const double hx = grid.hx, hu = grid.hu;
  // Scale-free form: h^2 * Laplacian, compared against the field itself.
  return relative_residual(W, [hx, hu](const PhaseField& G, std::size_t ix, std::size_t iu) {
    const cplx lx = G.at(ix + 1, iu) - 2.0 * G.at(ix, iu) + G.at(ix - 1, iu);
    const cplx ly = G.at(ix, iu + 1) - 2.0 * G.at(ix, iu) + G.at(ix, iu - 1);
    return lx / (hx * hx) + ly / (hu * hu);
  });
}

double poisson_ode_residual(const std::function<cplx(double)>& psi,
                            const std::function<cplx(double)>& dpsi,
                            const std::function<cplx(double)>& d2psi, double alpha,
                            double t_min, double t_max, int n) {
  if (n < 2 || t_max <= t_min) throw std::invalid_argument("bad t grid");
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = t_min + (t_max - t_min) * double(i) / double(n - 1);
    const cplx r = 2.0 * t * dpsi(t) + alpha * (alpha - 1.0) * psi(t) -
                   2.0 * alpha * t * dpsi(t) + (t * t + 1.0) * d2psi(t);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double ode_check_poisson(double alpha, double t_min, double t_max, int n) {
  const auto p0 = [alpha](double t) { return std::pow(cplx(t, 1.0), alpha); };
  const auto p1 = [alpha](double t) { return alpha * std::pow(cplx(t, 1.0), alpha - 1.0); };
  const auto p2 = [alpha](double t) {
    return alpha * (alpha - 1.0) * std::pow(cplx(t, 1.0), alpha - 2.0);
  };
  return poisson_ode_residual(p0, p1, p2, alpha, t_min, t_max, n);
}

double first_order_ode_residual(const std::function<cplx(double)>& g,
                                const std::function<cplx(double)>& dg, cplx c1,
                                double t_min, double t_max, int n) {
  if (n < 2 || t_max <= t_min) throw std::invalid_argument("bad t grid");
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = t_min + (t_max - t_min) * double(i) / double(n - 1);
    worst = std::max(worst, std::abs(dg(t) - (2.0 * c1 - 2.0 * kPi * t) * g(t)));
  }
  return worst;
}

double gaussian_ode_residual(cplx c1, double t_min, double t_max, int n) {
  const auto g = [c1](double t) { return std::exp(2.0 * c1 * t - kPi * t * t); };
  const auto dg = [c1, g](double t) { return (2.0 * c1 - 2.0 * kPi * t) * g(t); };
  return first_order_ode_residual(g, dg, c1, t_min, t_max, n);
}

}  // namespace framelab
