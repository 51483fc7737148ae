// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/transforms.hpp"

#include <cmath>

namespace framelab {

namespace {

bool overlaps(const Signal& a, const Signal& b, double& lo, double& hi) {
  lo = std::max(a.support_center() - a.transformed_radius(),
                b.support_center() - b.transformed_radius());
  hi = std::min(a.support_center() + a.transformed_radius(),
                b.support_center() + b.transformed_radius());
  return lo < hi;
}

}  // namespace

cplx gabor_transform_at(const Signal& f, const Signal& g, const PhasePoint& z,
                        const QuadratureSpec& q) {
  const Signal atom = gabor_atom(g, z);
  double lo, hi;
  if (!overlaps(f, atom, lo, hi)) return 0.0;
  return inner_product(f, atom, q);
}

PhaseField gabor_transform(const Signal& f, const Signal& g, const GridSpec& grid,
                           const QuadratureSpec& q) {
  if (grid.geom != Geometry::Plane)
    throw std::invalid_argument("gabor transform lives on the plane");
  q.validate();
  PhaseField out(grid);
  const double y_abs = std::max(std::abs(grid.u_min), std::abs(grid.u_max));
  const double dmod = std::abs(f.modulation - g.modulation);
  double h = q.time_step * std::min({1.0, f.dilation, g.dilation});
  h = std::min(h, 1.0 / (32.0 * (1.0 + y_abs + dmod)));

  const std::size_t nu = grid.nu();
  std::vector<cplx> column(nu);
  for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
    const Signal gx = g.translated(grid.x(ix));
    double lo, hi;
    if (!overlaps(f, gx, lo, hi)) continue;
    const auto n = static_cast<long>(std::ceil((hi - lo) / h));
    const double ht = (hi - lo) / double(n);
    // G(x, y) = sum_t f(t) conj(g(t-x)) e^{2 pi i y t} ht; sweep y by a
    // per-sample phase recurrence instead of an exp per grid point.
    std::fill(column.begin(), column.end(), cplx(0.0, 0.0));
    for (long i = 0; i < n; ++i) {
      const double t = lo + (double(i) + 0.5) * ht;
      const cplx p = f(t) * std::conj(gx(t)) * ht;
      if (p == cplx(0.0, 0.0)) continue;
      cplx phase = std::exp(cplx(0.0, 2.0 * kPi * grid.u_min * t));
      const cplx step = std::exp(cplx(0.0, 2.0 * kPi * grid.hu * t));
      for (std::size_t iu = 0; iu < nu; ++iu) {
        column[iu] += p * phase;
        phase *= step;
      }
    }
    for (std::size_t iu = 0; iu < nu; ++iu) out.at(ix, iu) = column[iu];
  }
  return out;
}

cplx wavelet_transform_at(const Signal& f, const Signal& psi, const PhasePoint& z,
                          const QuadratureSpec& q) {
  const Signal atom = wavelet_atom(psi, z);
  double lo, hi;
  if (!overlaps(f, atom, lo, hi)) return 0.0;
  return inner_product(f, atom, q);
}

PhaseField wavelet_transform(const Signal& f, const Signal& psi, const GridSpec& grid,
                             const QuadratureSpec& q) {
  if (grid.geom != Geometry::HalfPlane)
    throw std::invalid_argument("wavelet transform lives on the half-plane");
  q.validate();
  PhaseField out(grid);
  for (std::size_t iu = 0; iu < grid.nu(); ++iu)
    for (std::size_t ix = 0; ix < grid.nx(); ++ix)
      out.at(ix, iu) = wavelet_transform_at(f, psi, grid.point(ix, iu), q);
  return out;
}

cplx bargmann_transform_at(const Signal& f, const PhasePoint& z, const QuadratureSpec& q) {
  const cplx w(z.x, z.y);
  const double lo = f.support_center() - f.transformed_radius();
  const double hi = f.support_center() + f.transformed_radius();
  double h = q.time_step * std::min(1.0, f.dilation);
  h = std::min(h, 1.0 / (32.0 * (1.0 + std::abs(z.y) + std::abs(f.modulation))));
  const auto n = static_cast<long>(std::ceil((hi - lo) / h));
  const double ht = (hi - lo) / double(n);
  cplx sum = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = lo + (double(i) + 0.5) * ht;
    const cplx fv = f(t);
    if (fv == cplx(0.0, 0.0)) continue;
    sum += fv * std::exp(2.0 * kPi * t * w - kPi * t * t);
  }
  return std::pow(2.0, 0.25) * sum * ht * std::exp(-(kPi / 2.0) * w * w);
}

PhaseField bargmann_transform(const Signal& f, const GridSpec& grid, const QuadratureSpec& q) {
  if (grid.geom != Geometry::Plane)
    throw std::invalid_argument("bargmann transform lives on the plane");
  q.validate();
  PhaseField out(grid);
  for (std::size_t iu = 0; iu < grid.nu(); ++iu)
    for (std::size_t ix = 0; ix < grid.nx(); ++ix)
      out.at(ix, iu) = bargmann_transform_at(f, grid.point(ix, iu), q);
  return out;
}

cplx fock_weight(const PhasePoint& z, const PhasePoint& window_shift) {
  const double x = z.x + window_shift.x;
  const double y = z.y + window_shift.y;
  const double r2 = x * x + y * y;
  return std::exp(cplx(kPi * r2 / 2.0, 0.0)) *
         std::exp(cplx(0.0, -kPi * x * y + 2.0 * kPi * window_shift.y * z.x));
}

Signal gabor_reconstruct(const PhaseField& field, const Signal& g, double t_min,
                         double t_max, double dt) {
  const GridSpec& grid = field.grid();
  if (grid.geom != Geometry::Plane)
    throw std::invalid_argument("gabor reconstruction lives on the plane");
  if (dt <= 0.0 || t_max <= t_min) throw std::invalid_argument("bad time grid");
  const auto nt = static_cast<std::size_t>(std::floor((t_max - t_min) / dt)) + 1;
  std::vector<cplx> vals(nt, cplx(0.0, 0.0));
  const double cell = grid.hx * grid.hu;
  for (std::size_t iu = 0; iu < grid.nu(); ++iu) {
    const double y = grid.y(iu);
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      const cplx c = field.at(ix, iu) * cell;
      if (c == cplx(0.0, 0.0)) continue;
      const double x = grid.x(ix);
      const Signal gx = g.translated(x);
      const double lo = gx.support_center() - gx.transformed_radius();
      const double hi = gx.support_center() + gx.transformed_radius();
      const auto i0 = static_cast<std::size_t>(std::max(0.0, std::ceil((lo - t_min) / dt)));
      const auto i1 = static_cast<std::size_t>(
          std::min(double(nt - 1), std::floor((hi - t_min) / dt)));
      cplx phase = std::exp(cplx(0.0, -2.0 * kPi * y * (t_min + double(i0) * dt)));
      const cplx step = std::exp(cplx(0.0, -2.0 * kPi * y * dt));
      for (std::size_t i = i0; i <= i1 && i < nt; ++i) {
        vals[i] += c * phase * gx(t_min + double(i) * dt);
        phase *= step;
      }
    }
  }
  return Signal::from_samples(t_min, dt, std::move(vals));
}

Signal wavelet_reconstruct(const PhaseField& field, const Signal& psi, double t_min,
                           double t_max, double dt) {
  const GridSpec& grid = field.grid();
  if (grid.geom != Geometry::HalfPlane)
    throw std::invalid_argument("wavelet reconstruction lives on the half-plane");
  if (dt <= 0.0 || t_max <= t_min) throw std::invalid_argument("bad time grid");
  const auto nt = static_cast<std::size_t>(std::floor((t_max - t_min) / dt)) + 1;
  std::vector<cplx> vals(nt, cplx(0.0, 0.0));
  for (std::size_t iu = 0; iu < grid.nu(); ++iu) {
    const double cell = grid.cell_measure(iu);
    const double y = grid.y(iu);
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      const cplx c = field.at(ix, iu) * cell;
      if (c == cplx(0.0, 0.0)) continue;
      const Signal atom = wavelet_atom(psi, {grid.x(ix), y});
      const double lo = atom.support_center() - atom.transformed_radius();
      const double hi = atom.support_center() + atom.transformed_radius();
      const auto i0 = static_cast<std::size_t>(std::max(0.0, std::ceil((lo - t_min) / dt)));
      const auto i1 = static_cast<std::size_t>(
          std::min(double(nt - 1), std::floor((hi - t_min) / dt)));
      for (std::size_t i = i0; i <= i1 && i < nt; ++i) vals[i] += c * atom(t_min + double(i) * dt);
    }
  }
  return Signal::from_samples(t_min, dt, std::move(vals));
}

}  // namespace framelab
