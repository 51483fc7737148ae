// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace framelab {

namespace {

// Distance of a kernel argument from the origin of its group: |z| on the
// plane, hyperbolic distance to the identity (0,1) on the half-plane.
double group_radius(Geometry geom, const PhasePoint& z) {
  if (geom == Geometry::Plane) return std::hypot(z.x, z.y);
  return hyperbolic_distance(z, {0.0, 1.0});
}

// Sliding-window max over a row: out[i] = max(row[i-k .. i+k]) via a
// monotone deque.
void window_max(const std::vector<double>& row, long k, std::vector<double>& out) {
  const long n = long(row.size());
  std::deque<long> dq;
  long right = 0;
  for (long i = 0; i < n; ++i) {
    for (; right <= i + k && right < n; ++right) {
      while (!dq.empty() && row[dq.back()] <= row[right]) dq.pop_back();
      dq.push_back(right);
    }
    while (!dq.empty() && dq.front() < i - k) dq.pop_front();
    out[i] = std::max(out[i], row[dq.front()]);
  }
}

struct ShellFit {
  double tail = 0.0;
  double ratio = 1.0;
  bool finite_looking = false;
};

// Mass of |f| in equal-width radial shells inside the largest full ball the
// grid contains, plus a geometric extrapolation of the tail.
ShellFit shell_fit(const PhaseField& f) {
  const GridSpec& g = f.grid();
  double r_full = std::numeric_limits<double>::infinity();
  for (std::size_t iu = 0; iu < g.nu(); ++iu) {
    r_full = std::min(r_full, group_radius(g.geom, g.point(0, iu)));
    r_full = std::min(r_full, group_radius(g.geom, g.point(g.nx() - 1, iu)));
  }
  for (std::size_t ix = 0; ix < g.nx(); ++ix) {
    r_full = std::min(r_full, group_radius(g.geom, g.point(ix, 0)));
    r_full = std::min(r_full, group_radius(g.geom, g.point(ix, g.nu() - 1)));
  }
  const int m = 8;
  std::vector<double> shell(m, 0.0);
  for (std::size_t iu = 0; iu < g.nu(); ++iu) {
    const double w = g.cell_measure(iu);
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
      const double r = group_radius(g.geom, g.point(ix, iu));
      if (r >= r_full) continue;
      const int j = std::min(m - 1, int(r / r_full * m));
      shell[j] += std::abs(f.at(ix, iu)) * w;
    }
  }
  ShellFit fit;
  const double last = shell[m - 1], prev = shell[m - 2];
  if (prev > 0.0 && last > 0.0) fit.ratio = last / prev;
  if (last == 0.0) {
    fit.tail = 0.0;
    fit.finite_looking = true;
  } else if (fit.ratio < 0.95) {
    fit.tail = last * fit.ratio / (1.0 - fit.ratio);
    fit.finite_looking = fit.ratio < 0.9;
  } else {
    fit.tail = std::numeric_limits<double>::infinity();
  }
  return fit;
}

}  // namespace

cplx kernel(Geometry geom, const Signal& atom, const PhasePoint& z, const QuadratureSpec& q) {
  if (geom == Geometry::Plane) return gabor_transform_at(atom, atom, z, q);
  return wavelet_transform_at(atom, atom, z, q);
}

cplx two_point_kernel(Geometry geom, const Signal& atom, const PhasePoint& z,
                      const PhasePoint& z0, const QuadratureSpec& q) {
  if (geom == Geometry::Plane) {
    const cplx phase = std::exp(cplx(0.0, 2.0 * kPi * z.x * (z.y - z0.y)));
    return phase * std::conj(kernel(geom, atom, {z0.x - z.x, z0.y - z.y}, q));
  }
  const PhasePoint w = affine_inverse_apply({z.x, z.y}, z0);
  return std::conj(kernel(geom, atom, w, q));
}

PhaseField maximal_function(const PhaseField& f, double radius) {
  const GridSpec& g = f.grid();
  if (g.hx >= 0.25 || g.hu >= 0.25)
    throw std::invalid_argument("grid too coarse for the maximal-function ball scan");
  if (radius <= 0.0) throw std::invalid_argument("maximal-function radius must be positive");

  std::vector<std::vector<double>> mag(g.nu(), std::vector<double>(g.nx()));
  for (std::size_t iu = 0; iu < g.nu(); ++iu)
    for (std::size_t ix = 0; ix < g.nx(); ++ix) mag[iu][ix] = std::abs(f.at(ix, iu));

  PhaseField out(g);
  std::vector<double> acc(g.nx());
  for (std::size_t iu0 = 0; iu0 < g.nu(); ++iu0) {
    std::fill(acc.begin(), acc.end(), 0.0);
    // The metric ball around row iu0 meets row iu' in an interval of
    // half-width w, constant along x; combine per-row window maxima.
    const double span = g.geom == Geometry::Plane ? radius : 2.0 * radius;
    const long du = long(std::floor(span / g.hu)) + 1;
    const long lo = std::max<long>(0, long(iu0) - du);
    const long hi = std::min<long>(long(g.nu()) - 1, long(iu0) + du);
    for (long iu = lo; iu <= hi; ++iu) {
      double w;
      if (g.geom == Geometry::Plane) {
        const double dy = g.u(std::size_t(iu)) - g.u(iu0);
        if (std::abs(dy) > radius) continue;
        w = std::sqrt(std::max(0.0, radius * radius - dy * dy));
      } else {
        const EuclideanDisc d = hyperbolic_ball_disc(g.point(0, iu0), radius);
        const double dy = g.y(std::size_t(iu)) - d.cy;
        if (std::abs(dy) > d.radius) continue;
        w = std::sqrt(std::max(0.0, d.radius * d.radius - dy * dy));
      }
      window_max(mag[std::size_t(iu)], long(std::floor(w / g.hx)), acc);
    }
    for (std::size_t ix = 0; ix < g.nx(); ++ix) out.at(ix, iu0) = acc[ix];
  }
  return out;
}

KernelField kernel_field(Geometry geom, const Signal& atom, const GridSpec& grid,
                         const QuadratureSpec& q) {
  if (grid.geom != geom) throw std::invalid_argument("kernel grid geometry mismatch");
  KernelField K;
  K.geom = geom;
  K.k = geom == Geometry::Plane ? gabor_transform(atom, atom, grid, q)
                                : wavelet_transform(atom, atom, grid, q);
  K.kmag = K.k.map([](const PhasePoint&, cplx v) { return cplx(std::abs(v), 0.0); });
  K.mk = maximal_function(K.k);
  K.l1 = K.k.l1_norm();
  K.mk_l1 = K.mk.l1_norm();
  const auto kf = shell_fit(K.k);
  const auto mf = shell_fit(K.mk);
  K.tail_estimate = kf.tail;
  K.mk_tail_estimate = mf.tail;
  return K;
}

MembershipReport membership_report(const KernelField& K) {
  const auto kf = shell_fit(K.k);
  const auto mf = shell_fit(K.mk);
  MembershipReport r;
  r.k_l1 = K.l1;
  r.mk_l1 = K.mk_l1;
  r.k_tail = kf.tail;
  r.mk_tail = mf.tail;
  r.k_finite_looking = kf.finite_looking;
  r.mk_finite_looking = mf.finite_looking;
  r.k_shell_ratio = kf.ratio;
  r.mk_shell_ratio = mf.ratio;
  return r;
}

MembershipReport membership_report(Geometry geom, const Signal& atom, const GridSpec& grid,
                                   const QuadratureSpec& q) {
  return membership_report(kernel_field(geom, atom, grid, q));
}

double kernel_sum(const KernelField& K, const PointSet& set, const PhasePoint& z) {
  if (set.geom != K.geom) throw std::invalid_argument("kernel sum geometry mismatch");
  double sum = 0.0;
  if (K.geom == Geometry::Plane) {
    for (const auto& p : set.points) sum += K.abs_at({p.x - z.x, p.y - z.y});
  } else {
    const GroupElement zg{z.x, z.y};
    for (const auto& p : set.points) sum += K.abs_at(affine_inverse_apply(zg, p));
  }
  return sum;
}

}  // namespace framelab
