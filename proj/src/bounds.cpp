// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/bounds.hpp"

#include <cmath>

namespace framelab {

namespace {

// Twisted translate of the sampled kernel: k_{z0}(z), plane geometry.
cplx tt_kernel(const KernelField& K, const PhasePoint& z0, const PhasePoint& z) {
  const cplx phase = std::exp(cplx(0.0, 2.0 * kPi * z0.x * (z.y - z0.y)));
  return phase * K.k.interpolate({z.x - z0.x, z.y - z0.y});
}

PhasePoint group_translate(const GroupElement& z, const PhasePoint& p) {
  return affine_inverse_apply(z, p);  // z^{-1} . p
}

// Point at hyperbolic distance <= r from the identity (0,1) along direction
// theta in normalized (x, log y) coordinates.
PhasePoint hyperbolic_offset(double r, double theta) {
  const double ax = std::cos(theta), au = std::sin(theta);
  double s = r;
  PhasePoint w{0.0, 1.0};
  const PhasePoint id{0.0, 1.0};
  for (int it = 0; it < 6; ++it) {
    w = {s * ax, std::exp(s * au)};
    const double d = hyperbolic_distance(id, w);
    if (d <= 1e-15) break;
    s *= r / d;
  }
  if (hyperbolic_distance(id, w) > r) w = {0.0, std::exp(std::copysign(r, au == 0.0 ? 1.0 : au))};
  return w;
}

std::vector<PhasePoint> sup_domain(const GridSpec& g, std::size_t stride,
                                   const PointSet* extra) {
  std::vector<PhasePoint> pts;
  for (std::size_t iu = 0; iu < g.nu(); iu += stride)
    for (std::size_t ix = 0; ix < g.nx(); ix += stride) pts.push_back(g.point(ix, iu));
  if (extra)
    for (const auto& p : extra->points)
      if (p.x >= g.x_min && p.x <= g.x_max) pts.push_back(p);
  return pts;
}

}  // namespace

double discrete_sum_bound(Geometry geom, double eps, double mk_l1) {
  if (!(eps > 0.0 && eps <= 2.0)) throw std::invalid_argument("separation must be in (0, 2]");
  if (geom == Geometry::Plane) return 4.0 / (kPi * eps * eps) * mk_l1;
  const double s = std::sinh(eps / 4.0);
  return mk_l1 / (4.0 * kPi * s * s);
}

double discrete_sum_bound_stated(double eps, double mk_l1) {
  if (!(eps > 0.0 && eps <= 2.0)) throw std::invalid_argument("separation must be in (0, 2]");
  return mk_l1 / (4.0 * kPi * eps * eps);
}

double upper_frame_bound(const KernelField& K, const PointSet& set) {
  const GridSpec& g = K.k.grid();
  double sup = 0.0;
  for (std::size_t iu = 0; iu < g.nu(); ++iu)
    for (std::size_t ix = 0; ix < g.nx(); ++ix)
      sup = std::max(sup, kernel_sum(K, set, g.point(ix, iu)));
  for (const auto& p : set.points) sup = std::max(sup, kernel_sum(K, set, p));
  return K.l1 * sup;
}

StabilityQuantities stability_quantities(const KernelField& K, const PointSet& lambda,
                                         const PointSet& gamma) {
  if (lambda.size() != gamma.size())
    throw std::invalid_argument("stability quantities need index-paired sets of equal size");
  if (lambda.geom != K.geom || gamma.geom != K.geom)
    throw std::invalid_argument("stability geometry mismatch");
  const GridSpec& g = K.k.grid();
  StabilityQuantities out;

  double d1sq = 0.0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    const PhasePoint& zj = lambda.points[j];
    const PhasePoint& wj = gamma.points[j];
    double acc = 0.0;
    for (std::size_t iu = 0; iu < g.nu(); ++iu) {
      const double cell = g.cell_measure(iu);
      for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const PhasePoint z = g.point(ix, iu);
        cplx diff;
        if (K.geom == Geometry::Plane) {
          const PhasePoint z0{zj.x - wj.x, zj.y - wj.y};
          diff = tt_kernel(K, z0, z) - K.k.interpolate(z);
        } else {
          const GroupElement ze{z.x, z.y};
          diff = K.k.interpolate(group_translate(ze, zj)) -
                 K.k.interpolate(group_translate(ze, wj));
        }
        acc += std::abs(diff) * cell;
      }
    }
    if (acc > d1sq) {
      d1sq = acc;
      out.worst_j = j;
    }
  }
  out.d1 = std::sqrt(d1sq);

  double d2sq = 0.0, d2sq_disp = 0.0;
  for (std::size_t iu = 0; iu < g.nu(); ++iu)
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
      const PhasePoint w = g.point(ix, iu);
      double s = 0.0, sd = 0.0;
      for (std::size_t j = 0; j < lambda.size(); ++j) {
        const PhasePoint& zj = lambda.points[j];
        const PhasePoint& wj = gamma.points[j];
        if (K.geom == Geometry::Plane) {
          const cplx phase =
              std::exp(cplx(0.0, 2.0 * kPi * (zj.x - wj.x) * (w.y - zj.y)));
          s += std::abs(phase * K.k.interpolate({w.x - zj.x, w.y - zj.y}) -
                        K.k.interpolate({w.x - wj.x, w.y - wj.y}));
          sd += std::abs(tt_kernel(K, zj, w) - tt_kernel(K, wj, w));
        } else {
          const GroupElement we{w.x, w.y};
          const double v = std::abs(K.k.interpolate(group_translate(we, zj)) -
                                    K.k.interpolate(group_translate(we, wj)));
          s += v;
          sd += v;
        }
      }
      if (s > d2sq) {
        d2sq = s;
        out.worst_z = w;
      }
      d2sq_disp = std::max(d2sq_disp, sd);
    }
  out.d2 = std::sqrt(d2sq);
  out.d2_displayed = std::sqrt(d2sq_disp);
  return out;
}

CoveringQuantities covering_quantities(const KernelField& K, const Covering& cov) {
  if (cov.grid.geom != K.geom) throw std::invalid_argument("covering geometry mismatch");
  const GridSpec& g = K.k.grid();
  const GridSpec& cg = cov.grid;
  CoveringQuantities out;
  out.cap = std::sqrt(K.l1 + K.mk_l1);

  // d1t: sup over offsets inside B(0, delta), sampled on polar rings.
  std::vector<PhasePoint> offsets;
  for (double frac : {1.0, 0.75, 0.5, 0.25})
    for (int a = 0; a < 16; ++a) {
      const double th = 2.0 * kPi * double(a) / 16.0;
      if (K.geom == Geometry::Plane)
        offsets.push_back({frac * cov.delta * std::cos(th), frac * cov.delta * std::sin(th)});
      else
        offsets.push_back(hyperbolic_offset(frac * cov.delta, th));
    }
  double d1sq = 0.0;
  for (const auto& xi : offsets) {
    double acc = 0.0;
    for (std::size_t iu = 0; iu < g.nu(); ++iu) {
      const double cell = g.cell_measure(iu);
      for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const PhasePoint z = g.point(ix, iu);
        cplx diff;
        if (K.geom == Geometry::Plane) {
          diff = tt_kernel(K, xi, z) - K.k.interpolate(z);
        } else {
          const PhasePoint zxi{z.y * xi.x + z.x, z.y * xi.y};  // z . xi
          diff = K.k.interpolate(zxi) - K.k.interpolate(z);
        }
        acc += std::abs(diff) * cell;
      }
    }
    d1sq = std::max(d1sq, acc);
  }
  out.d1t = std::sqrt(d1sq);

  // d2t: sup over a coarse w-subgrid plus the centers near the origin.
  PointSet near;
  near.geom = cov.centers.geom;
  for (const auto& p : cov.centers.points)
    if (phase_distance(K.geom, p, K.geom == Geometry::Plane ? PhasePoint{0.0, 0.0}
                                                            : PhasePoint{0.0, 1.0}) <= 1.0)
      near.points.push_back(p);
  const auto ws = sup_domain(cg, 8, &near);

  double d2sq = 0.0, d2sq_disp = 0.0;
  for (const auto& w : ws) {
    double s = 0.0, sd = 0.0;
    for (std::size_t iu = 0; iu < cg.nu(); ++iu) {
      const double cell = cg.cell_measure(iu);
      for (std::size_t ix = 0; ix < cg.nx(); ++ix) {
        const auto ci = cov.cell_of[iu * cg.nx() + ix];
        if (ci < 0) continue;
        const PhasePoint z = cg.point(ix, iu);
        const PhasePoint& zj = cov.centers.points[std::size_t(ci)];
        if (K.geom == Geometry::Plane) {
          // Proof form: |k_{z - z_j}(w - z_j) - k(w - z_j)|, which reduces to
          // |e^{i phi} k(w - z) - k(w - z_j)| with phi from the twist.
          const double phi = 2.0 * kPi * (z.x - zj.x) * (w.y - z.y);
          s += std::abs(std::exp(cplx(0.0, phi)) * K.k.interpolate({w.x - z.x, w.y - z.y}) -
                        K.k.interpolate({w.x - zj.x, w.y - zj.y})) *
               cell;
          // Displayed form: |k_w(z) - k_w(z_j)|.
          const double psi = 2.0 * kPi * w.x * (zj.y - z.y);
          sd += std::abs(K.k.interpolate({z.x - w.x, z.y - w.y}) -
                         std::exp(cplx(0.0, psi)) *
                             K.k.interpolate({zj.x - w.x, zj.y - w.y})) *
                cell;
        } else {
          const double v = std::abs(K.k.interpolate(group_translate({z.x, z.y}, w)) -
                                    K.k.interpolate(group_translate({zj.x, zj.y}, w))) *
                           cell;
          s += v;
          sd += v;
        }
      }
    }
    d2sq = std::max(d2sq, s);
    d2sq_disp = std::max(d2sq_disp, sd);
  }
  out.d2t = std::sqrt(d2sq);
  out.d2t_displayed = std::sqrt(d2sq_disp);
  return out;
}

CoveringBounds covering_frame_bounds(double d1t, double d2t, double c_min, double c_max) {
  if (c_min <= 0.0 || c_max < c_min) throw std::invalid_argument("bad cell areas");
  CoveringBounds out;
  const double d = d1t * d2t;
  if (d >= 1.0) return out;
  out.valid = true;
  out.A = (1.0 - d) * (1.0 - d) / c_max;
  out.B = (1.0 + d) * (1.0 + d) / c_min;
  return out;
}

double separated_margin(double A, double B, int N, double d1, double d2) {
  if (A <= 0.0 || B <= 0.0 || N < 1) throw std::invalid_argument("bad margin inputs");
  return (A - 2.0 * double(N) * std::sqrt(B) * d1 * d2) / double(N);
}

TestSpace TestSpace::hermites(int count) {
  if (count < 1) throw std::invalid_argument("need at least one basis function");
  TestSpace ts;
  ts.name = "hermite-span:" + std::to_string(count);
  for (int n = 0; n < count; ++n) ts.basis.push_back(Signal::hermite(n));
  return ts;
}

TestSpace TestSpace::modulated_gaussians(const std::vector<double>& freqs) {
  if (freqs.empty()) throw std::invalid_argument("need at least one basis function");
  TestSpace ts;
  ts.name = "modulated-gaussians:" + std::to_string(freqs.size());
  for (double xi : freqs) ts.basis.push_back(Signal::gaussian().modulated(-xi));
  return ts;
}

EmpiricalBounds empirical_frame_bounds(Geometry geom, const Signal& atom,
                                       const PointSet& set, const TestSpace& space,
                                       const QuadratureSpec& q) {
  const auto dim = long(space.basis.size());
  EmpiricalBounds eb;
  eb.space = space;
  eb.gram = Eigen::MatrixXcd::Zero(dim, dim);
  for (long m = 0; m < dim; ++m)
    for (long n = 0; n <= m; ++n) {
      const cplx v = inner_product(space.basis[std::size_t(m)], space.basis[std::size_t(n)], q);
      eb.gram(m, n) = v;
      eb.gram(n, m) = std::conj(v);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ges(eb.gram);
  const double gmin = ges.eigenvalues().minCoeff();
  const double gmax = ges.eigenvalues().maxCoeff();
  if (gmin <= 0.0 || gmax / gmin > 1e8)
    throw std::invalid_argument("ill-conditioned test basis Gram");
  eb.gram_condition = gmax / gmin;

  eb.coeffs = Eigen::MatrixXcd::Zero(long(set.size()), dim);
  for (long l = 0; l < long(set.size()); ++l) {
    const PhasePoint& p = set.points[std::size_t(l)];
    const Signal a = geom == Geometry::Plane ? gabor_atom(atom, p) : wavelet_atom(atom, p);
    for (long m = 0; m < dim; ++m) {
      const Signal& e = space.basis[std::size_t(m)];
      double lo = std::max(e.support_center() - e.transformed_radius(),
                           a.support_center() - a.transformed_radius());
      double hi = std::min(e.support_center() + e.transformed_radius(),
                           a.support_center() + a.transformed_radius());
      eb.coeffs(l, m) = lo < hi ? inner_product(e, a, q) : cplx(0.0, 0.0);
    }
  }

  const Eigen::MatrixXcd S = eb.coeffs.adjoint() * eb.coeffs;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(S, eb.gram);
  eb.A = std::max(0.0, es.eigenvalues().minCoeff());
  eb.B = std::max(0.0, es.eigenvalues().maxCoeff());
  return eb;
}

FrameIteration frame_reconstruct(const EmpiricalBounds& eb, const Eigen::VectorXcd& samples,
                                 int iterations) {
  if (samples.size() != eb.coeffs.rows())
    throw std::invalid_argument("sample vector size does not match the point set");
  FrameIteration out;
  const Eigen::MatrixXcd S = eb.coeffs.adjoint() * eb.coeffs;
  const Eigen::VectorXcd rhs = eb.coeffs.adjoint() * samples;
  if (eb.A + eb.B <= 0.0) {
    out.solution = Eigen::VectorXcd::Zero(S.rows());
    out.errors.assign(std::size_t(iterations) + 1, 0.0);
    return out;
  }
  const Eigen::VectorXcd target = S.ldlt().solve(rhs);
  const double tnorm = target.norm();
  const double omega = 2.0 / (eb.A + eb.B);

  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(S.rows());
  int worse = 0;
  for (int it = 0; it <= iterations; ++it) {
    const double err = tnorm > 0.0 ? (a - target).norm() / tnorm : 0.0;
    if (!out.errors.empty() && err > out.errors.back()) {
      if (++worse >= 3) out.diverged = true;
    } else {
      worse = 0;
    }
    out.errors.push_back(err);
    if (it < iterations) a += omega * (rhs - S * a);
  }
  out.solution = a;
  return out;
}

}  // namespace framelab
