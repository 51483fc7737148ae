// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "framelab/geometry.hpp"
#include "framelab/signals.hpp"

namespace framelab {

/// Uniform sampling grid in coordinates (x, u).  On the plane u is just y;
/// on the half-plane u = log y, so a uniform u-grid is geodesically uniform
/// in the scale direction.
struct GridSpec {
  Geometry geom = Geometry::Plane;
  double x_min = -4.0, x_max = 4.0;
  double u_min = -4.0, u_max = 4.0;
  double hx = 0.05, hu = 0.05;

  std::size_t nx() const;
  std::size_t nu() const;
  double x(std::size_t ix) const { return x_min + double(ix) * hx; }
  double u(std::size_t iu) const { return u_min + double(iu) * hu; }
  double y(std::size_t iu) const;
  PhasePoint point(std::size_t ix, std::size_t iu) const { return {x(ix), y(iu)}; }

  /// dmu-measure of the grid cell centered at (x(ix), u(iu)).
  double cell_measure(std::size_t iu) const;

  /// Square/strip grid derived from a quadrature spec.
  static GridSpec from_quadrature(Geometry geom, const QuadratureSpec& q);

  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

/// Complex scalar field sampled on a GridSpec, row-major in x.
class PhaseField {
 public:
  PhaseField() = default;
  explicit PhaseField(GridSpec grid);

  const GridSpec& grid() const { return grid_; }
  cplx& at(std::size_t ix, std::size_t iu) { return values_[iu * grid_.nx() + ix]; }
  cplx at(std::size_t ix, std::size_t iu) const { return values_[iu * grid_.nx() + ix]; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

  /// Bilinear interpolation in (x, u); zero outside the grid.
  cplx interpolate(const PhasePoint& z) const;

  /// Fill from a pointwise function of the phase point.
  void fill(const std::function<cplx(const PhasePoint&)>& f);

  double sup_norm() const;
  /// Riemann sums against the geometry's measure dmu.
  double l1_norm() const;
  double l2_norm() const;

  PhaseField map(const std::function<cplx(const PhasePoint&, cplx)>& f) const;

  /// Writes "x,y,re,im" rows; y is the true coordinate, not u.
  void write_csv(const std::string& path) const;

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
};

/// Twisted translation F_{z0}(z) = e^{2 pi i x0 (y - y0)} F(z - z0), resampled
/// onto F's own grid (plane geometry only).
PhaseField twisted_translate(const PhaseField& F, const PhasePoint& z0);

}  // namespace framelab
