// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/phase_field.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace framelab {

std::size_t GridSpec::nx() const {
  return static_cast<std::size_t>(std::floor((x_max - x_min) / hx + 0.5)) + 1;
}

std::size_t GridSpec::nu() const {
  return static_cast<std::size_t>(std::floor((u_max - u_min) / hu + 0.5)) + 1;
}

double GridSpec::y(std::size_t iu) const {
  return geom == Geometry::Plane ? u(iu) : std::exp(u(iu));
}

double GridSpec::cell_measure(std::size_t iu) const {
  // Plane: dx dy.  Half-plane: dx dy / y^2 = dx du / y with y = e^u.
  if (geom == Geometry::Plane) return hx * hu;
  return hx * hu * std::exp(-u(iu));
}

GridSpec GridSpec::from_quadrature(Geometry geom, const QuadratureSpec& q) {
  q.validate();
  GridSpec g;
  g.geom = geom;
  g.x_min = -q.truncation_radius;
  g.x_max = q.truncation_radius;
  g.hx = q.step;
  g.hu = q.step;
  if (geom == Geometry::Plane) {
    g.u_min = -q.truncation_radius;
    g.u_max = q.truncation_radius;
  } else {
    g.u_min = std::log(q.y_min);
    g.u_max = std::log(q.y_max);
  }
  return g;
}

void GridSpec::validate() const {
  if (hx <= 0.0 || hu <= 0.0) throw std::invalid_argument("grid steps must be > 0");
  if (x_max <= x_min || u_max <= u_min) throw std::invalid_argument("empty grid extent");
}

PhaseField::PhaseField(GridSpec grid) : grid_(grid) {
  grid_.validate();
  values_.assign(grid_.nx() * grid_.nu(), cplx(0.0, 0.0));
}

cplx PhaseField::interpolate(const PhasePoint& z) const {
  const double u = grid_.geom == Geometry::Plane ? z.y : std::log(z.y);
  const double px = (z.x - grid_.x_min) / grid_.hx;
  const double pu = (u - grid_.u_min) / grid_.hu;
  if (px < 0.0 || pu < 0.0 || px > double(grid_.nx() - 1) || pu > double(grid_.nu() - 1))
    return 0.0;
  auto ix = static_cast<std::size_t>(px);
  auto iu = static_cast<std::size_t>(pu);
  if (ix + 1 >= grid_.nx()) ix = grid_.nx() - 2;
  if (iu + 1 >= grid_.nu()) iu = grid_.nu() - 2;
  const double wx = px - double(ix), wu = pu - double(iu);
  return (1.0 - wx) * (1.0 - wu) * at(ix, iu) + wx * (1.0 - wu) * at(ix + 1, iu) +
         (1.0 - wx) * wu * at(ix, iu + 1) + wx * wu * at(ix + 1, iu + 1);
}

void PhaseField::fill(const std::function<cplx(const PhasePoint&)>& f) {
  for (std::size_t iu = 0; iu < grid_.nu(); ++iu)
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) at(ix, iu) = f(grid_.point(ix, iu));
}

double PhaseField::sup_norm() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double PhaseField::l1_norm() const {
  double s = 0.0;
  for (std::size_t iu = 0; iu < grid_.nu(); ++iu) {
    const double w = grid_.cell_measure(iu);
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) s += std::abs(at(ix, iu)) * w;
  }
  return s;
}

double PhaseField::l2_norm() const {
  double s = 0.0;
  for (std::size_t iu = 0; iu < grid_.nu(); ++iu) {
    const double w = grid_.cell_measure(iu);
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) s += std::norm(at(ix, iu)) * w;
  }
  return std::sqrt(s);
}

PhaseField PhaseField::map(const std::function<cplx(const PhasePoint&, cplx)>& f) const {
  PhaseField out(grid_);
  for (std::size_t iu = 0; iu < grid_.nu(); ++iu)
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix)
      out.at(ix, iu) = f(grid_.point(ix, iu), at(ix, iu));
  return out;
}

void PhaseField::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write field file: " + path);
  out.precision(17);
  out << "x,y,re,im\n";
  for (std::size_t iu = 0; iu < grid_.nu(); ++iu)
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) {
      const auto z = grid_.point(ix, iu);
      const auto v = at(ix, iu);
      out << z.x << ',' << z.y << ',' << v.real() << ',' << v.imag() << '\n';
    }
}

PhaseField twisted_translate(const PhaseField& F, const PhasePoint& z0) {
  if (F.grid().geom != Geometry::Plane)
    throw std::invalid_argument("twisted translation lives on the plane");
  PhaseField out(F.grid());
  const GridSpec& g = F.grid();
  for (std::size_t iu = 0; iu < g.nu(); ++iu) {
    const double y = g.y(iu);
    const cplx phase = std::exp(cplx(0.0, 2.0 * kPi * z0.x * (y - z0.y)));
    for (std::size_t ix = 0; ix < g.nx(); ++ix)
      out.at(ix, iu) = phase * F.interpolate({g.x(ix) - z0.x, y - z0.y});
  }
  return out;
}

}  // namespace framelab
