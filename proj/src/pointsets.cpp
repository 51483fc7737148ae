// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/pointsets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace framelab {

PointSet PointSet::from_csv(Geometry geom, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point set file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,y", 0) != 0)
    throw std::runtime_error("point set CSV must start with header x,y");
  PointSet set;
  set.geom = geom;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double x, y;
    char c;
    if (!(ss >> x >> c >> y) || c != ',')
      throw std::runtime_error("malformed point set CSV line: " + line);
    if (geom == Geometry::HalfPlane && y <= 0.0)
      throw std::runtime_error("half-plane point set requires y > 0");
    set.points.push_back({x, y});
  }
  return set;
}

void PointSet::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write point set file: " + path);
  out.precision(17);
  out << "x,y\n";
  for (const auto& p : points) out << p.x << ',' << p.y << '\n';
}

double separation_constant(const PointSet& set) {
  if (set.size() < 2) throw std::invalid_argument("separation needs at least 2 points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      best = std::min(best, phase_distance(set.geom, set.points[i], set.points[j]));
  return best;
}

std::vector<PointSet> decompose_uniformly_discrete(const PointSet& set, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  std::vector<PointSet> parts;
  for (const auto& p : set.points) {
    bool placed = false;
    for (auto& part : parts) {
      bool ok = true;
      for (const auto& q : part.points)
        if (phase_distance(set.geom, p, q) < eps) {
          ok = false;
          break;
        }
      if (ok) {
        part.points.push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) {
      PointSet part;
      part.geom = set.geom;
      part.points.push_back(p);
      parts.push_back(std::move(part));
    }
  }
  return parts;
}

DensityResult density_check(const PointSet& set, double delta, const GridSpec& grid) {
  if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
  grid.validate();
  DensityResult r;
  for (std::size_t iu = 0; iu < grid.nu(); ++iu)
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      const PhasePoint z = grid.point(ix, iu);
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : set.points)
        best = std::min(best, phase_distance(grid.geom, z, p));
      r.worst_gap = std::max(r.worst_gap, best);
    }
  r.covered = set.size() > 0 && r.worst_gap <= delta;
  return r;
}

SeparatedSubset extract_separated_subset(const PointSet& set, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
  SeparatedSubset out;
  out.subset.geom = set.geom;
  out.assignment.resize(set.size());
  std::vector<int> load;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& p = set.points[i];
    std::size_t hit = out.subset.size();
    double best = delta;
    for (std::size_t j = 0; j < out.subset.size(); ++j) {
      const double d = phase_distance(set.geom, p, out.subset.points[j]);
      if (d < best) {
        best = d;
        hit = j;
      }
    }
    if (hit == out.subset.size()) {
      out.subset.points.push_back(p);
      load.push_back(0);
    }
    out.assignment[i] = hit;
    ++load[hit];
  }
  for (int n : load) out.multiplicity = std::max(out.multiplicity, n);
  return out;
}

double Covering::c_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (double c : cell_areas) m = std::min(m, c);
  return m;
}

double Covering::c_max() const {
  double m = 0.0;
  for (double c : cell_areas) m = std::max(m, c);
  return m;
}

Covering build_covering(const PointSet& set, double delta, const GridSpec& grid) {
  if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
  if (set.size() == 0) throw std::invalid_argument("covering needs a nonempty set");
  grid.validate();
  Covering cov;
  cov.centers = set;
  cov.grid = grid;
  cov.delta = delta;
  cov.inner_radius = set.size() > 1 ? separation_constant(set) / 2.0 : delta;
  cov.cell_areas.assign(set.size(), 0.0);
  cov.cell_of.assign(grid.nx() * grid.nu(), -1);

  for (std::size_t iu = 0; iu < grid.nu(); ++iu) {
    const double w = grid.cell_measure(iu);
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      const PhasePoint z = grid.point(ix, iu);
      std::int32_t cell = -1;
      for (std::size_t j = 0; j < set.size(); ++j)
        if (phase_distance(grid.geom, z, set.points[j]) < delta) {
          cell = std::int32_t(j);
          break;
        }
      if (cell < 0) throw std::invalid_argument("covering density failure: uncovered grid point");
      cov.cell_of[iu * grid.nx() + ix] = cell;
      cov.cell_areas[cell] += w;
    }
  }
  for (std::size_t j = 0; j < set.size(); ++j)
    if (cov.cell_areas[j] <= 0.0) throw std::invalid_argument("covering produced an empty cell");

  // Realized inner radius: largest r such that every grid point within r of a
  // center belongs to that center's cell.  The first-index rule steals from
  // later cells, so this can fall short of alpha/2; report, do not fail.
  double realized = delta;
  for (std::size_t iu = 0; iu < grid.nu(); ++iu)
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      const PhasePoint z = grid.point(ix, iu);
      const auto cell = cov.cell_of[iu * grid.nx() + ix];
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (std::int32_t(j) == cell) continue;
        realized = std::min(realized, phase_distance(grid.geom, z, set.points[j]));
      }
    }
  cov.realized_inner = realized;
  cov.inner_ball_ok = realized >= cov.inner_radius - 1e-12;
  return cov;
}

PointSet plane_lattice(double a, double b, const GridSpec& grid) {
  if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("lattice steps must be positive");
  PointSet set;
  set.geom = Geometry::Plane;
  const auto i0 = static_cast<long>(std::ceil(grid.x_min / a - 1e-9));
  const auto i1 = static_cast<long>(std::floor(grid.x_max / a + 1e-9));
  const auto j0 = static_cast<long>(std::ceil(grid.u_min / b - 1e-9));
  const auto j1 = static_cast<long>(std::floor(grid.u_max / b + 1e-9));
  for (long j = j0; j <= j1; ++j)
    for (long i = i0; i <= i1; ++i) set.points.push_back({double(i) * a, double(j) * b});
  set.separation = std::min(a, b);
  return set;
}

PointSet halfplane_lattice(double a, double b, const GridSpec& grid) {
  if (a <= 1.0) throw std::invalid_argument("half-plane scale base must exceed 1");
  if (b <= 0.0) throw std::invalid_argument("lattice steps must be positive");
  PointSet set;
  set.geom = Geometry::HalfPlane;
  const double y_lo = std::exp(grid.u_min), y_hi = std::exp(grid.u_max);
  const auto j0 = static_cast<long>(std::ceil(std::log(y_lo) / std::log(a) - 1e-9));
  const auto j1 = static_cast<long>(std::floor(std::log(y_hi) / std::log(a) + 1e-9));
  for (long j = j0; j <= j1; ++j) {
    const double y = std::pow(a, double(j));
    const double step = b * y;
    const auto i0 = static_cast<long>(std::ceil(grid.x_min / step - 1e-9));
    const auto i1 = static_cast<long>(std::floor(grid.x_max / step + 1e-9));
    for (long i = i0; i <= i1; ++i) set.points.push_back({double(i) * step, y});
  }
  return set;
}

PointSet jitter(const PointSet& set, double delta, std::uint32_t seed) {
  if (delta < 0.0) throw std::invalid_argument("jitter radius must be nonnegative");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  PointSet out;
  out.geom = set.geom;
  out.points.reserve(set.size());
  for (const auto& p : set.points) {
    const double th = angle(rng);
    const double r = radius(rng) * delta;
    if (set.geom == Geometry::Plane) {
      out.points.push_back({p.x + r * std::cos(th), p.y + r * std::sin(th)});
    } else {
      // Move along a direction in normalized (x, log y) coordinates, then
      // rescale until the hyperbolic displacement matches r.
      double ax = std::cos(th), au = std::sin(th);
      double s = r;
      PhasePoint w = p;
      for (int it = 0; it < 4; ++it) {
        w = {p.x + p.y * s * ax, p.y * std::exp(s * au)};
        const double d = hyperbolic_distance(p, w);
        if (d <= 1e-15) break;
        s *= r / d;
      }
      if (hyperbolic_distance(p, w) > r) w = {p.x, p.y * std::exp(std::copysign(r, au))};
      out.points.push_back(w);
    }
  }
  return out;
}

}  // namespace framelab
