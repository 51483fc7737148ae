// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "framelab/phase_field.hpp"

namespace framelab {

struct PointSet {
  Geometry geom = Geometry::Plane;
  std::vector<PhasePoint> points;
  std::optional<double> separation;  // cached min pairwise distance

  std::size_t size() const { return points.size(); }

  static PointSet from_csv(Geometry geom, const std::string& path);
  void write_csv(const std::string& path) const;
};

/// Min pairwise distance in the set's metric.  Requires at least 2 points.
double separation_constant(const PointSet& set);

/// Greedy coloring into subsets with separation >= eps each; union is exact.
std::vector<PointSet> decompose_uniformly_discrete(const PointSet& set, double eps);

struct DensityResult {
  bool covered = false;
  double worst_gap = 0.0;  // largest distance from a grid point to the set
};

/// True iff every grid point has a set point within delta.
DensityResult density_check(const PointSet& set, double delta, const GridSpec& grid);

struct SeparatedSubset {
  PointSet subset;                      // greedy delta-net, delta-separated
  int multiplicity = 0;                 // max points assigned to one net ball
  std::vector<std::size_t> assignment;  // index into subset for each input point
};

SeparatedSubset extract_separated_subset(const PointSet& set, double delta);

/// First-index partition of the grid: V_k = B(z_k, delta) \ union_{j<k} B_j.
struct Covering {
  PointSet centers;
  GridSpec grid;
  double delta = 0.0;             // enclosing radius
  double inner_radius = 0.0;      // alpha/2 from the set's separation
  double realized_inner = 0.0;    // largest r with B(z_k, r) subset V_k on the grid
  bool inner_ball_ok = false;     // realized_inner >= inner_radius
  std::vector<double> cell_areas;       // dmu-measure of each V_k
  std::vector<std::int32_t> cell_of;    // per grid index (iu * nx + ix), -1 unused

  double c_min() const;
  double c_max() const;
};

/// Realizes the partition on the quadrature grid.  Throws if some grid point
/// is farther than delta from every center (density failure) or if a cell
/// ends up empty.  A violated inner-ball containment is reported through
/// inner_ball_ok / realized_inner rather than an error.
Covering build_covering(const PointSet& set, double delta, const GridSpec& grid);

/// Plane lattice a*Z x b*Z truncated to the grid extent.
PointSet plane_lattice(double a, double b, const GridSpec& grid);
/// Half-plane lattice {(n * b * a^j, a^j)} truncated to the grid extent; a > 1.
PointSet halfplane_lattice(double a, double b, const GridSpec& grid);

/// Moves every point by at most delta in the set's metric; deterministic per
/// seed, and displacements scale linearly in delta for a fixed seed.
PointSet jitter(const PointSet& set, double delta, std::uint32_t seed);

}  // namespace framelab
