// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include <doctest.h>

#include <cmath>

#include "framelab/bounds.hpp"

using namespace framelab;

namespace {

const QuadratureSpec q{};

GridSpec plane_grid(double R = 4.0, double h = 0.05) {
  GridSpec g;
  g.geom = Geometry::Plane;
  g.x_min = g.u_min = -R;
  g.x_max = g.u_max = R;
  g.hx = g.hu = h;
  return g;
}

const KernelField& gaussian_field() {
  static const KernelField K =
      kernel_field(Geometry::Plane, Signal::gaussian(), plane_grid(), q);
  return K;
}

PointSet lattice(double a, int extent) {
  PointSet s{Geometry::Plane, {}, {}};
  for (int m = -extent; m <= extent; ++m)
    for (int n = -extent; n <= extent; ++n) s.points.push_back({a * m, a * n});
  return s;
}

}  // namespace

TEST_CASE("discrete sum bounds") {
  CHECK(discrete_sum_bound(Geometry::Plane, 2.0, 1.0) == doctest::Approx(1.0 / kPi));
  CHECK(discrete_sum_bound_stated(2.0, 1.0) == doctest::Approx(1.0 / (16.0 * kPi)));
  // Half-plane, eps = 2: 1 / (4 pi sinh^2(1/2)) = 0.29307...
  CHECK(discrete_sum_bound(Geometry::HalfPlane, 2.0, 1.0) ==
        doctest::Approx(1.0 / (4.0 * kPi * std::pow(std::sinh(0.5), 2))).epsilon(1e-9));
  // Decreasing in eps.
  CHECK(discrete_sum_bound(Geometry::Plane, 1.0, 1.0) >
        discrete_sum_bound(Geometry::Plane, 2.0, 1.0));
  CHECK_THROWS_AS(discrete_sum_bound(Geometry::Plane, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(discrete_sum_bound(Geometry::Plane, 2.5, 1.0), std::invalid_argument);
}

TEST_CASE("discrete sum bound dominates actual sums") {
  const KernelField& K = gaussian_field();
  const PointSet z2 = lattice(1.0, 4);
  const double bound = discrete_sum_bound(Geometry::Plane, 1.0, K.mk_l1);
  for (const PhasePoint z : {PhasePoint{0.0, 0.0}, PhasePoint{0.5, 0.5}, PhasePoint{0.3, -0.2}})
    CHECK(kernel_sum(K, z2, z) <= bound);
}

TEST_CASE("upper frame bound") {
  const KernelField& K = gaussian_field();
  PointSet one{Geometry::Plane, {{0.0, 0.0}}, {}};
  // B_suff = ||k||_1 sup_z |k(z)| = ||k||_1 >= 1 for a single atom.
  CHECK(upper_frame_bound(K, one) == doctest::Approx(K.l1).epsilon(1e-6));

  const PointSet z2 = lattice(1.0, 4);
  const auto emp = empirical_frame_bounds(Geometry::Plane, Signal::gaussian(), z2,
                                          TestSpace::hermites(6), q);
  CHECK(emp.B <= upper_frame_bound(K, z2) + 1e-9);
}

TEST_CASE("stability quantities") {
  const KernelField& K = gaussian_field();
  const PointSet z2 = lattice(0.5, 6);

  const auto zero = stability_quantities(K, z2, z2);
  CHECK(zero.d1 == doctest::Approx(0.0));
  CHECK(zero.d2 == doctest::Approx(0.0));

  // d1 grows with the jitter amplitude.
  double prev = 0.0;
  for (double delta : {0.05, 0.1, 0.2}) {
    const auto s = stability_quantities(K, z2, jitter(z2, delta, 3));
    CHECK(s.d1 > prev);
    CHECK(s.d2 >= 0.0);
    prev = s.d1;
  }

  // Proved cap: d2^2 <= 2 (C(alpha/3) + ||Mk||_1-type constant); check the
  // crude consequence d2^2 <= 2 * discrete_sum_bound(alpha/3) with alpha the
  // separation of the union.
  const auto s = stability_quantities(K, z2, jitter(z2, 0.1, 3));
  const double alpha = 0.5 - 2.0 * 0.1;
  const double cap = 2.0 * discrete_sum_bound(Geometry::Plane, alpha / 3.0, K.mk_l1);
  CHECK(s.d2 * s.d2 <= cap);
  CHECK(s.d2_displayed >= 0.0);
}

TEST_CASE("separated margin") {
  CHECK(separated_margin(1.0, 4.0, 2, 0.0, 0.0) == doctest::Approx(0.5));
  CHECK(separated_margin(1.0, 4.0, 2, 0.1, 1.0) == doctest::Approx((1.0 - 0.8) / 2.0));
  CHECK(separated_margin(1.0, 4.0, 1, 0.5, 2.0) < 0.0);  // no certificate
}

TEST_CASE("covering quantities shrink with delta") {
  const KernelField& K = gaussian_field();
  const GridSpec grid = plane_grid();
  double prev = 1e9;
  for (double delta : {0.4, 0.2, 0.1}) {
    // Lattice pitch divides the grid extent exactly, so the corners are
    // covered and every center reaches the grid boundary.
    const int extent = int(std::ceil(4.0 / (delta * std::sqrt(2.0) * 0.98)));
    const double a = 4.0 / extent;
    PointSet set{Geometry::Plane, {}, {}};
    for (int m = -extent; m <= extent; ++m)
      for (int n = -extent; n <= extent; ++n) set.points.push_back({a * m, a * n});
    const auto cov = build_covering(set, delta, grid);
    const auto cq = covering_quantities(K, cov);
    CHECK(cq.d1t < prev);
    CHECK(cq.d2t <= cq.cap + 1e-9);
    prev = cq.d1t;
  }
}

TEST_CASE("covering frame bounds formula") {
  const auto b = covering_frame_bounds(0.3, 1.0, 0.5, 2.0);
  CHECK(b.valid);
  CHECK(b.A == doctest::Approx(0.49 / 2.0));
  CHECK(b.B == doctest::Approx(1.69 / 0.5));
  CHECK_FALSE(covering_frame_bounds(1.0, 1.1, 0.5, 2.0).valid);
}

TEST_CASE("empirical frame bounds") {
  const Signal g = Signal::gaussian();

  PointSet empty{Geometry::Plane, {}, {}};
  const auto e0 = empirical_frame_bounds(Geometry::Plane, g, empty,
                                         TestSpace::hermites(3), q);
  CHECK(e0.A == doctest::Approx(0.0));
  CHECK(e0.B == doctest::Approx(0.0));

  PointSet one{Geometry::Plane, {{0.0, 0.0}}, {}};
  const auto e1 = empirical_frame_bounds(Geometry::Plane, g, one,
                                         TestSpace::hermites(4), q);
  // Rank-one frame operator: B = ||g||^2 = 1, A = 0 once dim > 1.
  CHECK(e1.B == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(e1.A == doctest::Approx(0.0).epsilon(1e-6));

  // Half-integer Gabor lattice is a good frame on the test space.
  const PointSet half = lattice(0.5, 8);
  const auto eh = empirical_frame_bounds(Geometry::Plane, g, half,
                                         TestSpace::hermites(8), q);
  CHECK(eh.A > 0.1 * eh.B);
  CHECK(eh.B > eh.A);
  CHECK(eh.gram_condition < 100.0);
}

TEST_CASE("frame reconstruction") {
  const Signal g = Signal::gaussian();
  const PointSet half = lattice(0.5, 8);
  const auto eb = empirical_frame_bounds(Geometry::Plane, g, half,
                                         TestSpace::hermites(6), q);

  // In-span target: samples of a known coefficient vector.
  Eigen::VectorXcd a0 = Eigen::VectorXcd::Zero(6);
  a0(0) = cplx(1.0, 0.0);
  a0(2) = cplx(0.0, -0.5);
  const Eigen::VectorXcd c = eb.coeffs * a0;
  const auto it = frame_reconstruct(eb, c, 40);
  CHECK_FALSE(it.diverged);
  CHECK((it.solution - a0).norm() < 1e-3);
  CHECK(it.errors.back() < 1e-3);

  // Error decays at worst like ((B - A)/(B + A))^n.
  const double rate = (eb.B - eb.A) / (eb.B + eb.A);
  REQUIRE(it.errors.size() >= 10);
  for (std::size_t n = 1; n < 10; ++n)
    CHECK(it.errors[n] <= it.errors[n - 1] * rate + 1e-12);

  // Zero samples stay at zero.
  const auto z = frame_reconstruct(eb, Eigen::VectorXcd::Zero(half.size()), 5);
  CHECK(z.solution.norm() == doctest::Approx(0.0));
}
