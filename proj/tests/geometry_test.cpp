#include <cmath>
#include <random>

#include "doctest.h"

#include "delone/geometry.hpp"
#include "oracles.hpp"

using namespace delone;

TEST_CASE("hausdorff distance: fixed values and oracle agreement") {
  PointSet a = PointSet::build(1, {0.0, 1.0, 2.0});
  PointSet b = PointSet::build(1, {0.5, 1.5});
  CHECK(hausdorff_distance(a, b) == 0.5);
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK_THROWS_AS(hausdorff_distance(a, PointSet(1)), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> xs(12), ys(12), ps(9), qs(9);
    for (double& v : xs) v = u(rng);
    for (double& v : ys) v = u(rng);
    for (double& v : ps) v = u(rng);
    for (double& v : qs) v = u(rng);
    PointSet s1 = PointSet::build(1, xs);
    PointSet s2 = PointSet::build(1, ps);
    CHECK(hausdorff_distance(s1, s2) == oracle::naive_hausdorff(s1, s2));
    PointSet t1 = PointSet::build(2, xs, ys);
    PointSet t2 = PointSet::build(2, ps, qs);
    CHECK(hausdorff_distance(t1, t2) ==
          doctest::Approx(oracle::naive_hausdorff(t1, t2)).epsilon(1e-12));
  }
}

TEST_CASE("patch distance adjoins the boundary sphere") {
  Patch a{2.0, PointSet::build(1, std::vector<double>{0.0}), false};
  Patch b{2.0, PointSet::build(1, std::vector<double>{0.1}), false};
  CHECK(patch_distance(a, b) == doctest::Approx(0.1));

  Patch empty{2.0, PointSet(1), false};
  CHECK(patch_distance(a, empty) == doctest::Approx(2.0));
  CHECK(patch_distance(empty, empty) == 0.0);

  Patch c{2.5, PointSet::build(1, std::vector<double>{0.0}), false};
  CHECK_THROWS_AS(patch_distance(a, c), std::invalid_argument);

  Patch p{1.0, PointSet::build(2, {0.0}, {0.0}), false};
  Patch q{1.0, PointSet::build(2, {0.1}, {0.0}), false};
  CHECK(patch_distance(p, q) == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(patch_distance(p, p) == 0.0);
}

TEST_CASE("sphere sampling density") {
  CHECK(sphere_sample_count(0.001) == 64);
  CHECK(sphere_sample_count(10.0) == 62832);
}

TEST_CASE("separation and gap statistics") {
  PointSet s = PointSet::build(1, {0.0, 0.5, 2.0});
  CHECK(min_pair_separation(s) == 0.5);
  CHECK_THROWS_AS(min_pair_separation(PointSet::build(1, std::vector<double>{1.0})),
                  std::invalid_argument);

  Ball w{point1(0.0), 5.0};
  PointSet t = PointSet::build(1, {-1.0, 0.0, 1.0});
  CHECK(largest_empty_gap(t, w) == 2.0);        // edge run from -5 to -1
  CHECK(largest_interior_gap(t, w) == 0.5);     // interior gaps only

  bool empty_in = false;
  CHECK(largest_empty_gap(PointSet(1), w, &empty_in) == 5.0);
  CHECK(empty_in);

  PointSet single = PointSet::build(2, {0.0}, {0.0});
  Ball disk{point2(0.0, 0.0), 1.0};
  CHECK(largest_empty_gap(single, disk) == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("patch equivalence under tolerance") {
  Patch a{3.0, PointSet::build(1, {-1.0, 0.0, 2.0}), true};
  Patch b{3.0, PointSet::build(1, {-1.0 + 1e-8, 0.0, 2.0 - 1e-8}), true};
  CHECK(patches_equivalent(a, b, 1e-6));
  CHECK_FALSE(patches_equivalent(a, b, 1e-9));
  Patch c{3.0, PointSet::build(1, {-1.0, 0.0}), true};
  CHECK_FALSE(patches_equivalent(a, c, 1e-6));

  Patch p{2.0, PointSet::build(2, {0.0, 1.0}, {0.0, 1.0}), true};
  Patch q{2.0, PointSet::build(2, {1e-8, 1.0}, {0.0, 1.0 - 1e-8}), true};
  CHECK(patches_equivalent(p, q, 1e-6));
  CHECK_FALSE(patches_equivalent(p, q, 1e-10));
}
