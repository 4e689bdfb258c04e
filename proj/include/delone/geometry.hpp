#pragma once

#include "delone/point_set.hpp"

namespace delone {

// An r-patch: points within distance r of a center, stored relative to it
// (so a centered patch contains 0).
struct Patch {
  double radius = 0.0;
  PointSet points;
  bool centered = false;
};

// Hausdorff distance between two nonempty finite sets of equal dimension.
double hausdorff_distance(const PointSet& a, const PointSet& b);

// Hausdorff distance after adjoining the r-sphere to both patches.  In 1D
// the sphere is {-r, +r}; in 2D it is sampled with sphere_sample_count(r)
// points (worst-case sampling error below bd_delta/2).
double patch_distance(const Patch& a, const Patch& b);

constexpr double bd_delta = 1e-3;
std::size_t sphere_sample_count(double radius);

// Minimum pairwise distance; needs >= 2 points.
double min_pair_separation(const PointSet& ps);

// Radius of the largest ball contained in `window` and disjoint from ps
// (1D exact; 2D approximated on a grid of pitch 0.01 * window radius).
// Empty ps returns the window radius and sets *empty_input when provided.
double largest_empty_gap(const PointSet& ps, const Ball& window,
                         bool* empty_input = nullptr);

// Same statistic restricted to balls not limited by the window boundary:
// 1D keeps only gaps between consecutive interior points; 2D keeps grid
// centers whose empty ball fits strictly inside the window.
double largest_interior_gap(const PointSet& ps, const Ball& window);

// True iff a bijection matches the patches' points within tol pointwise.
// Greedy nearest matching; valid when tol is below the minimum separation.
bool patches_equivalent(const Patch& a, const Patch& b, double tol);

}  // namespace delone
