#pragma once

#include <memory>
#include <optional>
#include <string>

#include "delone/geometry.hpp"

namespace delone {

// Declared radii, when the construction knows them.  Bounds are stated
// conservatively (a hair past the exact value) so that windowed
// measurements never contradict them through rounding alone.
struct SourceBounds {
  std::optional<double> r_min_lower;
  std::optional<double> r_max_upper;
};

// An implicit, typically infinite point set queried through windows.
class DeloneSource {
 public:
  virtual ~DeloneSource() = default;
  virtual int dim() const = 0;
  // All points inside the closed ball.  Deterministic, and consistent
  // across windows: points_in(B) == points_in(B') ∩ B whenever B ⊆ B'.
  virtual PointSet points_in(const Ball& window) const = 0;
  virtual std::string label() const = 0;
  virtual SourceBounds bounds() const { return {}; }
};

using SourcePtr = std::shared_ptr<const DeloneSource>;

// View of base - shift.
class TranslatedSource final : public DeloneSource {
 public:
  TranslatedSource(SourcePtr base, Point shift);
  int dim() const override;
  PointSet points_in(const Ball& window) const override;
  std::string label() const override;
  SourceBounds bounds() const override;
  const Point& shift() const { return shift_; }

 private:
  SourcePtr base_;
  Point shift_;
};

SourcePtr translated(SourcePtr base, const Point& shift);

// Finite data promoted to a source.  Coverage is the largest centered ball
// the data is complete on (inferred from the farthest point unless given);
// windows reaching past it raise MarginError.
class PointListSource final : public DeloneSource {
 public:
  explicit PointListSource(PointSet pts, std::string label = "points",
                           std::optional<double> coverage_radius = {});
  int dim() const override;
  PointSet points_in(const Ball& window) const override;
  std::string label() const override;
  double coverage_radius() const { return coverage_; }

 private:
  PointSet pts_;
  std::string label_;
  double coverage_ = 0.0;
};

PointSet materialize(const DeloneSource& src, const Ball& window);

// (−x + Λ) ∩ B_r(0).  x must lie on Λ within 1e-9; it is snapped to the
// exact member so the patch is exactly centered.
Patch r_patch(const DeloneSource& src, const Point& x, double r);

struct DeloneCheckReport {
  double r_min = 0.0;  // packing radius: half the minimum separation
  double r_max = 0.0;  // covering radius: largest interior empty-ball radius
  bool uniformly_discrete = false;
  bool relatively_dense = false;
  std::size_t count = 0;
  Ball window;
};
DeloneCheckReport delone_check(const DeloneSource& src, const Ball& window);

struct PatchClass {
  Patch representative;  // first occurrence
  std::size_t count = 0;
};
struct FlcCensus {
  double r = 0.0;
  Ball window;
  double tol = 0.0;
  std::vector<PatchClass> classes;
  std::size_t anchor_count = 0;
};
// Census of r-patches anchored at every point at least r inside the window.
FlcCensus flc_census(const DeloneSource& src, double r, const Ball& window,
                     double tol);

// Nonzero translation vectors t (|t| ≤ half the window radius, drawn from
// Λ − Λ) under which the set maps onto itself point-for-point within tol on
// the window core.  Empty result means no period resolved at this scale.
PointSet detect_periods(const DeloneSource& src, const Ball& window, double tol);

// Point-set file format: first line "dim n", then one point per line
// (n whitespace-separated coordinates, full precision), sorted
// lexicographically; '#' starts a comment.
PointSet read_point_file(const std::string& path);
void write_point_file(const std::string& path, const PointSet& ps);
std::string format_point_file(const PointSet& ps);
PointSet parse_point_file(const std::string& text, const std::string& origin);

}  // namespace delone
