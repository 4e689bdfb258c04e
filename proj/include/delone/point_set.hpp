#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace delone {

// Scale problems: the requested analysis needs more data than the window (or
// a point file's coverage) provides.  The CLI maps these to exit code 3.
struct MarginError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input: malformed files, rejected generator specs, violated
// construction invariants.  The CLI maps these to exit code 2.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  int dim = 1;
};

inline Point point1(double x) { return {x, 0.0, 1}; }
inline Point point2(double x, double y) { return {x, y, 2}; }

double norm(const Point& p);
double dist(const Point& a, const Point& b);
Point operator-(const Point& p);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

struct Ball {
  Point center;
  double radius = 0.0;

  bool contains(const Point& p) const;  // closed
};

// Finite point set of fixed dimension (1 or 2).  Coordinates are stored
// column-wise, sorted lexicographically; points closer than dup_tol are
// merged at construction time.
class PointSet {
 public:
  static constexpr double dup_tol = 1e-12;

  PointSet() = default;
  explicit PointSet(int dim);

  // Sorts, merges duplicates.  ys ignored for dim 1.
  static PointSet build(int dim, std::vector<double> xs, std::vector<double> ys = {});
  static PointSet build(int dim, const std::vector<Point>& pts);

  int dim() const { return dim_; }
  std::size_t size() const { return xs_.size(); }
  bool empty() const { return xs_.empty(); }

  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  Point at(std::size_t i) const;

  // distance from q to the nearest member; inf if empty
  double nearest_distance(const Point& q) const;
  bool contains(const Point& q, double tol) const;

  PointSet translated(const Point& shift) const;  // p + shift for all p
  PointSet restricted(const Ball& window) const;

  bool operator==(const PointSet& o) const = default;

 private:
  int dim_ = 1;
  std::vector<double> xs_;
  std::vector<double> ys_;  // empty for dim 1
};

}  // namespace delone
