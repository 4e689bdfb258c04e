#include "delone/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "delone/kernels.hpp"

namespace delone {

double norm(const Point& p) {
  return p.dim == 1 ? std::fabs(p.x) : std::sqrt(p.x * p.x + p.y * p.y);
}

double dist(const Point& a, const Point& b) {
  if (a.dim != b.dim) throw std::invalid_argument("point dimension mismatch");
  return norm(a - b);
}

Point operator-(const Point& p) { return {-p.x, -p.y, p.dim}; }

Point operator+(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y, a.dim};
}

Point operator-(const Point& a, const Point& b) {
  return {a.x - b.x, a.y - b.y, a.dim};
}

bool Ball::contains(const Point& p) const {
  return dist(p, center) <= radius;
}

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
}

PointSet PointSet::build(int dim, std::vector<double> xs, std::vector<double> ys) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
  if (dim == 2 && ys.size() != xs.size())
    throw std::invalid_argument("coordinate columns differ in length");
  for (double v : xs)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate");
  if (dim == 2)
    for (double v : ys)
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate");

  PointSet out(dim);
  if (dim == 1) {
    std::sort(xs.begin(), xs.end());
    for (double v : xs) {
      if (!out.xs_.empty() && v - out.xs_.back() < dup_tol) continue;
      out.xs_.push_back(v);
    }
  } else {
    std::vector<std::size_t> idx(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
      return xs[i] != xs[j] ? xs[i] < xs[j] : ys[i] < ys[j];
    });
    for (std::size_t i : idx) {
      bool dup = false;
      // a duplicate must sit within dup_tol in x of an already kept point
      for (std::size_t k = out.xs_.size(); k-- > 0;) {
        if (xs[i] - out.xs_[k] >= dup_tol) break;
        double dx = xs[i] - out.xs_[k], dy = ys[i] - out.ys_[k];
        if (dx * dx + dy * dy < dup_tol * dup_tol) { dup = true; break; }
      }
      if (dup) continue;
      out.xs_.push_back(xs[i]);
      out.ys_.push_back(ys[i]);
    }
  }
  return out;
}

PointSet PointSet::build(int dim, const std::vector<Point>& pts) {
  std::vector<double> xs, ys;
  xs.reserve(pts.size());
  ys.reserve(dim == 2 ? pts.size() : 0);
  for (const Point& p : pts) {
    xs.push_back(p.x);
    if (dim == 2) ys.push_back(p.y);
  }
  return build(dim, std::move(xs), std::move(ys));
}

Point PointSet::at(std::size_t i) const {
  return dim_ == 1 ? point1(xs_[i]) : point2(xs_[i], ys_[i]);
}

double PointSet::nearest_distance(const Point& q) const {
  if (q.dim != dim_) throw std::invalid_argument("point dimension mismatch");
  if (empty()) return std::numeric_limits<double>::infinity();
  if (dim_ == 1) {
    auto it = std::lower_bound(xs_.begin(), xs_.end(), q.x);
    double best = std::numeric_limits<double>::infinity();
    if (it != xs_.end()) best = *it - q.x;
    if (it != xs_.begin()) best = std::min(best, q.x - *(it - 1));
    return best;
  }
  return std::sqrt(kern::min_sq_dist2(q.x, q.y, xs_, ys_));
}

bool PointSet::contains(const Point& q, double tol) const {
  return nearest_distance(q) <= tol;
}

PointSet PointSet::translated(const Point& shift) const {
  if (shift.dim != dim_) throw std::invalid_argument("point dimension mismatch");
  PointSet out(dim_);
  out.xs_.reserve(size());
  out.ys_.reserve(ys_.size());
  // adding a constant preserves lexicographic order
  for (double v : xs_) out.xs_.push_back(v + shift.x);
  for (double v : ys_) out.ys_.push_back(v + shift.y);
  return out;
}

PointSet PointSet::restricted(const Ball& window) const {
  if (window.center.dim != dim_)
    throw std::invalid_argument("window dimension mismatch");
  PointSet out(dim_);
  if (dim_ == 1) {
    double lo = window.center.x - window.radius, hi = window.center.x + window.radius;
    auto b = std::lower_bound(xs_.begin(), xs_.end(), lo);
    auto e = std::upper_bound(xs_.begin(), xs_.end(), hi);
    out.xs_.assign(b, e);
  } else {
    for (std::size_t i = 0; i < size(); ++i) {
      if (window.contains(at(i))) {
        out.xs_.push_back(xs_[i]);
        out.ys_.push_back(ys_[i]);
      }
    }
  }
  return out;
}

}  // namespace delone
