#include "delone/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "delone/kernels.hpp"

namespace delone {

namespace {

// nearest boundary sample by angle; distance grows monotonically with the
// angular offset, so checking the rounded index and its neighbours equals a
// scan over all samples
double min_dist_to_sphere_samples(const Point& p, double r, std::size_t m) {
  double phi = std::atan2(p.y, p.x);
  double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  long long k0 = std::llround(phi / step);
  double best = std::numeric_limits<double>::infinity();
  for (long long k = k0 - 1; k <= k0 + 1; ++k) {
    double a = static_cast<double>(k) * step;
    double dx = p.x - r * std::cos(a), dy = p.y - r * std::sin(a);
    best = std::min(best, dx * dx + dy * dy);
  }
  return best;
}

double directed_interior_sq(const Patch& from, const Patch& to, std::size_t m) {
  double sup = 0.0;
  const auto& pts = from.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point p = pts.at(i);
    double d = min_dist_to_sphere_samples(p, from.radius, m);
    if (!to.points.empty())
      d = std::min(d, kern::min_sq_dist2(p.x, p.y, to.points.xs(), to.points.ys()));
    if (d > sup) sup = d;
  }
  return sup;
}

}  // namespace

double hausdorff_distance(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("empty set has no Hausdorff distance");
  if (a.dim() != b.dim())
    throw std::invalid_argument("Hausdorff distance needs equal dimensions");
  if (a.dim() == 1) {
    return std::max(kern::directed_hausdorff1(a.xs(), b.xs()),
                    kern::directed_hausdorff1(b.xs(), a.xs()));
  }
  double d2 = std::max(kern::directed_hausdorff2_sq(a.xs(), a.ys(), b.xs(), b.ys()),
                       kern::directed_hausdorff2_sq(b.xs(), b.ys(), a.xs(), a.ys()));
  return std::sqrt(d2);
}

std::size_t sphere_sample_count(double radius) {
  double needed = std::ceil(2.0 * std::numbers::pi * radius / bd_delta);
  return static_cast<std::size_t>(std::max(64.0, needed));
}

double patch_distance(const Patch& a, const Patch& b) {
  if (a.points.dim() != b.points.dim())
    throw std::invalid_argument("patch dimension mismatch");
  if (std::fabs(a.radius - b.radius) > 1e-12)
    throw std::invalid_argument("patch radii differ");
  double r = a.radius;
  if (a.points.dim() == 1) {
    std::vector<double> av, bv;
    av.reserve(a.points.size() + 2);
    bv.reserve(b.points.size() + 2);
    av.push_back(-r);
    av.insert(av.end(), a.points.xs().begin(), a.points.xs().end());
    av.push_back(r);
    bv.push_back(-r);
    bv.insert(bv.end(), b.points.xs().begin(), b.points.xs().end());
    bv.push_back(r);
    return std::max(kern::directed_hausdorff1(av, bv),
                    kern::directed_hausdorff1(bv, av));
  }
  // identical sphere samples on both sides contribute zero, so only the
  // interior points need scanning
  std::size_t m = sphere_sample_count(r);
  double d2 = std::max(directed_interior_sq(a, b, m), directed_interior_sq(b, a, m));
  return std::sqrt(d2);
}

double min_pair_separation(const PointSet& ps) {
  if (ps.size() < 2)
    throw std::invalid_argument("min_pair_separation needs at least 2 points");
  if (ps.dim() == 1) return kern::min_adjacent_gap(ps.xs());
  double best = std::numeric_limits<double>::infinity();
  auto xs = ps.xs();
  auto ys = ps.ys();
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    double d = kern::min_sq_dist2(xs[i], ys[i], xs.subspan(i + 1), ys.subspan(i + 1));
    if (d < best) best = d;
  }
  return std::sqrt(best);
}

double largest_empty_gap(const PointSet& ps, const Ball& window, bool* empty_input) {
  if (empty_input) *empty_input = false;
  if (ps.empty()) {
    if (empty_input) *empty_input = true;
    return window.radius;
  }
  if (ps.dim() != window.center.dim)
    throw std::invalid_argument("window dimension mismatch");
  PointSet in = ps.restricted(window);
  if (in.empty()) return window.radius;
  if (ps.dim() == 1) {
    double lo = window.center.x - window.radius;
    double hi = window.center.x + window.radius;
    auto xs = in.xs();
    double best = std::max(xs.front() - lo, hi - xs.back()) / 2.0;
    if (in.size() >= 2) best = std::max(best, kern::max_adjacent_gap(xs) / 2.0);
    return best;
  }
  double R = window.radius;
  double h = 0.01 * R;
  long long N = static_cast<long long>(std::floor(R / h));
  double best = 0.0;
  for (long long i = -N; i <= N; ++i) {
    for (long long j = -N; j <= N; ++j) {
      double cx = window.center.x + static_cast<double>(i) * h;
      double cy = window.center.y + static_cast<double>(j) * h;
      double off = std::hypot(cx - window.center.x, cy - window.center.y);
      if (off > R) continue;
      double d = std::sqrt(kern::min_sq_dist2(cx, cy, in.xs(), in.ys()));
      best = std::max(best, std::min(d, R - off));
    }
  }
  return best;
}

double largest_interior_gap(const PointSet& ps, const Ball& window) {
  if (ps.dim() != window.center.dim)
    throw std::invalid_argument("window dimension mismatch");
  PointSet in = ps.restricted(window);
  if (in.size() < 2) return 0.0;
  if (ps.dim() == 1) return kern::max_adjacent_gap(in.xs()) / 2.0;
  double R = window.radius;
  double h = 0.01 * R;
  long long N = static_cast<long long>(std::floor(R / h));
  double best = 0.0;
  for (long long i = -N; i <= N; ++i) {
    for (long long j = -N; j <= N; ++j) {
      double cx = window.center.x + static_cast<double>(i) * h;
      double cy = window.center.y + static_cast<double>(j) * h;
      double off = std::hypot(cx - window.center.x, cy - window.center.y);
      if (off > R) continue;
      double d = std::sqrt(kern::min_sq_dist2(cx, cy, in.xs(), in.ys()));
      if (d <= R - off) best = std::max(best, d);  // ball not clipped by window
    }
  }
  return best;
}

bool patches_equivalent(const Patch& a, const Patch& b, double tol) {
  if (a.points.dim() != b.points.dim()) return false;
  if (std::fabs(a.radius - b.radius) > 1e-12) return false;
  if (a.points.size() != b.points.size()) return false;
  if (a.points.empty()) return true;
  if (a.points.dim() == 1)
    return !kern::any_abs_diff_exceeds(a.points.xs(), b.points.xs(), tol);
  // tol below the minimum separation makes the nearest match unique, so a
  // per-point existence check suffices for a bijection
  auto bx = b.points.xs();
  auto by = b.points.ys();
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    Point p = a.points.at(i);
    auto lo = std::lower_bound(bx.begin(), bx.end(), p.x - tol) - bx.begin();
    bool hit = false;
    for (std::size_t j = lo; j < b.points.size() && bx[j] <= p.x + tol; ++j) {
      double dx = p.x - bx[j], dy = p.y - by[j];
      if (std::sqrt(dx * dx + dy * dy) <= tol) { hit = true; break; }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace delone
