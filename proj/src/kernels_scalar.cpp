#include <cmath>
#include <limits>

#include "delone/kernels.hpp"

namespace delone::kern::scalar {

double min_abs_diff(double q, std::span<const double> xs) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : xs) {
    double d = std::fabs(q - x);
    if (d < best) best = d;
  }
  return best;
}

double min_sq_dist2(double qx, double qy, std::span<const double> bx,
                    std::span<const double> by) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < bx.size(); ++i) {
    double dx = qx - bx[i], dy = qy - by[i];
    double d = dx * dx + dy * dy;
    if (d < best) best = d;
  }
  return best;
}

double directed_hausdorff1(std::span<const double> a, std::span<const double> b) {
  double sup = 0.0;
  for (double q : a) {
    double d = min_abs_diff(q, b);
    if (d > sup) sup = d;
  }
  return sup;
}

double directed_hausdorff2_sq(std::span<const double> ax, std::span<const double> ay,
                              std::span<const double> bx, std::span<const double> by) {
  double sup = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    double d = min_sq_dist2(ax[i], ay[i], bx, by);
    if (d > sup) sup = d;
  }
  return sup;
}

double min_adjacent_gap(std::span<const double> xs) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    // + 0.0 canonicalizes a -0.0 gap so reduction order can't show through
    double g = (xs[i + 1] - xs[i]) + 0.0;
    if (g < best) best = g;
  }
  return best;
}

double max_adjacent_gap(std::span<const double> xs) {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    double g = (xs[i + 1] - xs[i]) + 0.0;
    if (g > best) best = g;
  }
  return best;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = std::fabs(a[i] - b[i]);
    if (d > best) best = d;
  }
  return best;
}

bool any_abs_diff_exceeds(std::span<const double> a, std::span<const double> b,
                          double thresh) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > thresh) return true;
  }
  return false;
}

void add_triangle(std::span<double> f, long long i0, double pitch, double off,
                  double c, double halfw, double height) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    double u = static_cast<double>(i0 + static_cast<long long>(i)) * pitch + off;
    double w = 1.0 - std::fabs(u - c) / halfw;
    if (w > 0.0) f[i] += height * w;
  }
}

}  // namespace delone::kern::scalar
