#pragma once

// Array kernels behind the geometry and diagnostic loops: a scalar reference
// implementation plus an AVX2 variant selected once at startup.  Both
// backends keep the exact same per-element expression trees (no FMA), and the
// reductions are min/max (order-independent), so results are bitwise equal —
// the equivalence tests assert ==, not a tolerance.

#include <cstddef>
#include <cstdint>
#include <span>

namespace delone::kern {

enum class Backend { scalar, avx2 };

// Chosen from cpuid at first use; DELONE_KERNELS=scalar|avx2 overrides.
Backend active_backend();
const char* backend_name();

// min over xs of |q - x|; xs nonempty
double min_abs_diff(double q, std::span<const double> xs);

// min over b of (qx-bx)^2 + (qy-by)^2; b nonempty
double min_sq_dist2(double qx, double qy, std::span<const double> bx,
                    std::span<const double> by);

// directed Hausdorff sup-min in 1D: max over a of min over b |a_i - b_j|
double directed_hausdorff1(std::span<const double> a, std::span<const double> b);

// 2D directed Hausdorff, squared (caller takes one sqrt at the end)
double directed_hausdorff2_sq(std::span<const double> ax, std::span<const double> ay,
                              std::span<const double> bx, std::span<const double> by);

// extremes of xs[i+1] - xs[i] over a sorted array, size >= 2
double min_adjacent_gap(std::span<const double> xs);
double max_adjacent_gap(std::span<const double> xs);

// max over i of |a_i - b_i|; equal sizes
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// true iff some |a_i - b_i| > thresh (early exit)
bool any_abs_diff_exceeds(std::span<const double> a, std::span<const double> b,
                          double thresh);

// f[i] += height * max(0, 1 - |u_i - c| / halfw)  with  u_i = (i0 + i)*pitch + off
void add_triangle(std::span<double> f, long long i0, double pitch, double off,
                  double c, double halfw, double height);

namespace scalar {
double min_abs_diff(double q, std::span<const double> xs);
double min_sq_dist2(double qx, double qy, std::span<const double> bx,
                    std::span<const double> by);
double directed_hausdorff1(std::span<const double> a, std::span<const double> b);
double directed_hausdorff2_sq(std::span<const double> ax, std::span<const double> ay,
                              std::span<const double> bx, std::span<const double> by);
double min_adjacent_gap(std::span<const double> xs);
double max_adjacent_gap(std::span<const double> xs);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
bool any_abs_diff_exceeds(std::span<const double> a, std::span<const double> b,
                          double thresh);
void add_triangle(std::span<double> f, long long i0, double pitch, double off,
                  double c, double halfw, double height);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DELONE_HAVE_AVX2_KERNELS 1
namespace avx2 {
double min_abs_diff(double q, std::span<const double> xs);
double min_sq_dist2(double qx, double qy, std::span<const double> bx,
                    std::span<const double> by);
double directed_hausdorff1(std::span<const double> a, std::span<const double> b);
double directed_hausdorff2_sq(std::span<const double> ax, std::span<const double> ay,
                              std::span<const double> bx, std::span<const double> by);
double min_adjacent_gap(std::span<const double> xs);
double max_adjacent_gap(std::span<const double> xs);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
bool any_abs_diff_exceeds(std::span<const double> a, std::span<const double> b,
                          double thresh);
void add_triangle(std::span<double> f, long long i0, double pitch, double off,
                  double c, double halfw, double height);
}  // namespace avx2
#endif

}  // namespace delone::kern
