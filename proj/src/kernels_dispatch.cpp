#include <cstdlib>
#include <cstring>

#include "delone/kernels.hpp"

namespace delone::kern {

namespace {

Backend detect() {
#if defined(DELONE_HAVE_AVX2_KERNELS) && defined(__GNUC__)
  if (const char* env = std::getenv("DELONE_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
  }
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
  return Backend::scalar;
}

const Backend g_backend = detect();

}  // namespace

Backend active_backend() { return g_backend; }

const char* backend_name() {
  return g_backend == Backend::avx2 ? "avx2" : "scalar";
}

#if defined(DELONE_HAVE_AVX2_KERNELS)
#define DELONE_DISPATCH(fn, ...)                     \
  (g_backend == Backend::avx2 ? avx2::fn(__VA_ARGS__) \
                              : scalar::fn(__VA_ARGS__))
#else
#define DELONE_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double min_abs_diff(double q, std::span<const double> xs) {
  return DELONE_DISPATCH(min_abs_diff, q, xs);
}

double min_sq_dist2(double qx, double qy, std::span<const double> bx,
                    std::span<const double> by) {
  return DELONE_DISPATCH(min_sq_dist2, qx, qy, bx, by);
}

double directed_hausdorff1(std::span<const double> a, std::span<const double> b) {
  return DELONE_DISPATCH(directed_hausdorff1, a, b);
}

double directed_hausdorff2_sq(std::span<const double> ax, std::span<const double> ay,
                              std::span<const double> bx, std::span<const double> by) {
  return DELONE_DISPATCH(directed_hausdorff2_sq, ax, ay, bx, by);
}

double min_adjacent_gap(std::span<const double> xs) {
  return DELONE_DISPATCH(min_adjacent_gap, xs);
}

double max_adjacent_gap(std::span<const double> xs) {
  return DELONE_DISPATCH(max_adjacent_gap, xs);
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  return DELONE_DISPATCH(max_abs_diff, a, b);
}

bool any_abs_diff_exceeds(std::span<const double> a, std::span<const double> b,
                          double thresh) {
  return DELONE_DISPATCH(any_abs_diff_exceeds, a, b, thresh);
}

void add_triangle(std::span<double> f, long long i0, double pitch, double off,
                  double c, double halfw, double height) {
  DELONE_DISPATCH(add_triangle, f, i0, pitch, off, c, halfw, height);
}

#undef DELONE_DISPATCH

}  // namespace delone::kern
