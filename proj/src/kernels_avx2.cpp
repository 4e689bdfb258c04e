// AVX2 variants.  Compiled with -mavx2 only; dispatch checks cpuid before
// routing here.  Per-element arithmetic mirrors the scalar reference exactly
// (mul + add, never FMA), and all reductions are min/max, so every kernel is
// bitwise equal to its scalar counterpart.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "delone/kernels.hpp"

namespace delone::kern::avx2 {

namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(kSignMask, v); }

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_min_pd(lo, hi);
  m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

}  // namespace

double min_abs_diff(double q, std::span<const double> xs) {
  const double* p = xs.data();
  std::size_t n = xs.size();
  __m256d qv = _mm256_set1_pd(q);
  __m256d acc = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = abs_pd(_mm256_sub_pd(qv, _mm256_loadu_pd(p + i)));
    acc = _mm256_min_pd(acc, d);
  }
  double best = hmin(acc);
  for (; i < n; ++i) {
    double d = std::fabs(q - p[i]);
    if (d < best) best = d;
  }
  return best;
}

double min_sq_dist2(double qx, double qy, std::span<const double> bx,
                    std::span<const double> by) {
  const double* px = bx.data();
  const double* py = by.data();
  std::size_t n = bx.size();
  __m256d qxv = _mm256_set1_pd(qx), qyv = _mm256_set1_pd(qy);
  __m256d acc = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(qxv, _mm256_loadu_pd(px + i));
    __m256d dy = _mm256_sub_pd(qyv, _mm256_loadu_pd(py + i));
    __m256d d = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    acc = _mm256_min_pd(acc, d);
  }
  double best = hmin(acc);
  for (; i < n; ++i) {
    double dx = qx - px[i], dy = qy - py[i];
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
  const double* p = xs.data();
  std::size_t n = xs.size();
  if (n < 2) return std::numeric_limits<double>::infinity();
  __m256d acc = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 5 <= n; i += 4) {
    __m256d g = _mm256_sub_pd(_mm256_loadu_pd(p + i + 1), _mm256_loadu_pd(p + i));
    // + 0.0 canonicalizes a -0.0 gap so reduction order can't show through
    acc = _mm256_min_pd(acc, _mm256_add_pd(g, zero));
  }
  double best = hmin(acc);
  for (; i + 1 < n; ++i) {
    double g = (p[i + 1] - p[i]) + 0.0;
    if (g < best) best = g;
  }
  return best;
}

double max_adjacent_gap(std::span<const double> xs) {
  const double* p = xs.data();
  std::size_t n = xs.size();
  if (n < 2) return 0.0;
  __m256d acc = _mm256_setzero_pd();
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 5 <= n; i += 4) {
    __m256d g = _mm256_sub_pd(_mm256_loadu_pd(p + i + 1), _mm256_loadu_pd(p + i));
    acc = _mm256_max_pd(acc, _mm256_add_pd(g, zero));
  }
  double best = hmax(acc);
  for (; i + 1 < n; ++i) {
    double g = (p[i + 1] - p[i]) + 0.0;
    if (g > best) best = g;
  }
  return best;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  const double* pa = a.data();
  const double* pb = b.data();
  std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = abs_pd(_mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    acc = _mm256_max_pd(acc, d);
  }
  double best = hmax(acc);
  for (; i < n; ++i) {
    double d = std::fabs(pa[i] - pb[i]);
    if (d > best) best = d;
  }
  return best;
}

bool any_abs_diff_exceeds(std::span<const double> a, std::span<const double> b,
                          double thresh) {
  const double* pa = a.data();
  const double* pb = b.data();
  std::size_t n = a.size();
  __m256d tv = _mm256_set1_pd(thresh);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = abs_pd(_mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    if (_mm256_movemask_pd(_mm256_cmp_pd(d, tv, _CMP_GT_OQ)) != 0) return true;
  }
  for (; i < n; ++i) {
    if (std::fabs(pa[i] - pb[i]) > thresh) return true;
  }
  return false;
}

void add_triangle(std::span<double> f, long long i0, double pitch, double off,
                  double c, double halfw, double height) {
  double* p = f.data();
  std::size_t n = f.size();
  __m256d pv = _mm256_set1_pd(pitch), ov = _mm256_set1_pd(off);
  __m256d cv = _mm256_set1_pd(c), hw = _mm256_set1_pd(halfw);
  __m256d hv = _mm256_set1_pd(height), one = _mm256_set1_pd(1.0);
  __m256d zero = _mm256_setzero_pd();
  // exact integer lane indices; staying integral keeps parity with scalar
  __m256d idx = _mm256_setr_pd(static_cast<double>(i0), static_cast<double>(i0 + 1),
                               static_cast<double>(i0 + 2), static_cast<double>(i0 + 3));
  __m256d four = _mm256_set1_pd(4.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4, idx = _mm256_add_pd(idx, four)) {
    __m256d u = _mm256_add_pd(_mm256_mul_pd(idx, pv), ov);
    __m256d w = _mm256_sub_pd(one, _mm256_div_pd(abs_pd(_mm256_sub_pd(u, cv)), hw));
    __m256d mask = _mm256_cmp_pd(w, zero, _CMP_GT_OQ);
    __m256d add = _mm256_and_pd(mask, _mm256_mul_pd(hv, w));
    _mm256_storeu_pd(p + i, _mm256_add_pd(_mm256_loadu_pd(p + i), add));
  }
  for (; i < n; ++i) {
    double u = static_cast<double>(i0 + static_cast<long long>(i)) * pitch + off;
    double w = 1.0 - std::fabs(u - c) / halfw;
    if (w > 0.0) p[i] += height * w;
  }
}

}  // namespace delone::kern::avx2

#endif  // x86_64
