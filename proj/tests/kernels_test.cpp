#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "delone/kernels.hpp"

using namespace delone;

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

std::vector<double> gen_values(std::mt19937_64& rng, std::size_t n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

std::vector<double> sorted_copy(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("scalar kernels: reference semantics") {
  std::vector<double> xs{-3.0, -1.0, 0.5, 2.0};
  CHECK(kern::scalar::min_abs_diff(0.0, xs) == 0.5);
  CHECK(kern::scalar::min_abs_diff(-2.0, xs) == 1.0);

  std::vector<double> bx{0.0, 3.0}, by{0.0, 4.0};
  CHECK(kern::scalar::min_sq_dist2(0.0, 1.0, bx, by) == 1.0);
  CHECK(kern::scalar::min_sq_dist2(3.0, 0.0, bx, by) == 9.0);

  std::vector<double> a{0.0, 1.0, 2.0}, b{0.5, 1.5};
  CHECK(kern::scalar::directed_hausdorff1(a, b) == 0.5);
  CHECK(kern::scalar::directed_hausdorff1(b, a) == 0.5);

  std::vector<double> sorted{0.0, 0.25, 1.0, 1.5};
  CHECK(kern::scalar::min_adjacent_gap(sorted) == 0.25);
  CHECK(kern::scalar::max_adjacent_gap(sorted) == 0.75);

  std::vector<double> p{1.0, 2.0, 3.0}, q{1.0, 2.5, 2.0};
  CHECK(kern::scalar::max_abs_diff(p, q) == 1.0);
  CHECK(kern::scalar::any_abs_diff_exceeds(p, q, 0.9));
  CHECK_FALSE(kern::scalar::any_abs_diff_exceeds(p, q, 1.0));  // strict >
  CHECK_FALSE(kern::scalar::any_abs_diff_exceeds(p, p, 0.0));
}

TEST_CASE("scalar add_triangle: bump accumulation") {
  std::vector<double> f(11, 0.0);
  // grid -0.5..0.5 pitch 0.1, bump at 0 with half-width 0.3, height 2
  kern::scalar::add_triangle(f, -5, 0.1, 0.0, 0.0, 0.3, 2.0);
  CHECK(f[5] == 2.0);
  CHECK(f[0] == 0.0);  // |u|=0.5 outside support
  CHECK(f[4] == doctest::Approx(2.0 * (1.0 - 0.1 / 0.3)));
  kern::scalar::add_triangle(f, -5, 0.1, 0.0, 0.0, 0.3, 2.0);
  CHECK(f[5] == 4.0);  // accumulates
}

#if defined(DELONE_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 kernels: bitwise equality with scalar") {
  if (!__builtin_cpu_supports("avx2")) {
    MESSAGE("avx2 not available on this host; skipping");
    return;
  }
  std::mt19937_64 rng(20240817);
  std::vector<std::size_t> sizes{1, 2, 3, 4, 5, 6, 7, 8, 9, 31, 64, 257};
  for (std::size_t n : sizes) {
    for (double scale : {1.0, 1e-9, 1e9}) {
      std::vector<double> a = gen_values(rng, n, scale);
      std::vector<double> b = gen_values(rng, n, scale);
      // adversarial touches: duplicates, exact zeros, negative zero
      if (n >= 4) {
        a[1] = a[0];
        a[2] = 0.0;
        a[3] = -0.0;
      }
      CHECK(same_bits(kern::scalar::min_abs_diff(0.3, a),
                      kern::avx2::min_abs_diff(0.3, a)));
      CHECK(same_bits(kern::scalar::min_sq_dist2(0.1, -0.2, a, b),
                      kern::avx2::min_sq_dist2(0.1, -0.2, a, b)));
      CHECK(same_bits(kern::scalar::directed_hausdorff1(a, b),
                      kern::avx2::directed_hausdorff1(a, b)));
      CHECK(same_bits(kern::scalar::directed_hausdorff2_sq(a, b, b, a),
                      kern::avx2::directed_hausdorff2_sq(a, b, b, a)));
      CHECK(same_bits(kern::scalar::max_abs_diff(a, b),
                      kern::avx2::max_abs_diff(a, b)));
      double thresh = std::fabs(a[0] - b[0]);  // exact boundary case
      CHECK(kern::scalar::any_abs_diff_exceeds(a, b, thresh) ==
            kern::avx2::any_abs_diff_exceeds(a, b, thresh));
      CHECK(kern::scalar::any_abs_diff_exceeds(a, b, 0.0) ==
            kern::avx2::any_abs_diff_exceeds(a, b, 0.0));
      if (n >= 2) {
        std::vector<double> s = sorted_copy(a);
        CHECK(same_bits(kern::scalar::min_adjacent_gap(s),
                        kern::avx2::min_adjacent_gap(s)));
        CHECK(same_bits(kern::scalar::max_adjacent_gap(s),
                        kern::avx2::max_adjacent_gap(s)));
      }
      std::vector<double> f1(n, 0.0), f2(n, 0.0);
      kern::scalar::add_triangle(f1, -static_cast<long long>(n / 2), 0.125, 0.0,
                                 a[0], 1.75, 0.6);
      kern::avx2::add_triangle(f2, -static_cast<long long>(n / 2), 0.125, 0.0,
                               a[0], 1.75, 0.6);
      for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(f1[i], f2[i]));
    }
  }
}
#endif

TEST_CASE("dispatch: backend reporting is coherent") {
  kern::Backend b = kern::active_backend();
  const char* name = kern::backend_name();
  if (b == kern::Backend::avx2) CHECK(std::string(name) == "avx2");
  else CHECK(std::string(name) == "scalar");
  // dispatched call agrees with the explicit scalar reference
  std::vector<double> xs{-1.0, 2.0, 4.5};
  CHECK(same_bits(kern::min_abs_diff(1.0, xs), kern::scalar::min_abs_diff(1.0, xs)));
}
