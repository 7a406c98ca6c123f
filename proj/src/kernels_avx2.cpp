#include "choquet/kernels.hpp"

#if defined(CHOQUET_HAVE_AVX2)

#include <immintrin.h>

// Compiled with -mavx2 -mno-fma. Multiplies and adds stay separate so the
// rounding sequence matches the scalar reference exactly.
namespace choquet::kernels::detail {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  std::size_t n4 = n - (n % 4);
  __m256d va = _mm256_set1_pd(a);
  for (std::size_t i = 0; i < n4; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (std::size_t i = n4; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double a, std::size_t n) {
  std::size_t n4 = n - (n % 4);
  __m256d va = _mm256_set1_pd(a);
  for (std::size_t i = 0; i < n4; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
  }
  for (std::size_t i = n4; i < n; ++i) x[i] *= a;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  std::size_t n4 = n - (n % 4);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (std::size_t i = n4; i < n; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace choquet::kernels::detail

#endif  // CHOQUET_HAVE_AVX2
