#include "choquet/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace choquet::kernels {

namespace detail {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t n4 = n - (n % 4);
  for (std::size_t i = 0; i < n4; i += 4) {
    acc0 += a[i] * b[i];
    acc1 += a[i + 1] * b[i + 1];
    acc2 += a[i + 2] * b[i + 2];
    acc3 += a[i + 3] * b[i + 3];
  }
  double total = (acc0 + acc1) + (acc2 + acc3);
  for (std::size_t i = n4; i < n; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(CHOQUET_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Level detect_level() {
  if (const char* env = std::getenv("CHOQUET_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Level::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Level::avx2;
  }
  return cpu_has_avx2() ? Level::avx2 : Level::scalar;
}

std::atomic<Level> g_level{detect_level()};

}  // namespace

Level active_level() { return g_level.load(std::memory_order_relaxed); }

bool level_supported(Level level) {
  return level == Level::scalar || (level == Level::avx2 && cpu_has_avx2());
}

void force_level(Level level) {
  g_level.store(level_supported(level) ? level : Level::scalar, std::memory_order_relaxed);
}

std::string_view level_name(Level level) {
  return level == Level::avx2 ? "avx2" : "scalar";
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
#if defined(CHOQUET_HAVE_AVX2)
  if (active_level() == Level::avx2) {
    detail::axpy_avx2(a, x.data(), y.data(), x.size());
    return;
  }
#endif
  detail::axpy_scalar(a, x.data(), y.data(), x.size());
}

void scale(std::span<double> x, double a) {
#if defined(CHOQUET_HAVE_AVX2)
  if (active_level() == Level::avx2) {
    detail::scale_avx2(x.data(), a, x.size());
    return;
  }
#endif
  detail::scale_scalar(x.data(), a, x.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(CHOQUET_HAVE_AVX2)
  if (active_level() == Level::avx2) return detail::dot_avx2(a.data(), b.data(), a.size());
#endif
  return detail::dot_scalar(a.data(), b.data(), a.size());
}

}  // namespace choquet::kernels
