#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense double-precision kernels used by the LP tableau and the geometry
// scans. Scalar reference implementations define the exact arithmetic
// (4-accumulator dot, elementwise mul/add without contraction); the AVX2
// variants mirror that arithmetic lane for lane, so both levels produce
// bit-identical results and are tested for exact equality.
namespace choquet::kernels {

enum class Level { scalar, avx2 };

// Level selected at startup: highest supported, unless the CHOQUET_SIMD
// environment variable ("scalar" or "avx2") overrides it.
Level active_level();
bool level_supported(Level level);
// Forces a level for testing; silently falls back to scalar if unsupported.
void force_level(Level level);
std::string_view level_name(Level level);

// y[i] += a * x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);
// x[i] *= a
void scale(std::span<double> x, double a);
// 4-accumulator dot product; accumulator k holds indices congruent to k mod 4,
// combined as (acc0+acc1)+(acc2+acc3), tail added sequentially.
double dot(std::span<const double> a, std::span<const double> b);

namespace detail {
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double* x, double a, std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);
#if defined(CHOQUET_HAVE_AVX2)
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double* x, double a, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
#endif
}  // namespace detail

}  // namespace choquet::kernels
