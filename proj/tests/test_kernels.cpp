#include <cstring>
#include <vector>

#include "choquet/kernels.hpp"
#include "choquet/rng.hpp"
#include "doctest.h"

using namespace choquet;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(-3.0, 3.0);
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

// The documented reference arithmetic: four accumulators by index mod 4,
// combined as (acc0+acc1)+(acc2+acc3), tail added sequentially.
double dot_reference(const std::vector<double>& a, const std::vector<double>& b) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t n4 = a.size() - a.size() % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    acc[0] += a[i] * b[i];
    acc[1] += a[i + 1] * b[i + 1];
    acc[2] += a[i + 2] * b[i + 2];
    acc[3] += a[i + 3] * b[i + 3];
  }
  double s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t i = n4; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct LevelGuard {
  kernels::Level saved = kernels::active_level();
  ~LevelGuard() { kernels::force_level(saved); }
};

}  // namespace

TEST_CASE("dot matches the documented accumulator scheme bit for bit") {
  Rng rng(42);
  LevelGuard guard;
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 33u, 67u, 256u}) {
    auto a = random_vec(rng, n);
    auto b = random_vec(rng, n);
    double want = dot_reference(a, b);
    kernels::force_level(kernels::Level::scalar);
    CHECK(kernels::dot(a, b) == want);
    if (kernels::level_supported(kernels::Level::avx2)) {
      kernels::force_level(kernels::Level::avx2);
      CHECK(kernels::dot(a, b) == want);
    }
  }
}

TEST_CASE("axpy and scale agree across levels bit for bit") {
  if (!kernels::level_supported(kernels::Level::avx2)) return;
  Rng rng(7);
  LevelGuard guard;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.index(70));
    auto x = random_vec(rng, n);
    auto y = random_vec(rng, n);
    double f = rng.uniform(-2.0, 2.0);

    auto y_scalar = y;
    kernels::force_level(kernels::Level::scalar);
    kernels::axpy(f, x, y_scalar);
    auto y_avx = y;
    kernels::force_level(kernels::Level::avx2);
    kernels::axpy(f, x, y_avx);
    CHECK(bitwise_equal(y_scalar, y_avx));

    auto s_scalar = x;
    kernels::force_level(kernels::Level::scalar);
    kernels::scale(s_scalar, f);
    auto s_avx = x;
    kernels::force_level(kernels::Level::avx2);
    kernels::scale(s_avx, f);
    CHECK(bitwise_equal(s_scalar, s_avx));
  }
}

TEST_CASE("forcing an unsupported level falls back to scalar") {
  LevelGuard guard;
  kernels::force_level(kernels::Level::avx2);
  if (!kernels::level_supported(kernels::Level::avx2))
    CHECK(kernels::active_level() == kernels::Level::scalar);
  else
    CHECK(kernels::active_level() == kernels::Level::avx2);
  kernels::force_level(kernels::Level::scalar);
  CHECK(kernels::active_level() == kernels::Level::scalar);
  CHECK(kernels::level_name(kernels::active_level()) == "scalar");
}
