#pragma once

// Brute-force reference for tiny linear programs, independent of the simplex
// engine: enumerate every candidate vertex as the solution of n tight
// constraints, keep the feasible ones, take the best objective. Exact for
// box-bounded programs (the feasible set is a polytope, so the optimum sits
// at a vertex); unbounded programs are out of scope here.
//
// Deliberately shares no code with the library solver: its own Gaussian
// elimination, its own feasibility check.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "choquet/lp.hpp"

namespace oracle {

struct Result {
  bool feasible = false;
  double value = 0.0;
  std::vector<double> x;
};

namespace detail {

// Solves the square system a x = b by partial-pivot elimination; nullopt when
// the matrix is singular at the tolerance.
inline std::optional<std::vector<double>> gauss(std::vector<std::vector<double>> a,
                                                std::vector<double> b, double eps) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[best][col])) best = r;
    if (std::fabs(a[best][col]) <= eps) return std::nullopt;
    std::swap(a[col], a[best]);
    std::swap(b[col], b[best]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace detail

// Requires every variable box-bounded (finite lower and upper after the
// LinearProgram defaults are applied) and n small; cost grows as C(rows, n).
inline Result solve_box_bounded(const choquet::lp::LinearProgram& p, double feas_eps = 1e-7) {
  std::size_t n = p.objective.size();
  std::vector<double> lower = p.lower.empty() ? std::vector<double>(n, 0.0) : p.lower;
  std::vector<double> upper = p.upper;

  // Pool of constraints as rows (a, b, is_eq) meaning a.x = b or a.x <= b.
  struct Row {
    std::vector<double> a;
    double b;
    bool eq;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < p.eq_a.size(); ++i) rows.push_back({p.eq_a[i], p.eq_b[i], true});
  for (std::size_t i = 0; i < p.le_a.size(); ++i) rows.push_back({p.le_a[i], p.le_b[i], false});
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> a(n, 0.0);
    a[j] = -1.0;
    rows.push_back({a, -lower[j], false});
    a[j] = 1.0;
    rows.push_back({a, upper[j], false});
  }

  auto feasible = [&](const std::vector<double>& x) {
    for (const Row& r : rows) {
      double v = -r.b;
      for (std::size_t j = 0; j < n; ++j) v += r.a[j] * x[j];
      if (r.eq ? std::fabs(v) > feas_eps : v > feas_eps) return false;
    }
    return true;
  };

  Result best;
  double sign = p.sense == choquet::lp::Sense::maximize ? 1.0 : -1.0;
  // Enumerate all n-subsets of the row pool as candidate tight sets.
  auto consider = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t i : idx) {
      a.push_back(rows[i].a);
      b.push_back(rows[i].b);
    }
    auto x = detail::gauss(std::move(a), std::move(b), 1e-9);
    if (!x || !feasible(*x)) return;
    double v = 0.0;
    for (std::size_t j = 0; j < n; ++j) v += p.objective[j] * (*x)[j];
    if (!best.feasible || sign * v > sign * best.value) {
      best.feasible = true;
      best.value = v;
      best.x = *x;
    }
  };
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == n) {
      consider(idx);
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  if (n > 0) rec(rec, 0);
  return best;
}

}  // namespace oracle
