#include "choquet/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

#include "choquet/errors.hpp"
#include "choquet/kernels.hpp"
#include "choquet/tolerances.hpp"

namespace choquet::lp {

namespace {

// Pivot admission is absolute and relative to the row scale: rank-deficient
// systems turn redundant rows into pure roundoff, and a pivot on such an
// entry multiplies the whole tableau by its reciprocal.
constexpr double kPivotEps = 1e-7;
constexpr double kPivotRel = 1e-7;
constexpr double kRedCostEps = 1e-10;
constexpr int kMaxIters = 200000;

bool finite(double x) { return std::isfinite(x); }

// Internal standard form: min cost.z over z >= 0 with rows [eq; le; bounds].
struct Standard {
  int n = 0;
  Mat rows;
  Vec rhs;
  std::vector<bool> is_eq;
  Vec cost;      // internal min-sense structural costs
  Vec lower;     // shift applied to recover x = z + lower
  int n_eq = 0;
  int n_le = 0;  // le rows including bound rows
};

Standard build(const LinearProgram& p, bool need_objective) {
  Standard s;
  std::size_t n = p.objective.size();
  if (n == 0 && !p.eq_a.empty()) n = p.eq_a[0].size();
  if (n == 0 && !p.le_a.empty()) n = p.le_a[0].size();
  if (n == 0) n = std::max(p.lower.size(), p.upper.size());
  if (n == 0) throw Error(Errc::lp_malformed, "no variables");
  if (need_objective && p.objective.size() != n)
    throw Error(Errc::lp_malformed, "objective size mismatch");
  s.n = static_cast<int>(n);

  s.lower = p.lower.empty() ? Vec(n, 0.0) : p.lower;
  Vec upper = p.upper.empty() ? Vec(n, kInf) : p.upper;
  if (s.lower.size() != n || upper.size() != n)
    throw Error(Errc::lp_malformed, "bound size mismatch");
  for (double v : s.lower)
    if (!finite(v)) throw Error(Errc::lp_malformed, "lower bound not finite");
  for (double v : upper)
    if (std::isnan(v) || v == -kInf) throw Error(Errc::lp_malformed, "bad upper bound");
  for (double v : p.objective)
    if (!finite(v)) throw Error(Errc::lp_malformed, "objective not finite");

  if (p.eq_a.size() != p.eq_b.size() || p.le_a.size() != p.le_b.size())
    throw Error(Errc::lp_malformed, "constraint row/rhs count mismatch");

  auto add_row = [&](const Vec& row, double b, bool eq) {
    if (row.size() != n) throw Error(Errc::lp_malformed, "constraint width mismatch");
    for (double v : row)
      if (!finite(v)) throw Error(Errc::lp_malformed, "constraint not finite");
    if (!finite(b)) throw Error(Errc::lp_malformed, "rhs not finite");
    double shifted = b - kernels::dot(row, s.lower);
    s.rows.push_back(row);
    s.rhs.push_back(shifted);
    s.is_eq.push_back(eq);
  };

  for (std::size_t i = 0; i < p.eq_a.size(); ++i) add_row(p.eq_a[i], p.eq_b[i], true);
  s.n_eq = static_cast<int>(p.eq_a.size());
  for (std::size_t i = 0; i < p.le_a.size(); ++i) add_row(p.le_a[i], p.le_b[i], false);
  for (std::size_t j = 0; j < n; ++j) {
    if (upper[j] == kInf) continue;
    Vec row(n, 0.0);
    row[j] = 1.0;
    add_row(row, upper[j], false);
  }
  s.n_le = static_cast<int>(s.rows.size()) - s.n_eq;

  s.cost = p.objective.empty() ? Vec(n, 0.0) : p.objective;
  if (p.sense == Sense::maximize)
    for (double& c : s.cost) c = -c;
  return s;
}

// Structurally dependent equality rows (dilation systems carry several by
// construction) degrade into all-roundoff tableau rows whose entries poison
// the pivot choice, so they are eliminated before the tableau exists. A
// dependent row with a matching right-hand side is deleted and keeps a zero
// dual; a mismatched one is an inconsistency, certified by the elimination
// multipliers themselves.
struct Reduction {
  std::vector<int> orig_of;  // surviving row -> original row index
  Vec farkas;                // nonempty: dependency with inconsistent rhs
};

Reduction reduce_eq_rows(Standard& s) {
  Reduction red;
  int total = static_cast<int>(s.rows.size());
  struct PivotRow {
    Vec w;
    double wb = 0.0;
    Vec mult;
    int col = -1;
  };
  std::vector<PivotRow> pivots;
  std::vector<bool> drop(s.n_eq, false);

  for (int r = 0; r < s.n_eq; ++r) {
    Vec w = s.rows[r];
    double wb = s.rhs[r];
    Vec mult(s.n_eq, 0.0);
    mult[r] = 1.0;
    for (const PivotRow& p : pivots) {
      double f = w[p.col] / p.w[p.col];
      if (f == 0.0) continue;
      for (int j = 0; j < s.n; ++j) w[j] -= f * p.w[j];
      w[p.col] = 0.0;
      wb -= f * p.wb;
      for (int t = 0; t < s.n_eq; ++t) mult[t] -= f * p.mult[t];
    }

    int col = -1;
    double wmax = 0.0;
    for (int j = 0; j < s.n; ++j)
      if (std::fabs(w[j]) > wmax) {
        wmax = std::fabs(w[j]);
        col = j;
      }
    // Forward-error scales of the combination that produced w and wb.
    double amag = 0.0, bmag = 0.0;
    for (int t = 0; t <= r; ++t) {
      if (mult[t] == 0.0) continue;
      double rscale = 0.0;
      for (double v : s.rows[t]) rscale = std::max(rscale, std::fabs(v));
      amag += std::fabs(mult[t]) * rscale;
      bmag += std::fabs(mult[t]) * std::fabs(s.rhs[t]);
    }
    if (wmax > 1e-9 * std::max(1.0, amag)) {
      pivots.push_back({std::move(w), wb, std::move(mult), col});
      continue;
    }
    if (std::fabs(wb) <= 1e-7 * std::max(1.0, bmag)) {
      drop[r] = true;
      continue;
    }
    double sign = wb > 0.0 ? 1.0 : -1.0;
    Vec y(total, 0.0);
    double norm = 0.0;
    for (int t = 0; t < s.n_eq; ++t) norm = std::max(norm, std::fabs(mult[t]));
    for (int t = 0; t < s.n_eq; ++t) y[t] = sign * mult[t] / norm;
    red.farkas = std::move(y);
    return red;
  }

  int old_eq = s.n_eq;
  int kept = 0;
  for (int r = 0; r < old_eq; ++r) {
    if (drop[r]) continue;
    if (kept != r) {
      s.rows[kept] = std::move(s.rows[r]);
      s.rhs[kept] = s.rhs[r];
    }
    red.orig_of.push_back(r);
    ++kept;
  }
  for (int r = old_eq; r < total; ++r) {
    if (kept != r) {
      s.rows[kept] = std::move(s.rows[r]);
      s.rhs[kept] = s.rhs[r];
    }
    red.orig_of.push_back(r);
    ++kept;
  }
  s.rows.resize(kept);
  s.rhs.resize(kept);
  s.is_eq.assign(kept, false);
  s.n_eq = kept - s.n_le;
  for (int r = 0; r < s.n_eq; ++r) s.is_eq[r] = true;
  return red;
}

// Spread quantities computed on the reduced rows back over the original
// row indices; deleted rows stay zero.
Vec remap_rows(const Vec& v, const std::vector<int>& orig_of, int total) {
  Vec full(total, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) full[orig_of[i]] = v[i];
  return full;
}

struct Tableau {
  // column layout: [0,n) structural, [n,n+n_le) slacks, [n+n_le,n+n_le+m)
  // artificials, then rhs
  int m = 0, n = 0, n_le = 0, ncols = 0;
  Mat t;
  Vec cost;  // ncols+1; last entry = -objective
  std::vector<int> basis;
  std::vector<bool> flipped;
  std::vector<bool> enterable;
  std::vector<int> alive;  // original row index per current row

  int slack_col(int le_index) const { return n + le_index; }
  int art_col(int row) const { return n + n_le + row; }

  // Largest real (structural or slack) coefficient of row r.
  double row_scale(int r) const {
    double s = 0.0;
    for (int j = 0; j < n + n_le; ++j) s = std::max(s, std::fabs(t[r][j]));
    return s;
  }

  void pivot(int r, int c) {
    Vec& row = t[r];
    double pv = row[c];
    kernels::scale(std::span<double>(row.data(), row.size()), 1.0 / pv);
    row[c] = 1.0;
    std::span<const double> prow(row.data(), row.size());
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = t[i][c];
      if (f == 0.0) continue;
      kernels::axpy(-f, prow, std::span<double>(t[i].data(), t[i].size()));
      t[i][c] = 0.0;
    }
    double f = cost[c];
    if (f != 0.0) {
      kernels::axpy(-f, prow, std::span<double>(cost.data(), cost.size()));
      cost[c] = 0.0;
    }
    basis[r] = c;
  }

  // Entering: lowest eligible index with negative reduced cost (Bland).
  // Leaving: minimum ratio; ties go to the largest pivot, because degenerate
  // vertices tie dozens of rows at ratio zero and a small pivot there scales
  // its row by the reciprocal. The pivot-size tie-break forfeits Bland's
  // anti-cycling guarantee, so the iteration cap backstops termination.
  enum class Step { moved, optimal, unbounded };
  Step step() {
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (!enterable[j]) continue;
      if (cost[j] < -kRedCostEps) { enter = j; break; }
    }
    if (enter < 0) return Step::optimal;
    // The strict pass refuses pivots that are roundoff relative to their row,
    // since those amplify the tableau. Degenerate bases can leave no strict
    // candidate at all; then any entry above the absolute floor is better
    // than a false unbounded verdict, and verify_solution has the last word.
    int leave = -1;
    for (int strict = 1; strict >= 0 && leave < 0; --strict) {
      double best = 0.0, best_a = 0.0;
      for (int r = 0; r < m; ++r) {
        double a = t[r][enter];
        if (a <= kPivotEps) continue;
        if (strict && a <= kPivotRel * row_scale(r)) continue;
        double ratio = std::max(t[r][ncols], 0.0) / a;
        double window = 1e-12 * (1.0 + std::fabs(best));
        if (leave < 0 || ratio < best - window ||
            (ratio <= best + window && a > best_a)) {
          if (leave < 0 || ratio < best) best = ratio;
          best_a = a;
          leave = r;
        }
      }
    }
    if (leave < 0) return Step::unbounded;
    int leaving_col = basis[leave];
    pivot(leave, enter);
    if (leaving_col >= n + n_le) enterable[leaving_col] = false;  // artificial never returns
    return Step::moved;
  }

  Step run() {
    for (int it = 0; it < kMaxIters; ++it) {
      Step s = step();
      if (s != Step::moved) return s;
    }
    throw Error(Errc::numeric_failure, "simplex iteration limit");
  }
};

Tableau make_tableau(const Standard& s) {
  Tableau tb;
  tb.m = static_cast<int>(s.rows.size());
  tb.n = s.n;
  tb.n_le = s.n_le;
  tb.ncols = tb.n + tb.n_le + tb.m;
  tb.t.assign(tb.m, Vec(tb.ncols + 1, 0.0));
  tb.basis.assign(tb.m, -1);
  tb.flipped.assign(tb.m, false);
  tb.enterable.assign(tb.ncols, true);
  tb.alive.resize(tb.m);
  for (int r = 0; r < tb.m; ++r) tb.alive[r] = r;

  int le_seen = 0;
  for (int r = 0; r < tb.m; ++r) {
    for (int j = 0; j < tb.n; ++j) tb.t[r][j] = s.rows[r][j];
    double b = s.rhs[r];
    int sc = -1;
    if (!s.is_eq[r]) {
      sc = tb.slack_col(le_seen++);
      tb.t[r][sc] = 1.0;
    }
    if (b < 0) {
      tb.flipped[r] = true;
      for (int j = 0; j <= tb.ncols; ++j) tb.t[r][j] = -tb.t[r][j];
      b = -b;
    }
    tb.t[r][tb.ncols] = b;
    tb.t[r][tb.art_col(r)] = 1.0;
    if (sc >= 0 && !tb.flipped[r]) {
      tb.basis[r] = sc;
    } else {
      tb.basis[r] = tb.art_col(r);
    }
  }
  // artificials may leave the basis but never enter it
  for (int r = 0; r < tb.m; ++r) tb.enterable[tb.art_col(r)] = false;
  return tb;
}

void load_phase1_cost(Tableau& tb) {
  tb.cost.assign(tb.ncols + 1, 0.0);
  for (int r = 0; r < tb.m; ++r) tb.cost[tb.art_col(r)] = 1.0;
  for (int r = 0; r < tb.m; ++r) {
    if (tb.basis[r] < tb.n + tb.n_le) continue;  // slack basic
    for (int j = 0; j <= tb.ncols; ++j) tb.cost[j] -= tb.t[r][j];
  }
}

void load_phase2_cost(Tableau& tb, const Standard& s) {
  tb.cost.assign(tb.ncols + 1, 0.0);
  for (int j = 0; j < tb.n; ++j) tb.cost[j] = s.cost[j];
  for (int r = 0; r < tb.m; ++r) {
    int b = tb.basis[r];
    double cb = (b < tb.n) ? s.cost[b] : 0.0;
    if (cb == 0.0) continue;
    for (int j = 0; j <= tb.ncols; ++j) tb.cost[j] -= cb * tb.t[r][j];
  }
  for (int j = tb.n + tb.n_le; j < tb.ncols; ++j) tb.enterable[j] = false;
}

// Removes basic artificials after a feasible phase 1: pivot them onto a real
// column where possible, delete the (redundant) row otherwise.
void drive_out_artificials(Tableau& tb) {
  for (int r = 0; r < tb.m;) {
    if (tb.basis[r] < tb.n + tb.n_le) { ++r; continue; }
    double floor = std::max(kPivotEps, kPivotRel * tb.row_scale(r));
    int c = -1;
    for (int j = 0; j < tb.n + tb.n_le; ++j) {
      if (std::fabs(tb.t[r][j]) > floor) { c = j; break; }
    }
    if (c >= 0) {
      tb.pivot(r, c);
      ++r;
    } else {
      tb.t.erase(tb.t.begin() + r);
      tb.basis.erase(tb.basis.begin() + r);
      tb.flipped.erase(tb.flipped.begin() + r);
      tb.alive.erase(tb.alive.begin() + r);
      --tb.m;
    }
  }
}

Vec read_solution(const Tableau& tb, const Standard& s) {
  Vec z(tb.n, 0.0);
  for (int r = 0; r < tb.m; ++r) {
    if (tb.basis[r] < tb.n) z[tb.basis[r]] = tb.t[r][tb.ncols];
  }
  for (int j = 0; j < tb.n; ++j) z[j] += s.lower[j];
  return z;
}

// Numerical backstop: if the pivot chain degraded the tableau, the claimed
// solution stops satisfying the original rows. Fail loudly over returning it.
void verify_solution(const Tableau& tb, const Standard& s) {
  Vec z(tb.n, 0.0);
  for (int r = 0; r < tb.m; ++r)
    if (tb.basis[r] < tb.n) z[tb.basis[r]] = tb.t[r][tb.ncols];
  double scale = 1.0;
  for (double b : s.rhs) scale = std::max(scale, std::fabs(b));
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    double v = kernels::dot(s.rows[r], z) - s.rhs[r];
    double viol = s.is_eq[r] ? std::fabs(v) : std::max(v, 0.0);
    if (viol > 1e-7 * scale)
      throw Error(Errc::numeric_failure, "solver lost feasibility");
  }
}

Vec extract_farkas(const Tableau& tb, int total_rows) {
  Vec y(total_rows, 0.0);
  for (int r = 0; r < tb.m; ++r) {
    double yr = 1.0 - tb.cost[tb.art_col(r)];
    y[tb.alive[r]] = tb.flipped[r] ? -yr : yr;
  }
  return y;
}

// Dual multipliers read off the artificial columns of the optimal cost row:
// the artificial of original row i has reduced cost -y_i, exactly, with no
// extra solve. Deleted redundant rows keep multiplier zero.
Vec extract_duals(const Tableau& tb, const Standard& s, bool maximize) {
  Vec full(s.rows.size(), 0.0);
  for (int r = 0; r < tb.m; ++r) {
    int orig = tb.alive[r];
    double yr = -tb.cost[tb.n + tb.n_le + orig];
    full[orig] = tb.flipped[r] ? -yr : yr;
  }
  if (maximize)
    for (double& v : full) v = -v;
  return full;
}

}  // namespace

Outcome solve(const LinearProgram& prog) {
  Standard s = build(prog, true);
  const Standard full = s;
  Reduction red = reduce_eq_rows(s);
  int total = static_cast<int>(full.rows.size());
  Outcome out;
  if (!red.farkas.empty()) {
    out.status = Status::infeasible;
    out.farkas = std::move(red.farkas);
    return out;
  }
  Tableau tb = make_tableau(s);

  load_phase1_cost(tb);
  if (tb.run() == Tableau::Step::unbounded)
    throw Error(Errc::numeric_failure, "phase 1 unbounded");
  double infeas = -tb.cost[tb.ncols];
  if (infeas > tol::lp) {
    out.status = Status::infeasible;
    out.farkas = remap_rows(extract_farkas(tb, static_cast<int>(s.rows.size())),
                            red.orig_of, total);
    return out;
  }

  drive_out_artificials(tb);
  load_phase2_cost(tb, s);
  Tableau::Step st = tb.run();
  if (st == Tableau::Step::unbounded) {
    out.status = Status::unbounded;
    return out;
  }
  out.status = Status::optimal;
  verify_solution(tb, full);
  out.x = read_solution(tb, s);
  out.value = prog.objective.empty() ? 0.0 : kernels::dot(prog.objective, out.x);
  out.dual = remap_rows(extract_duals(tb, s, prog.sense == Sense::maximize),
                        red.orig_of, total);
  return out;
}

std::optional<Vec> feasible_point(const LinearProgram& prog) {
  Standard s = build(prog, false);
  const Standard full = s;
  Reduction red = reduce_eq_rows(s);
  if (!red.farkas.empty()) return std::nullopt;
  Tableau tb = make_tableau(s);
  load_phase1_cost(tb);
  if (tb.run() == Tableau::Step::unbounded)
    throw Error(Errc::numeric_failure, "phase 1 unbounded");
  if (-tb.cost[tb.ncols] > tol::lp) return std::nullopt;
  verify_solution(tb, full);
  return read_solution(tb, s);
}

}  // namespace choquet::lp
