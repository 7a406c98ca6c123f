#include "choquet/linalg.hpp"

#include <cmath>
#include <cstddef>

namespace choquet::linalg {

namespace {

// Reduces a in place to row echelon form; returns pivot column per pivot row.
std::vector<int> echelon(Mat& a, int cols, double eps) {
  std::vector<int> pivot_cols;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < a.size(); ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < a.size(); ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[best][col])) best = r;
    if (std::fabs(a[best][col]) <= eps) continue;
    std::swap(a[row], a[best]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row) continue;
      double f = a[r][col] / a[row][col];
      if (f == 0.0) continue;
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
      a[r][col] = 0.0;
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(Mat a, double eps) {
  if (a.empty()) return 0;
  int cols = static_cast<int>(a[0].size());
  return static_cast<int>(echelon(a, cols, eps).size());
}

int affine_dim(const std::vector<Vec>& pts, double eps) {
  if (pts.empty()) return -1;
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec d(pts[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return rank(std::move(diffs), eps);
}

std::optional<Vec> solve(Mat a, Vec b, double eps) {
  std::size_t n = a.size();
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
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<Vec> solve_unique(Mat a, Vec b, double eps) {
  if (a.empty() || a.size() < a[0].size()) return std::nullopt;
  int cols = static_cast<int>(a[0].size());
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  std::vector<int> pivot_cols = echelon(a, cols + 1, eps);
  // A pivot in the augmented column means the system is inconsistent.
  if (!pivot_cols.empty() && pivot_cols.back() == cols) return std::nullopt;
  if (static_cast<int>(pivot_cols.size()) < cols) return std::nullopt;
  Vec x(cols);
  for (int i = 0; i < cols; ++i) x[pivot_cols[i]] = a[i][cols] / a[i][pivot_cols[i]];
  return x;
}

std::optional<Vec> nullvector(Mat a, int cols, double eps) {
  std::vector<int> pivot_cols = echelon(a, cols, eps);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) { free_col = c; break; }
  if (free_col < 0) return std::nullopt;

  Vec v(cols, 0.0);
  v[free_col] = 1.0;
  for (int i = static_cast<int>(pivot_cols.size()) - 1; i >= 0; --i) {
    int pc = pivot_cols[i];
    v[pc] = -a[i][free_col] / a[i][pc];
  }
  double nrm = norm2(v);
  if (nrm <= eps) return std::nullopt;
  for (double& x : v) x /= nrm;
  for (double x : v) {
    if (std::fabs(x) > eps) {
      if (x < 0)
        for (double& y : v) y = -y;
      break;
    }
  }
  return v;
}

double norm2(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace choquet::linalg
