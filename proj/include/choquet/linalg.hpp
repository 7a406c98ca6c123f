#pragma once

#include <optional>
#include <vector>

namespace choquet {
using Vec = std::vector<double>;
using Mat = std::vector<Vec>;
}  // namespace choquet

namespace choquet::linalg {

// Numerical rank via row echelon with partial pivoting.
int rank(Mat a, double eps = 1e-10);

// Affine dimension of a point set: rank of the difference matrix.
int affine_dim(const std::vector<Vec>& pts, double eps = 1e-10);

// Solves a square system; nullopt when the pivot falls below eps.
std::optional<Vec> solve(Mat a, Vec b, double eps = 1e-11);

// Solves a rows >= cols system with a unique solution; nullopt when the
// columns are dependent or the right-hand side is inconsistent.
std::optional<Vec> solve_unique(Mat a, Vec b, double eps = 1e-10);

// One null vector of a (possibly empty) rows x cols matrix, unit Euclidean
// norm, first nonzero component positive. nullopt when the kernel is trivial.
std::optional<Vec> nullvector(Mat a, int cols, double eps = 1e-10);

double norm2(const Vec& v);

}  // namespace choquet::linalg
