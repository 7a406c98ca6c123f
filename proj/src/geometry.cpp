#include "choquet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "choquet/errors.hpp"
#include "choquet/kernels.hpp"
#include "choquet/lp.hpp"
#include "choquet/tolerances.hpp"

namespace choquet {

namespace {

bool vec_close(const Vec& a, const Vec& b, double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > eps) return false;
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

// Visits all k-subsets of {0..n-1}.
template <typename F>
void for_each_combination(int n, int k, F&& fn) {
  if (k > n || k <= 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void validate_polytope(const std::vector<Vec>& verts, int dim) {
  double eps = tol::geo();
  for (const Vec& v : verts) {
    if (static_cast<int>(v.size()) != dim)
      throw Error(Errc::invalid_ball, "vertex dimension mismatch");
    for (double x : v)
      if (!std::isfinite(x)) throw Error(Errc::invalid_ball, "vertex not finite");
  }
  for (const Vec& v : verts) {
    if (linalg::norm2(v) <= eps) throw Error(Errc::invalid_ball, "zero vertex");
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (vec_close(verts[i], verts[j], eps))
        throw Error(Errc::invalid_ball, "duplicate vertex " + std::to_string(j));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Vec neg(verts[i].size());
    for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -verts[i][k];
    bool found = false;
    for (const Vec& w : verts)
      if (vec_close(w, neg, eps)) { found = true; break; }
    if (!found)
      throw Error(Errc::invalid_ball, "not centrally symmetric at vertex " + std::to_string(i));
  }
  {
    Mat m(verts.begin(), verts.end());
    if (linalg::rank(std::move(m)) != dim)
      throw Error(Errc::invalid_ball, "vertices do not span the space");
  }
  // Irredundancy: no vertex lies in the hull of the others.
  for (std::size_t i = 0; i < verts.size(); ++i) {
    lp::LinearProgram feas;
    int others = static_cast<int>(verts.size()) - 1;
    feas.eq_a.assign(dim + 1, Vec(others, 0.0));
    feas.eq_b.assign(dim + 1, 0.0);
    int col = 0;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j == i) continue;
      for (int k = 0; k < dim; ++k) feas.eq_a[k][col] = verts[j][k];
      feas.eq_a[dim][col] = 1.0;
      ++col;
    }
    for (int k = 0; k < dim; ++k) feas.eq_b[k] = verts[i][k];
    feas.eq_b[dim] = 1.0;
    feas.objective.assign(others, 0.0);
    if (lp::feasible_point(feas))
      throw Error(Errc::invalid_ball, "redundant vertex " + std::to_string(i));
  }
}

// Brute force over dim-subsets: an affinely independent subset spanning a
// supporting hyperplane determines a facet.
std::vector<Facet> enumerate_facets(const std::vector<Vec>& verts, int dim) {
  std::vector<Facet> out;
  int n = static_cast<int>(verts.size());
  for_each_combination(n, dim, [&](const std::vector<int>& idx) {
    Mat diffs;
    for (int i = 1; i < dim; ++i) {
      Vec d(dim);
      for (int k = 0; k < dim; ++k) d[k] = verts[idx[i]][k] - verts[idx[0]][k];
      diffs.push_back(std::move(d));
    }
    auto normal = linalg::nullvector(std::move(diffs), dim);
    if (!normal) return;  // affinely dependent subset or ill-conditioned
    double c = kernels::dot(*normal, verts[idx[0]]);
    if (std::fabs(c) <= 1e-9) return;  // hyperplane through the origin
    if (c < 0) {
      for (double& x : *normal) x = -x;
      c = -c;
    }
    double maxdot = c;
    for (const Vec& v : verts) maxdot = std::max(maxdot, kernels::dot(*normal, v));
    if (maxdot > c + 1e-9 * (1.0 + maxdot)) return;  // not supporting
    Facet f;
    f.normal.resize(dim);
    for (int k = 0; k < dim; ++k) f.normal[k] = tol::round_coord((*normal)[k] / c);
    f.offset = 1.0;
    for (const Facet& g : out)
      if (vec_close(g.normal, f.normal, 1e-8)) return;  // already recorded
    for (int j = 0; j < n; ++j)
      if (kernels::dot(f.normal, verts[j]) >= 1.0 - 2e-9) f.touching.push_back(j);
    out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end(),
            [](const Facet& a, const Facet& b) { return lex_less(a.normal, b.normal); });
  return out;
}

}  // namespace

std::shared_ptr<const Space> Space::polytope(std::vector<Vec> vertices, int facet_dim_bound) {
  if (vertices.empty()) throw Error(Errc::invalid_ball, "empty vertex list");
  int dim = static_cast<int>(vertices[0].size());
  if (dim < 1) throw Error(Errc::invalid_ball, "dimension must be positive");
  validate_polytope(vertices, dim);

  auto sp = std::shared_ptr<Space>(new Space());
  sp->dim_ = dim;
  sp->euclidean_ = false;
  sp->facet_dim_bound_ = facet_dim_bound;
  sp->vertices_ = std::move(vertices);
  if (dim <= facet_dim_bound) {
    sp->facets_ = enumerate_facets(sp->vertices_, dim);
    sp->dual_vertices_.reserve(sp->facets_.size());
    for (const Facet& f : sp->facets_) sp->dual_vertices_.push_back(f.normal);
    std::sort(sp->dual_vertices_.begin(), sp->dual_vertices_.end(), lex_less);
    sp->facets_computed_ = true;
  }
  return sp;
}

std::shared_ptr<const Space> Space::euclidean(int dim) {
  if (dim < 1) throw Error(Errc::invalid_ball, "dimension must be positive");
  auto sp = std::shared_ptr<Space>(new Space());
  sp->dim_ = dim;
  sp->euclidean_ = true;
  return sp;
}

const std::vector<Vec>& Space::vertices() const {
  if (euclidean_) throw Error(Errc::invalid_ball, "Euclidean ball has no vertex list");
  return vertices_;
}

const std::vector<Facet>& Space::facet_list() const {
  if (euclidean_) throw Error(Errc::invalid_ball, "Euclidean ball has no facets");
  if (!facets_computed_)
    throw Error(Errc::dimension_bound,
                "facet enumeration limited to dimension <= " + std::to_string(facet_dim_bound_));
  return facets_;
}

const std::vector<Vec>& Space::dual_vertices() const {
  facet_list();  // shares the preconditions
  return dual_vertices_;
}

double primal_norm(const Space& space, const Vec& x) {
  if (static_cast<int>(x.size()) != space.dim())
    throw Error(Errc::dimension_mismatch, "primal_norm input");
  if (space.is_euclidean()) return linalg::norm2(x);
  bool zero = true;
  for (double v : x)
    if (v != 0.0) { zero = false; break; }
  if (zero) return 0.0;

  // gauge(x) = min sum(alpha) with V'alpha = x, alpha >= 0
  const auto& verts = space.vertices();
  lp::LinearProgram prog;
  int n = static_cast<int>(verts.size());
  prog.sense = lp::Sense::minimize;
  prog.objective.assign(n, 1.0);
  prog.eq_a.assign(space.dim(), Vec(n, 0.0));
  prog.eq_b = x;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < space.dim(); ++k) prog.eq_a[k][j] = verts[j][k];
  auto out = lp::solve(prog);
  if (out.status != lp::Status::optimal)
    throw Error(Errc::numeric_failure, "gauge LP did not solve");
  return out.value;
}

double dual_norm(const Space& space, const Vec& xstar) {
  if (static_cast<int>(xstar.size()) != space.dim())
    throw Error(Errc::dimension_mismatch, "dual_norm input");
  if (space.is_euclidean()) return linalg::norm2(xstar);
  double best = 0.0;
  for (const Vec& v : space.vertices()) best = std::max(best, kernels::dot(xstar, v));
  return best;
}

ExtremePoints dual_ball_extreme_points(const Space& space) {
  ExtremePoints out;
  if (space.is_euclidean()) {
    out.whole_sphere = true;
    return out;
  }
  out.points = space.dual_vertices();
  return out;
}

const std::vector<Facet>& facets(const Space& space) { return space.facet_list(); }

Face minimal_face(const std::shared_ptr<const Space>& space, const Vec& xstar) {
  double eps = tol::geo();
  double nrm = dual_norm(*space, xstar);
  if (std::fabs(nrm - 1.0) > eps)
    throw Error(Errc::not_on_sphere, "minimal_face input has dual norm " + std::to_string(nrm));
  Face face;
  face.ambient = space;
  if (space->is_euclidean()) {
    face.sphere_point = xstar;
    face.affine_dim = 0;
    return face;
  }
  // Active primal vertices pin the face; face vertices are the polar vertices
  // active on every one of them.
  const auto& verts = space->vertices();
  std::vector<int> active;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (kernels::dot(xstar, verts[i]) >= 1.0 - eps) active.push_back(static_cast<int>(i));
  const auto& duals = space->dual_vertices();
  std::vector<Vec> pts;
  for (std::size_t w = 0; w < duals.size(); ++w) {
    bool on = true;
    for (int i : active) {
      if (kernels::dot(duals[w], verts[i]) < 1.0 - eps) { on = false; break; }
    }
    if (on) {
      face.vertex_indices.push_back(static_cast<int>(w));
      pts.push_back(duals[w]);
    }
  }
  if (face.vertex_indices.empty())
    throw Error(Errc::numeric_failure, "empty minimal face");
  face.affine_dim = linalg::affine_dim(pts);
  return face;
}

std::vector<Vec> face_points(const Space& space, const Face& face) {
  if (face.sphere_point) return {*face.sphere_point};
  std::vector<Vec> pts;
  pts.reserve(face.vertex_indices.size());
  for (int i : face.vertex_indices) pts.push_back(space.dual_vertices()[i]);
  return pts;
}

bool is_strictly_convex_dual(const Space& space) {
  if (space.is_euclidean()) return true;
  return space.dim() == 1;
}

bool is_simplexoid_dual(const Space& space) {
  if (space.is_euclidean()) return true;
  // Facets of the polar are exposed by primal vertices; a facet is a simplex
  // exactly when it has dim vertices. Faces of simplices are simplices, so
  // checking facets suffices.
  const auto& duals = space.dual_vertices();
  for (const Vec& v : space.vertices()) {
    int count = 0;
    for (const Vec& w : duals)
      if (kernels::dot(w, v) >= 1.0 - tol::geo()) ++count;
    if (count != space.dim()) return false;
  }
  return true;
}

bool same_space(const Space& a, const Space& b) {
  if (&a == &b) return true;
  if (a.dim() != b.dim() || a.is_euclidean() != b.is_euclidean()) return false;
  if (a.is_euclidean()) return true;
  if (a.vertices().size() != b.vertices().size()) return false;
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.vertices().size(); ++j)
      if (vec_close(a.vertices()[i], b.vertices()[j], tol::geo())) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

}  // namespace choquet
