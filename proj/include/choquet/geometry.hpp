#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "choquet/linalg.hpp"

namespace choquet {

// Supporting hyperplane {y : <normal, y> = offset} of the unit ball,
// normalized to offset 1 (possible because the ball has 0 in its interior).
// `touching` lists the ball vertices lying on the hyperplane.
struct Facet {
  Vec normal;
  double offset = 1.0;
  std::vector<int> touching;
};

struct ExtremePoints {
  bool whole_sphere = false;  // Euclidean dual ball: every sphere point
  std::vector<Vec> points;
};

class Space;

// Face of the dual unit ball. Polytope duals carry indices into
// Space::dual_vertices(); the Euclidean dual ball has singleton faces.
struct Face {
  std::shared_ptr<const Space> ambient;
  std::vector<int> vertex_indices;
  std::optional<Vec> sphere_point;
  int affine_dim = 0;
};

// Finite-dimensional real normed space described by its unit ball: either the
// convex hull of a centrally symmetric, irredundant, full-dimensional vertex
// list, or the Euclidean ball. Immutable after construction; facet and polar
// data are computed eagerly when the dimension is within the facet bound.
class Space {
 public:
  static std::shared_ptr<const Space> polytope(std::vector<Vec> vertices,
                                               int facet_dim_bound = 6);
  static std::shared_ptr<const Space> euclidean(int dim);

  int dim() const { return dim_; }
  bool is_euclidean() const { return euclidean_; }
  int facet_dim_bound() const { return facet_dim_bound_; }

  const std::vector<Vec>& vertices() const;       // primal ball vertices
  const std::vector<Facet>& facet_list() const;   // supporting hyperplanes
  const std::vector<Vec>& dual_vertices() const;  // polar vertices, sorted

  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

 private:
  Space() = default;
  int dim_ = 0;
  bool euclidean_ = false;
  int facet_dim_bound_ = 6;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  std::vector<Vec> dual_vertices_;
  bool facets_computed_ = false;
};

// Minkowski gauge of the unit ball; zero only at the origin.
double primal_norm(const Space& space, const Vec& x);
// Support function of the unit ball = norm of the dual space.
double dual_norm(const Space& space, const Vec& xstar);

ExtremePoints dual_ball_extreme_points(const Space& space);
const std::vector<Facet>& facets(const Space& space);

// Smallest face of the dual ball containing a dual sphere point.
Face minimal_face(const std::shared_ptr<const Space>& space, const Vec& xstar);
std::vector<Vec> face_points(const Space& space, const Face& face);

bool is_strictly_convex_dual(const Space& space);
bool is_simplexoid_dual(const Space& space);

bool same_space(const Space& a, const Space& b);

}  // namespace choquet
