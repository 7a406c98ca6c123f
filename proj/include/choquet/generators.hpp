#pragma once

#include <memory>
#include <string>
#include <vector>

#include "choquet/ordering.hpp"
#include "choquet/rng.hpp"

// Deterministic random instances for property tests and verification suites.
// Everything is a pure function of the Rng state; replaying a seed replays
// the corpus.
namespace choquet::gen {

// Primal ball conv{+-e_k}; the dual ball is the cube [-1,1]^dim.
std::shared_ptr<const Space> cube_dual_space(int dim);

// Primal ball [-1,1]^dim; the dual ball is conv{+-e_k}, a simplexoid.
std::shared_ptr<const Space> cross_dual_space(int dim);

// Centrally symmetric polygon with 2..4 vertex pairs, angular separation
// at least 0.25 rad, radii in [0.6, 1.4].
std::shared_ptr<const Space> random_polygon_space(Rng& rng);

// Centrally symmetric polytope in the given dimension (3 or 4) built from
// well-separated random directions.
std::shared_ptr<const Space> random_polytope_space(Rng& rng, int dim);

// Mixed corpus: polygons, 3d/4d polytopes, cube and cross duals, and (unless
// polytope_only) Euclidean balls.
std::shared_ptr<const Space> random_space(Rng& rng, bool polytope_only = false);

std::vector<std::string> default_labels(int n);  // "t1", "t2", ...

// Entries with dual norm in [0.3, 1.5] on the first `labels` default labels.
VectorMeasure random_vector_measure(Rng& rng, std::shared_ptr<const Space> space,
                                    int labels);

// 1..3 atoms, each either exactly extreme or of dual norm at most 0.9, with
// weights at least 1/6. The margins keep envelope tests decisively one-sided.
ProbabilityAtoms random_probability(Rng& rng, std::shared_ptr<const Space> space);

// Probability carried by the extreme points of the dual ball.
ProbabilityAtoms random_extreme_probability(Rng& rng,
                                            std::shared_ptr<const Space> space);

// Random element of the common-image class of mu: per label a random mixture
// of the canonical sphere atom with extreme decompositions of the fiber.
AtomicMeasure random_in_image_class(Rng& rng, const VectorMeasure& mu);

// Random probability with barycenter exactly the dual sphere point b,
// mixing delta_b with extreme decompositions. Euclidean balls force delta_b.
ProbabilityAtoms random_fixed_barycenter(Rng& rng,
                                         std::shared_ptr<const Space> space,
                                         const Vec& b);

Vec random_sphere_point(Rng& rng, const Space& space);  // dual sphere

ConvexPL random_convex_pl(Rng& rng, int dim, bool sublinear);

// 1..3 linear pieces per label.
DFunction random_dfunction(Rng& rng, std::shared_ptr<const Space> space,
                           const std::vector<std::string>& labels);

}  // namespace choquet::gen
