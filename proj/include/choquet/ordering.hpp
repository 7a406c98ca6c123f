#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "choquet/measures.hpp"
#include "choquet/transfer.hpp"

namespace choquet {

// f(x*) = max_j (<x*, a_j> + c_j): convex piecewise-linear test function,
// sublinear exactly when every offset is zero.
struct ConvexPL {
  struct Piece {
    Vec a;
    double c = 0.0;
  };
  std::vector<Piece> pieces;

  bool sublinear() const;
  double operator()(const Vec& xstar) const;
};

double integrate_pl(const ProbabilityAtoms& p, const ConvexPL& f);

// Dilation certificate for p preceding q: pi spreads each source atom into a
// sub-probability on the target atoms, with row sums = source weights,
// column sums = target weights, and row barycenters fixed at the sources.
struct DilationWitness {
  std::vector<WeightedPoint> source;
  std::vector<WeightedPoint> target;
  Mat pi;
};

struct ChoquetVerdict {
  bool holds = false;
  bool barycenter_mismatch = false;
  std::optional<DilationWitness> witness;   // present when holds
  std::optional<ConvexPL> falsifier;        // certificate-derived when the LP refutes
};

// Choquet order on dual-ball probabilities, decided by the dilation LP.
// A refutation carries a convex PL function with a strictly larger integral
// against p than against q, built from the infeasibility certificate.
ChoquetVerdict choquet_leq(const ProbabilityAtoms& p, const ProbabilityAtoms& q,
                           const Space& space);

// Carried by the extreme points of the dual ball: polytope case, every atom
// at a polar vertex; Euclidean case, every atom on the sphere.
bool is_maximal(const ProbabilityAtoms& p, const Space& space);

// Upper envelope of f over the dual ball at xstar: the largest f-average over
// probabilities on the extreme points with barycenter xstar. Polytope balls
// solve the decomposition LP; the Euclidean envelope is only evaluated on the
// sphere, where it equals f.
double upper_envelope_at(const ConvexPL& f, const Vec& xstar, const Space& space);

// Envelope criterion for maximality: integral of f equals the integral of its
// upper envelope for sampled convex functions, a canonical coordinate family,
// and kink functions targeted at each atom. Agrees with is_maximal.
bool mokobodzki_maximal(const ProbabilityAtoms& p, const Space& space, int samples,
                        std::uint64_t seed = 0x5eedULL);

// Deterministic dilation to an extreme-point-carried probability preceding
// nothing less than p: each non-extreme atom is split by recursive ray
// shooting toward the lowest-indexed vertex of its face. The returned measure
// is maximal, and the dilation LP re-verifies p before it.
ProbabilityAtoms maximalize(const ProbabilityAtoms& p, const Space& space);

// Fiberwise-superlinear order on the common-image class N(mu): decided as the
// reversed Choquet order fiber by fiber. Inputs whose mass exceeds the image
// variation are outside the characterization and rejected.
bool precD(const AtomicMeasure& nu1, const AtomicMeasure& nu2, const Space& space,
           std::string* diagnostic = nullptr);

// Every disintegration fiber carried by the extreme points.
bool is_minimal(const AtomicMeasure& nu, const VectorMeasure& mu);

// Maximalize every fiber; the result is minimal, precedes nu, and stays in N(mu).
AtomicMeasure minimalize(const AtomicMeasure& nu, const VectorMeasure& mu);

// All vertex-supported probabilities on the minimal face of xstar with
// barycenter exactly xstar (vertices of the decomposition polytope, by basis
// enumeration). Euclidean balls give the singleton {delta_xstar}.
std::vector<ProbabilityAtoms> fiber_decompositions(
    const std::shared_ptr<const Space>& space, const Vec& xstar, int cap,
    bool* truncated = nullptr);

struct MinimalEnumeration {
  std::vector<AtomicMeasure> measures;
  bool truncated = false;
};

// Products of per-label fiber decompositions: the extreme-carried elements of
// N(mu). Exactly one element iff the dual ball is a simplexoid.
MinimalEnumeration enumerate_minimal(const VectorMeasure& mu, int cap = 10000);

// Primal contact vector of a dual-sphere point: a primal ball point attaining
// the dual norm (argmax vertex for polytopes, the point itself for Euclidean).
Vec sphere_contact(const Space& space, const Vec& xstar);

// Sublinear function agreeing with f on the hyperplane {<z, contact> = 1}:
// pieces a_j + c_j * contact.
ConvexPL homogenize_on_face(const ConvexPL& f, const Vec& contact);

// Sampled test of the sublinear comparison on a pair with a common sphere
// barycenter: canonical families plus `samples` random sublinear functions.
// True means no sampled falsifier; the sphere ordering theorem then predicts
// choquet_leq, which the acceptance suite cross-checks.
bool sublinear_order_test(const ProbabilityAtoms& p, const ProbabilityAtoms& q,
                          const Space& space, int samples,
                          std::uint64_t seed = 0x5eedULL);

// Order induced by bounded pairings on vector measures: collapses to equality.
bool precB(const VectorMeasure& mu1, const VectorMeasure& mu2);

}  // namespace choquet
