#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "choquet/geometry.hpp"

namespace choquet {

// Finite compact base space: nonempty ordered list of distinct point labels.
class PointSet {
 public:
  explicit PointSet(std::vector<std::string> labels);
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
};

// Finitely supported dual-vector-valued measure: label -> vector in E*.
// Labels absent from the map carry the zero vector; exact-zero entries are
// dropped at construction so two representations of the same measure have
// equal entry maps.
class VectorMeasure {
 public:
  VectorMeasure(std::shared_ptr<const Space> space, std::map<std::string, Vec> entries);
  static VectorMeasure point_mass(std::shared_ptr<const Space> space,
                                  const std::string& label, Vec xstar);

  const std::shared_ptr<const Space>& space() const { return space_; }
  const std::map<std::string, Vec>& entries() const { return entries_; }
  Vec at(const std::string& label) const;  // zero vector when absent

 private:
  std::shared_ptr<const Space> space_;
  std::map<std::string, Vec> entries_;
};

VectorMeasure add(const VectorMeasure& a, const VectorMeasure& b);
VectorMeasure scaled(const VectorMeasure& mu, double factor);

struct Atom {
  std::string label;
  Vec xstar;
  double weight = 0.0;  // negative weight marks a signed atom
};

// Finitely supported measure on K x (dual ball). Coordinates are rounded to
// the canonical grid at construction, atoms with equal (label, point) merged,
// and the list sorted by label then coordinates, so equal measures have
// bitwise-equal atom lists. Ordering operations require positive().
class AtomicMeasure {
 public:
  AtomicMeasure(std::shared_ptr<const Space> space, std::vector<Atom> atoms);

  const std::shared_ptr<const Space>& space() const { return space_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool positive() const;
  std::vector<std::string> support() const;  // distinct labels, sorted

 private:
  std::shared_ptr<const Space> space_;
  std::vector<Atom> atoms_;
};

struct WeightedPoint {
  Vec xstar;
  double weight = 0.0;
};

// Finitely supported probability on the dual ball; same canonicalization as
// AtomicMeasure. Weights must be positive and sum to 1 within tolerance.
class ProbabilityAtoms {
 public:
  ProbabilityAtoms(std::shared_ptr<const Space> space, std::vector<WeightedPoint> atoms);

  const std::shared_ptr<const Space>& space() const { return space_; }
  const std::vector<WeightedPoint>& atoms() const { return atoms_; }

 private:
  std::shared_ptr<const Space> space_;
  std::vector<WeightedPoint> atoms_;
};

// Base masses sigma(t) plus fiber probabilities. Raw per-label atom weights
// are stored unscaled, so recompose() reproduces the source measure bit for
// bit and the fiber integral can cancel the sigma factors symbolically.
class DisintegrationKernel {
 public:
  const std::vector<std::string>& labels() const { return labels_; }
  double sigma(const std::string& label) const;
  ProbabilityAtoms kernel(const std::string& label) const;
  AtomicMeasure recompose() const;
  // Integral of g against the recomposed measure via the product formula
  // sum_t sigma(t) * int g(t,.) dkernel(t), with sigma(t) * (w/sigma(t))
  // cancelled analytically; the accumulation order matches integrate().
  double product_integral(
      const std::function<double(const std::string&, const Vec&)>& g) const;

 private:
  friend DisintegrationKernel disintegrate(const AtomicMeasure& nu);
  DisintegrationKernel() = default;
  std::shared_ptr<const Space> space_;
  std::vector<std::string> labels_;  // sorted
  std::map<std::string, std::vector<WeightedPoint>> raw_;
  std::map<std::string, double> sigma_;
};

// Sum over labels of the dual norm of the entry.
double total_variation(const VectorMeasure& mu);

// sum_t <mu(t), f(t)>; f must cover every entry label.
double pair(const VectorMeasure& mu, const std::map<std::string, Vec>& f);

// Sum of weights; requires a positive measure.
double mass(const AtomicMeasure& nu);

// sum_atoms w * g(t, x*); defined for signed measures too.
double integrate(const AtomicMeasure& nu,
                 const std::function<double(const std::string&, const Vec&)>& g);

DisintegrationKernel disintegrate(const AtomicMeasure& nu);

Vec barycenter(const ProbabilityAtoms& p);

}  // namespace choquet
