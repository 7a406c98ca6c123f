#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "choquet/measures.hpp"

namespace choquet {

// Weak* density of the induced vector measure: per label the fiber
// barycenter h(t), with the base mass sigma(t) it multiplies. Every h(t)
// stays in the dual ball.
struct DensityFunction {
  std::map<std::string, Vec> h;
  std::map<std::string, double> sigma;
};

// Fiberwise-superlinear test function f(t, x*) = min_j <x*, pieces(t)[j]>,
// given by a finite list of primal vectors per label.
class DFunction {
 public:
  DFunction(std::shared_ptr<const Space> space,
            std::map<std::string, std::vector<Vec>> pieces);

  const std::shared_ptr<const Space>& space() const { return space_; }
  const std::map<std::string, std::vector<Vec>>& pieces() const { return pieces_; }
  // min over the label's pieces; labels without pieces are an error.
  double operator()(const std::string& label, const Vec& xstar) const;

 private:
  std::shared_ptr<const Space> space_;
  std::map<std::string, std::vector<Vec>> pieces_;
};

// Adjoint of the pairing embedding: mu(t) = sum of (signed) w * x* over the
// atoms at t. Satisfies pair(hustad(nu), f) = integrate(nu, (t,x*) -> <x*, f(t)>).
VectorMeasure hustad(const AtomicMeasure& nu);

// h(t) = barycenter of the disintegration fiber at t; hustad(nu)(t) = sigma(t) h(t).
DensityFunction density_h(const AtomicMeasure& nu);

// t -> dual_norm(h(t)); scaled by sigma it gives the per-label total
// variation of hustad(nu).
std::map<std::string, double> variation_density(const AtomicMeasure& nu);

// Sphere-normalized replacement: one atom (t, h(t)/|h(t)|, |h(t)| sigma(t))
// per label, labels with |h(t)| below tolerance dropped. Preserves the
// induced vector measure and realizes its total variation as mass.
AtomicMeasure tilde(const AtomicMeasure& nu);

// Canonical transfer: one sphere atom per nonzero entry,
// (t, mu(t)/|mu(t)|, |mu(t)|). Right inverse of hustad, mass equal to the
// total variation; equals tilde(nu) for every positive nu inducing mu.
AtomicMeasure transfer_K(const VectorMeasure& mu);

// nu positive, hustad(nu) = mu entrywise, and mass(nu) = total_variation(mu),
// all within tolerance.
bool is_in_N(const AtomicMeasure& nu, const VectorMeasure& mu);

// Superlinear support value p_f(mu), evaluated through the canonical
// transfer: integrate(transfer_K(mu), f).
double eval_pf(const DFunction& f, const VectorMeasure& mu);

}  // namespace choquet
