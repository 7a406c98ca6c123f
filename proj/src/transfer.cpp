#include "choquet/transfer.hpp"

#include <cmath>
#include <limits>

#include "choquet/errors.hpp"
#include "choquet/kernels.hpp"
#include "choquet/tolerances.hpp"

namespace choquet {

DFunction::DFunction(std::shared_ptr<const Space> space,
                     std::map<std::string, std::vector<Vec>> pieces)
    : space_(std::move(space)), pieces_(std::move(pieces)) {
  if (!space_) throw Error(Errc::malformed_input, "test function without a space");
  for (const auto& [label, list] : pieces_)
    for (const Vec& g : list)
      if (static_cast<int>(g.size()) != space_->dim())
        throw Error(Errc::dimension_mismatch, "piece at \"" + label + "\"");
}

double DFunction::operator()(const std::string& label, const Vec& xstar) const {
  auto it = pieces_.find(label);
  if (it == pieces_.end() || it->second.empty())
    throw Error(Errc::missing_pieces, "no pieces at \"" + label + "\"");
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& g : it->second) best = std::min(best, kernels::dot(xstar, g));
  return best;
}

VectorMeasure hustad(const AtomicMeasure& nu) {
  std::map<std::string, Vec> entries;
  for (const Atom& a : nu.atoms()) {
    auto it = entries.try_emplace(a.label, Vec(nu.space()->dim(), 0.0)).first;
    for (int k = 0; k < nu.space()->dim(); ++k) it->second[k] += a.weight * a.xstar[k];
  }
  return VectorMeasure(nu.space(), std::move(entries));
}

DensityFunction density_h(const AtomicMeasure& nu) {
  DisintegrationKernel k = disintegrate(nu);
  DensityFunction d;
  for (const auto& label : k.labels()) {
    d.h[label] = barycenter(k.kernel(label));
    d.sigma[label] = k.sigma(label);
  }
  return d;
}

std::map<std::string, double> variation_density(const AtomicMeasure& nu) {
  DensityFunction d = density_h(nu);
  std::map<std::string, double> out;
  for (const auto& [label, h] : d.h) out[label] = dual_norm(*nu.space(), h);
  return out;
}

AtomicMeasure tilde(const AtomicMeasure& nu) {
  DensityFunction d = density_h(nu);
  std::vector<Atom> atoms;
  for (const auto& [label, h] : d.h) {
    double n = dual_norm(*nu.space(), h);
    if (n <= tol::geo()) continue;  // zero-density label dropped
    Vec unit(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) unit[k] = h[k] / n;
    atoms.push_back({label, std::move(unit), n * d.sigma.at(label)});
  }
  return AtomicMeasure(nu.space(), std::move(atoms));
}

AtomicMeasure transfer_K(const VectorMeasure& mu) {
  std::vector<Atom> atoms;
  for (const auto& [label, v] : mu.entries()) {
    double n = dual_norm(*mu.space(), v);
    if (n <= tol::geo()) continue;
    Vec unit(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) unit[k] = v[k] / n;
    atoms.push_back({label, std::move(unit), n});
  }
  return AtomicMeasure(mu.space(), std::move(atoms));
}

bool is_in_N(const AtomicMeasure& nu, const VectorMeasure& mu) {
  if (!same_space(*nu.space(), *mu.space()))
    throw Error(Errc::dimension_mismatch, "measures over different spaces");
  if (!nu.positive()) return false;
  VectorMeasure image = hustad(nu);
  double eps = tol::geo();
  for (const auto& [label, v] : mu.entries()) {
    Vec w = image.at(label);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (std::fabs(v[k] - w[k]) > eps) return false;
  }
  for (const auto& [label, w] : image.entries()) {
    Vec v = mu.at(label);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (std::fabs(v[k] - w[k]) > eps) return false;
  }
  return std::fabs(mass(nu) - total_variation(mu)) <= eps;
}

double eval_pf(const DFunction& f, const VectorMeasure& mu) {
  AtomicMeasure k = transfer_K(mu);
  return integrate(k, [&f](const std::string& label, const Vec& xstar) {
    return f(label, xstar);
  });
}

}  // namespace choquet
