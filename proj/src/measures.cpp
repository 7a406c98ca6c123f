#include "choquet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "choquet/errors.hpp"
#include "choquet/kernels.hpp"
#include "choquet/tolerances.hpp"

namespace choquet {

namespace {

void check_dual_vector(const Space& space, const Vec& v, const char* what) {
  if (static_cast<int>(v.size()) != space.dim())
    throw Error(Errc::dimension_mismatch, std::string(what) + " has wrong dimension");
  for (double x : v)
    if (!std::isfinite(x)) throw Error(Errc::malformed_input, std::string(what) + " not finite");
}

Vec rounded(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = tol::round_coord(v[i]);
  return r;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

PointSet::PointSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(Errc::malformed_input, "empty point set");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw Error(Errc::malformed_input, "duplicate label \"" + l + "\"");
}

bool PointSet::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

VectorMeasure::VectorMeasure(std::shared_ptr<const Space> space,
                             std::map<std::string, Vec> entries)
    : space_(std::move(space)) {
  if (!space_) throw Error(Errc::malformed_input, "vector measure without a space");
  for (auto& [label, v] : entries) {
    check_dual_vector(*space_, v, ("entry \"" + label + "\"").c_str());
    bool zero = std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    if (!zero) entries_.emplace(label, std::move(v));
  }
}

VectorMeasure VectorMeasure::point_mass(std::shared_ptr<const Space> space,
                                        const std::string& label, Vec xstar) {
  std::map<std::string, Vec> entries;
  entries.emplace(label, std::move(xstar));
  return VectorMeasure(std::move(space), std::move(entries));
}

Vec VectorMeasure::at(const std::string& label) const {
  auto it = entries_.find(label);
  if (it != entries_.end()) return it->second;
  return Vec(space_->dim(), 0.0);
}

VectorMeasure add(const VectorMeasure& a, const VectorMeasure& b) {
  if (!same_space(*a.space(), *b.space()))
    throw Error(Errc::dimension_mismatch, "adding measures over different spaces");
  std::map<std::string, Vec> entries = a.entries();
  for (const auto& [label, v] : b.entries()) {
    auto [it, inserted] = entries.emplace(label, v);
    if (!inserted)
      for (int k = 0; k < a.space()->dim(); ++k) it->second[k] += v[k];
  }
  return VectorMeasure(a.space(), std::move(entries));
}

VectorMeasure scaled(const VectorMeasure& mu, double factor) {
  std::map<std::string, Vec> entries = mu.entries();
  for (auto& [label, v] : entries)
    for (double& x : v) x *= factor;
  return VectorMeasure(mu.space(), std::move(entries));
}

AtomicMeasure::AtomicMeasure(std::shared_ptr<const Space> space, std::vector<Atom> atoms)
    : space_(std::move(space)) {
  if (!space_) throw Error(Errc::malformed_input, "atomic measure without a space");
  for (auto& a : atoms) {
    check_dual_vector(*space_, a.xstar, ("atom at \"" + a.label + "\"").c_str());
    if (!std::isfinite(a.weight) || a.weight == 0.0)
      throw Error(Errc::malformed_input, "atom weight must be finite and nonzero");
    a.xstar = rounded(a.xstar);
    if (dual_norm(*space_, a.xstar) > 1.0 + tol::geo())
      throw Error(Errc::not_in_ball, "atom at \"" + a.label + "\" outside the dual ball");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.label != b.label) return a.label < b.label;
    return lex_less(a.xstar, b.xstar);
  });
  for (auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().label == a.label && atoms_.back().xstar == a.xstar)
      atoms_.back().weight += a.weight;
    else
      atoms_.push_back(std::move(a));
  }
  std::erase_if(atoms_, [](const Atom& a) { return a.weight == 0.0; });
}

bool AtomicMeasure::positive() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.weight > 0.0; });
}

std::vector<std::string> AtomicMeasure::support() const {
  std::vector<std::string> out;
  for (const Atom& a : atoms_)
    if (out.empty() || out.back() != a.label) out.push_back(a.label);
  return out;
}

ProbabilityAtoms::ProbabilityAtoms(std::shared_ptr<const Space> space,
                                   std::vector<WeightedPoint> atoms)
    : space_(std::move(space)) {
  if (!space_) throw Error(Errc::malformed_input, "probability without a space");
  double sum = 0.0;
  for (auto& a : atoms) {
    check_dual_vector(*space_, a.xstar, "probability atom");
    if (!std::isfinite(a.weight) || a.weight <= 0.0)
      throw Error(Errc::not_probability, "weights must be positive");
    a.xstar = rounded(a.xstar);
    if (dual_norm(*space_, a.xstar) > 1.0 + tol::geo())
      throw Error(Errc::not_in_ball, "probability atom outside the dual ball");
    sum += a.weight;
  }
  if (atoms.empty() || std::fabs(sum - 1.0) > tol::geo())
    throw Error(Errc::not_probability, "weights sum to " + std::to_string(sum));
  std::sort(atoms.begin(), atoms.end(), [](const WeightedPoint& a, const WeightedPoint& b) {
    return lex_less(a.xstar, b.xstar);
  });
  for (auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().xstar == a.xstar)
      atoms_.back().weight += a.weight;
    else
      atoms_.push_back(std::move(a));
  }
}

double DisintegrationKernel::sigma(const std::string& label) const {
  auto it = sigma_.find(label);
  return it == sigma_.end() ? 0.0 : it->second;
}

ProbabilityAtoms DisintegrationKernel::kernel(const std::string& label) const {
  auto it = raw_.find(label);
  if (it == raw_.end())
    throw Error(Errc::malformed_input, "label \"" + label + "\" not in the kernel base");
  double s = sigma_.at(label);
  std::vector<WeightedPoint> atoms = it->second;
  for (auto& a : atoms) a.weight /= s;
  return ProbabilityAtoms(space_, std::move(atoms));
}

AtomicMeasure DisintegrationKernel::recompose() const {
  std::vector<Atom> atoms;
  for (const auto& label : labels_)
    for (const auto& a : raw_.at(label)) atoms.push_back({label, a.xstar, a.weight});
  return AtomicMeasure(space_, std::move(atoms));
}

double DisintegrationKernel::product_integral(
    const std::function<double(const std::string&, const Vec&)>& g) const {
  double acc = 0.0;
  for (const auto& label : labels_)
    for (const auto& a : raw_.at(label)) acc += a.weight * g(label, a.xstar);
  return acc;
}

double total_variation(const VectorMeasure& mu) {
  double acc = 0.0;
  for (const auto& [label, v] : mu.entries()) acc += dual_norm(*mu.space(), v);
  return acc;
}

double pair(const VectorMeasure& mu, const std::map<std::string, Vec>& f) {
  double acc = 0.0;
  for (const auto& [label, v] : mu.entries()) {
    auto it = f.find(label);
    if (it == f.end())
      throw Error(Errc::missing_pieces, "function undefined at \"" + label + "\"");
    if (it->second.size() != v.size())
      throw Error(Errc::dimension_mismatch, "pairing at \"" + label + "\"");
    acc += kernels::dot(v, it->second);
  }
  return acc;
}

double mass(const AtomicMeasure& nu) {
  if (!nu.positive()) throw Error(Errc::not_positive, "mass of a signed measure");
  double acc = 0.0;
  for (const Atom& a : nu.atoms()) acc += a.weight;
  return acc;
}

double integrate(const AtomicMeasure& nu,
                 const std::function<double(const std::string&, const Vec&)>& g) {
  double acc = 0.0;
  for (const Atom& a : nu.atoms()) acc += a.weight * g(a.label, a.xstar);
  return acc;
}

DisintegrationKernel disintegrate(const AtomicMeasure& nu) {
  if (!nu.positive()) throw Error(Errc::not_positive, "disintegrating a signed measure");
  DisintegrationKernel k;
  k.space_ = nu.space();
  for (const Atom& a : nu.atoms()) {
    auto [it, inserted] = k.raw_.emplace(a.label, std::vector<WeightedPoint>{});
    if (inserted) k.labels_.push_back(a.label);
    it->second.push_back({a.xstar, a.weight});
    k.sigma_[a.label] += a.weight;
  }
  // nu.atoms() is label-sorted, so labels_ is already sorted.
  return k;
}

Vec barycenter(const ProbabilityAtoms& p) {
  Vec out(p.space()->dim(), 0.0);
  for (const auto& a : p.atoms())
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += a.weight * a.xstar[k];
  return out;
}

}  // namespace choquet
