#include "choquet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "choquet/errors.hpp"
#include "choquet/kernels.hpp"
#include "choquet/tolerances.hpp"

namespace choquet::gen {

namespace {

Vec random_unit(Rng& rng, int dim) {
  while (true) {
    Vec u(dim);
    double n2 = 0.0;
    for (int k = 0; k < dim; ++k) {
      u[k] = rng.normal();
      n2 += u[k] * u[k];
    }
    if (n2 < 1e-12) continue;
    double n = std::sqrt(n2);
    for (int k = 0; k < dim; ++k) u[k] /= n;
    return u;
  }
}

// Random point of the given dual norm; the direction is Gaussian.
Vec random_dual_length(Rng& rng, const Space& space, double length) {
  while (true) {
    Vec z = random_unit(rng, space.dim());
    double n = dual_norm(space, z);
    if (n < 1e-9) continue;
    for (double& c : z) c *= length / n;
    return z;
  }
}

std::vector<double> random_weights(Rng& rng, int n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    w[i] = rng.uniform(1.0, 2.0);
    sum += w[i];
  }
  for (double& x : w) x /= sum;  // each weight >= 1/(2n)
  return w;
}

}  // namespace

std::shared_ptr<const Space> cube_dual_space(int dim) {
  std::vector<Vec> verts;
  for (int k = 0; k < dim; ++k) {
    Vec e(dim, 0.0);
    e[k] = 1.0;
    verts.push_back(e);
    e[k] = -1.0;
    verts.push_back(e);
  }
  return Space::polytope(std::move(verts));
}

std::shared_ptr<const Space> cross_dual_space(int dim) {
  std::vector<Vec> verts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = (mask >> k & 1) ? 1.0 : -1.0;
    verts.push_back(std::move(v));
  }
  return Space::polytope(std::move(verts));
}

std::shared_ptr<const Space> random_polygon_space(Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int m = 2 + static_cast<int>(rng.index(3));
    std::vector<double> angles(m);
    for (double& a : angles) a = rng.uniform(0.0, std::numbers::pi);
    std::sort(angles.begin(), angles.end());
    bool separated = angles.front() + std::numbers::pi - angles.back() >= 0.25;
    for (int i = 1; i < m && separated; ++i)
      separated = angles[i] - angles[i - 1] >= 0.25;
    if (!separated) continue;
    std::vector<Vec> verts;
    for (double a : angles) {
      double r = rng.uniform(0.6, 1.4);
      verts.push_back({r * std::cos(a), r * std::sin(a)});
      verts.push_back({-r * std::cos(a), -r * std::sin(a)});
    }
    try {
      return Space::polytope(std::move(verts));
    } catch (const Error&) {
      // redundant vertex; redraw
    }
  }
  throw Error(Errc::numeric_failure, "polygon sampling failed to converge");
}

std::shared_ptr<const Space> random_polytope_space(Rng& rng, int dim) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    int m = dim + static_cast<int>(rng.index(3));
    std::vector<Vec> dirs;
    bool separated = true;
    for (int i = 0; i < m && separated; ++i) {
      Vec u = random_unit(rng, dim);
      for (const Vec& v : dirs)
        if (std::fabs(kernels::dot(u, v)) > 0.85) {
          separated = false;
          break;
        }
      dirs.push_back(std::move(u));
    }
    if (!separated) continue;
    std::vector<Vec> verts;
    for (const Vec& u : dirs) {
      double r = rng.uniform(0.7, 1.3);
      Vec v(dim), w(dim);
      for (int k = 0; k < dim; ++k) {
        v[k] = r * u[k];
        w[k] = -r * u[k];
      }
      verts.push_back(std::move(v));
      verts.push_back(std::move(w));
    }
    try {
      return Space::polytope(std::move(verts));
    } catch (const Error&) {
    }
  }
  throw Error(Errc::numeric_failure, "polytope sampling failed to converge");
}

std::shared_ptr<const Space> random_space(Rng& rng, bool polytope_only) {
  switch (rng.index(polytope_only ? 5 : 7)) {
    case 0: return random_polygon_space(rng);
    case 1: return random_polytope_space(rng, 3);
    case 2: return cube_dual_space(2 + static_cast<int>(rng.index(2)));
    case 3: return cross_dual_space(2 + static_cast<int>(rng.index(2)));
    case 4: return random_polytope_space(rng, 4);
    case 5: return Space::euclidean(2 + static_cast<int>(rng.index(3)));
    default: return Space::euclidean(2);
  }
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("t" + std::to_string(i));
  return labels;
}

VectorMeasure random_vector_measure(Rng& rng, std::shared_ptr<const Space> space,
                                    int labels) {
  std::map<std::string, Vec> entries;
  for (const std::string& label : default_labels(labels))
    entries[label] = random_dual_length(rng, *space, rng.uniform(0.3, 1.5));
  return VectorMeasure(std::move(space), std::move(entries));
}

ProbabilityAtoms random_probability(Rng& rng, std::shared_ptr<const Space> space) {
  int n = 1 + static_cast<int>(rng.index(3));
  std::vector<double> weights = random_weights(rng, n);
  std::vector<WeightedPoint> atoms;
  for (int i = 0; i < n; ++i) {
    Vec x;
    if (rng.coin()) {
      if (space->is_euclidean())
        x = random_unit(rng, space->dim());
      else
        x = space->dual_vertices()[rng.index(space->dual_vertices().size())];
    } else {
      x = random_dual_length(rng, *space, rng.uniform(0.1, 0.9));
    }
    atoms.push_back({std::move(x), weights[i]});
  }
  return ProbabilityAtoms(std::move(space), std::move(atoms));
}

ProbabilityAtoms random_extreme_probability(Rng& rng,
                                            std::shared_ptr<const Space> space) {
  int n = 1 + static_cast<int>(rng.index(3));
  std::vector<double> weights = random_weights(rng, n);
  std::vector<WeightedPoint> atoms;
  for (int i = 0; i < n; ++i) {
    Vec x = space->is_euclidean()
                ? random_unit(rng, space->dim())
                : space->dual_vertices()[rng.index(space->dual_vertices().size())];
    atoms.push_back({std::move(x), weights[i]});
  }
  return ProbabilityAtoms(std::move(space), std::move(atoms));
}

ProbabilityAtoms random_fixed_barycenter(Rng& rng,
                                         std::shared_ptr<const Space> space,
                                         const Vec& b) {
  std::vector<ProbabilityAtoms> pool = fiber_decompositions(space, b, 16);
  pool.push_back(ProbabilityAtoms(space, {{b, 1.0}}));
  int picks = 1 + static_cast<int>(rng.index(std::min<std::size_t>(3, pool.size())));
  std::vector<double> theta = random_weights(rng, picks);
  std::vector<WeightedPoint> atoms;
  for (int i = 0; i < picks; ++i) {
    const ProbabilityAtoms& part = pool[rng.index(pool.size())];
    for (const auto& a : part.atoms()) atoms.push_back({a.xstar, theta[i] * a.weight});
  }
  return ProbabilityAtoms(space, std::move(atoms));
}

AtomicMeasure random_in_image_class(Rng& rng, const VectorMeasure& mu) {
  const auto& space = mu.space();
  std::vector<Atom> atoms;
  for (const auto& [label, v] : mu.entries()) {
    double n = dual_norm(*space, v);
    if (n <= tol::geo()) continue;
    Vec unit(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) unit[k] = v[k] / n;
    ProbabilityAtoms fiber = random_fixed_barycenter(rng, space, unit);
    for (const auto& a : fiber.atoms()) atoms.push_back({label, a.xstar, n * a.weight});
  }
  return AtomicMeasure(space, std::move(atoms));
}

Vec random_sphere_point(Rng& rng, const Space& space) {
  return random_dual_length(rng, space, 1.0);
}

ConvexPL random_convex_pl(Rng& rng, int dim, bool sublinear) {
  ConvexPL f;
  int pieces = 2 + static_cast<int>(rng.index(3));
  for (int j = 0; j < pieces; ++j) {
    ConvexPL::Piece piece;
    piece.a.resize(dim);
    for (int k = 0; k < dim; ++k) piece.a[k] = rng.uniform(-1.0, 1.0);
    if (!sublinear) piece.c = rng.uniform(-0.5, 0.5);
    f.pieces.push_back(std::move(piece));
  }
  return f;
}

DFunction random_dfunction(Rng& rng, std::shared_ptr<const Space> space,
                           const std::vector<std::string>& labels) {
  std::map<std::string, std::vector<Vec>> pieces;
  for (const std::string& label : labels) {
    int n = 1 + static_cast<int>(rng.index(3));
    std::vector<Vec> list;
    for (int j = 0; j < n; ++j) {
      Vec a(space->dim());
      for (double& c : a) c = rng.uniform(-1.0, 1.0);
      list.push_back(std::move(a));
    }
    pieces[label] = std::move(list);
  }
  return DFunction(std::move(space), std::move(pieces));
}

}  // namespace choquet::gen
