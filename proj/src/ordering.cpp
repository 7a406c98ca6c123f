#include "choquet/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "choquet/errors.hpp"
#include "choquet/kernels.hpp"
#include "choquet/lp.hpp"
#include "choquet/rng.hpp"
#include "choquet/tolerances.hpp"

namespace choquet {

namespace {

double linf_dist(const Vec& a, const Vec& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::fabs(a[k] - b[k]));
  return d;
}

// Visits r-subsets of {0..n-1} until fn returns false or the range is done.
template <typename F>
void combinations(int n, int r, F&& fn) {
  if (r > n || r <= 0) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_same(const ProbabilityAtoms& p, const Space& space, const char* op) {
  if (!same_space(*p.space(), space))
    throw Error(Errc::dimension_mismatch, std::string(op) + ": probability over a different space");
}

ConvexPL random_sublinear(Rng& rng, int dim) {
  ConvexPL f;
  int pieces = 2 + rng.index(4);
  for (int j = 0; j < pieces; ++j) {
    ConvexPL::Piece piece;
    piece.a.resize(dim);
    for (int k = 0; k < dim; ++k) piece.a[k] = rng.uniform(-1.0, 1.0);
    f.pieces.push_back(std::move(piece));
  }
  return f;
}

ConvexPL random_convex(Rng& rng, int dim) {
  ConvexPL f = random_sublinear(rng, dim);
  for (auto& piece : f.pieces) piece.c = rng.uniform(-0.5, 0.5);
  return f;
}

// |<z,u>| as two sublinear pieces.
ConvexPL directional_abs(const Vec& u) {
  ConvexPL f;
  f.pieces.push_back({u, 0.0});
  Vec neg(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) neg[k] = -u[k];
  f.pieces.push_back({std::move(neg), 0.0});
  return f;
}

// |z - x0|_inf, kinked exactly at x0: pieces (+-e_k, -+x0_k).
ConvexPL kink_at(const Vec& x0) {
  ConvexPL f;
  int d = static_cast<int>(x0.size());
  for (int k = 0; k < d; ++k) {
    ConvexPL::Piece up, down;
    up.a.assign(d, 0.0);
    up.a[k] = 1.0;
    up.c = -x0[k];
    down.a.assign(d, 0.0);
    down.a[k] = -1.0;
    down.c = x0[k];
    f.pieces.push_back(std::move(up));
    f.pieces.push_back(std::move(down));
  }
  return f;
}

// Sublinear kink vanishing at x0 on the face {<z, contact> = 1}:
// |<z,u> - <z,contact><x0,u>|.
ConvexPL face_kink(const Vec& x0, const Vec& u, const Vec& contact) {
  double s = kernels::dot(x0, u);
  Vec a(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) a[k] = u[k] - s * contact[k];
  return directional_abs(a);
}

int nearest_vertex(const std::vector<Vec>& verts, const Vec& x, double eps) {
  for (std::size_t j = 0; j < verts.size(); ++j)
    if (linf_dist(verts[j], x) <= eps) return static_cast<int>(j);
  return -1;
}

// Indices of polar vertices spanning the smallest face of the dual ball that
// contains x; the whole vertex list when x is interior.
std::vector<int> containing_face(const Space& space, const Vec& x) {
  double eps = tol::geo();
  const auto& verts = space.vertices();
  const auto& duals = space.dual_vertices();
  std::vector<int> active;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (kernels::dot(x, verts[i]) >= 1.0 - eps) active.push_back(static_cast<int>(i));
  std::vector<int> face;
  for (std::size_t j = 0; j < duals.size(); ++j) {
    bool on = true;
    for (int i : active)
      if (kernels::dot(duals[j], verts[i]) < 1.0 - eps) {
        on = false;
        break;
      }
    if (on) face.push_back(static_cast<int>(j));
  }
  return face;
}

// Deterministic recursive Caratheodory over the polar vertices: split x
// toward the lowest-indexed vertex of its face, recurse on the far endpoint.
void decompose_point(const Space& space, const Vec& x,
                     std::map<int, double>& out, double frac, int depth) {
  double eps = tol::geo();
  const auto& duals = space.dual_vertices();
  int j = nearest_vertex(duals, x, eps);
  if (j >= 0) {
    out[j] += frac;
    return;
  }
  if (depth > space.dim() + 2)
    throw Error(Errc::numeric_failure, "vertex decomposition did not terminate");
  std::vector<int> face = containing_face(space, x);
  if (face.empty()) throw Error(Errc::numeric_failure, "empty containing face");
  const Vec& w0 = duals[face.front()];
  double sstar = std::numeric_limits<double>::infinity();
  for (const Vec& v : space.vertices()) {
    double wv = kernels::dot(w0, v);
    // Facets through w0 cannot bound the outgoing ray; dropping them avoids
    // 0/0 ratios when x already sits on one of them.
    if (wv >= 1.0 - eps) continue;
    double dv = kernels::dot(x, v) - wv;
    if (dv > 1e-14) sstar = std::min(sstar, (1.0 - wv) / dv);
  }
  if (!std::isfinite(sstar) || sstar < 1.0 - 1e-9)
    throw Error(Errc::numeric_failure, "ray shot out of the dual ball");
  sstar = std::max(sstar, 1.0 + 1e-12);
  Vec y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] = w0[k] + sstar * (x[k] - w0[k]);
  out[face.front()] += frac * (1.0 - 1.0 / sstar);
  decompose_point(space, y, out, frac / sstar, depth + 1);
}

bool entries_close(const VectorMeasure& a, const VectorMeasure& b, double eps) {
  for (const auto& [label, v] : a.entries()) {
    Vec w = b.at(label);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (std::fabs(v[k] - w[k]) > eps) return false;
  }
  for (const auto& [label, w] : b.entries()) {
    Vec v = a.at(label);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (std::fabs(v[k] - w[k]) > eps) return false;
  }
  return true;
}

}  // namespace

bool ConvexPL::sublinear() const {
  return std::all_of(pieces.begin(), pieces.end(),
                     [](const Piece& p) { return p.c == 0.0; });
}

double ConvexPL::operator()(const Vec& xstar) const {
  if (pieces.empty()) throw Error(Errc::malformed_input, "convex function without pieces");
  double best = -std::numeric_limits<double>::infinity();
  for (const Piece& p : pieces) best = std::max(best, kernels::dot(p.a, xstar) + p.c);
  return best;
}

double integrate_pl(const ProbabilityAtoms& p, const ConvexPL& f) {
  double acc = 0.0;
  for (const auto& a : p.atoms()) acc += a.weight * f(a.xstar);
  return acc;
}

ChoquetVerdict choquet_leq(const ProbabilityAtoms& p, const ProbabilityAtoms& q,
                           const Space& space) {
  require_same(p, space, "choquet_leq");
  require_same(q, space, "choquet_leq");
  ChoquetVerdict verdict;
  Vec bp = barycenter(p), bq = barycenter(q);
  if (linf_dist(bp, bq) > tol::geo()) {
    verdict.barycenter_mismatch = true;
    return verdict;
  }

  const auto& src = p.atoms();
  const auto& tgt = q.atoms();
  int m = static_cast<int>(src.size());
  int n = static_cast<int>(tgt.size());
  int d = space.dim();

  lp::LinearProgram prog;
  prog.objective.assign(m * n, 0.0);
  int rows = m + n + m * d;
  prog.eq_a.assign(rows, Vec(m * n, 0.0));
  prog.eq_b.assign(rows, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) prog.eq_a[i][i * n + j] = 1.0;
    prog.eq_b[i] = src[i].weight;
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) prog.eq_a[m + j][i * n + j] = 1.0;
    prog.eq_b[m + j] = tgt[j].weight;
  }
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < d; ++k) {
      int r = m + n + i * d + k;
      for (int j = 0; j < n; ++j) prog.eq_a[r][i * n + j] = tgt[j].xstar[k];
      prog.eq_b[r] = src[i].weight * src[i].xstar[k];
    }

  lp::Outcome out = lp::solve(prog);
  if (out.status == lp::Status::optimal) {
    verdict.holds = true;
    DilationWitness w;
    w.source = src;
    w.target = tgt;
    w.pi.assign(m, Vec(n, 0.0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) w.pi[i][j] = std::max(0.0, out.x[i * n + j]);
    verdict.witness = std::move(w);
    return verdict;
  }

  // Infeasibility certificate (alpha_i, beta_j, gamma_i.) with
  // alpha_i + beta_j + <gamma_i, y_j> <= 0 for all (i,j) and a positive
  // pairing with the right-hand side. F(z) = max_i (<gamma_i, z> + alpha_i)
  // then integrates strictly larger against p than against q.
  if (!out.farkas.empty()) {
    double scale = 0.0;
    for (double v : out.farkas) scale = std::max(scale, std::fabs(v));
    if (scale > 0.0) {
      ConvexPL f;
      for (int i = 0; i < m; ++i) {
        ConvexPL::Piece piece;
        piece.c = out.farkas[i] / scale;
        piece.a.resize(d);
        for (int k = 0; k < d; ++k) piece.a[k] = out.farkas[m + n + i * d + k] / scale;
        f.pieces.push_back(std::move(piece));
      }
      if (integrate_pl(p, f) - integrate_pl(q, f) > 1e-10) verdict.falsifier = std::move(f);
    }
  }
  return verdict;
}

bool is_maximal(const ProbabilityAtoms& p, const Space& space) {
  require_same(p, space, "is_maximal");
  double eps = tol::geo();
  if (space.is_euclidean()) {
    for (const auto& a : p.atoms())
      if (std::fabs(linalg::norm2(a.xstar) - 1.0) > eps) return false;
    return true;
  }
  const auto& duals = space.dual_vertices();
  for (const auto& a : p.atoms())
    if (nearest_vertex(duals, a.xstar, eps) < 0) return false;
  return true;
}

double upper_envelope_at(const ConvexPL& f, const Vec& xstar, const Space& space) {
  if (static_cast<int>(xstar.size()) != space.dim())
    throw Error(Errc::dimension_mismatch, "envelope input");
  if (space.is_euclidean()) {
    if (std::fabs(linalg::norm2(xstar) - 1.0) > tol::geo())
      throw Error(Errc::hypothesis,
                  "Euclidean envelopes are evaluated on the sphere only");
    return f(xstar);
  }
  const auto& duals = space.dual_vertices();
  int n = static_cast<int>(duals.size());
  int d = space.dim();
  lp::LinearProgram prog;
  prog.sense = lp::Sense::maximize;
  prog.objective.resize(n);
  for (int j = 0; j < n; ++j) prog.objective[j] = f(duals[j]);
  prog.eq_a.assign(d + 1, Vec(n, 0.0));
  prog.eq_b.assign(d + 1, 0.0);
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < n; ++j) prog.eq_a[k][j] = duals[j][k];
    prog.eq_b[k] = xstar[k];
  }
  for (int j = 0; j < n; ++j) prog.eq_a[d][j] = 1.0;
  prog.eq_b[d] = 1.0;
  lp::Outcome out = lp::solve(prog);
  if (out.status != lp::Status::optimal)
    throw Error(Errc::not_in_ball, "envelope point outside the dual ball");
  return out.value;
}

namespace {

// Exact envelope of |<.,u>| over the Euclidean ball:
// sqrt(1 - |x|^2 + <x,u>^2) for unit u, scaled by |u| otherwise. Points
// within tolerance of the sphere count as on it, matching is_maximal.
double euclidean_abs_envelope(const Vec& u, const Vec& x) {
  double nu = linalg::norm2(u);
  if (nu == 0.0) return 0.0;
  double nx = linalg::norm2(x);
  double r2 = nx >= 1.0 - tol::geo() ? 0.0 : std::max(0.0, 1.0 - nx * nx);
  double s = kernels::dot(x, u) / nu;
  return nu * std::sqrt(r2 + s * s);
}

}  // namespace

bool mokobodzki_maximal(const ProbabilityAtoms& p, const Space& space, int samples,
                        std::uint64_t seed) {
  require_same(p, space, "mokobodzki_maximal");
  Rng rng(seed);
  int d = space.dim();
  double worst = 0.0;

  if (space.is_euclidean()) {
    std::vector<Vec> dirs;
    for (int k = 0; k < d; ++k) {
      Vec e(d, 0.0);
      e[k] = 1.0;
      dirs.push_back(std::move(e));
    }
    for (int s = 0; s < samples; ++s) {
      Vec u(d);
      double n2 = 0.0;
      for (int k = 0; k < d; ++k) {
        u[k] = rng.normal();
        n2 += u[k] * u[k];
      }
      if (n2 < 1e-12) continue;
      for (int k = 0; k < d; ++k) u[k] /= std::sqrt(n2);
      dirs.push_back(std::move(u));
    }
    for (const Vec& u : dirs) {
      double gap = 0.0;
      for (const auto& a : p.atoms())
        gap += a.weight *
               (euclidean_abs_envelope(u, a.xstar) - std::fabs(kernels::dot(a.xstar, u)));
      worst = std::max(worst, gap);
    }
    return worst <= tol::check;
  }

  std::vector<ConvexPL> family;
  for (int k = 0; k < d; ++k) {
    Vec e(d, 0.0);
    e[k] = 1.0;
    family.push_back(directional_abs(e));
  }
  const auto& duals = space.dual_vertices();
  for (const auto& a : p.atoms())
    if (nearest_vertex(duals, a.xstar, tol::geo()) < 0) family.push_back(kink_at(a.xstar));
  for (int s = 0; s < samples; ++s) family.push_back(random_convex(rng, d));

  for (const ConvexPL& f : family) {
    double gap = 0.0;
    for (const auto& a : p.atoms())
      gap += a.weight * (upper_envelope_at(f, a.xstar, space) - f(a.xstar));
    worst = std::max(worst, gap);
    if (worst > tol::check) return false;
  }
  return true;
}

ProbabilityAtoms maximalize(const ProbabilityAtoms& p, const Space& space) {
  require_same(p, space, "maximalize");
  double eps = tol::geo();
  std::vector<WeightedPoint> out;

  if (space.is_euclidean()) {
    for (const auto& a : p.atoms()) {
      double n = linalg::norm2(a.xstar);
      if (std::fabs(n - 1.0) <= eps) {
        out.push_back(a);
      } else if (n <= eps) {
        Vec e1(space.dim(), 0.0), ne1(space.dim(), 0.0);
        e1[0] = 1.0;
        ne1[0] = -1.0;
        out.push_back({std::move(e1), a.weight / 2});
        out.push_back({std::move(ne1), a.weight / 2});
      } else {
        // Antipodal chord through the atom: x = lam u + (1-lam)(-u).
        Vec u(a.xstar.size()), nu_(a.xstar.size());
        for (std::size_t k = 0; k < u.size(); ++k) {
          u[k] = a.xstar[k] / n;
          nu_[k] = -u[k];
        }
        double lam = (1.0 + n) / 2.0;
        out.push_back({std::move(u), a.weight * lam});
        out.push_back({std::move(nu_), a.weight * (1.0 - lam)});
      }
    }
  } else {
    const auto& duals = space.dual_vertices();
    for (const auto& a : p.atoms()) {
      if (nearest_vertex(duals, a.xstar, eps) >= 0) {
        out.push_back(a);  // already extreme; kept verbatim
        continue;
      }
      std::map<int, double> parts;
      decompose_point(space, a.xstar, parts, 1.0, 0);
      for (const auto& [j, frac] : parts)
        if (frac > 1e-15) out.push_back({duals[j], a.weight * frac});
    }
  }

  ProbabilityAtoms result(p.space(), std::move(out));
  ChoquetVerdict check = choquet_leq(p, result, space);
  if (!check.holds)
    throw Error(Errc::numeric_failure, "maximalization witness failed to verify");
  return result;
}

bool precD(const AtomicMeasure& nu1, const AtomicMeasure& nu2, const Space& space,
           std::string* diagnostic) {
  if (!same_space(*nu1.space(), space) || !same_space(*nu2.space(), space))
    throw Error(Errc::dimension_mismatch, "precD: measures over a different space");
  if (!nu1.positive() || !nu2.positive())
    throw Error(Errc::not_positive, "precD requires positive measures");

  VectorMeasure mu = hustad(nu1);
  if (!entries_close(mu, hustad(nu2), tol::geo())) {
    if (diagnostic) *diagnostic = "induced vector measures differ";
    return false;
  }
  double tv = total_variation(mu);
  if (std::fabs(mass(nu1) - tv) > tol::geo() || std::fabs(mass(nu2) - tv) > tol::geo())
    throw Error(Errc::hypothesis,
                "mass exceeds the image variation; outside the fiberwise characterization");

  DisintegrationKernel k1 = disintegrate(nu1);
  DisintegrationKernel k2 = disintegrate(nu2);
  if (k1.labels() != k2.labels())
    throw Error(Errc::numeric_failure, "fiber supports differ despite equal images");
  for (const auto& label : k1.labels()) {
    // Fiberwise reduction reverses the comparison.
    ChoquetVerdict v = choquet_leq(k2.kernel(label), k1.kernel(label), space);
    if (!v.holds) {
      if (diagnostic) *diagnostic = "fiber at \"" + label + "\" not dilated";
      return false;
    }
  }
  return true;
}

bool is_minimal(const AtomicMeasure& nu, const VectorMeasure& mu) {
  if (!is_in_N(nu, mu))
    throw Error(Errc::hypothesis, "measure does not represent the given image");
  DisintegrationKernel k = disintegrate(nu);
  for (const auto& label : k.labels())
    if (!is_maximal(k.kernel(label), *nu.space())) return false;
  return true;
}

AtomicMeasure minimalize(const AtomicMeasure& nu, const VectorMeasure& mu) {
  if (!is_in_N(nu, mu))
    throw Error(Errc::hypothesis, "measure does not represent the given image");
  DisintegrationKernel k = disintegrate(nu);
  std::vector<Atom> atoms;
  for (const auto& label : k.labels()) {
    ProbabilityAtoms fiber = maximalize(k.kernel(label), *nu.space());
    double s = k.sigma(label);
    for (const auto& a : fiber.atoms()) atoms.push_back({label, a.xstar, s * a.weight});
  }
  return AtomicMeasure(nu.space(), std::move(atoms));
}

std::vector<ProbabilityAtoms> fiber_decompositions(
    const std::shared_ptr<const Space>& space, const Vec& xstar, int cap,
    bool* truncated) {
  if (truncated) *truncated = false;
  Face face = minimal_face(space, xstar);
  if (space->is_euclidean())
    return {ProbabilityAtoms(space, {{xstar, 1.0}})};

  std::vector<Vec> pts = face_points(*space, face);
  int m = static_cast<int>(pts.size());
  int d = space->dim();
  Mat full(d + 1, Vec(m, 0.0));
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < d; ++k) full[k][j] = pts[j][k];
    full[d][j] = 1.0;
  }
  Vec rhs = xstar;
  rhs.push_back(1.0);
  int r = linalg::rank(full);

  std::vector<ProbabilityAtoms> results;
  long budget = 2'000'000;
  combinations(m, r, [&](const std::vector<int>& idx) {
    if (--budget < 0) {
      if (truncated) *truncated = true;
      return false;
    }
    Mat sub(d + 1, Vec(r, 0.0));
    for (int c = 0; c < r; ++c)
      for (int k = 0; k <= d; ++k) sub[k][c] = full[k][idx[c]];
    auto sol = linalg::solve_unique(sub, rhs);
    if (!sol) return true;
    double lo = *std::min_element(sol->begin(), sol->end());
    if (lo < -1e-9) return true;
    std::vector<WeightedPoint> atoms;
    for (int c = 0; c < r; ++c)
      if ((*sol)[c] > 1e-12) atoms.push_back({pts[idx[c]], (*sol)[c]});
    if (atoms.empty()) return true;
    ProbabilityAtoms cand(space, std::move(atoms));
    for (const auto& prev : results) {
      if (prev.atoms().size() != cand.atoms().size()) continue;
      bool equal = true;
      for (std::size_t i = 0; i < prev.atoms().size(); ++i) {
        if (prev.atoms()[i].xstar != cand.atoms()[i].xstar ||
            std::fabs(prev.atoms()[i].weight - cand.atoms()[i].weight) > 1e-9) {
          equal = false;
          break;
        }
      }
      if (equal) return true;
    }
    results.push_back(std::move(cand));
    if (static_cast<int>(results.size()) >= cap) {
      if (truncated) *truncated = true;
      return false;
    }
    return true;
  });
  return results;
}

MinimalEnumeration enumerate_minimal(const VectorMeasure& mu, int cap) {
  MinimalEnumeration out;
  const auto& space = mu.space();
  if (space->is_euclidean()) {
    out.measures.push_back(transfer_K(mu));
    return out;
  }

  struct LabelChoice {
    std::string label;
    double sigma;
    std::vector<ProbabilityAtoms> decs;
  };
  std::vector<LabelChoice> choices;
  for (const auto& [label, v] : mu.entries()) {
    double n = dual_norm(*space, v);
    if (n <= tol::geo()) continue;
    Vec unit(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) unit[k] = v[k] / n;
    bool tr = false;
    auto decs = fiber_decompositions(space, unit, cap, &tr);
    out.truncated = out.truncated || tr;
    if (decs.empty()) throw Error(Errc::numeric_failure, "fiber without decompositions");
    choices.push_back({label, n, std::move(decs)});
  }

  if (choices.empty()) {
    out.measures.push_back(AtomicMeasure(space, {}));
    return out;
  }

  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < choices.size(); ++i)
      for (const auto& a : choices[i].decs[pick[i]].atoms())
        atoms.push_back({choices[i].label, a.xstar, choices[i].sigma * a.weight});
    out.measures.push_back(AtomicMeasure(space, std::move(atoms)));
    if (static_cast<int>(out.measures.size()) >= cap) {
      std::size_t i = 0;
      for (; i < choices.size(); ++i)
        if (pick[i] + 1 < choices[i].decs.size()) break;
      out.truncated = out.truncated || i < choices.size();
      return out;
    }
    std::size_t i = 0;
    while (i < choices.size()) {
      if (++pick[i] < choices[i].decs.size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == choices.size()) return out;
  }
}

Vec sphere_contact(const Space& space, const Vec& xstar) {
  double n = dual_norm(space, xstar);
  if (std::fabs(n - 1.0) > tol::geo())
    throw Error(Errc::not_on_sphere, "contact of an off-sphere point");
  if (space.is_euclidean()) return xstar;
  const auto& verts = space.vertices();
  int best = 0;
  double bestdot = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    double dot = kernels::dot(xstar, verts[i]);
    if (dot > bestdot + 1e-15) {
      bestdot = dot;
      best = static_cast<int>(i);
    }
  }
  return verts[best];
}

ConvexPL homogenize_on_face(const ConvexPL& f, const Vec& contact) {
  ConvexPL g;
  for (const auto& piece : f.pieces) {
    ConvexPL::Piece h;
    h.a.resize(piece.a.size());
    for (std::size_t k = 0; k < piece.a.size(); ++k)
      h.a[k] = piece.a[k] + piece.c * contact[k];
    g.pieces.push_back(std::move(h));
  }
  return g;
}

bool sublinear_order_test(const ProbabilityAtoms& p, const ProbabilityAtoms& q,
                          const Space& space, int samples, std::uint64_t seed) {
  require_same(p, space, "sublinear_order_test");
  require_same(q, space, "sublinear_order_test");
  Vec bp = barycenter(p), bq = barycenter(q);
  if (linf_dist(bp, bq) > tol::geo())
    throw Error(Errc::hypothesis, "a common barycenter is required");
  if (std::fabs(dual_norm(space, bp) - 1.0) > tol::geo())
    throw Error(Errc::hypothesis, "the common barycenter must lie on the dual sphere");

  int d = space.dim();
  Vec contact = sphere_contact(space, bp);
  Rng rng(seed);

  std::vector<ConvexPL> family;
  std::vector<Vec> dirs;
  for (int k = 0; k < d; ++k) {
    Vec e(d, 0.0);
    e[k] = 1.0;
    dirs.push_back(e);
    family.push_back(directional_abs(e));
  }
  // All-signs pieces: the l1 norm as a max of 2^d linear functions.
  if (d <= 12) {
    ConvexPL l1;
    for (int mask = 0; mask < (1 << d); ++mask) {
      ConvexPL::Piece piece;
      piece.a.resize(d);
      for (int k = 0; k < d; ++k) piece.a[k] = (mask >> k & 1) ? 1.0 : -1.0;
      l1.pieces.push_back(std::move(piece));
    }
    family.push_back(std::move(l1));
  }
  if (!space.is_euclidean()) {
    ConvexPL support;  // the dual norm itself
    for (const Vec& v : space.vertices()) support.pieces.push_back({v, 0.0});
    family.push_back(std::move(support));
  }
  for (int s = 0; s < 4; ++s) {
    Vec u(d);
    for (int k = 0; k < d; ++k) u[k] = rng.normal();
    dirs.push_back(std::move(u));
  }
  for (const auto& atoms : {p.atoms(), q.atoms()})
    for (const auto& a : atoms)
      for (const Vec& u : dirs) family.push_back(face_kink(a.xstar, u, contact));
  for (int s = 0; s < samples; ++s) family.push_back(random_sublinear(rng, d));

  for (const ConvexPL& f : family)
    if (integrate_pl(p, f) > integrate_pl(q, f) + tol::check) return false;
  return true;
}

bool precB(const VectorMeasure& mu1, const VectorMeasure& mu2) {
  if (!same_space(*mu1.space(), *mu2.space()))
    throw Error(Errc::dimension_mismatch, "precB: measures over different spaces");
  return entries_close(mu1, mu2, tol::geo());
}

}  // namespace choquet
