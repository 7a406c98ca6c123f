#include <cmath>
#include <functional>

#include "choquet/errors.hpp"
#include "choquet/generators.hpp"
#include "choquet/kernels.hpp"
#include "choquet/rng.hpp"
#include "choquet/transfer.hpp"
#include "doctest.h"

using namespace choquet;

namespace {

std::shared_ptr<const Space> square() {
  return Space::polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}

std::shared_ptr<const Space> cross2() {
  return Space::polytope({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

bool throws_errc(Errc want, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

bool close(const Vec& a, const Vec& b, double eps = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > eps) return false;
  return true;
}

bool measures_close(const AtomicMeasure& a, const AtomicMeasure& b,
                    double eps = 1e-9) {
  if (a.atoms().size() != b.atoms().size()) return false;
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    if (a.atoms()[i].label != b.atoms()[i].label) return false;
    if (!close(a.atoms()[i].xstar, b.atoms()[i].xstar, eps)) return false;
    if (std::fabs(a.atoms()[i].weight - b.atoms()[i].weight) > eps) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("adjoint map collapses fibers to vector entries") {
  auto cr = cross2();  // dual ball is the square
  AtomicMeasure nu(cr, {{"t", {1, 1}, 0.5}, {"t", {1, -1}, 0.5}});
  auto mu = hustad(nu);
  CHECK(mu.entries().size() == 1);
  CHECK(close(mu.at("t"), {1, 0}));

  // Interior atoms scale: 2 delta(t, (0.5, 0)) also induces (1, 0).
  AtomicMeasure interior(cr, {{"t", {0.5, 0}, 2.0}});
  CHECK(close(hustad(interior).at("t"), {1, 0}));

  // Signed weights subtract, and exact cancellation erases the entry.
  AtomicMeasure sgn(cr, {{"t", {1, 0}, 1.0}, {"t", {0, 1}, -1.0}});
  CHECK(close(hustad(sgn).at("t"), {1, -1}));
  AtomicMeasure cancel(cr, {{"t", {1, 0}, 1.0}, {"t", {-1, 0}, 1.0}});
  CHECK(hustad(cancel).entries().empty());
}

TEST_CASE("density and variation density of a fiber measure") {
  auto cr = cross2();
  AtomicMeasure nu(cr, {{"t1", {1, 1}, 0.5},
                        {"t1", {1, -1}, 0.5},
                        {"t2", {0, -1}, 2.0}});
  auto d = density_h(nu);
  CHECK(close(d.h.at("t1"), {1, 0}));
  CHECK(close(d.h.at("t2"), {0, -1}));
  CHECK(d.sigma.at("t1") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.sigma.at("t2") == doctest::Approx(2.0).epsilon(1e-12));

  auto v = variation_density(nu);  // dual norm is l_inf here
  CHECK(v.at("t1") == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(v.at("t2") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sphere normalization preserves the induced measure") {
  auto cr = cross2();
  // h(t1) = (0.5, 0) has dual norm 0.5: the tilde atom moves to the sphere
  // and carries weight |h| sigma = 0.5.
  AtomicMeasure nu(cr, {{"t1", {0.5, 0}, 1.0}});
  auto tl = tilde(nu);
  REQUIRE(tl.atoms().size() == 1);
  CHECK(close(tl.atoms()[0].xstar, {1, 0}));
  CHECK(tl.atoms()[0].weight == doctest::Approx(0.5).epsilon(1e-9));

  // Opposite atoms make h vanish; the label is dropped entirely.
  AtomicMeasure null(cr, {{"t", {1, 0}, 0.5}, {"t", {-1, 0}, 0.5}});
  CHECK(tilde(null).atoms().empty());

  // tilde always lands in N(hustad(nu)) and is idempotent there.
  AtomicMeasure mixed(cr, {{"t1", {1, 1}, 0.25},
                           {"t1", {1, -1}, 0.75},
                           {"t2", {0, -0.5}, 1.0}});
  auto t1 = tilde(mixed);
  CHECK(is_in_N(t1, hustad(mixed)));
  CHECK(measures_close(tilde(t1), t1));
}

TEST_CASE("canonical transfer of a vector measure") {
  auto cr = cross2();
  VectorMeasure mu(cr, {{"t1", {3, 0}}, {"t2", {0, 0}}});
  auto k = transfer_K(mu);  // the zero entry is gone before transfer sees it
  REQUIRE(k.atoms().size() == 1);
  CHECK(k.atoms()[0].label == "t1");
  CHECK(close(k.atoms()[0].xstar, {1, 0}));
  CHECK(k.atoms()[0].weight == doctest::Approx(3.0).epsilon(1e-9));

  VectorMeasure two(cr, {{"t1", {1, 1}}, {"t2", {-2, 0}}});
  auto k2 = transfer_K(two);
  REQUIRE(k2.atoms().size() == 2);
  CHECK(close(k2.atoms()[0].xstar, {1, 1}));
  CHECK(k2.atoms()[0].weight == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(close(k2.atoms()[1].xstar, {-1, 0}));
  CHECK(k2.atoms()[1].weight == doctest::Approx(2.0).epsilon(1e-9));

  CHECK(mass(k2) == doctest::Approx(total_variation(two)).epsilon(1e-9));
  CHECK(is_in_N(k2, two));
}

TEST_CASE("membership in the transfer class") {
  auto cr = cross2();
  VectorMeasure mu(cr, {{"t", {1, 0}}});
  // Right mass, wrong location: interior atom needs mass 2 to induce mu,
  // but then the mass exceeds the total variation.
  AtomicMeasure interior(cr, {{"t", {0.5, 0}, 2.0}});
  CHECK(close(hustad(interior).at("t"), {1, 0}));
  CHECK(!is_in_N(interior, mu));

  AtomicMeasure split(cr, {{"t", {1, 1}, 0.5}, {"t", {1, -1}, 0.5}});
  CHECK(is_in_N(split, mu));
  CHECK(is_in_N(transfer_K(mu), mu));

  // Signed measures never qualify.
  AtomicMeasure sgn(cr, {{"t", {1, 0}, 2.0}, {"t", {1, 1}, -0.5}});
  CHECK(!is_in_N(sgn, mu));

  // Wrong induced measure.
  AtomicMeasure off(cr, {{"t", {0, 1}, 1.0}});
  CHECK(!is_in_N(off, mu));
}

TEST_CASE("superlinear support values through the canonical transfer") {
  auto cr = cross2();
  // f(t, .) = min(<., e1>, <., -e1>) = -|x*_1|.
  DFunction f(cr, {{"t", {{1.0, 0.0}, {-1.0, 0.0}}}});
  VectorMeasure mu(cr, {{"t", {1, 0}}});
  CHECK(eval_pf(f, mu) == doctest::Approx(-1.0).epsilon(1e-9));

  // Norm-like: min over all four primal directions of the square dual ball
  // (that is, -l1) on an entry of dual norm 3 evaluates to -3.
  auto sq = square();
  DFunction g(sq, {{"t", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}}});
  VectorMeasure big(sq, {{"t", {0.6, -0.4}}});  // l1 norm 1.0
  // transfer atom: point (0.6,-0.4), weight 1; g value there is -0.6.
  CHECK(eval_pf(g, big) == doctest::Approx(-0.6).epsilon(1e-9));

  // Single linear piece reduces to the vector pairing.
  DFunction lin(cr, {{"t1", {{2.0, 5.0}}}, {"t2", {{1.0, 1.0}}}});
  VectorMeasure pairing(cr, {{"t1", {1, 0}}, {"t2", {0, 0.5}}});
  CHECK(eval_pf(lin, pairing) ==
        doctest::Approx(pair(pairing, {{"t1", {2, 5}}, {"t2", {1, 1}}}))
            .epsilon(1e-9));

  CHECK(throws_errc(Errc::missing_pieces, [&] { f("other", {1, 0}); }));
  CHECK(throws_errc(Errc::missing_pieces, [&] {
    VectorMeasure wide(cr, {{"t", {1, 0}}, {"u", {0, 1}}});
    eval_pf(f, wide);
  }));
}

TEST_CASE("pairing identity links the adjoint to fiber integration") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    auto sp = gen::random_space(rng);
    auto labels = gen::default_labels(1 + rng.index(3));
    std::vector<Atom> atoms;
    int n_atoms = 1 + rng.index(5);
    for (int i = 0; i < n_atoms; ++i) {
      Vec x = gen::random_sphere_point(rng, *sp);
      double r = rng.uniform(0.1, 1.0);
      for (double& v : x) v *= r;
      double w = rng.uniform(0.1, 2.0) * (rng.coin(0.25) ? -1.0 : 1.0);
      atoms.push_back({labels[rng.index(labels.size())], x, w});
    }
    AtomicMeasure nu(sp, atoms);
    std::map<std::string, Vec> f;
    for (const auto& t : labels) {
      Vec v(sp->dim());
      for (double& c : v) c = rng.uniform(-2.0, 2.0);
      f[t] = v;
    }
    double lhs = pair(hustad(nu), f);
    double rhs = integrate(nu, [&](const std::string& t, const Vec& x) {
      return kernels::dot(x, f.at(t));
    });
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("sphere normalization is idempotent and realizes the variation") {
  Rng rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    auto sp = gen::random_space(rng);
    auto labels = gen::default_labels(1 + rng.index(3));
    std::vector<Atom> atoms;
    int n_atoms = 1 + rng.index(5);
    for (int i = 0; i < n_atoms; ++i) {
      Vec x = gen::random_sphere_point(rng, *sp);
      double r = rng.uniform(0.1, 1.0);
      for (double& v : x) v *= r;
      atoms.push_back({labels[rng.index(labels.size())], x, rng.uniform(0.1, 2.0)});
    }
    AtomicMeasure nu(sp, atoms);
    auto mu = hustad(nu);
    auto tl = tilde(nu);

    CHECK(mass(tl) == doctest::Approx(total_variation(mu)).epsilon(1e-9));
    CHECK(measures_close(tilde(tl), tl, 1e-9));
    CHECK(measures_close(tl, transfer_K(mu), 1e-9));
    for (const auto& [label, entry] : mu.entries())
      CHECK(close(hustad(tl).at(label), entry, 1e-9));
  }
}

TEST_CASE("support values are additive over disjoint supports") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    auto sp = gen::random_space(rng);
    auto a = gen::random_vector_measure(rng, sp, 1);
    // Shifted label set keeps the supports disjoint.
    VectorMeasure b(sp, {{"u", gen::random_sphere_point(rng, *sp)}});
    auto f = gen::random_dfunction(rng, sp, {"t1", "u"});
    double whole = eval_pf(f, add(a, b));
    double parts = eval_pf(f, a) + eval_pf(f, b);
    CHECK(whole == doctest::Approx(parts).epsilon(1e-9));
  }
}
