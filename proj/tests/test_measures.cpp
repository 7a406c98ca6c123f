#include <cmath>
#include <functional>

#include "choquet/errors.hpp"
#include "choquet/generators.hpp"
#include "choquet/measures.hpp"
#include "choquet/rng.hpp"
#include "doctest.h"

using namespace choquet;

namespace {

std::shared_ptr<const Space> square() {
  return Space::polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
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

}  // namespace

TEST_CASE("point sets hold distinct labels") {
  PointSet k({"a", "b", "c"});
  CHECK(k.contains("b"));
  CHECK(!k.contains("d"));
  CHECK(throws_errc(Errc::malformed_input, [] { PointSet({}); }));
  CHECK(throws_errc(Errc::malformed_input, [] { PointSet({"a", "a"}); }));
}

TEST_CASE("vector measures drop zero entries and mind dimensions") {
  auto sq = square();
  VectorMeasure mu(sq, {{"t1", {1, 0}}, {"t2", {0, 0}}});
  CHECK(mu.entries().size() == 1);
  CHECK(close(mu.at("t1"), {1, 0}));
  CHECK(close(mu.at("t2"), {0, 0}));  // absent label reads as zero
  CHECK(close(mu.at("anything"), {0, 0}));

  CHECK(throws_errc(Errc::dimension_mismatch,
                    [&] { VectorMeasure(sq, {{"t", {1, 0, 0}}}); }));

  auto pm = VectorMeasure::point_mass(sq, "t", {0, -2});
  CHECK(close(pm.at("t"), {0, -2}));

  auto sum = add(mu, scaled(pm, 0.5));
  CHECK(close(sum.at("t1"), {1, 0}));
  CHECK(close(sum.at("t"), {0, -1}));
  auto cancel = add(pm, scaled(pm, -1.0));
  CHECK(cancel.entries().empty());
}

TEST_CASE("total variation sums dual norms over the support") {
  auto sq = square();  // dual norm is l1
  VectorMeasure mu(sq, {{"t1", {1, 0}}, {"t2", {0, -2}}});
  CHECK(total_variation(mu) == doctest::Approx(3.0).epsilon(1e-9));
  VectorMeasure zero(sq, {});
  CHECK(total_variation(zero) == 0.0);
  VectorMeasure one(Space::euclidean(2), {{"t", {0.6, 0.8}}});
  CHECK(total_variation(one) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("total variation is a norm on vector measures") {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    auto sp = gen::random_space(rng);
    auto a = gen::random_vector_measure(rng, sp, 1 + rng.index(3));
    auto b = gen::random_vector_measure(rng, sp, 1 + rng.index(3));
    double c = rng.uniform(-2.0, 2.0);
    CHECK(total_variation(add(a, b)) <=
          total_variation(a) + total_variation(b) + 1e-9);
    CHECK(total_variation(scaled(a, c)) ==
          doctest::Approx(std::fabs(c) * total_variation(a)).epsilon(1e-9));
  }
}

TEST_CASE("pairing against a vector field") {
  auto sq = square();
  VectorMeasure mu(sq, {{"t", {1, 0}}});
  CHECK(pair(mu, {{"t", {2, 5}}}) == doctest::Approx(2.0).epsilon(1e-12));
  VectorMeasure two(sq, {{"t1", {1, 0}}, {"t2", {0, 1}}});
  CHECK(pair(two, {{"t1", {1, 1}}, {"t2", {0, 3}}, {"t3", {9, 9}}}) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(throws_errc(Errc::missing_pieces, [&] { pair(two, {{"t1", {1, 1}}}); }));
  CHECK(throws_errc(Errc::dimension_mismatch, [&] { pair(mu, {{"t", {1}}}); }));
}

TEST_CASE("atomic measures are canonicalized at construction") {
  auto sq = square();
  // Mergeable duplicates, unsorted input, a negative zero coordinate.
  AtomicMeasure nu(sq, {{"t2", {0.5, 0.5}, 0.25},
                        {"t1", {1, -0.0}, 0.5},
                        {"t1", {1, 0.0}, 0.25},
                        {"t2", {0.5, 0.5}, 0.25}});
  REQUIRE(nu.atoms().size() == 2);
  CHECK(nu.atoms()[0].label == "t1");
  CHECK(nu.atoms()[0].weight == 0.75);
  CHECK(std::signbit(nu.atoms()[0].xstar[1]) == false);
  CHECK(nu.atoms()[1].label == "t2");
  CHECK(nu.atoms()[1].weight == 0.5);
  CHECK(nu.positive());
  CHECK(nu.support() == std::vector<std::string>{"t1", "t2"});

  AtomicMeasure sgn(sq, {{"t", {1, 0}, -1.0}});
  CHECK(!sgn.positive());

  // Opposite weights on the same point cancel to the empty measure.
  AtomicMeasure gone(sq, {{"t", {1, 0}, 1.0}, {"t", {1, 0}, -1.0}});
  CHECK(gone.atoms().empty());

  CHECK(throws_errc(Errc::malformed_input,
                    [&] { AtomicMeasure(sq, {{"t", {1, 0}, 0.0}}); }));
  CHECK(throws_errc(Errc::malformed_input,
                    [&] { AtomicMeasure(sq, {{"t", {1, 0}, std::nan("")}}); }));
  CHECK(throws_errc(Errc::not_in_ball,
                    [&] { AtomicMeasure(sq, {{"t", {3, 0}, 1.0}}); }));
}

TEST_CASE("probability atoms must be a probability") {
  auto sq = square();
  ProbabilityAtoms p(sq, {{{1, 0}, 0.5}, {{0, 1}, 0.5}});
  CHECK(p.atoms().size() == 2);
  CHECK(throws_errc(Errc::not_probability,
                    [&] { ProbabilityAtoms(sq, {{{1, 0}, 0.5}}); }));
  CHECK(throws_errc(Errc::not_probability,
                    [&] { ProbabilityAtoms(sq, {{{1, 0}, -0.5}, {{0, 1}, 1.5}}); }));
  CHECK(throws_errc(Errc::not_in_ball,
                    [&] { ProbabilityAtoms(sq, {{{5, 0}, 1.0}}); }));
}

TEST_CASE("mass and integration") {
  auto sq = square();
  AtomicMeasure one(sq, {{"t", {1, 0}, 1.0}});
  CHECK(mass(one) == doctest::Approx(1.0).epsilon(1e-12));
  AtomicMeasure five(sq, {{"t1", {1, 0}, 2.0}, {"t2", {0, 1}, 3.0}});
  CHECK(mass(five) == doctest::Approx(5.0).epsilon(1e-12));
  AtomicMeasure sgn(sq, {{"t", {1, 0}, -1.0}});
  CHECK(throws_errc(Errc::not_positive, [&] { mass(sgn); }));

  auto first = [](const std::string&, const Vec& x) { return x[0]; };
  CHECK(integrate(five, first) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate(sgn, first) == doctest::Approx(-1.0).epsilon(1e-12));
  auto label_weight = [](const std::string& t, const Vec&) {
    return t == "t2" ? 1.0 : 0.0;
  };
  CHECK(integrate(five, label_weight) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("disintegration groups fibers and recomposes bit for bit") {
  auto sq = square();
  AtomicMeasure nu(sq, {{"t1", {1, 0}, 0.5},
                        {"t1", {0, 1}, 1.5},
                        {"t2", {0, -1}, 1.0}});
  auto k = disintegrate(nu);
  CHECK(k.labels() == std::vector<std::string>{"t1", "t2"});
  CHECK(k.sigma("t1") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(k.sigma("t2") == doctest::Approx(1.0).epsilon(1e-12));

  auto p1 = k.kernel("t1");
  REQUIRE(p1.atoms().size() == 2);
  double w10 = 0.0;
  for (const auto& a : p1.atoms())
    if (close(a.xstar, {1, 0})) w10 = a.weight;
  CHECK(w10 == doctest::Approx(0.25).epsilon(1e-12));

  auto back = k.recompose();
  REQUIRE(back.atoms().size() == nu.atoms().size());
  for (std::size_t i = 0; i < back.atoms().size(); ++i) {
    CHECK(back.atoms()[i].label == nu.atoms()[i].label);
    CHECK(back.atoms()[i].weight == nu.atoms()[i].weight);
    CHECK(back.atoms()[i].xstar == nu.atoms()[i].xstar);
  }

  CHECK(k.sigma("zz") == 0.0);  // off-support labels carry no mass
  CHECK(throws_errc(Errc::malformed_input, [&] { k.kernel("zz"); }));
  CHECK(throws_errc(Errc::not_positive, [&] {
    disintegrate(AtomicMeasure(sq, {{"t", {1, 0}, -1.0}}));
  }));
}

TEST_CASE("product formula matches direct integration exactly") {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    auto sp = gen::random_space(rng);
    int n_labels = 1 + rng.index(3);
    auto labels = gen::default_labels(n_labels);
    std::vector<Atom> atoms;
    int n_atoms = 1 + rng.index(5);
    for (int i = 0; i < n_atoms; ++i) {
      Vec x = gen::random_sphere_point(rng, *sp);
      double r = rng.uniform(0.05, 0.95);
      for (double& v : x) v *= r;
      atoms.push_back({labels[rng.index(n_labels)], x, rng.uniform(0.1, 2.0)});
    }
    AtomicMeasure nu(sp, atoms);
    auto k = disintegrate(nu);
    auto g = [&](const std::string& t, const Vec& x) {
      return x[0] + (t.size() % 2 ? 0.5 : -0.25) * (x.size() > 1 ? x[1] : 1.0);
    };
    double direct = integrate(nu, g);
    double split = k.product_integral(g);
    CHECK(split == direct);  // identical accumulation order, no rescaling
  }
}

TEST_CASE("barycenter of dual-ball probabilities") {
  auto sq = square();
  ProbabilityAtoms mid(sq, {{{1, 0}, 0.5}, {{0, 1}, 0.5}});
  CHECK(close(barycenter(mid), {0.5, 0.5}));
  ProbabilityAtoms dirac(sq, {{{-1, 0}, 1.0}});
  CHECK(close(barycenter(dirac), {-1, 0}));
  auto cr = Space::polytope({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  ProbabilityAtoms corners(cr, {{{1, 1}, 0.25},
                                {{1, -1}, 0.25},
                                {{-1, 1}, 0.25},
                                {{-1, -1}, 0.25}});
  CHECK(close(barycenter(corners), {0, 0}));
}
