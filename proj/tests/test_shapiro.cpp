#include <doctest.h>

#include <random>

#include "tworep/errors.hpp"
#include "tworep/shapiro.hpp"

using namespace tworep;

namespace {

Subgroup find_subgroup(const GroupPtr& g, int order, bool cyclic = true) {
  for (const auto& s : all_subgroups(g)) {
    if (s.order() != order) continue;
    bool is_cyclic = false;
    for (Element x : s.elements()) is_cyclic |= g->element_order(x) == order;
    if (is_cyclic == cyclic) return s;
  }
  FAIL("no such subgroup");
  return Subgroup::whole(g);
}

// Q acting on itself by left multiplication
GModule regular_module(const Subgroup& q, int level) {
  const auto& local = *q.as_group();
  std::vector<std::vector<int>> action(local.order(), std::vector<int>(local.order()));
  for (int a = 0; a < local.order(); ++a)
    for (int b = 0; b < local.order(); ++b) action[a][b] = local.mul(a, b);
  return GModule::permutation(local, level, action);
}

struct Pair {
  GroupPtr g;
  Subgroup q;
};

std::vector<Pair> pairs() {
  auto s3 = share(groups::symmetric(3));
  auto d4 = share(groups::dihedral(4));
  auto z4 = share(groups::cyclic(4));
  return {{s3, find_subgroup(s3, 3)}, {s3, find_subgroup(s3, 2)}, {d4, find_subgroup(d4, 4)},
          {z4, find_subgroup(z4, 2)}};
}

}  // namespace

TEST_CASE("factorization") {
  auto s3 = share(groups::symmetric(3));
  auto a3 = find_subgroup(s3, 3);
  Shapiro sh(a3, GModule::trivial(6));
  CHECK(sh.transversal().size() == 2);
  CHECK(sh.transversal()[0] == 0);
  Element tau = sh.transversal()[1];
  CHECK(s3->element_order(tau) == 2);
  std::vector<Element> gs{tau, tau};
  auto f = sh.factorize(0, gs);
  CHECK(f.h[0] == 0);
  CHECK(f.s[1] == sh.transversal()[1]);
  CHECK(a3.contains(f.h[1]));
  CHECK(f.s[2] == 0);
  CHECK(s3->mul(s3->mul(f.s[0], tau), tau) == s3->mul(s3->mul(f.h[0], f.h[1]), f.s[2]));

  auto f0 = sh.factorize(sh.transversal()[1], {});
  CHECK(f0.h.empty());
  CHECK(f0.s == std::vector<Element>{sh.transversal()[1]});

  // Q = G: h_k = g_k, s_k = 1
  Shapiro whole(Subgroup::whole(s3), GModule::trivial(6));
  std::vector<Element> args{3, 5, 1};
  auto fw = whole.factorize(0, args);
  CHECK(fw.h == args);
  CHECK(fw.s == std::vector<Element>{0, 0, 0, 0});
}

TEST_CASE("coinduced module of a trivial module is the coset space") {
  auto s3 = share(groups::symmetric(3));
  auto c2 = find_subgroup(s3, 2);
  Shapiro sh(c2, GModule::trivial(6));
  CHECK(sh.coinduced().size() == 3);
  // point t is the left coset t^-1 Q; its stabilizer is t^-1 Q t
  for (int ti = 0; ti < 3; ++ti) {
    Element t = sh.transversal()[ti];
    for (Element g = 0; g < 6; ++g) {
      bool fixes = sh.coinduced().act(g, ti) == ti;
      CHECK(fixes == c2.contains(s3->conj(t, g)));
    }
  }
}

TEST_CASE("Shapiro maps are chain maps and phi psi = id") {
  std::mt19937_64 rng(17);
  for (auto& [g, q] : pairs()) {
    const int level = g->order();
    for (const GModule& m : {GModule::trivial(level), regular_module(q, level)}) {
      Shapiro sh(q, m);
      CHECK(sh.phi(sh.psi(Cochain(q.as_group(), m, 2))).is_zero());
      for (int n = 1; n <= 2; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
          auto mu = Cochain::random(q.as_group(), m, n, rng);
          CHECK(sh.phi(sh.psi(mu)) == mu);
          CHECK(differential(sh.psi(mu)) == sh.psi(differential(mu)));

          auto theta = Cochain::random(g, sh.coinduced(), n, rng);
          CHECK(differential(sh.phi(theta)) == sh.phi(differential(theta)));
          // psi phi - id = d varpi + varpi d
          auto lhs = sh.psi(sh.phi(theta)) - theta;
          auto rhs = differential(sh.varpi(theta)) + sh.varpi(differential(theta));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("Q = G makes psi the identity on the single point") {
  std::mt19937_64 rng(3);
  auto d4 = share(groups::dihedral(4));
  Shapiro sh(Subgroup::whole(d4), GModule::trivial(8));
  auto mu = Cochain::random(Subgroup::whole(d4).as_group(), GModule::trivial(8), 2, rng);
  CHECK(sh.psi(mu).values() == mu.values());
  CHECK_THROWS_AS(sh.varpi(Cochain(d4, sh.coinduced(), 0)), DegreeZero);
}

TEST_CASE("psi is injective on degree-2 classes") {
  for (auto& [g, q] : pairs()) {
    const int level = g->order();
    GModule m = GModule::trivial(level);
    Shapiro sh(q, m);
    auto classes = h2(q.as_group(), m);
    for (std::size_t i = 0; i < classes.order(); ++i) {
      auto image = sh.psi(classes.representatives[i]);
      CHECK(is_cocycle(image));
      for (std::size_t j = 0; j < i; ++j)
        CHECK_FALSE(is_coboundary(image - sh.psi(classes.representatives[j])).has_value());
    }
    // Shapiro: H^2(G, Coind M) has the same order as H^2(Q, M)
    CHECK(h2(g, sh.coinduced()).order() == classes.order());
  }
}
