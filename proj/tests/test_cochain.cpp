#include <doctest.h>

#include <random>
#include <set>

#include "tworep/cochain.hpp"
#include "tworep/errors.hpp"

using namespace tworep;

namespace {

// beta(a^i b^j, a^k b^l) = jk (L/2); element index = i + 2j
Cochain bimodular_v4(const GroupPtr& v4, int level) {
  Cochain c(v4, GModule::trivial(level), 2);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) c.at({g, h}) = ((g >> 1) & (h & 1)) * (level / 2);
  return c;
}

// S3 acting on the two cosets of A3 by the sign
GModule sign_set(const GroupPtr& s3, int level) {
  auto subs = all_subgroups(s3);
  Subgroup a3 = subs[4];
  REQUIRE(a3.order() == 3);
  std::vector<std::vector<int>> action(6, std::vector<int>(2));
  for (int g = 0; g < 6; ++g)
    for (int x = 0; x < 2; ++x) action[g][x] = a3.contains(g) ? x : 1 - x;
  return GModule::permutation(*s3, level, action);
}

}  // namespace

TEST_CASE("differential of low degree cochains") {
  auto z4 = share(groups::cyclic(4));
  Cochain c0(z4, GModule::trivial(4), 0, {3});
  CHECK(differential(c0).is_zero());

  std::mt19937_64 rng(1);
  auto pi = Cochain::random(z4, GModule::trivial(4), 1, rng);
  auto d = differential(pi);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h)
      CHECK(d.at({g, h}) == zmod::reduce(pi.at({h}) - pi.at({z4->mul(g, h)}) + pi.at({g}), 4));
}

TEST_CASE("d o d = 0") {
  std::mt19937_64 rng(2);
  auto s3 = share(groups::symmetric(3));
  auto perm = sign_set(s3, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    int degree = trial % 3;
    auto c = Cochain::random(s3, perm, degree, rng);
    CHECK(differential(differential(c)).is_zero());
  }
  auto d4 = share(groups::dihedral(4));
  for (int degree = 0; degree <= 3; ++degree) {
    auto c = Cochain::random(d4, GModule::trivial(8), degree, rng);
    CHECK(differential(differential(c)).is_zero());
  }
}

TEST_CASE("cocycle and coboundary tests") {
  auto v4 = share(groups::klein_four());
  auto beta = bimodular_v4(v4, 2);
  CHECK(is_cocycle(beta));
  CHECK(is_cocycle(Cochain(v4, GModule::trivial(2), 2)));
  CHECK_FALSE(is_coboundary(beta).has_value());
  CHECK(is_coboundary(Cochain(v4, GModule::trivial(2), 2)).has_value());

  auto s3 = share(groups::symmetric(3));
  Cochain delta(s3, GModule::trivial(6), 2);
  delta.at({1, 2}) = 1;
  CHECK_FALSE(is_cocycle(delta));
  CHECK_THROWS_AS(is_coboundary(delta), NotACocycle);

  std::mt19937_64 rng(3);
  auto perm = sign_set(s3, 6);
  for (int trial = 0; trial < 20; ++trial) {
    auto pi = Cochain::random(s3, perm, 1, rng);
    auto c = differential(pi);
    auto w = is_coboundary(c);
    REQUIRE(w.has_value());
    CHECK(differential(*w) == c);
  }
}

TEST_CASE("normalization") {
  auto s3 = share(groups::symmetric(3));
  Cochain constant(s3, GModule::trivial(6), 2);
  for (std::size_t i = 0; i < constant.tuple_count(); ++i) constant[i] = 5;
  CHECK(is_cocycle(constant));
  CHECK(normalize_cocycle(constant).is_zero());

  std::mt19937_64 rng(4);
  auto perm = sign_set(s3, 6);
  for (int trial = 0; trial < 20; ++trial) {
    auto pi = Cochain::random(s3, perm, 1, rng);
    auto c = differential(pi) + differential(Cochain::random(s3, perm, 1, rng));
    auto n = normalize_cocycle(c);
    CHECK(is_normalized(n));
    CHECK(is_coboundary(n - c).has_value());
    CHECK(normalize_cocycle(n) == n);
  }
}

TEST_CASE("H^2 orders") {
  auto z2 = share(groups::cyclic(2));
  CHECK(h2(z2, GModule::trivial(2)).order() == 2);
  auto v4 = share(groups::klein_four());
  auto h = h2(v4, GModule::trivial(2));
  CHECK(h.order() == 8);
  CHECK(h.invariant_factors == std::vector<Value>{2, 2, 2});
  CHECK(h2(share(groups::trivial()), GModule::trivial(5)).order() == 1);
  // H^2(Z/n, Z/L) = Z/gcd(n, L)
  CHECK(h2(share(groups::cyclic(4)), GModule::trivial(6)).order() == 2);
  CHECK(h2(share(groups::cyclic(6)), GModule::trivial(6)).invariant_factors == std::vector<Value>{6});
  // permutation module on S3/A3 is coinduced from A3: H^2 = H^2(A3, Z/6) = Z/3
  auto s3 = share(groups::symmetric(3));
  CHECK(h2(s3, sign_set(s3, 6)).order() == 3);

  // representatives are normalized cocycles, pairwise distinct classes
  for (std::size_t i = 0; i < h.order(); ++i) {
    CHECK(is_cocycle(h.representatives[i]));
    CHECK(is_normalized(h.representatives[i]));
    for (std::size_t j = 0; j < i; ++j)
      CHECK_FALSE(is_coboundary(h.representatives[i] - h.representatives[j]).has_value());
  }
  CHECK(h.representatives[0].is_zero());
  CHECK_THROWS_AS(h2(share(groups::symmetric(4)), GModule::trivial(24), Bounds{.max_cells = 1000}),
                  TooLarge);
}

TEST_CASE("Schur multipliers") {
  for (int n = 1; n <= 8; ++n) CHECK(schur_classes(share(groups::cyclic(n))).order() == 1);
  auto v4s = schur_classes(share(groups::klein_four()));
  CHECK(v4s.order() == 2);
  CHECK(v4s.classes.invariant_factors == std::vector<Value>{2});
  CHECK(schur_classes(share(groups::symmetric(3))).order() == 1);
  CHECK(schur_classes(share(groups::dihedral(4))).order() == 2);
  CHECK(schur_classes(share(groups::quaternion())).order() == 1);
  CHECK(schur_classes(share(groups::trivial())).order() == 1);
  // at a larger level the count is unchanged
  CHECK(schur_classes(share(groups::klein_four()), 8).order() == 2);
  CHECK_THROWS_AS(schur_classes(share(groups::klein_four()), 6), NotAMultiple);

  auto d4s = schur_classes(share(groups::dihedral(4)));
  for (std::size_t i = 0; i < d4s.order(); ++i) {
    CHECK(d4s.sum[i][d4s.negation[i]] == 0);
    CHECK(d4s.sum[0][i] == static_cast<int>(i));
  }
}

TEST_CASE("cohomology over C^x") {
  auto v4 = share(groups::klein_four());
  auto beta = bimodular_v4(v4, 4);
  CHECK(cohomologous_over_Cx(beta, beta));
  CHECK(cohomologous_over_Cx(beta, normalize_cocycle(beta)));
  CHECK_FALSE(cohomologous_over_Cx(beta, Cochain(v4, GModule::trivial(4), 2)));
  // the symmetric class 2jl-type cocycle of Z/2 is trivial over C^x but not over Z/2
  auto z2 = share(groups::cyclic(2));
  Cochain c(z2, GModule::trivial(2), 2);
  c.at({1, 1}) = 1;
  CHECK(is_cocycle(c));
  CHECK_FALSE(is_coboundary(c).has_value());
  CHECK(cohomologous_over_Cx(c, Cochain(z2, GModule::trivial(2), 2)));
}

TEST_CASE("restriction and conjugate pullback") {
  std::mt19937_64 rng(5);
  auto s3 = share(groups::symmetric(3));
  auto whole = Subgroup::whole(s3);
  auto triv = Subgroup::trivial(s3);
  auto subs = all_subgroups(s3);
  for (int trial = 0; trial < 500; ++trial) {
    auto c = differential(Cochain::random(s3, GModule::trivial(6), 1, rng)) +
             h2(s3, GModule::trivial(6)).representatives.back();
    const Subgroup& p = subs[rng() % subs.size()];
    CHECK(is_cocycle(restrict(c, p)));
    if (trial == 0) {
      CHECK(restrict(c, whole).values() == c.values());
      CHECK(restrict(c, triv).values() == std::vector<Value>{c.at({0, 0})});
    }
  }

  auto d4 = share(groups::dihedral(4));
  auto dw = Subgroup::whole(d4);
  auto sch = schur_classes(d4);
  const Cochain& mu = sch.representative(1);
  CHECK(conjugate_pullback(mu, dw, 0, dw).values() == mu.values());
  for (Element x = 0; x < 8; ++x) {
    auto pulled = conjugate_pullback(mu, dw, x, dw);
    CHECK(is_cocycle(pulled));
    CHECK(cohomologous_over_Cx(pulled, mu));
    for (Element y = 0; y < 8; ++y) {
      auto twice = conjugate_pullback(conjugate_pullback(mu, dw, y, dw), dw, x, dw);
      CHECK(twice == conjugate_pullback(mu, dw, d4->mul(y, x), dw));
    }
  }
  auto d4subs = all_subgroups(d4);
  const Subgroup& small = d4subs[1];
  Element outside = -1;
  for (Element x = 0; x < 8 && outside < 0; ++x)
    if (!small.contains(small.conjugate(x))) outside = x;
  REQUIRE(outside >= 0);
  auto c_small = Cochain(small.as_group(), GModule::trivial(8), 2);
  CHECK_THROWS_AS(conjugate_pullback(c_small, small, outside, small), NotContained);
}

TEST_CASE("H^2 order agrees with brute-force enumeration") {
  struct Case {
    FiniteGroup g;
    int level;
  };
  std::vector<Case> cases = {{groups::cyclic(2), 2}, {groups::cyclic(2), 4}, {groups::cyclic(3), 3},
                             {groups::cyclic(4), 2}, {groups::klein_four(), 2}};
  for (auto& [g, level] : cases) {
    auto gp = share(g);
    const int n = gp->order();
    const std::size_t cells = n * n;
    std::size_t cocycles = 0;
    std::vector<Value> v(cells, 0);
    for (;;) {
      if (is_cocycle(Cochain(gp, GModule::trivial(level), 2, v))) ++cocycles;
      std::size_t k = 0;
      while (k < cells && ++v[k] == level) v[k++] = 0;
      if (k == cells) break;
    }
    std::set<std::vector<Value>> boundaries;
    std::vector<Value> p(n, 0);
    for (;;) {
      boundaries.insert(differential(Cochain(gp, GModule::trivial(level), 1, p)).values());
      int k = 0;
      while (k < n && ++p[k] == level) p[k++] = 0;
      if (k == n) break;
    }
    CHECK(h2(gp, GModule::trivial(level)).order() == cocycles / boundaries.size());
  }
}
