#include <doctest.h>

#include <random>
#include <set>

#include "tworep/errors.hpp"
#include "tworep/rep2.hpp"

using namespace tworep;

namespace {

Cochain bimodular_v4(const GroupPtr& v4, int level) {
  Cochain c(v4, GModule::trivial(level), 2);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) c.at({g, h}) = ((g >> 1) & (h & 1)) * (level / 2);
  return c;
}

Subgroup find_subgroup(const GroupPtr& g, int order, bool cyclic) {
  for (const auto& s : all_subgroups(g)) {
    if (s.order() != order) continue;
    bool has_generator = false;
    for (Element e : s.elements()) has_generator |= g->element_order(e) == order;
    if (has_generator == cyclic) return s;
  }
  FAIL("no such subgroup");
  return Subgroup::trivial(g);
}

// Restricts the G-set and its cocycle to P by hand, then reads off orbits.
Rep2 restrict_by_hand(const PermCocycleRep& p, const Subgroup& sub, const AtlasPtr& target) {
  GModule m = p.module.restricted(sub);
  Cochain theta(sub.as_group(), m, 2);
  const int width = m.size();
  for (int i = 0; i < sub.order(); ++i)
    for (int j = 0; j < sub.order(); ++j)
      for (int x = 0; x < width; ++x)
        theta.at({i, j}, x) = p.theta.at({sub.element(i), sub.element(j)}, x);
  return from_perm_cocycle(target, {m, theta});
}

std::vector<OrbitLabel> basis_labels(const SubgroupAtlas& atlas) {
  std::vector<OrbitLabel> out;
  for (int r : atlas.class_representatives())
    for (int c = 0; c < static_cast<int>(atlas.schur(r).order()); ++c)
      if (atlas.canonical_class(r, c) == c) out.push_back({r, c});
  return out;
}

}  // namespace

TEST_CASE("atlas data") {
  auto s3 = make_atlas(share(groups::symmetric(3)));
  CHECK(s3->subgroups().size() == 6);
  CHECK(s3->class_representatives().size() == 4);
  CHECK(basis_labels(*s3).size() == 4);
  for (int i = 0; i < 6; ++i) {
    const Subgroup& p = s3->subgroup(i);
    const Subgroup& r = s3->subgroup(s3->class_representative(i));
    CHECK(r.conjugate(s3->conjugator(i)) == p);
  }

  auto v4 = make_atlas(share(groups::klein_four()));
  CHECK(basis_labels(*v4).size() == 6);
  CHECK(v4->schur(4).order() == 2);

  auto d4 = make_atlas(share(groups::dihedral(4)));
  CHECK(d4->class_representatives().size() == 8);

  auto trivial = make_atlas(share(groups::trivial()));
  CHECK(basis_labels(*trivial).size() == 1);

  CHECK_THROWS_AS(make_atlas(share(groups::cyclic(4)), 6), NotAMultiple);
}

TEST_CASE("direct sum") {
  auto g = share(groups::symmetric(3));
  auto atlas = make_atlas(g);
  Rep2 zero(atlas);
  Rep2 reg = Rep2::permutation(atlas, Subgroup::trivial(g));
  Rep2 sign = Rep2::permutation(atlas, find_subgroup(g, 3, true));
  CHECK(direct_sum(reg, zero) == reg);
  Rep2 twice = direct_sum(sign, sign);
  REQUIRE(twice.orbits().size() == 2);
  CHECK(twice.orbits()[0] == twice.orbits()[1]);
  CHECK(direct_sum(reg, sign).degree() == reg.degree() + sign.degree());
  CHECK(direct_sum(reg, sign) == direct_sum(sign, reg));

  auto other = make_atlas(share(groups::cyclic(6)));
  CHECK_THROWS_AS(direct_sum(reg, Rep2(other)), AmbientMismatch);
  auto other_level = make_atlas(g, 12);
  CHECK_THROWS_AS(direct_sum(reg, Rep2::permutation(other_level, Subgroup::trivial(g))),
                  AmbientMismatch);
}

TEST_CASE("tensor product") {
  for (auto group : {groups::symmetric(3), groups::klein_four(), groups::dihedral(4)}) {
    auto g = share(group);
    auto atlas = make_atlas(g);
    Rep2 one = Rep2::permutation(atlas, Subgroup::whole(g));
    Rep2 reg = Rep2::permutation(atlas, Subgroup::trivial(g));

    Rep2 sq = tensor(reg, reg);
    CHECK(sq.orbits().size() == static_cast<std::size_t>(g->order()));
    for (const auto& o : sq.orbits()) CHECK(o == reg.orbits()[0]);

    std::mt19937_64 rng(g->order());
    for (int trial = 0; trial < 20; ++trial) {
      Rep2 r = random_rep2(atlas, rng);
      Rep2 s = random_rep2(atlas, rng);
      CHECK(tensor(one, r) == r);
      CHECK(tensor(r, one) == r);
      CHECK(tensor(r, s).degree() == r.degree() * s.degree());
    }
  }
}

TEST_CASE("V4: distinct order-2 permutation sets multiply to the free orbit") {
  auto g = share(groups::klein_four());
  auto atlas = make_atlas(g);
  Rep2 pa = Rep2::permutation(atlas, generated_subgroup(g, {1}));
  Rep2 pb = Rep2::permutation(atlas, generated_subgroup(g, {2}));
  CHECK(tensor(pa, pb) == Rep2::permutation(atlas, Subgroup::trivial(g)));
  // P x P = 2 copies of P
  CHECK(tensor(pa, pa) == direct_sum(pa, pa));
}

TEST_CASE("ring laws on random triples") {
  for (auto group : {groups::klein_four(), groups::symmetric(3), groups::dihedral(4),
                     groups::quaternion()}) {
    auto g = share(group);
    auto atlas = make_atlas(g);
    std::mt19937_64 rng(17 + g->order());
    for (int trial = 0; trial < 15; ++trial) {
      Rep2 a = random_rep2(atlas, rng, 2);
      Rep2 b = random_rep2(atlas, rng, 2);
      Rep2 c = random_rep2(atlas, rng, 2);
      CHECK(tensor(a, b) == tensor(b, a));
      CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
      CHECK(direct_sum(a, b) == direct_sum(b, a));
      CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
      CHECK(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
    }
  }
}

TEST_CASE("contragradient") {
  auto g = share(groups::klein_four());
  auto atlas = make_atlas(g);
  Rep2 triv = Rep2::linear(atlas, Cochain(g, GModule::trivial(4), 2));
  Rep2 twisted = Rep2::linear(atlas, bimodular_v4(g, 4));
  CHECK(!(triv == twisted));
  CHECK(contragradient(triv) == triv);
  CHECK(tensor(twisted, contragradient(twisted)) == triv);

  std::mt19937_64 rng(5);
  for (auto group : {groups::dihedral(4), groups::quaternion(), groups::cyclic(4)}) {
    auto gg = share(group);
    auto a = make_atlas(gg);
    for (int trial = 0; trial < 10; ++trial) {
      Rep2 r = random_rep2(a, rng);
      CHECK(contragradient(contragradient(r)) == r);
      CHECK(contragradient(r).degree() == r.degree());
    }
  }
}

TEST_CASE("linear 2-representations form the Schur multiplier") {
  for (auto group : {groups::klein_four(), groups::dihedral(4), groups::quaternion(),
                     groups::cyclic(6), groups::symmetric(3)}) {
    auto g = share(group);
    auto atlas = make_atlas(g);
    const int whole = atlas->index_of(Subgroup::whole(g));
    const SchurClasses& schur = atlas->schur(whole);
    std::vector<Rep2> linear;
    for (int i = 0; i < static_cast<int>(schur.order()); ++i)
      linear.push_back(Rep2::linear(atlas, schur.representative(i)));
    std::set<OrbitLabel> labels;
    for (const auto& r : linear) {
      REQUIRE(r.orbits().size() == 1);
      labels.insert(r.orbits()[0]);
    }
    CHECK(labels.size() == schur.order());
    for (const auto& r : linear)
      for (const auto& s : linear) {
        Rep2 t = tensor(r, s);
        REQUIRE(t.orbits().size() == 1);
        CHECK(labels.count(t.orbits()[0]) == 1);
      }
  }
}

TEST_CASE("induction") {
  auto g = share(groups::symmetric(3));
  auto atlas = make_atlas(g);
  Subgroup whole = Subgroup::whole(g);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Rep2 r = random_rep2(atlas, rng);
    CHECK(induce(r, whole, atlas) == r);
  }

  Subgroup a3 = find_subgroup(g, 3, true);
  auto a3_atlas = make_atlas(a3.as_group());
  Rep2 reg_a3 = Rep2::permutation(a3_atlas, Subgroup::trivial(a3.as_group()));
  Rep2 up = induce(reg_a3, a3, atlas);
  CHECK(up == Rep2::permutation(atlas, Subgroup::trivial(g)));
  CHECK(up.degree() == 6);
  Rep2 lin = Rep2::linear(a3_atlas, Cochain(a3.as_group(), GModule::trivial(3), 2));
  CHECK(induce(lin, a3, atlas).degree() == 2);

  Subgroup z2 = find_subgroup(g, 2, true);
  CHECK_THROWS_AS(induce(reg_a3, z2, atlas), NotASubgroup);
}

TEST_CASE("Mackey restriction") {
  auto g = share(groups::symmetric(3));
  auto atlas = make_atlas(g);
  Subgroup whole = Subgroup::whole(g);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Rep2 r = random_rep2(atlas, rng);
    CHECK(mackey_restrict(r, whole, make_atlas(g, g->order())) == r);
  }

  Subgroup a3 = find_subgroup(g, 3, true);
  Subgroup z2 = find_subgroup(g, 2, true);
  auto z2_atlas = make_atlas(z2.as_group(), 6);
  Rep2 res = mackey_restrict(Rep2::permutation(atlas, a3), z2, z2_atlas);
  CHECK(res == Rep2::permutation(z2_atlas, Subgroup::trivial(z2.as_group())));
  CHECK(res.degree() == 2);
}

TEST_CASE("Mackey restriction of induced sets matches the restricted G-set") {
  for (auto group : {groups::symmetric(3), groups::dihedral(4)}) {
    auto g = share(group);
    const int n = g->order();
    auto atlas = make_atlas(g);
    std::vector<AtlasPtr> local_atlas;
    for (const auto& p : atlas->subgroups()) local_atlas.push_back(make_atlas(p.as_group(), n));
    for (int h : atlas->class_representatives()) {
      const Subgroup& phat = atlas->subgroup(h);
      auto source = make_atlas(phat.as_group());
      for (const auto& label : basis_labels(*source)) {
        Rep2 up = induce(Rep2::from_labels(source, {label}), phat, atlas);
        PermCocycleRep x = to_perm_cocycle(up);
        for (std::size_t i = 0; i < atlas->subgroups().size(); ++i) {
          const Subgroup& p = atlas->subgroup(static_cast<int>(i));
          Rep2 res = mackey_restrict(up, p, local_atlas[i]);
          CHECK(res == restrict_by_hand(x, p, local_atlas[i]));
          CHECK(res.degree() == up.degree());
        }
      }
    }
  }
}

TEST_CASE("permutation-module form") {
  auto g = share(groups::klein_four());
  auto atlas = make_atlas(g);
  Cochain mu = bimodular_v4(g, 4);
  PermCocycleRep lin = to_perm_cocycle(Rep2::linear(atlas, mu));
  CHECK(lin.module.size() == 1);
  CHECK(lin.theta.values() == atlas->schur(4).representative(atlas->schur(4).identify(mu)).values());

  PermCocycleRep reg = to_perm_cocycle(Rep2::permutation(atlas, Subgroup::trivial(g)));
  CHECK(reg.module.size() == 4);
  CHECK(reg.theta.is_zero());
  for (int x = 0; x < 4; ++x)
    for (int e = 0; e < 4; ++e) CHECK(reg.module.act(e, x) == g->mul(e, x));

  CHECK(from_perm_cocycle(atlas, {GModule::trivial(4), mu}) == Rep2::linear(atlas, mu));
  CHECK(from_perm_cocycle(atlas, reg) == Rep2::permutation(atlas, Subgroup::trivial(g)));

  std::mt19937_64 rng(4);
  Cochain junk = Cochain::random(g, reg.module, 2, rng);
  while (is_cocycle(junk)) junk = Cochain::random(g, reg.module, 2, rng);
  CHECK_THROWS_AS(from_perm_cocycle(atlas, {reg.module, junk}), NotACocycle);
}

TEST_CASE("classification roundtrip") {
  for (auto group : {groups::symmetric(3), groups::dihedral(4)}) {
    auto g = share(group);
    auto atlas = make_atlas(g);
    std::mt19937_64 rng(100 + g->order());
    for (int trial = 0; trial < 40; ++trial) {
      Rep2 r = random_rep2(atlas, rng);
      PermCocycleRep p = to_perm_cocycle(r);
      CHECK(p.module.size() == r.degree());
      CHECK(is_cocycle(p.theta));
      CHECK(from_perm_cocycle(atlas, p) == r);
      // a cohomologous cocycle on the same G-set
      p.theta += differential(Cochain::random(g, p.module, 1, rng));
      CHECK(from_perm_cocycle(atlas, p) == r);
    }
  }
}

TEST_CASE("equivalence") {
  auto g = share(groups::klein_four());
  auto atlas = make_atlas(g);
  Rep2 reg = Rep2::permutation(atlas, Subgroup::trivial(g));
  Cochain mu = bimodular_v4(g, 4);
  Rep2 twisted = Rep2::linear(atlas, mu);
  CHECK(equivalent(twisted, twisted));
  CHECK(!equivalent(reg, twisted));
  std::mt19937_64 rng(3);
  Cochain shifted = mu + differential(Cochain::random(g, GModule::trivial(4), 1, rng));
  CHECK(equivalent(Rep2::linear(atlas, shifted), twisted));
  // the same decoration on a conjugate orbit
  auto s3 = share(groups::symmetric(3));
  auto s3_atlas = make_atlas(s3);
  std::vector<Rep2> transpositions;
  for (const auto& p : s3_atlas->subgroups())
    if (p.order() == 2) transpositions.push_back(Rep2::permutation(s3_atlas, p));
  REQUIRE(transpositions.size() == 3);
  CHECK(equivalent(transpositions[0], transpositions[2]));
}
