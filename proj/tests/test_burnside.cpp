#include <doctest.h>

#include <random>

#include "tworep/burnside.hpp"
#include "tworep/errors.hpp"

using namespace tworep;

namespace {

CycloRat integer(long long v) { return CycloRat::integer(v); }

BurnsideElement random_element(const AtlasPtr& atlas, std::mt19937_64& rng) {
  auto basis = burnside_basis(*atlas);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  BurnsideElement u(atlas);
  for (int k = 0; k < 3; ++k) u += BurnsideElement::basis(atlas, basis[pick(rng)], integer(coeff(rng)));
  return u;
}

}  // namespace

TEST_CASE("basis counts") {
  CHECK(burnside_basis(*make_atlas(share(groups::trivial()))).size() == 1);
  CHECK(burnside_basis(*make_atlas(share(groups::symmetric(3)))).size() == 4);
  CHECK(burnside_basis(*make_atlas(share(groups::klein_four()))).size() == 6);
  CHECK(burnside_basis(*make_atlas(share(groups::cyclic(4)))).size() == 3);
  // 8 subgroup classes; D4 and its two Klein subgroups each add a class
  CHECK(burnside_basis(*make_atlas(share(groups::dihedral(4)))).size() == 11);
  CHECK(burnside_basis(*make_atlas(share(groups::quaternion()))).size() == 6);
}

TEST_CASE("multiplication on basis pairs") {
  for (auto group : {groups::klein_four(), groups::symmetric(3), groups::dihedral(4)}) {
    auto g = share(group);
    auto atlas = make_atlas(g);
    auto basis = burnside_basis(*atlas);
    std::vector<BurnsideElement> e;
    for (const auto& b : basis) e.push_back(BurnsideElement::basis(atlas, b));
    auto one = BurnsideElement::one(atlas);
    const std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(mul(one, e[i]) == e[i]);
      CHECK(mul(e[i], one) == e[i]);
      for (std::size_t j = 0; j < n; ++j) {
        auto ij = mul(e[i], e[j]);
        CHECK(ij == mul(e[j], e[i]));
        for (std::size_t k = 0; k < n; ++k) CHECK(mul(ij, e[k]) == mul(e[i], mul(e[j], e[k])));
      }
    }
    auto free = from_rep2(Rep2::permutation(atlas, Subgroup::trivial(g)));
    CHECK(mul(free, free) == free.scaled(integer(g->order())));
  }
}

TEST_CASE("V4: two distinct order-2 sets") {
  auto g = share(groups::klein_four());
  auto atlas = make_atlas(g);
  auto pa = from_rep2(Rep2::permutation(atlas, generated_subgroup(g, {1})));
  auto pb = from_rep2(Rep2::permutation(atlas, generated_subgroup(g, {2})));
  CHECK(mul(pa, pb) == from_rep2(Rep2::permutation(atlas, Subgroup::trivial(g))));
}

TEST_CASE("from_rep2 is a ring homomorphism") {
  for (auto group : {groups::klein_four(), groups::symmetric(3), groups::dihedral(4)}) {
    auto atlas = make_atlas(share(group));
    CHECK(from_rep2(Rep2(atlas)).is_zero());
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      Rep2 r = random_rep2(atlas, rng);
      Rep2 s = random_rep2(atlas, rng);
      CHECK(from_rep2(tensor(r, s)) == mul(from_rep2(r), from_rep2(s)));
      CHECK(from_rep2(direct_sum(r, s)) == from_rep2(r) + from_rep2(s));
    }
  }
  auto g = share(groups::klein_four());
  auto atlas = make_atlas(g);
  Cochain mu(g, GModule::trivial(4), 2);
  auto lin = from_rep2(Rep2::linear(atlas, mu));
  REQUIRE(lin.terms().size() == 1);
  CHECK(lin.terms().begin()->second == integer(1));
}

TEST_CASE("marks") {
  auto g = share(groups::symmetric(3));
  auto atlas = make_atlas(g);
  std::vector<CycloRat> triv{integer(1)};
  Subgroup whole = Subgroup::whole(g), one = Subgroup::trivial(g);
  CHECK(mark(whole, triv, BurnsideElement::one(atlas)) == integer(1));
  for (int r : atlas->class_representatives()) {
    const Subgroup& q = atlas->subgroup(r);
    CHECK(mark(one, triv, from_rep2(Rep2::permutation(atlas, q))) == integer(q.index()));
  }
  CHECK_THROWS_AS(mark(one, {integer(2)}, BurnsideElement::one(atlas)), AlphaNotHomomorphism);

  auto v4 = share(groups::klein_four());
  auto v4_atlas = make_atlas(v4);
  CHECK_THROWS_AS(mark(Subgroup::whole(v4), {integer(1), integer(2)}, BurnsideElement::one(v4_atlas)),
                  AlphaNotHomomorphism);
}

TEST_CASE("marks are multiplicative") {
  for (auto group : {groups::symmetric(3), groups::klein_four(), groups::dihedral(4)}) {
    auto atlas = make_atlas(share(group));
    std::mt19937_64 rng(77);
    auto m = mark_matrix(atlas);
    for (int trial = 0; trial < 10; ++trial) {
      auto u = random_element(atlas, rng);
      auto v = random_element(atlas, rng);
      auto uv = mul(u, v);
      for (const auto& row : m.rows) {
        const Subgroup& p = atlas->subgroup(row.subgroup);
        auto alpha = character_values(row.alpha, atlas->level());
        CHECK(mark(p, alpha, uv) == mark(p, alpha, u) * mark(p, alpha, v));
        CHECK(mark(p, alpha, u + v) == mark(p, alpha, u) + mark(p, alpha, v));
      }
    }
  }
}

TEST_CASE("dual groups") {
  auto d4 = share(groups::dihedral(4));
  auto schur = schur_classes(d4);
  auto chars = dual_group(schur, 8);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0] == std::vector<int>{0, 0});
  CHECK(chars[1][1] == 4);

  auto z4 = share(groups::cyclic(4));
  CHECK(dual_group(schur_classes(z4), 4).size() == 1);
}

TEST_CASE("mark matrices") {
  auto trivial = mark_matrix(make_atlas(share(groups::trivial())));
  REQUIRE(trivial.entries.size() == 1);
  CHECK(trivial.entries[0] == std::vector<CycloRat>{integer(1)});

  auto s3 = mark_matrix(make_atlas(share(groups::symmetric(3))));
  std::vector<std::vector<long long>> table{{6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}};
  REQUIRE(s3.entries.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(s3.entries[i][j] == integer(table[i][j]));

  for (auto group : {groups::klein_four(), groups::cyclic(4), groups::symmetric(3),
                     groups::dihedral(4), groups::quaternion()}) {
    auto m = mark_matrix(make_atlas(share(group)));
    CHECK(m.rows.size() == m.columns.size());
    CHECK(!determinant(m.entries).is_zero());
  }
}
