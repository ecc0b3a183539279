#include <doctest.h>

#include "tworep/crossed.hpp"
#include "tworep/errors.hpp"

using namespace tworep;

namespace {

CrossedModule z2_to_z4() {
  auto z2 = share(groups::cyclic(2));
  auto z4 = share(groups::cyclic(4));
  return CrossedModule::validate(z2, z4, {0, 2}, std::vector<std::vector<Element>>(4, {0, 1}));
}

std::vector<TwoMorphism> all_two_morphisms(const CrossedModule& k) {
  std::vector<TwoMorphism> out;
  for (Element s = 0; s < k.g()->order(); ++s)
    for (Element h = 0; h < k.h()->order(); ++h) out.push_back(two_morphism(k, s, h));
  return out;
}

// exhaustive interchange law and well-formedness
void check_interchange(const CrossedModule& k) {
  auto mors = all_two_morphisms(k);
  std::vector<std::pair<TwoMorphism, TwoMorphism>> composable;
  for (const auto& e : mors)
    for (const auto& f : mors)
      if (e.target == f.source) composable.emplace_back(f, e);
  for (const auto& [f, e] : composable) {
    auto fe = vertical_compose(k, f, e);
    REQUIRE(is_well_formed(k, fe));
    for (const auto& [f1, e1] : composable) {
      auto h1 = horizontal_compose(k, f, f1);
      auto h2 = horizontal_compose(k, e, e1);
      REQUIRE(is_well_formed(k, h1));
      auto lhs = vertical_compose(k, h1, h2);
      auto rhs = horizontal_compose(k, fe, vertical_compose(k, f1, e1));
      REQUIRE(lhs == rhs);
    }
  }
}

}  // namespace

TEST_CASE("validation accepts the standard examples") {
  auto k = z2_to_z4();
  CHECK(k.pi1().group->order() == 2);
  CHECK(k.pi2().order() == 1);
  auto inner = CrossedModule::inner(share(groups::symmetric(3)));
  CHECK(inner.pi1().group->order() == 1);
  CHECK(inner.pi2().order() == 1);
  auto top = CrossedModule::trivial_top(share(groups::dihedral(4)));
  CHECK(top.pi1().group->order() == 8);
  CHECK(top.pi2().order() == 1);
  // projection is a surjective homomorphism with kernel the boundary image
  const auto& q = k.pi1();
  for (Element a = 0; a < 4; ++a) {
    CHECK((q.projection[a] == 0) == k.boundary_image().contains(a));
    for (Element b = 0; b < 4; ++b)
      CHECK(q.projection[k.g()->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
  }
}

TEST_CASE("validation rejects broken data with witnesses") {
  auto z2 = share(groups::cyclic(2));
  auto z4 = share(groups::cyclic(4));
  CHECK_THROWS_AS(CrossedModule::validate(z2, z4, {0, 1}, std::vector<std::vector<Element>>(4, {0, 1})),
                  NotAHomomorphism);
  CHECK_THROWS_AS(CrossedModule::validate(z2, z4, {0, 2}, {{0, 1}, {0, 0}, {0, 1}, {0, 1}}),
                  NotAnAction);
  auto s3 = share(groups::symmetric(3));
  // inner data with the trivial action breaks Peiffer
  std::vector<Element> id(6);
  for (int i = 0; i < 6; ++i) id[i] = i;
  std::vector<std::vector<Element>> trivial(6, id);
  try {
    CrossedModule::validate(s3, s3, id, trivial);
    FAIL("expected a failure");
  } catch (const EquivarianceFailure& e) {
    CHECK(std::string(e.what()).find("g=") != std::string::npos);
  }
  // nonabelian H, trivial boundary and trivial action: ^1 h' = h' but h h' h^-1 differs
  std::vector<std::vector<Element>> triv_action(1, id);
  CHECK_THROWS_AS(
      CrossedModule::validate(s3, share(groups::trivial()), std::vector<Element>(6, 0), triv_action),
      PeifferFailure);
}

TEST_CASE("restriction to subgroups of pi_1") {
  auto k = z2_to_z4();
  auto pi1 = k.pi1().group;
  auto whole = restrict(k, Subgroup::whole(pi1));
  CHECK(*whole.g() == *k.g());
  auto bottom = restrict(k, Subgroup::trivial(pi1));
  CHECK(bottom.g()->order() == 2);
  CHECK(preimage(k, Subgroup::trivial(pi1)).elements() == std::vector<Element>{0, 2});
}

TEST_CASE("2-morphism compositions") {
  auto k = z2_to_z4();
  TwoMorphism a{0, 2, 1}, b{2, 0, 1};
  CHECK(vertical_compose(k, b, a) == TwoMorphism{0, 0, 0});
  TwoMorphism id{3, 3, 0};
  auto f = two_morphism(k, 1, 1);
  CHECK(vertical_compose(k, f, TwoMorphism{1, 1, 0}) == f);
  CHECK_THROWS_AS(vertical_compose(k, f, id), NotComposable);
  CHECK(horizontal_compose(k, TwoMorphism{0, 0, 0}, TwoMorphism{0, 0, 0}) == TwoMorphism{0, 0, 0});
}

TEST_CASE("interchange law") {
  check_interchange(z2_to_z4());
  check_interchange(CrossedModule::inner(share(groups::symmetric(3))));
  check_interchange(CrossedModule::inner(share(groups::dihedral(4))));
  check_interchange(CrossedModule::inner(share(groups::quaternion())));
  check_interchange(CrossedModule::trivial_top(share(groups::symmetric(3))));
}

TEST_CASE("triple sets") {
  CHECK(triples_G(z2_to_z4()).size() == 16);
  auto inner = CrossedModule::inner(share(groups::symmetric(3)));
  CHECK(triples_G(inner).size() == 36);
  auto top = CrossedModule::trivial_top(share(groups::symmetric(3)));
  CHECK(triples_G(top).size() == 18);
  CHECK(triple_classes(top).size() == 8);
  for (const auto& k : {inner, z2_to_z4()}) {
    std::size_t total = 0;
    for (const auto& cls : triple_classes(k)) {
      total += cls.orbit.size();
      CHECK(cls.representative == cls.orbit.front());
      for (const auto& t : cls.orbit)
        CHECK(k.g()->mul(k.boundary(t.h), k.g()->mul(t.a, t.b)) == k.g()->mul(t.b, t.a));
    }
    CHECK(total == triples_G(k).size());
  }
}
