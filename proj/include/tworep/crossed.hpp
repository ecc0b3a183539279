#pragma once

#include <memory>
#include <tuple>
#include <vector>

#include "tworep/group.hpp"

namespace tworep {

/// G/N for a normal subgroup N, cosets ordered by their least elements.
struct QuotientGroup {
  GroupPtr group;
  std::vector<Element> projection;     // G -> G/N
  std::vector<Element> representatives;  // least element of each coset
};

/// A validated finite crossed module boundary: H -> G with a left action of G
/// on H by automorphisms, written ^g h.
class CrossedModule {
 public:
  /// action[g][h] = ^g h. Throws NotAHomomorphism, NotAnAction,
  /// EquivarianceFailure or PeifferFailure with a witness.
  static CrossedModule validate(GroupPtr h, GroupPtr g, std::vector<Element> boundary,
                                std::vector<std::vector<Element>> action);
  /// G -> G by the identity with the conjugation action.
  static CrossedModule inner(const GroupPtr& g);
  /// 1 -> G.
  static CrossedModule trivial_top(const GroupPtr& g);

  const GroupPtr& h() const noexcept { return h_; }
  const GroupPtr& g() const noexcept { return g_; }
  Element boundary(Element x) const noexcept { return boundary_[x]; }
  Element act(Element g, Element x) const noexcept {
    return action_[static_cast<std::size_t>(g) * h_->order() + x];
  }
  const std::vector<Element>& boundary_map() const noexcept { return boundary_; }
  std::vector<std::vector<Element>> action_table() const;

  /// The image of the boundary, a normal subgroup of G.
  const Subgroup& boundary_image() const noexcept { return image_; }
  /// pi_1 = coker(boundary) with its projection.
  const QuotientGroup& pi1() const noexcept { return pi1_; }
  /// pi_2 = ker(boundary) as a subgroup of H.
  const Subgroup& pi2() const noexcept { return kernel_; }

 private:
  CrossedModule(GroupPtr h, GroupPtr g, std::vector<Element> boundary, std::vector<Element> action);
  GroupPtr h_, g_;
  std::vector<Element> boundary_;
  std::vector<Element> action_;
  Subgroup image_;
  Subgroup kernel_;
  QuotientGroup pi1_;
};

/// The preimage of P <= pi_1(K) in G, as a subgroup of G.
Subgroup preimage(const CrossedModule& k, const Subgroup& p);

/// K_P = (H -> preimage of P). Throws NotASubgroup if P is not a subgroup of pi_1(K).
CrossedModule restrict(const CrossedModule& k, const Subgroup& p);

/// A 2-morphism label: source => target = boundary(label) source.
struct TwoMorphism {
  Element source = 0;
  Element target = 0;
  Element label = 0;
  friend bool operator==(const TwoMorphism&, const TwoMorphism&) = default;
};

/// Builds (source, boundary(label) source, label).
TwoMorphism two_morphism(const CrossedModule& k, Element source, Element label);
bool is_well_formed(const CrossedModule& k, const TwoMorphism& f);

/// f after e; throws NotComposable unless e.target == f.source.
TwoMorphism vertical_compose(const CrossedModule& k, const TwoMorphism& f, const TwoMorphism& e);
/// (f.source f1.source, f.target f1.target, f.label ^{f.source} f1.label)
TwoMorphism horizontal_compose(const CrossedModule& k, const TwoMorphism& f, const TwoMorphism& f1);

/// (a, b, h) with boundary(h) a b = b a.
struct GKTriple {
  Element a = 0;
  Element b = 0;
  Element h = 0;
  friend auto operator<=>(const GKTriple&, const GKTriple&) = default;
};

struct TripleClass {
  GKTriple representative;
  std::vector<GKTriple> orbit;
};

/// Every triple, lexicographically ordered. Throws TooLarge past |G||H| > 4096.
std::vector<GKTriple> triples_G(const CrossedModule& k);
/// g (a, b, h) = (g a g^-1, g b g^-1, ^g h); representatives are least members.
std::vector<TripleClass> triple_classes(const CrossedModule& k);
GKTriple conjugate(const CrossedModule& k, Element g, const GKTriple& t);

}  // namespace tworep
