#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tworep {

/// Dense element index into a FiniteGroup. The identity is always 0.
using Element = int;

/// A finite group stored as an explicit multiplication table.
///
/// Elements are the integers 0..order-1 and the identity is always 0; the
/// constructors relabel their input so that this holds. Instances are
/// immutable and are normally shared through `GroupPtr`.
class FiniteGroup {
 public:
  /// Provenance kept so a group read from generators serializes back to
  /// the same generators.
  struct PermutationSource {
    int degree = 0;
    std::vector<std::vector<int>> generators;
    /// Permutation (images array) for each element index.
    std::vector<std::vector<int>> elements;
  };

  /// Validates associativity, identity and inverses exhaustively.
  /// Throws NotAGroup with the violating triple.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                       std::string name);

  /// Closure of `generators` under composition, (p*q)(i) = p(q(i)).
  /// Throws NotAPermutation or ClosureTooLarge.
  static FiniteGroup from_permutation_generators(
      int degree, const std::vector<std::vector<int>>& generators, std::string name,
      std::size_t max_order = 10000);

  int order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inv(g)); }
  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }
  int element_order(Element a) const noexcept;

  std::vector<std::vector<int>> cayley() const;
  const std::vector<Element>& inverses() const noexcept { return inverse_; }
  const std::optional<PermutationSource>& permutation_source() const noexcept {
    return source_;
  }

  bool is_abelian() const noexcept;
  int exponent() const noexcept;

  /// Tables equal (names are labels and are ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.table_ == b.table_;
  }

 private:
  FiniteGroup(int order, std::vector<Element> table, std::string name);

  int order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
  std::optional<PermutationSource> source_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// Common groups used by the bundled corpus and the tests.
namespace groups {
FiniteGroup trivial();
FiniteGroup cyclic(int n);
FiniteGroup klein_four();  // generators a = 1, b = 2, ab = 3
FiniteGroup symmetric(int degree);
FiniteGroup dihedral(int n);  // order 2n
FiniteGroup quaternion();
}  // namespace groups

/// A subgroup of a parent group, canonically stored as its ascending list of
/// element indices. Carries its own FiniteGroup (`as_group`) whose element i
/// is the parent element `elements()[i]`.
class Subgroup {
 public:
  /// Throws NotASubgroup when `elements` is not closed or lacks the identity.
  Subgroup(GroupPtr parent, std::vector<Element> elements);

  static Subgroup whole(const GroupPtr& parent);
  static Subgroup trivial(const GroupPtr& parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int index() const noexcept { return parent_->order() / order(); }
  bool contains(Element g) const noexcept { return local_[g] >= 0; }
  bool contains(const Subgroup& other) const noexcept;
  /// Position of parent element `g` in `elements()`, or -1.
  int local_index(Element g) const noexcept { return local_[g]; }
  Element element(int local) const noexcept { return elements_[local]; }
  const GroupPtr& as_group() const noexcept { return local_group_; }

  /// g P g^-1
  Subgroup conjugate(Element g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.elements_ == b.elements_;
  }
  /// Orders by size, then lexicographically by elements.
  friend bool operator<(const Subgroup& a, const Subgroup& b) noexcept {
    if (a.elements_.size() != b.elements_.size()) return a.elements_.size() < b.elements_.size();
    return a.elements_ < b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> elements_;
  std::vector<int> local_;
  GroupPtr local_group_;
};

struct SubgroupClass {
  Subgroup representative;
  std::vector<Subgroup> orbit;
};

struct DoubleCoset {
  Element representative;
  std::vector<Element> elements;
};

struct ConjugacyClass {
  Element representative;
  std::vector<Element> elements;
};

struct CommutingPairClass {
  std::pair<Element, Element> representative;
  std::vector<std::pair<Element, Element>> orbit;
};

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const GroupPtr& group, const std::vector<Element>& generators);

/// Every subgroup, sorted by (order, elements). Intended for |G| <= 24.
std::vector<Subgroup> all_subgroups(const GroupPtr& group);

/// Orbits of G on all_subgroups by conjugation, representatives lexicographically least.
std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupPtr& group);

/// Partition of G into double cosets P x Q, x ranging over the ambient `within`
/// (defaults to the whole parent group).
std::vector<DoubleCoset> double_cosets(const Subgroup& p, const Subgroup& q);
std::vector<DoubleCoset> double_cosets(const Subgroup& within, const Subgroup& p,
                                       const Subgroup& q);

/// One representative per right coset Q t, the least element of each coset;
/// the identity comes first.
std::vector<Element> right_transversal(const Subgroup& q);
/// Same, for Q inside a larger subgroup `within` of the parent.
std::vector<Element> right_transversal(const Subgroup& within, const Subgroup& q);

std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& group);
Subgroup centralizer(const GroupPtr& group, Element a);
Subgroup normalizer(const Subgroup& within, const Subgroup& p);

/// All commuting pairs partitioned under simultaneous conjugation.
std::vector<CommutingPairClass> commuting_pair_classes(const GroupPtr& group);

}  // namespace tworep
