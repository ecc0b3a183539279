#pragma once

#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "tworep/cochain.hpp"
#include "tworep/group.hpp"

namespace tworep {

/// Everything about the subgroups of one group that decorated G-sets need:
/// the subgroup list, conjugation data and the Schur classes of every
/// subgroup at a common level. Immutable; share it through `AtlasPtr`.
class SubgroupAtlas {
 public:
  /// `level` = 0 means |G|; otherwise it must be a multiple of |G|.
  explicit SubgroupAtlas(GroupPtr group, int level = 0);

  const GroupPtr& group() const noexcept { return group_; }
  int level() const noexcept { return level_; }

  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  const Subgroup& subgroup(int i) const { return subgroups_[i]; }
  /// Index of a subgroup of `group()`; throws NotASubgroup.
  int index_of(const Subgroup& p) const;
  int index_of(const std::vector<Element>& elements) const;

  /// Index of the least member of the conjugacy class of subgroup i.
  int class_representative(int i) const { return class_rep_[i]; }
  bool is_class_representative(int i) const { return class_rep_[i] == i; }
  /// The least x with x R x^-1 = P_i, R the class representative.
  Element conjugator(int i) const { return conjugator_[i]; }
  /// Indices of the class representatives, in subgroup order.
  const std::vector<int>& class_representatives() const noexcept { return reps_; }

  const SchurClasses& schur(int i) const { return schur_[i]; }
  /// Least class index in the orbit of class j of P_i under N_G(P_i).
  int canonical_class(int i, int j) const { return canonical_[i][j]; }
  /// Class of conjugate_pullback(rep_j, P_i, n, P_i) for n in N_G(P_i).
  int normalizer_image(int i, Element n, int j) const;
  const Subgroup& normalizer(int i) const { return normalizers_[i]; }

  /// (representative index, canonical class) of the orbit (P, mu), mu a
  /// 2-cocycle over P.as_group() at a level dividing level().
  std::pair<int, int> canonical_pair(const Subgroup& p, const Cochain& mu) const;

 private:
  GroupPtr group_;
  int level_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<Element>, int> index_;
  std::vector<int> class_rep_;
  std::vector<Element> conjugator_;
  std::vector<int> reps_;
  std::vector<Subgroup> normalizers_;
  std::vector<SchurClasses> schur_;
  std::vector<std::vector<int>> canonical_;
};

using AtlasPtr = std::shared_ptr<const SubgroupAtlas>;

AtlasPtr make_atlas(const GroupPtr& group, int level = 0);

/// One orbit of a decorated G-set: the subgroup-class representative P
/// (atlas index) and a canonical Schur class of P.
struct OrbitLabel {
  int subgroup = 0;
  int cls = 0;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// A 2-representation of a finite group up to equivalence, stored as its
/// decorated G-set: a sorted list of canonical orbit labels.
class Rep2 {
 public:
  explicit Rep2(AtlasPtr atlas) : atlas_(std::move(atlas)) {}
  /// Canonicalizes each (P, mu) orbit.
  static Rep2 from_orbits(AtlasPtr atlas, const std::vector<std::pair<Subgroup, Cochain>>& orbits);
  static Rep2 from_labels(AtlasPtr atlas, std::vector<OrbitLabel> labels);
  /// The linear 2-representation with cocycle mu over the whole group.
  static Rep2 linear(AtlasPtr atlas, const Cochain& mu);
  /// One orbit (P, trivial cocycle).
  static Rep2 permutation(AtlasPtr atlas, const Subgroup& p);

  const AtlasPtr& atlas() const noexcept { return atlas_; }
  const GroupPtr& group() const noexcept { return atlas_->group(); }
  const std::vector<OrbitLabel>& orbits() const noexcept { return orbits_; }
  const Subgroup& orbit_subgroup(std::size_t k) const { return atlas_->subgroup(orbits_[k].subgroup); }
  /// The stored normalized representative of the orbit's class.
  const Cochain& orbit_cocycle(std::size_t k) const {
    return atlas_->schur(orbits_[k].subgroup).representative(orbits_[k].cls);
  }
  bool empty() const noexcept { return orbits_.empty(); }
  /// sum of |G : P_i|
  int degree() const;

  /// Same group table, level and canonical orbits.
  friend bool operator==(const Rep2& a, const Rep2& b);

 private:
  void canonicalize();
  AtlasPtr atlas_;
  std::vector<OrbitLabel> orbits_;
};

/// Throws AmbientMismatch unless both live over the same group and level.
void require_same_ambient(const Rep2& a, const Rep2& b);

Rep2 direct_sum(const Rep2& r, const Rep2& s);
Rep2 tensor(const Rep2& r, const Rep2& s);
Rep2 contragradient(const Rep2& r);
bool equivalent(const Rep2& r, const Rep2& s);

/// r lives over phat.as_group(); the result lives over `target`, whose group
/// must be phat.parent(). Throws NotASubgroup.
Rep2 induce(const Rep2& r, const Subgroup& phat, const AtlasPtr& target);
/// Restriction to P <= G; `target` is an atlas of p.as_group() at r's level.
Rep2 mackey_restrict(const Rep2& r, const Subgroup& p, const AtlasPtr& target);

/// A finite G-set X with a 2-cocycle valued in the permutation module (Z/L)^X.
struct PermCocycleRep {
  GModule module;
  Cochain theta;
};

PermCocycleRep to_perm_cocycle(const Rep2& r);
/// Throws NotACocycle.
Rep2 from_perm_cocycle(const AtlasPtr& atlas, const PermCocycleRep& p);

/// Points of each orbit of the G-set underlying `m` (m a permutation module).
std::vector<std::vector<int>> set_orbits(const GroupPtr& group, const GModule& m);

/// A random decorated G-set with 1..max_orbits orbits whose cocycles are
/// perturbed by random coboundaries and conjugations before canonicalization.
Rep2 random_rep2(const AtlasPtr& atlas, std::mt19937_64& rng, int max_orbits = 3);

}  // namespace tworep
