#pragma once

#include <functional>
#include <map>
#include <vector>

#include "tworep/cyclo.hpp"
#include "tworep/rep2.hpp"

namespace tworep {

/// Basis pairs <Theta, P> of the Burnside ring: one per G-orbit of
/// (subgroup, Schur class), in atlas order.
std::vector<OrbitLabel> burnside_basis(const SubgroupAtlas& atlas);

/// A Q(zeta_L)-linear combination of basis pairs, L the atlas level.
class BurnsideElement {
 public:
  explicit BurnsideElement(AtlasPtr atlas) : atlas_(std::move(atlas)) {}
  /// c <Theta, P>; `label` must be canonical.
  static BurnsideElement basis(AtlasPtr atlas, OrbitLabel label, CycloRat c = CycloRat::integer(1));
  /// <trivial, G>
  static BurnsideElement one(AtlasPtr atlas);

  const AtlasPtr& atlas() const noexcept { return atlas_; }
  const std::map<OrbitLabel, CycloRat>& terms() const noexcept { return terms_; }
  CycloRat coefficient(OrbitLabel label) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement scaled(const CycloRat& c) const;
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

 private:
  void add(OrbitLabel label, const CycloRat& c);
  AtlasPtr atlas_;
  std::map<OrbitLabel, CycloRat> terms_;
};

/// Throws GroupMismatch when the elements live over different atlases.
BurnsideElement mul(const BurnsideElement& u, const BurnsideElement& v);
BurnsideElement from_rep2(const Rep2& r);

/// Value of alpha on the decoration of one P-fixed point: the pulled-back
/// cocycle over P.as_group() and its class index in the atlas.
using PointWeight = std::function<CycloRat(const Cochain& cocycle, int cls)>;

/// (1/|Q|) sum over g with g P g^-1 in Q of w(Theta pulled back along g),
/// extended linearly over the basis pairs of u.
CycloRat mark_by_points(const Subgroup& p, const PointWeight& w, const BurnsideElement& u);

/// The mark f_P^alpha, alpha[i] the value on Schur class i of P.
/// Throws AlphaNotHomomorphism.
CycloRat mark(const Subgroup& p, const std::vector<CycloRat>& alpha, const BurnsideElement& u);

/// Characters of H^2(P, C^x) as exponents: chi(i) = zeta_L^{chars[k][i]}.
/// The trivial character comes first.
std::vector<std::vector<int>> dual_group(const SchurClasses& schur, int level);

struct MarkRow {
  int subgroup;            // class representative index
  std::vector<int> alpha;  // exponents over zeta_L, indexed by Schur class
};

struct MarkMatrix {
  std::vector<OrbitLabel> columns;
  std::vector<MarkRow> rows;
  std::vector<std::vector<CycloRat>> entries;
};

/// One row per N_G(P)-orbit of characters alpha, P over the subgroup-class
/// representatives; orbits are represented by their lexicographically
/// least exponent vector.
MarkMatrix mark_matrix(const AtlasPtr& atlas);

std::vector<CycloRat> character_values(const std::vector<int>& exponents, int level);

}  // namespace tworep
