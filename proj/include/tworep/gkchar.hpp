#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tworep/burnside.hpp"
#include "tworep/crossed.hpp"
#include "tworep/cyclo.hpp"
#include "tworep/rep2.hpp"

namespace tworep {

/// d x d matrix with entry (perm[j], j) = weights[j] and zeros elsewhere.
struct MonomialMatrix {
  std::vector<int> perm;
  std::vector<RootOfUnity> weights;

  int dimension() const noexcept { return static_cast<int>(perm.size()); }
  static MonomialMatrix identity(int d);
  /// Throws InvalidArgument unless perm is a bijection of the right size.
  void check() const;

  MonomialMatrix inverse() const;
  MonomialMatrix scaled(const RootOfUnity& c) const;
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b);
};

/// lambda with a = lambda b, if any.
std::optional<RootOfUnity> scalar_ratio(const MonomialMatrix& a, const MonomialMatrix& b);

/// mu(b, a^-1) mu(a^-1, b)^-1 for commuting a, b of mu's group.
/// Throws NotCommuting, NotNormalized.
RootOfUnity gk_linear(const Cochain& mu, Element a, Element b);

/// Sum over orbits and over right coset representatives t with t a t^-1 and
/// t b t^-1 in P of gk_linear at the conjugated pair. Throws NotCommuting.
CycloInt gk_rep(const Rep2& r, Element a, Element b);

/// Sum over points fixed by a and b of theta(b, a^-1)(x) - theta(a^-1, b)(x).
/// Throws NotCommuting.
CycloInt gk_perm_cocycle(const PermCocycleRep& p, Element a, Element b);

/// f_P^alpha(u) with P = <a, b> and alpha = gk_linear at (a, b).
/// Throws NotCommuting, AlphaIllDefined.
CycloInt gk_as_mark(Element a, Element b, const BurnsideElement& u);

/// rho(g) = left multiplication by g in the twisted group algebra
/// e_g e_h = mu(g,h)^-1 e_gh; returns lambda with
/// rho(a^-1) rho(b) rho(a^-1)^-1 = lambda rho(b).
/// Throws NotCommuting, NotNormalized, NotScalarMultiple.
RootOfUnity oracle_twisted_regular(const Cochain& mu, Element a, Element b);

/// The left-regular monomial matrices of the twisted algebra of mu.
std::vector<MonomialMatrix> twisted_regular(const Cochain& mu);

struct CrossedLinearData {
  CrossedModule k;
  std::vector<MonomialMatrix> rho;     // indexed by G
  std::vector<MonomialMatrix> omega2;  // indexed by H
  Cochain omega3;                      // normalized 2-cocycle over G, trivial module
};

/// Checks the projective law of rho, the twisted homomorphism law of omega2
/// and that omega2(x)^-1 rho(boundary x) commutes with every rho(g).
/// Returns a witness of the first failure.
std::optional<std::string> check_crossed_linear(const CrossedLinearData& data);

/// With s defined by omega2(h) rho(a) rho(b) rho(a)^-1 = s rho(b), returns
/// 1/s. For trivial H this is oracle_twisted_regular(omega3, a, b).
/// Throws TripleNotInG, NotScalarMultiple.
RootOfUnity oracle_crossed_linear(const CrossedLinearData& data, Element a, Element b, Element h);

struct CharTable {
  std::vector<CommutingPairClass> rows;
  std::vector<OrbitLabel> columns;
  std::vector<std::vector<CycloInt>> entries;
};

/// gk_as_mark on every (commuting pair class, basis pair), cross-checked
/// against gk_rep and gk_perm_cocycle. Throws Error("CrossCheckFailure") on a
/// disagreement.
CharTable char_table(const AtlasPtr& atlas);

}  // namespace tworep
