#pragma once

#include <span>
#include <vector>

#include "tworep/cochain.hpp"
#include "tworep/group.hpp"

namespace tworep {

/// s_0 = t and s_{k-1} g_k = h_k s_k with h_k in Q, s_k in T.
struct Factorization {
  std::vector<Element> h;  // h_1..h_n
  std::vector<Element> s;  // s_0..s_n
};

/// Cochain-level Shapiro maps between C^n(Q, M) and C^n(G, Coind M) for a
/// fixed right transversal T of Q in G (least coset members, identity first).
///
/// Coind M is realized as the permutation module on T x Y when M is the
/// permutation module on Y (Y a point for trivial M): the function f on G
/// is stored through its values f(t), and g^-1 (t, y) = (s, h^-1 y) where
/// t g = h s.
class Shapiro {
 public:
  /// `module` is a Q-module, i.e. its action is indexed by Q's local elements.
  Shapiro(Subgroup q, GModule module);

  const Subgroup& subgroup() const noexcept { return q_; }
  const GroupPtr& group() const noexcept { return q_.parent(); }
  const std::vector<Element>& transversal() const noexcept { return transversal_; }
  const GModule& base_module() const noexcept { return module_; }
  const GModule& coinduced() const noexcept { return coinduced_; }

  /// Position in T of the representative of the coset Q g.
  int coset_of(Element g) const noexcept { return coset_[g]; }
  Factorization factorize(Element t, std::span<const Element> gs) const;

  /// psi(mu)(g_1..g_n)(t) = mu(h_1..h_n)
  Cochain psi(const Cochain& mu) const;
  /// phi(theta)(h_1..h_n) = theta(h_1..h_n)(1)
  Cochain phi(const Cochain& theta) const;
  /// varpi(theta)(g_1..g_n)(t) = sum_{j=0}^{n} (-1)^{j+1} theta(h_1..h_j, s_j, g_{j+1}..g_n)(1)
  /// for theta of degree n+1. Throws DegreeZero on degree 0.
  Cochain varpi(const Cochain& theta) const;

 private:
  Subgroup q_;
  GModule module_;
  std::vector<Element> transversal_;
  std::vector<int> coset_;
  GModule coinduced_;
};

}  // namespace tworep
