#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "tworep/group.hpp"
#include "tworep/zmod.hpp"

namespace tworep {

using Value = zmod::Int;

/// Coefficients Z/L, either with trivial action (one coordinate) or as the
/// permutation module (Z/L)^X for a left G-set X, where (g.f)(x) = f(g^-1 x).
class GModule {
 public:
  GModule() = default;  // trivial, level 1
  static GModule trivial(int level);
  /// action[g][x] = g.x; checked to be a left action of `group`.
  /// Throws NotAnAction.
  static GModule permutation(const FiniteGroup& group, int level,
                             const std::vector<std::vector<int>>& action);

  int level() const noexcept { return level_; }
  /// |X|, or 1 for the trivial module.
  int size() const noexcept { return size_; }
  bool is_trivial() const noexcept { return action_.empty(); }
  /// g.x
  int act(Element g, int x) const noexcept {
    return action_.empty() ? x : action_[static_cast<std::size_t>(g) * size_ + x];
  }
  std::vector<std::vector<int>> action_table(int group_order) const;

  /// Same action with coefficients Z/new_level.
  GModule with_level(int new_level) const;
  /// Action of the subgroup P, indexed by P's local elements.
  GModule restricted(const Subgroup& p) const;

  friend bool operator==(const GModule& a, const GModule& b) noexcept {
    return a.level_ == b.level_ && a.size_ == b.size_ && a.action_ == b.action_;
  }

 private:
  GModule(int level, int size, std::vector<int> action)
      : level_(level), size_(size), action_(std::move(action)) {}
  int level_ = 1;
  int size_ = 1;
  std::vector<int> action_;  // |G| x size, empty when trivial
};

/// A function G^n -> M in additive notation. Values are stored flat:
/// index = tuple * |X| + x with the tuple read row-major, g_1 most significant.
class Cochain {
 public:
  Cochain(GroupPtr group, GModule module, int degree);
  Cochain(GroupPtr group, GModule module, int degree, std::vector<Value> values);
  static Cochain random(GroupPtr group, GModule module, int degree, std::mt19937_64& rng);

  const GroupPtr& group() const noexcept { return group_; }
  const GModule& module() const noexcept { return module_; }
  int degree() const noexcept { return degree_; }
  int level() const noexcept { return module_.level(); }
  std::size_t tuple_count() const noexcept { return tuples_; }
  const std::vector<Value>& values() const noexcept { return values_; }

  std::size_t tuple_index(std::span<const Element> args) const noexcept;
  Value at(std::span<const Element> args, int x = 0) const noexcept {
    return values_[tuple_index(args) * module_.size() + x];
  }
  Value at(std::initializer_list<Element> args, int x = 0) const noexcept {
    return at(std::span<const Element>(args.begin(), args.size()), x);
  }
  Value& at(std::span<const Element> args, int x = 0) noexcept {
    return values_[tuple_index(args) * module_.size() + x];
  }
  Value& at(std::initializer_list<Element> args, int x = 0) noexcept {
    return at(std::span<const Element>(args.begin(), args.size()), x);
  }
  Value& operator[](std::size_t flat) noexcept { return values_[flat]; }
  Value operator[](std::size_t flat) const noexcept { return values_[flat]; }

  bool is_zero() const noexcept;
  /// The same cochain with values read in Z/new_level (scaled by new/L).
  Cochain raised(int new_level) const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain operator-() const;
  Cochain scaled(Value k) const;
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  void check_compatible(const Cochain& o) const;
  GroupPtr group_;
  GModule module_;
  int degree_;
  std::size_t tuples_;
  std::vector<Value> values_;
};

/// Visits every tuple of G^n in storage order.
template <class F>
void for_each_tuple(int order, int n, F&& f) {
  std::vector<Element> t(n, 0);
  for (;;) {
    f(std::span<const Element>(t));
    int k = n - 1;
    while (k >= 0 && ++t[k] == order) t[k--] = 0;
    if (k < 0) return;
  }
}

Cochain differential(const Cochain& c);
/// Matrix of d: C^n -> C^{n+1} over Z/L.
zmod::Matrix differential_matrix(const FiniteGroup& group, const GModule& module, int degree);

bool is_cocycle(const Cochain& c);

/// Decides membership in the image of d: C^{n-1} -> C^n and identifies
/// classes modulo that image. Reusable across many queries.
class CoboundarySolver {
 public:
  CoboundarySolver(GroupPtr group, GModule module, int degree);

  int degree() const noexcept { return degree_; }
  /// pi with d(pi) = c, if any.
  std::optional<Cochain> preimage(const Cochain& c) const;
  /// Equal keys iff the difference is a coboundary.
  std::vector<Value> key(const Cochain& c) const;

 private:
  GroupPtr group_;
  GModule module_;
  int degree_;
  zmod::Diagonalization diag_;
};

/// Witness pi with d(pi) = c, or nothing. Throws NotACocycle.
std::optional<Cochain> is_coboundary(const Cochain& c);

/// Cohomologous cocycle with c(g,1) = c(1,g) = 0, obtained by subtracting
/// d of the constant 1-cochain c(1,1). Throws NotACocycle.
Cochain normalize_cocycle(const Cochain& c);
bool is_normalized(const Cochain& c);

struct Bounds {
  /// Largest allowed |G|^3 * |X| for an H^2 computation.
  std::size_t max_cells = 20736;
  /// Largest number of classes enumerated.
  std::size_t max_classes = 4096;
};

struct CohomologyClassSet {
  GroupPtr group;
  GModule module;
  /// Normalized cocycles, one per class; the zero class comes first.
  std::vector<Cochain> representatives;
  /// Invariant factors n_1 | n_2 | ...; empty for the trivial group.
  std::vector<Value> invariant_factors;

  std::size_t order() const noexcept { return representatives.size(); }
};

/// H^2(G, M) with one normalized representative per class.
/// Throws TooLarge past the bounds.
CohomologyClassSet h2(const GroupPtr& group, const GModule& module, const Bounds& bounds = {});

/// Decides equality of classes in H^2(G, C^x) for mu_L-valued cocycles by
/// testing the difference at level L^2.
class CxClassifier {
 public:
  CxClassifier(GroupPtr group, int level);
  int level() const noexcept { return level_; }
  std::vector<Value> key(const Cochain& c) const;
  bool same_class(const Cochain& a, const Cochain& b) const;

 private:
  int level_;
  CoboundarySolver solver_;
};

bool cohomologous_over_Cx(const Cochain& a, const Cochain& b);

/// H^2(G, C^x) with its group law, from mu_L-valued representatives.
struct SchurClasses {
  CohomologyClassSet classes;
  std::shared_ptr<const CxClassifier> classifier;
  std::vector<std::vector<Value>> keys;
  /// sum[i][j] = index of the class of reps[i] + reps[j]
  std::vector<std::vector<int>> sum;
  std::vector<int> negation;

  int level() const noexcept { return classes.module.level(); }
  std::size_t order() const noexcept { return classes.order(); }
  /// Index of the class of a mu_L-valued 2-cocycle. Throws NotACocycle.
  int identify(const Cochain& c) const;
  const Cochain& representative(int i) const { return classes.representatives[i]; }
  int element_order(int i) const;

 private:
  std::map<std::vector<Value>, int> index_;
  friend SchurClasses schur_classes(const GroupPtr&, int, const Bounds&);
};

/// Classes of H^2(G, C^x) represented at level `level` (0 means |G|); the
/// level must be a multiple of |G|.
SchurClasses schur_classes(const GroupPtr& group, int level = 0, const Bounds& bounds = {});

/// Restriction to P^n; the result lives over P.as_group().
Cochain restrict(const Cochain& c, const Subgroup& p);

/// c^x(p_1..p_n) = c(x p_1 x^-1, ...) for c over Q and x P x^-1 inside Q.
/// `c` lives over q.as_group(); the result lives over p.as_group().
/// Trivial modules only. Throws NotContained.
Cochain conjugate_pullback(const Cochain& c, const Subgroup& q, Element x, const Subgroup& p);

}  // namespace tworep
