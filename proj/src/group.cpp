#include "tworep/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tworep/errors.hpp"

namespace tworep {

namespace {

std::string triple_string(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<Element> table, std::string name)
    : order_(order), table_(std::move(table)), inverse_(order, -1), name_(std::move(name)) {
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (mul(i, j) == 0) {
        inverse_[i] = j;
        break;
      }
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("entry " + std::to_string(v) + " out of range");
  }

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw NotAGroup("no identity element");

  // Relabel by swapping e and 0.
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);

  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<std::size_t>(relabel[i]) * n + relabel[j]] = relabel[table[i][j]];

  FiniteGroup g(n, std::move(flat), std::move(name));
  for (int i = 0; i < n; ++i) {
    int inv = g.inverse_[i];
    if (inv < 0 || g.mul(inv, i) != 0)
      throw NotAGroup("element " + std::to_string(relabel[i]) + " has no two-sided inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
          throw NotAGroup("associativity fails at " +
                          triple_string(relabel[i], relabel[j], relabel[k]));
  return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(
    int degree, const std::vector<std::vector<int>>& generators, std::string name,
    std::size_t max_order) {
  if (degree <= 0) throw NotAPermutation("degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw NotAPermutation("generator has wrong length");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) throw NotAPermutation("generator is not a bijection");
      seen[v] = true;
    }
  }

  using Perm = std::vector<int>;
  auto compose = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (int i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> found{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        Perm r = compose(g, p);
        if (found.insert(r).second) {
          if (found.size() > max_order)
            throw ClosureTooLarge("closure exceeds " + std::to_string(max_order) + " elements");
          next.push_back(std::move(r));
        }
      }
    frontier = std::move(next);
  }

  // std::set is lexicographic, so the identity permutation is index 0.
  std::vector<Perm> elems(found.begin(), found.end());
  std::map<Perm, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i]] = i;
  const int n = static_cast<int>(elems.size());
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<std::size_t>(i) * n + j] = index.at(compose(elems[i], elems[j]));

  FiniteGroup g(n, std::move(flat), std::move(name));
  g.source_ = PermutationSource{degree, generators, std::move(elems)};
  return g;
}

int FiniteGroup::element_order(Element a) const noexcept {
  int k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<int>> FiniteGroup::cayley() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) t[i][j] = mul(i, j);
  return t;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (!commute(i, j)) return false;
  return true;
}

int FiniteGroup::exponent() const noexcept {
  int e = 1;
  for (int i = 0; i < order_; ++i) e = std::lcm(e, element_order(i));
  return e;
}

namespace groups {

FiniteGroup trivial() { return FiniteGroup::from_cayley_table({{0}}, "1"); }

FiniteGroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_cayley_table(t, "Z" + std::to_string(n));
}

FiniteGroup klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteGroup::from_cayley_table(t, "V4");
}

FiniteGroup symmetric(int degree) {
  std::vector<std::vector<int>> gens;
  if (degree >= 2) {
    std::vector<int> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    gens = {swap, cycle};
  }
  return FiniteGroup::from_permutation_generators(degree, gens, "S" + std::to_string(degree));
}

FiniteGroup dihedral(int n) {
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutation_generators(n, {rot, ref}, "D" + std::to_string(n));
}

FiniteGroup quaternion() {
  // index = 4 * sign + unit, units 1, i, j, k.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a % 4, ub = b % 4;
      int s = (a / 4 + b / 4 + sign[ua][ub]) % 2;
      t[a][b] = 4 * s + unit[ua][ub];
    }
  return FiniteGroup::from_cayley_table(t, "Q8");
}

}  // namespace groups

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const int n = parent_->order();
  local_.assign(n, -1);
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) {
    if (elements_[i] < 0 || elements_[i] >= n) throw NotASubgroup("element out of range");
    local_[elements_[i]] = i;
  }
  if (elements_.empty() || elements_[0] != 0) throw NotASubgroup("identity missing");
  const int m = order();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = local_[parent_->mul(elements_[i], elements_[j])];
      if (p < 0)
        throw NotASubgroup("not closed: " + std::to_string(elements_[i]) + "*" +
                           std::to_string(elements_[j]));
      t[i][j] = p;
    }
  local_group_ = share(FiniteGroup::from_cayley_table(t, parent_->name() + "_sub"));
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  std::vector<Element> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& parent) { return Subgroup(parent, {0}); }

bool Subgroup::contains(const Subgroup& other) const noexcept {
  for (Element g : other.elements_)
    if (!contains(g)) return false;
  return true;
}

Subgroup Subgroup::conjugate(Element g) const {
  std::vector<Element> e;
  e.reserve(elements_.size());
  for (Element x : elements_) e.push_back(parent_->conj(g, x));
  return Subgroup(parent_, std::move(e));
}

namespace {

std::vector<Element> closure(const FiniteGroup& g, std::vector<bool>& member,
                             std::vector<Element> elems) {
  // Multiply until closed; finite groups need no inverses.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])})
        if (!member[p]) {
          member[p] = true;
          elems.push_back(p);
        }
    }
  return elems;
}

}  // namespace

Subgroup generated_subgroup(const GroupPtr& group, const std::vector<Element>& generators) {
  std::vector<bool> member(group->order(), false);
  std::vector<Element> elems{0};
  member[0] = true;
  for (Element x : generators)
    if (!member[x]) {
      member[x] = true;
      elems.push_back(x);
    }
  return Subgroup(group, closure(*group, member, std::move(elems)));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group) {
  const int n = group->order();
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> queue{{0}};
  seen.insert({0});
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto base = queue[q];
    std::vector<bool> in(n, false);
    for (Element x : base) in[x] = true;
    for (Element g = 1; g < n; ++g) {
      if (in[g]) continue;
      std::vector<bool> member = in;
      member[g] = true;
      std::vector<Element> elems = base;
      elems.push_back(g);
      elems = closure(*group, member, std::move(elems));
      // A subgroup's order divides |G|; anything above |G|/2 is G itself.
      if (static_cast<int>(elems.size()) * 2 > n) {
        elems.resize(n);
        std::iota(elems.begin(), elems.end(), 0);
      }
      std::sort(elems.begin(), elems.end());
      if (seen.insert(elems).second) queue.push_back(std::move(elems));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(queue.size());
  for (auto& e : queue) out.emplace_back(group, std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupPtr& group) {
  auto subs = all_subgroups(group);
  std::vector<bool> done(subs.size(), false);
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i].elements()] = i;
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::set<std::size_t> orbit;
    for (Element g = 0; g < group->order(); ++g)
      orbit.insert(index.at(subs[i].conjugate(g).elements()));
    SubgroupClass c{subs[i], {}};
    for (std::size_t j : orbit) {
      done[j] = true;
      c.orbit.push_back(subs[j]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& within, const Subgroup& p,
                                       const Subgroup& q) {
  const auto& g = *within.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<DoubleCoset> out;
  for (Element x : within.elements()) {
    if (seen[x]) continue;
    std::set<Element> coset;
    for (Element a : p.elements())
      for (Element b : q.elements()) coset.insert(g.mul(g.mul(a, x), b));
    for (Element y : coset) seen[y] = true;
    out.push_back({x, std::vector<Element>(coset.begin(), coset.end())});
  }
  return out;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& p, const Subgroup& q) {
  return double_cosets(Subgroup::whole(p.parent()), p, q);
}

std::vector<Element> right_transversal(const Subgroup& within, const Subgroup& q) {
  const auto& g = *within.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> reps;
  for (Element t : within.elements()) {
    if (seen[t]) continue;
    reps.push_back(t);
    for (Element h : q.elements()) seen[g.mul(h, t)] = true;
  }
  return reps;
}

std::vector<Element> right_transversal(const Subgroup& q) {
  return right_transversal(Subgroup::whole(q.parent()), q);
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& group) {
  const auto& g = *group;
  std::vector<bool> seen(g.order(), false);
  std::vector<ConjugacyClass> out;
  for (Element a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::set<Element> cls;
    for (Element x = 0; x < g.order(); ++x) cls.insert(g.conj(x, a));
    for (Element y : cls) seen[y] = true;
    out.push_back({a, std::vector<Element>(cls.begin(), cls.end())});
  }
  return out;
}

Subgroup centralizer(const GroupPtr& group, Element a) {
  std::vector<Element> e;
  for (Element x = 0; x < group->order(); ++x)
    if (group->commute(x, a)) e.push_back(x);
  return Subgroup(group, std::move(e));
}

Subgroup normalizer(const Subgroup& within, const Subgroup& p) {
  std::vector<Element> e;
  for (Element x : within.elements())
    if (p.conjugate(x) == p) e.push_back(x);
  return Subgroup(within.parent(), std::move(e));
}

std::vector<CommutingPairClass> commuting_pair_classes(const GroupPtr& group) {
  const auto& g = *group;
  const int n = g.order();
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  std::vector<CommutingPairClass> out;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!g.commute(a, b) || seen[static_cast<std::size_t>(a) * n + b]) continue;
      std::set<std::pair<Element, Element>> orbit;
      for (Element x = 0; x < n; ++x) orbit.insert({g.conj(x, a), g.conj(x, b)});
      for (const auto& [u, v] : orbit) seen[static_cast<std::size_t>(u) * n + v] = true;
      out.push_back({{a, b}, {orbit.begin(), orbit.end()}});
    }
  return out;
}

}  // namespace tworep
