#include "tworep/rep2.hpp"

#include <algorithm>
#include <numeric>

#include "tworep/errors.hpp"
#include "tworep/shapiro.hpp"

namespace tworep {

namespace {

bool same_table(const FiniteGroup& a, const FiniteGroup& b) { return &a == &b || a == b; }

std::vector<Element> intersection(const Subgroup& p, const FiniteGroup& g, const Subgroup& q,
                                  Element x) {
  // P cap x Q x^-1
  std::vector<Element> out;
  for (Element e : p.elements())
    if (q.contains(g.conj(g.inv(x), e))) out.push_back(e);
  return out;
}

// The same cochain read over another pointer to an equal group table.
Cochain rebase(const Cochain& c, const GroupPtr& group) {
  return Cochain(group, c.module(), c.degree(), c.values());
}

}  // namespace

SubgroupAtlas::SubgroupAtlas(GroupPtr group, int level) : group_(std::move(group)), level_(level) {
  const FiniteGroup& g = *group_;
  if (level_ == 0) level_ = g.order();
  if (level_ <= 0 || level_ % g.order() != 0)
    throw NotAMultiple("atlas level must be a multiple of |G| = " + std::to_string(g.order()));

  subgroups_ = all_subgroups(group_);
  const int n = static_cast<int>(subgroups_.size());
  for (int i = 0; i < n; ++i) index_.emplace(subgroups_[i].elements(), i);

  class_rep_.assign(n, -1);
  conjugator_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (class_rep_[i] >= 0) continue;
    // subgroups are sorted, so the first unseen one is least in its class
    reps_.push_back(i);
    for (Element x = 0; x < g.order(); ++x) {
      int j = index_.at(subgroups_[i].conjugate(x).elements());
      if (class_rep_[j] < 0) {
        class_rep_[j] = i;
        conjugator_[j] = x;
      }
    }
  }

  normalizers_.reserve(n);
  schur_.reserve(n);
  const Subgroup whole = Subgroup::whole(group_);
  for (int i = 0; i < n; ++i) {
    normalizers_.push_back(tworep::normalizer(whole, subgroups_[i]));
    schur_.push_back(schur_classes(subgroups_[i].as_group(), level_));
  }

  canonical_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int k = static_cast<int>(schur_[i].order());
    auto& canon = canonical_[i];
    canon.assign(k, -1);
    for (int j = 0; j < k; ++j) {
      if (canon[j] >= 0) continue;
      std::vector<int> orbit;
      for (Element m : normalizers_[i].elements()) orbit.push_back(normalizer_image(i, m, j));
      int least = *std::min_element(orbit.begin(), orbit.end());
      for (int o : orbit) canon[o] = least;
    }
  }
}

int SubgroupAtlas::normalizer_image(int i, Element n, int j) const {
  const Subgroup& p = subgroups_[i];
  return schur_[i].identify(conjugate_pullback(schur_[i].representative(j), p, n, p));
}

int SubgroupAtlas::index_of(const std::vector<Element>& elements) const {
  auto it = index_.find(elements);
  if (it == index_.end()) throw NotASubgroup("element list is not a subgroup of " + group_->name());
  return it->second;
}

int SubgroupAtlas::index_of(const Subgroup& p) const {
  if (!same_table(*p.parent(), *group_)) throw NotASubgroup("subgroup of a different group");
  return index_of(p.elements());
}

std::pair<int, int> SubgroupAtlas::canonical_pair(const Subgroup& p, const Cochain& mu) const {
  const int i = index_of(p);
  const int r = class_rep_[i];
  const Subgroup& rep = subgroups_[r];
  const Subgroup& own = subgroups_[i];
  if (!same_table(*mu.group(), *own.as_group())) throw GroupMismatch("cocycle not over P");
  Cochain pulled = conjugate_pullback(rebase(mu, own.as_group()), own, conjugator_[i], rep);
  if (level_ % pulled.level() != 0)
    throw NotAMultiple("cocycle level " + std::to_string(pulled.level()) +
                       " does not divide the atlas level " + std::to_string(level_));
  return {r, canonical_[r][schur_[r].identify(pulled)]};
}

AtlasPtr make_atlas(const GroupPtr& group, int level) {
  return std::make_shared<const SubgroupAtlas>(group, level);
}

Rep2 Rep2::from_orbits(AtlasPtr atlas, const std::vector<std::pair<Subgroup, Cochain>>& orbits) {
  Rep2 r(std::move(atlas));
  for (const auto& [p, mu] : orbits) {
    auto [i, c] = r.atlas_->canonical_pair(p, mu);
    r.orbits_.push_back({i, c});
  }
  r.canonicalize();
  return r;
}

Rep2 Rep2::from_labels(AtlasPtr atlas, std::vector<OrbitLabel> labels) {
  Rep2 r(std::move(atlas));
  for (const auto& l : labels) {
    if (l.subgroup < 0 || l.subgroup >= static_cast<int>(r.atlas_->subgroups().size()) ||
        l.cls < 0 || l.cls >= static_cast<int>(r.atlas_->schur(l.subgroup).order()))
      throw InvalidArgument("orbit label out of range");
    const Subgroup& p = r.atlas_->subgroup(l.subgroup);
    auto [i, c] = r.atlas_->canonical_pair(p, r.atlas_->schur(l.subgroup).representative(l.cls));
    r.orbits_.push_back({i, c});
  }
  r.canonicalize();
  return r;
}

Rep2 Rep2::linear(AtlasPtr atlas, const Cochain& mu) {
  Subgroup whole = Subgroup::whole(atlas->group());
  return from_orbits(std::move(atlas), {{whole, mu}});
}

Rep2 Rep2::permutation(AtlasPtr atlas, const Subgroup& p) {
  Cochain zero(p.as_group(), GModule::trivial(atlas->level()), 2);
  return from_orbits(std::move(atlas), {{p, zero}});
}

void Rep2::canonicalize() { std::sort(orbits_.begin(), orbits_.end()); }

int Rep2::degree() const {
  int d = 0;
  for (const auto& o : orbits_) d += atlas_->subgroup(o.subgroup).index();
  return d;
}

bool operator==(const Rep2& a, const Rep2& b) {
  if (a.atlas_ != b.atlas_) {
    if (a.atlas_->level() != b.atlas_->level() || !same_table(*a.group(), *b.group())) return false;
  }
  return a.orbits_ == b.orbits_;
}

void require_same_ambient(const Rep2& a, const Rep2& b) {
  if (a.atlas()->level() != b.atlas()->level() || !same_table(*a.group(), *b.group()))
    throw AmbientMismatch(a.group()->name() + " vs " + b.group()->name());
}

Rep2 direct_sum(const Rep2& r, const Rep2& s) {
  require_same_ambient(r, s);
  std::vector<OrbitLabel> labels = r.orbits();
  labels.insert(labels.end(), s.orbits().begin(), s.orbits().end());
  return Rep2::from_labels(r.atlas(), std::move(labels));
}

Rep2 tensor(const Rep2& r, const Rep2& s) {
  require_same_ambient(r, s);
  const SubgroupAtlas& atlas = *r.atlas();
  const FiniteGroup& g = *atlas.group();
  std::vector<std::pair<Subgroup, Cochain>> terms;
  for (std::size_t i = 0; i < r.orbits().size(); ++i) {
    const Subgroup& p = r.orbit_subgroup(i);
    const Cochain& mu = r.orbit_cocycle(i);
    for (std::size_t j = 0; j < s.orbits().size(); ++j) {
      const Subgroup& q = atlas.subgroup(s.orbits()[j].subgroup);
      const Cochain nu = rebase(s.orbit_cocycle(j), q.as_group());
      for (const auto& dc : double_cosets(p, q)) {
        const Element x = dc.representative;
        const Subgroup& meet = atlas.subgroup(atlas.index_of(intersection(p, g, q, x)));
        Cochain sum = conjugate_pullback(mu, p, 0, meet) + conjugate_pullback(nu, q, g.inv(x), meet);
        terms.emplace_back(meet, std::move(sum));
      }
    }
  }
  return Rep2::from_orbits(r.atlas(), terms);
}

Rep2 contragradient(const Rep2& r) {
  std::vector<OrbitLabel> labels;
  for (const auto& o : r.orbits())
    labels.push_back({o.subgroup, r.atlas()->schur(o.subgroup).negation[o.cls]});
  return Rep2::from_labels(r.atlas(), std::move(labels));
}

bool equivalent(const Rep2& r, const Rep2& s) {
  require_same_ambient(r, s);
  return r == s;
}

Rep2 induce(const Rep2& r, const Subgroup& phat, const AtlasPtr& target) {
  if (!same_table(*r.group(), *phat.as_group()))
    throw NotASubgroup("the ambient of r is not the given subgroup");
  if (!same_table(*target->group(), *phat.parent()))
    throw NotASubgroup("the subgroup does not live in the target group");
  if (target->level() % r.atlas()->level() != 0)
    throw NotAMultiple("target level must be a multiple of the source level");
  std::vector<std::pair<Subgroup, Cochain>> terms;
  for (std::size_t k = 0; k < r.orbits().size(); ++k) {
    const Subgroup& q_local = r.orbit_subgroup(k);
    std::vector<Element> elems;
    for (Element e : q_local.elements()) elems.push_back(phat.element(e));
    // phat.element is increasing, so the local tables agree
    Subgroup q = target->subgroup(target->index_of(elems));
    Cochain mu = rebase(r.orbit_cocycle(k), q.as_group()).raised(target->level());
    terms.emplace_back(std::move(q), std::move(mu));
  }
  return Rep2::from_orbits(target, terms);
}

Rep2 mackey_restrict(const Rep2& r, const Subgroup& p, const AtlasPtr& target) {
  const SubgroupAtlas& atlas = *r.atlas();
  const FiniteGroup& g = *atlas.group();
  if (!same_table(*p.parent(), g)) throw NotASubgroup("P is not a subgroup of the ambient group");
  if (!same_table(*target->group(), *p.as_group()))
    throw GroupMismatch("target atlas is not over P");
  if (target->level() % atlas.level() != 0)
    throw NotAMultiple("target level must be a multiple of the source level");
  std::vector<std::pair<Subgroup, Cochain>> terms;
  for (std::size_t k = 0; k < r.orbits().size(); ++k) {
    const Subgroup& q = r.orbit_subgroup(k);
    const Cochain& mu = r.orbit_cocycle(k);
    for (const auto& dc : double_cosets(p, q)) {
      const Element x = dc.representative;
      std::vector<Element> meet = intersection(p, g, q, x);
      const Subgroup& s = atlas.subgroup(atlas.index_of(meet));
      Cochain pulled = conjugate_pullback(mu, q, g.inv(x), s);
      std::vector<Element> local;
      for (Element e : meet) local.push_back(p.local_index(e));
      Subgroup s_local = target->subgroup(target->index_of(local));
      terms.emplace_back(s_local, rebase(pulled, s_local.as_group()).raised(target->level()));
    }
  }
  return Rep2::from_orbits(target, terms);
}

PermCocycleRep to_perm_cocycle(const Rep2& r) {
  const GroupPtr& group = r.group();
  const int order = group->order();
  const int level = r.atlas()->level();
  std::vector<Shapiro> blocks;
  std::vector<int> offset;
  int points = 0;
  for (std::size_t k = 0; k < r.orbits().size(); ++k) {
    blocks.emplace_back(r.orbit_subgroup(k), GModule::trivial(level));
    offset.push_back(points);
    points += blocks.back().coinduced().size();
  }
  std::vector<std::vector<int>> action(order, std::vector<int>(points));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const GModule& m = blocks[k].coinduced();
    for (Element g = 0; g < order; ++g)
      for (int x = 0; x < m.size(); ++x) action[g][offset[k] + x] = offset[k] + m.act(g, x);
  }
  GModule module = GModule::permutation(*group, level, action);
  Cochain theta(group, module, 2);
  const std::size_t tuples = theta.tuple_count();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Cochain part = blocks[k].psi(r.orbit_cocycle(k));
    const int width = part.module().size();
    for (std::size_t t = 0; t < tuples; ++t)
      for (int x = 0; x < width; ++x)
        theta[t * points + offset[k] + x] = part[t * width + x];
  }
  return {std::move(module), std::move(theta)};
}

std::vector<std::vector<int>> set_orbits(const GroupPtr& group, const GModule& m) {
  std::vector<int> seen(m.size(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < m.size(); ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (Element g = 0; g < group->order(); ++g) {
      int y = m.act(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Rep2 from_perm_cocycle(const AtlasPtr& atlas, const PermCocycleRep& p) {
  const GroupPtr& group = atlas->group();
  if (!same_table(*p.theta.group(), *group)) throw GroupMismatch("cocycle over another group");
  if (p.theta.degree() != 2 || !(p.theta.module() == p.module))
    throw InvalidArgument("expected a 2-cochain in the given module");
  if (!is_cocycle(p.theta)) throw NotACocycle("theta is not a 2-cocycle for the permutation action");
  const FiniteGroup& g = *group;
  const int width = p.module.size();
  std::vector<std::pair<Subgroup, Cochain>> terms;
  for (const auto& orbit : set_orbits(group, p.module)) {
    const int x0 = orbit.front();
    std::vector<Element> stab;
    for (Element e = 0; e < g.order(); ++e)
      if (p.module.act(e, x0) == x0) stab.push_back(e);
    Subgroup s = atlas->subgroup(atlas->index_of(stab));
    Cochain mu(s.as_group(), GModule::trivial(p.theta.level()), 2);
    std::size_t t = 0;
    for_each_tuple(s.order(), 2, [&](std::span<const Element> local) {
      Element args[2] = {s.element(local[0]), s.element(local[1])};
      mu[t++] = p.theta[p.theta.tuple_index(args) * width + x0];
    });
    terms.emplace_back(std::move(s), std::move(mu));
  }
  return Rep2::from_orbits(atlas, terms);
}

Rep2 random_rep2(const AtlasPtr& atlas, std::mt19937_64& rng, int max_orbits) {
  const FiniteGroup& g = *atlas->group();
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  const int count = 1 + pick(max_orbits);
  std::vector<std::pair<Subgroup, Cochain>> terms;
  for (int k = 0; k < count; ++k) {
    const int i = pick(static_cast<int>(atlas->subgroups().size()));
    const Subgroup& p = atlas->subgroup(i);
    const SchurClasses& schur = atlas->schur(i);
    Cochain mu = schur.representative(pick(static_cast<int>(schur.order())));
    mu += differential(Cochain::random(p.as_group(), mu.module(), 1, rng));
    // move the orbit to the point x P x^-1
    const Element x = pick(g.order());
    const Subgroup& moved = atlas->subgroup(atlas->index_of(p.conjugate(x)));
    terms.emplace_back(moved, conjugate_pullback(mu, p, g.inv(x), moved));
  }
  return Rep2::from_orbits(atlas, terms);
}

}  // namespace tworep
