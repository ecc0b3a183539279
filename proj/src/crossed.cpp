#include "tworep/crossed.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tworep/errors.hpp"

namespace tworep {

namespace {

std::string str(Element x) { return std::to_string(x); }

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n) {
  const int order = g->order();
  QuotientGroup q;
  q.projection.assign(order, -1);
  for (Element x = 0; x < order; ++x) {
    if (q.projection[x] >= 0) continue;
    const Element idx = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(x);
    for (Element y : n.elements()) q.projection[g->mul(x, y)] = idx;
  }
  const int m = static_cast<int>(q.representatives.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = q.projection[g->mul(q.representatives[i], q.representatives[j])];
  q.group = share(FiniteGroup::from_cayley_table(table, g->name() + "/N"));
  return q;
}

Subgroup image_of(const GroupPtr& g, std::vector<Element> img) {
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Subgroup(g, img);
}

Subgroup kernel_of(const GroupPtr& h, const std::vector<Element>& boundary) {
  std::vector<Element> ker;
  for (Element x = 0; x < h->order(); ++x)
    if (boundary[x] == 0) ker.push_back(x);
  return Subgroup(h, ker);
}

}  // namespace

CrossedModule::CrossedModule(GroupPtr h, GroupPtr g, std::vector<Element> boundary,
                             std::vector<Element> action)
    : h_(std::move(h)),
      g_(std::move(g)),
      boundary_(std::move(boundary)),
      action_(std::move(action)),
      image_(image_of(g_, boundary_)),
      kernel_(kernel_of(h_, boundary_)),
      pi1_(quotient(g_, image_)) {}

CrossedModule CrossedModule::validate(GroupPtr h, GroupPtr g, std::vector<Element> boundary,
                                      std::vector<std::vector<Element>> action) {
  const int nh = h->order(), ng = g->order();
  if (static_cast<int>(boundary.size()) != nh)
    throw InvalidArgument("boundary needs " + str(nh) + " entries");
  for (Element x : boundary)
    if (x < 0 || x >= ng) throw InvalidArgument("boundary value out of range: " + str(x));
  if (static_cast<int>(action.size()) != ng) throw InvalidArgument("action needs " + str(ng) + " rows");
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(ng) * nh);
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != nh) throw InvalidArgument("action rows need " + str(nh) + " entries");
    for (Element x : row)
      if (x < 0 || x >= nh) throw InvalidArgument("action value out of range: " + str(x));
    flat.insert(flat.end(), row.begin(), row.end());
  }

  for (Element x = 0; x < nh; ++x)
    for (Element y = 0; y < nh; ++y)
      if (boundary[h->mul(x, y)] != g->mul(boundary[x], boundary[y]))
        throw NotAHomomorphism("boundary(h h') != boundary(h) boundary(h') at h=" + str(x) +
                               " h'=" + str(y));

  auto act = [&](Element gg, Element x) { return flat[static_cast<std::size_t>(gg) * nh + x]; };
  for (Element x = 0; x < nh; ++x)
    if (act(0, x) != x) throw NotAnAction("identity moves h=" + str(x));
  for (Element gg = 0; gg < ng; ++gg) {
    std::vector<bool> seen(nh, false);
    for (Element x = 0; x < nh; ++x) {
      if (seen[act(gg, x)]) throw NotAnAction("g=" + str(gg) + " is not a bijection on H");
      seen[act(gg, x)] = true;
      for (Element y = 0; y < nh; ++y)
        if (act(gg, h->mul(x, y)) != h->mul(act(gg, x), act(gg, y)))
          throw NotAnAction("^g(h h') != ^g h ^g h' at g=" + str(gg) + " h=" + str(x) +
                            " h'=" + str(y));
    }
  }
  for (Element a = 0; a < ng; ++a)
    for (Element b = 0; b < ng; ++b)
      for (Element x = 0; x < nh; ++x)
        if (act(g->mul(a, b), x) != act(a, act(b, x)))
          throw NotAnAction("^(gg') h != ^g(^g' h) at g=" + str(a) + " g'=" + str(b) +
                            " h=" + str(x));

  for (Element gg = 0; gg < ng; ++gg)
    for (Element x = 0; x < nh; ++x)
      if (boundary[act(gg, x)] != g->conj(gg, boundary[x]))
        throw EquivarianceFailure("boundary(^g h) != g boundary(h) g^-1 at g=" + str(gg) +
                                  " h=" + str(x));

  for (Element x = 0; x < nh; ++x)
    for (Element y = 0; y < nh; ++y)
      if (act(boundary[x], y) != h->conj(x, y))
        throw PeifferFailure("^boundary(h) h' != h h' h^-1 at h=" + str(x) + " h'=" + str(y));

  return CrossedModule(std::move(h), std::move(g), std::move(boundary), std::move(flat));
}

CrossedModule CrossedModule::inner(const GroupPtr& g) {
  const int n = g->order();
  std::vector<Element> boundary(n);
  std::vector<std::vector<Element>> action(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    boundary[x] = x;
    for (Element y = 0; y < n; ++y) action[x][y] = g->conj(x, y);
  }
  return validate(g, g, std::move(boundary), std::move(action));
}

CrossedModule CrossedModule::trivial_top(const GroupPtr& g) {
  return validate(share(groups::trivial()), g, {0},
                  std::vector<std::vector<Element>>(g->order(), std::vector<Element>{0}));
}

std::vector<std::vector<Element>> CrossedModule::action_table() const {
  std::vector<std::vector<Element>> t(g_->order(), std::vector<Element>(h_->order()));
  for (Element a = 0; a < g_->order(); ++a)
    for (Element x = 0; x < h_->order(); ++x) t[a][x] = act(a, x);
  return t;
}

Subgroup preimage(const CrossedModule& k, const Subgroup& p) {
  if (!(*p.parent() == *k.pi1().group)) throw NotASubgroup("P is not a subgroup of pi_1");
  std::vector<Element> elems;
  for (Element x = 0; x < k.g()->order(); ++x)
    if (p.contains(k.pi1().projection[x])) elems.push_back(x);
  return Subgroup(k.g(), elems);
}

CrossedModule restrict(const CrossedModule& k, const Subgroup& p) {
  Subgroup bar = preimage(k, p);
  std::vector<Element> boundary(k.h()->order());
  for (Element x = 0; x < k.h()->order(); ++x) boundary[x] = bar.local_index(k.boundary(x));
  std::vector<std::vector<Element>> action(bar.order(), std::vector<Element>(k.h()->order()));
  for (int i = 0; i < bar.order(); ++i)
    for (Element x = 0; x < k.h()->order(); ++x) action[i][x] = k.act(bar.element(i), x);
  return CrossedModule::validate(k.h(), bar.as_group(), std::move(boundary), std::move(action));
}

TwoMorphism two_morphism(const CrossedModule& k, Element source, Element label) {
  return {source, k.g()->mul(k.boundary(label), source), label};
}

bool is_well_formed(const CrossedModule& k, const TwoMorphism& f) {
  return f.target == k.g()->mul(k.boundary(f.label), f.source);
}

TwoMorphism vertical_compose(const CrossedModule& k, const TwoMorphism& f, const TwoMorphism& e) {
  if (e.target != f.source)
    throw NotComposable("target " + str(e.target) + " != source " + str(f.source));
  return {e.source, f.target, k.h()->mul(f.label, e.label)};
}

TwoMorphism horizontal_compose(const CrossedModule& k, const TwoMorphism& f, const TwoMorphism& f1) {
  const auto& g = *k.g();
  return {g.mul(f.source, f1.source), g.mul(f.target, f1.target),
          k.h()->mul(f.label, k.act(f.source, f1.label))};
}

std::vector<GKTriple> triples_G(const CrossedModule& k) {
  const int ng = k.g()->order(), nh = k.h()->order();
  if (static_cast<long>(ng) * nh > 4096) throw TooLarge("|G||H| exceeds 4096");
  std::vector<std::vector<Element>> fiber(ng);
  for (Element x = 0; x < nh; ++x) fiber[k.boundary(x)].push_back(x);
  const auto& g = *k.g();
  std::vector<GKTriple> out;
  for (Element a = 0; a < ng; ++a)
    for (Element b = 0; b < ng; ++b) {
      // boundary(h) = b a (a b)^-1
      Element c = g.mul(g.mul(b, a), g.inv(g.mul(a, b)));
      for (Element x : fiber[c]) out.push_back({a, b, x});
    }
  return out;
}

GKTriple conjugate(const CrossedModule& k, Element g, const GKTriple& t) {
  return {k.g()->conj(g, t.a), k.g()->conj(g, t.b), k.act(g, t.h)};
}

std::vector<TripleClass> triple_classes(const CrossedModule& k) {
  auto all = triples_G(k);
  std::set<GKTriple> seen;
  std::vector<TripleClass> out;
  for (const auto& t : all) {
    if (seen.count(t)) continue;
    std::set<GKTriple> orbit;
    for (Element g = 0; g < k.g()->order(); ++g) orbit.insert(conjugate(k, g, t));
    seen.insert(orbit.begin(), orbit.end());
    out.push_back({*orbit.begin(), {orbit.begin(), orbit.end()}});
  }
  return out;
}

}  // namespace tworep
