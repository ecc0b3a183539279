#include "tworep/burnside.hpp"

#include <algorithm>
#include <set>

#include "tworep/errors.hpp"

namespace tworep {

std::vector<OrbitLabel> burnside_basis(const SubgroupAtlas& atlas) {
  std::vector<OrbitLabel> out;
  for (int r : atlas.class_representatives())
    for (int c = 0; c < static_cast<int>(atlas.schur(r).order()); ++c)
      if (atlas.canonical_class(r, c) == c) out.push_back({r, c});
  return out;
}

namespace {

void require_same_atlas(const AtlasPtr& a, const AtlasPtr& b) {
  if (a == b) return;
  if (a->level() != b->level() || !(*a->group() == *b->group()))
    throw GroupMismatch(a->group()->name() + " vs " + b->group()->name());
}

}  // namespace

BurnsideElement BurnsideElement::basis(AtlasPtr atlas, OrbitLabel label, CycloRat c) {
  if (atlas->class_representative(label.subgroup) != label.subgroup ||
      atlas->canonical_class(label.subgroup, label.cls) != label.cls)
    throw InvalidArgument("not a canonical basis pair");
  BurnsideElement e(std::move(atlas));
  e.add(label, c);
  return e;
}

BurnsideElement BurnsideElement::one(AtlasPtr atlas) {
  return from_rep2(Rep2::permutation(atlas, Subgroup::whole(atlas->group())));
}

CycloRat BurnsideElement::coefficient(OrbitLabel label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? CycloRat::integer(0) : it->second;
}

void BurnsideElement::add(OrbitLabel label, const CycloRat& c) {
  auto [it, fresh] = terms_.emplace(label, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  require_same_atlas(atlas_, o.atlas_);
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  require_same_atlas(atlas_, o.atlas_);
  for (const auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

BurnsideElement BurnsideElement::scaled(const CycloRat& c) const {
  BurnsideElement out(atlas_);
  for (const auto& [l, x] : terms_) out.add(l, x * c);
  return out;
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.atlas_ != b.atlas_ &&
      (a.atlas_->level() != b.atlas_->level() || !(*a.atlas_->group() == *b.atlas_->group())))
    return false;
  return a.terms_ == b.terms_;
}

BurnsideElement mul(const BurnsideElement& u, const BurnsideElement& v) {
  require_same_atlas(u.atlas(), v.atlas());
  BurnsideElement out(u.atlas());
  for (const auto& [a, ca] : u.terms()) {
    Rep2 ra = Rep2::from_labels(u.atlas(), {a});
    for (const auto& [b, cb] : v.terms()) {
      Rep2 prod = tensor(ra, Rep2::from_labels(u.atlas(), {b}));
      CycloRat c = ca * cb;
      for (const auto& o : prod.orbits()) out += BurnsideElement::basis(u.atlas(), o, c);
    }
  }
  return out;
}

BurnsideElement from_rep2(const Rep2& r) {
  BurnsideElement out(r.atlas());
  for (const auto& o : r.orbits()) out += BurnsideElement::basis(r.atlas(), o);
  return out;
}

CycloRat mark_by_points(const Subgroup& p, const PointWeight& w, const BurnsideElement& u) {
  const SubgroupAtlas& atlas = *u.atlas();
  const FiniteGroup& g = *atlas.group();
  const int pi = atlas.index_of(p);
  const Subgroup& own = atlas.subgroup(pi);
  CycloRat total = CycloRat::integer(0);
  for (const auto& [label, coeff] : u.terms()) {
    const Subgroup& q = atlas.subgroup(label.subgroup);
    const Cochain& theta = atlas.schur(label.subgroup).representative(label.cls);
    CycloRat sum = CycloRat::integer(0);
    for (Element x = 0; x < g.order(); ++x) {
      bool inside = true;
      for (Element e : own.elements()) inside = inside && q.contains(g.conj(x, e));
      if (!inside) continue;
      Cochain pulled = conjugate_pullback(theta, q, x, own);
      sum += w(pulled, atlas.schur(pi).identify(pulled));
    }
    total += coeff * sum / CycloRat::integer(q.order());
  }
  return total;
}

CycloRat mark(const Subgroup& p, const std::vector<CycloRat>& alpha, const BurnsideElement& u) {
  const SchurClasses& schur = u.atlas()->schur(u.atlas()->index_of(p));
  const int k = static_cast<int>(schur.order());
  if (static_cast<int>(alpha.size()) != k)
    throw AlphaNotHomomorphism("alpha has " + std::to_string(alpha.size()) + " values for " +
                               std::to_string(k) + " classes");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!(alpha[schur.sum[i][j]] == alpha[i] * alpha[j]))
        throw AlphaNotHomomorphism("alpha(" + std::to_string(i) + " + " + std::to_string(j) +
                                   ") != alpha(" + std::to_string(i) + ") alpha(" +
                                   std::to_string(j) + ")");
  return mark_by_points(p, [&](const Cochain&, int cls) { return alpha[cls]; }, u);
}

std::vector<std::vector<int>> dual_group(const SchurClasses& schur, int level) {
  const int k = static_cast<int>(schur.order());
  // greedy generating set
  std::vector<int> gens;
  std::vector<char> span(k, 0);
  span[0] = 1;
  for (int x = 1; x < k; ++x) {
    if (span[x]) continue;
    gens.push_back(x);
    std::vector<int> stack;
    for (int y = 0; y < k; ++y)
      if (span[y]) stack.push_back(y);
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int g : gens) {
        int z = schur.sum[y][g];
        if (!span[z]) {
          span[z] = 1;
          stack.push_back(z);
        }
      }
    }
  }

  std::vector<std::vector<int>> out;
  std::vector<int> e(gens.size(), 0);
  auto extend = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> chi(k, -1);
    chi[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int z = schur.sum[y][gens[i]];
        int v = (chi[y] + e[i]) % level;
        if (chi[z] < 0) {
          chi[z] = v;
          stack.push_back(z);
        } else if (chi[z] != v) {
          return std::nullopt;
        }
      }
    }
    return chi;
  };
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == gens.size()) {
      if (auto chi = extend()) out.push_back(std::move(*chi));
      return;
    }
    const int step = level / schur.element_order(gens[i]);
    for (int v = 0; v < level; v += step) {
      e[i] = v;
      assign(i + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != k)
    throw Error("InternalError", "dual group has the wrong order");
  return out;
}

std::vector<CycloRat> character_values(const std::vector<int>& exponents, int level) {
  std::vector<CycloRat> out;
  for (int e : exponents) out.emplace_back(CycloInt::zeta_power(level, e));
  return out;
}

MarkMatrix mark_matrix(const AtlasPtr& atlas) {
  MarkMatrix m;
  m.columns = burnside_basis(*atlas);
  const int level = atlas->level();
  for (int r : atlas->class_representatives()) {
    const SchurClasses& schur = atlas->schur(r);
    const int k = static_cast<int>(schur.order());
    std::vector<std::vector<int>> images;
    for (Element n : atlas->normalizer(r).elements()) {
      std::vector<int> img(k);
      for (int j = 0; j < k; ++j) img[j] = atlas->normalizer_image(r, n, j);
      images.push_back(std::move(img));
    }
    std::set<std::vector<int>> seen;
    for (const auto& chi : dual_group(schur, level)) {
      if (seen.count(chi)) continue;
      std::vector<int> least = chi;
      for (const auto& img : images) {
        std::vector<int> moved(k);
        for (int j = 0; j < k; ++j) moved[j] = chi[img[j]];
        least = std::min(least, moved);
        seen.insert(std::move(moved));
      }
      m.rows.push_back({r, least});
    }
  }
  std::sort(m.rows.begin(), m.rows.end(), [](const MarkRow& a, const MarkRow& b) {
    return std::tie(a.subgroup, a.alpha) < std::tie(b.subgroup, b.alpha);
  });
  for (const auto& row : m.rows) {
    std::vector<CycloRat> alpha = character_values(row.alpha, level);
    std::vector<CycloRat> entries;
    for (const auto& col : m.columns)
      entries.push_back(mark(atlas->subgroup(row.subgroup), alpha, BurnsideElement::basis(atlas, col)));
    m.entries.push_back(std::move(entries));
  }
  return m;
}

}  // namespace tworep
