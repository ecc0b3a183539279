#include "tworep/gkchar.hpp"

#include <numeric>

#include "tworep/errors.hpp"

namespace tworep {

namespace {

void require_commuting(const FiniteGroup& g, Element a, Element b) {
  if (!g.commute(a, b))
    throw NotCommuting("elements " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
}

RootOfUnity zeta(int level, Value e) { return RootOfUnity(level, e); }

}  // namespace

MonomialMatrix MonomialMatrix::identity(int d) {
  MonomialMatrix m;
  m.perm.resize(d);
  std::iota(m.perm.begin(), m.perm.end(), 0);
  m.weights.assign(d, RootOfUnity::one());
  return m;
}

void MonomialMatrix::check() const {
  const int d = dimension();
  if (static_cast<int>(weights.size()) != d) throw InvalidArgument("weights and permutation differ in size");
  std::vector<char> hit(d, 0);
  for (int p : perm) {
    if (p < 0 || p >= d || hit[p]) throw InvalidArgument("monomial matrix permutation is not a bijection");
    hit[p] = 1;
  }
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix out;
  const int d = dimension();
  out.perm.resize(d);
  out.weights.resize(d);
  for (int j = 0; j < d; ++j) {
    out.perm[perm[j]] = j;
    out.weights[perm[j]] = weights[j].inverse();
  }
  return out;
}

MonomialMatrix MonomialMatrix::scaled(const RootOfUnity& c) const {
  MonomialMatrix out = *this;
  for (auto& w : out.weights) w = w * c;
  return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dimension() != b.dimension()) throw InvalidArgument("monomial matrices differ in dimension");
  MonomialMatrix out;
  const int d = b.dimension();
  out.perm.resize(d);
  out.weights.resize(d);
  for (int j = 0; j < d; ++j) {
    out.perm[j] = a.perm[b.perm[j]];
    out.weights[j] = a.weights[b.perm[j]] * b.weights[j];
  }
  return out;
}

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
  return a.perm == b.perm && a.weights == b.weights;
}

std::optional<RootOfUnity> scalar_ratio(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.perm != b.perm) return std::nullopt;
  if (a.perm.empty()) return RootOfUnity::one();
  RootOfUnity lambda = a.weights[0] * b.weights[0].inverse();
  for (int j = 1; j < a.dimension(); ++j)
    if (!(a.weights[j] == lambda * b.weights[j])) return std::nullopt;
  return lambda;
}

RootOfUnity gk_linear(const Cochain& mu, Element a, Element b) {
  const FiniteGroup& g = *mu.group();
  require_commuting(g, a, b);
  if (!is_normalized(mu)) throw NotNormalized("gk_linear needs a normalized cocycle");
  const Element ai = g.inv(a);
  return zeta(mu.level(), mu.at({b, ai}) - mu.at({ai, b}));
}

CycloInt gk_rep(const Rep2& r, Element a, Element b) {
  const FiniteGroup& g = *r.group();
  require_commuting(g, a, b);
  CycloInt total(r.atlas()->level());
  for (std::size_t k = 0; k < r.orbits().size(); ++k) {
    const Subgroup& p = r.orbit_subgroup(k);
    const Cochain& mu = r.orbit_cocycle(k);
    for (Element t : right_transversal(p)) {
      Element x = g.conj(t, a), y = g.conj(t, b);
      if (p.contains(x) && p.contains(y))
        total += root_to_cyclo(gk_linear(mu, p.local_index(x), p.local_index(y)));
    }
  }
  return total;
}

CycloInt gk_perm_cocycle(const PermCocycleRep& p, Element a, Element b) {
  const FiniteGroup& g = *p.theta.group();
  require_commuting(g, a, b);
  const Element ai = g.inv(a);
  CycloInt total(p.theta.level());
  for (int x = 0; x < p.module.size(); ++x) {
    if (p.module.act(a, x) != x || p.module.act(b, x) != x) continue;
    total += root_to_cyclo(zeta(p.theta.level(), p.theta.at({b, ai}, x) - p.theta.at({ai, b}, x)));
  }
  return total;
}

CycloInt gk_as_mark(Element a, Element b, const BurnsideElement& u) {
  const SubgroupAtlas& atlas = *u.atlas();
  require_commuting(*atlas.group(), a, b);
  const Subgroup& p = atlas.subgroup(atlas.index_of(generated_subgroup(atlas.group(), {a, b})));
  const Element al = p.local_index(a), bl = p.local_index(b);
  const SchurClasses& schur = atlas.schur(atlas.index_of(p));
  std::vector<RootOfUnity> alpha;
  for (int i = 0; i < static_cast<int>(schur.order()); ++i)
    alpha.push_back(gk_linear(schur.representative(i), al, bl));
  auto weight = [&](const Cochain& pulled, int cls) {
    RootOfUnity v = gk_linear(pulled, al, bl);
    if (!(v == alpha[cls]))
      throw AlphaIllDefined("class " + std::to_string(cls) + " takes two values at (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
    return CycloRat(root_to_cyclo(v));
  };
  CycloRat value = mark_by_points(p, weight, u);
  if (!value.is_integral()) throw Error("InternalError", "2-character value is not integral");
  return value.numerator();
}

std::vector<MonomialMatrix> twisted_regular(const Cochain& mu) {
  const FiniteGroup& g = *mu.group();
  const int n = g.order();
  std::vector<MonomialMatrix> rho(n);
  for (Element x = 0; x < n; ++x) {
    rho[x].perm.resize(n);
    rho[x].weights.resize(n);
    for (Element h = 0; h < n; ++h) {
      rho[x].perm[h] = g.mul(x, h);
      rho[x].weights[h] = zeta(mu.level(), -mu.at({x, h}));
    }
  }
  return rho;
}

RootOfUnity oracle_twisted_regular(const Cochain& mu, Element a, Element b) {
  const GroupPtr& group = mu.group();
  const FiniteGroup& g = *group;
  require_commuting(g, a, b);
  if (!is_normalized(mu)) throw NotNormalized("oracle needs a normalized cocycle");
  const int level = mu.level();
  auto rho = twisted_regular(mu);

  // the projective cocycle actually realized by rho
  Cochain nu(group, GModule::trivial(level), 2);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      auto ratio = scalar_ratio(rho[g.mul(x, y)], rho[x] * rho[y]);
      if (!ratio) throw NotScalarMultiple("rho(gh) is not a multiple of rho(g) rho(h)");
      nu.at({x, y}) = raise_level(*ratio, level).exponent;
    }
  if (!is_cocycle(nu) || !cohomologous_over_Cx(nu, mu))
    throw Error("InternalError", "twisted regular representation realizes another class");

  const Element ai = g.inv(a);
  MonomialMatrix m = rho[ai] * rho[b] * rho[ai].inverse();
  auto lambda = scalar_ratio(m, rho[b]);
  if (!lambda) throw NotScalarMultiple("rho(a^-1) rho(b) rho(a^-1)^-1 is not a multiple of rho(b)");
  return *lambda;
}

std::optional<std::string> check_crossed_linear(const CrossedLinearData& data) {
  const FiniteGroup& g = *data.k.g();
  const FiniteGroup& h = *data.k.h();
  if (static_cast<int>(data.rho.size()) != g.order()) return "rho must have one matrix per element of G";
  if (static_cast<int>(data.omega2.size()) != h.order()) return "omega2 must have one matrix per element of H";
  if (!(*data.omega3.group() == g) || data.omega3.degree() != 2 || !data.omega3.module().is_trivial())
    return "omega3 must be a 2-cochain over G with trivial coefficients";
  if (!is_cocycle(data.omega3) || !is_normalized(data.omega3)) return "omega3 is not a normalized cocycle";
  const int d = data.rho[0].dimension();
  try {
    for (const auto& m : data.rho) m.check();
    for (const auto& m : data.omega2) m.check();
  } catch (const InvalidArgument& e) {
    return std::string(e.what());
  }
  for (const auto* list : {&data.rho, &data.omega2})
    for (const auto& m : *list)
      if (m.dimension() != d) return "matrices differ in dimension";
  const int level = data.omega3.level();
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (!(data.rho[g.mul(x, y)] == (data.rho[x] * data.rho[y]).scaled(zeta(level, data.omega3.at({x, y})))))
        return "projective law fails at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
  for (Element x = 0; x < h.order(); ++x)
    for (Element y = 0; y < h.order(); ++y) {
      RootOfUnity c = zeta(level, data.omega3.at({data.k.boundary(x), data.k.boundary(y)}));
      if (!(data.omega2[h.mul(x, y)] == (data.omega2[x] * data.omega2[y]).scaled(c)))
        return "omega2 law fails at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
    }
  for (Element x = 0; x < h.order(); ++x) {
    MonomialMatrix c = data.omega2[x].inverse() * data.rho[data.k.boundary(x)];
    for (Element y = 0; y < g.order(); ++y)
      if (!(c * data.rho[y] == data.rho[y] * c))
        return "omega2(" + std::to_string(x) + ") and rho(boundary) disagree on rho(" + std::to_string(y) + ")";
  }
  return std::nullopt;
}

RootOfUnity oracle_crossed_linear(const CrossedLinearData& data, Element a, Element b, Element h) {
  const FiniteGroup& g = *data.k.g();
  if (g.mul(g.mul(data.k.boundary(h), a), b) != g.mul(b, a))
    throw TripleNotInG("boundary(h) a b != b a for (" + std::to_string(a) + ", " + std::to_string(b) +
                       ", " + std::to_string(h) + ")");
  MonomialMatrix m = data.omega2[h] * data.rho[a] * data.rho[b] * data.rho[a].inverse();
  auto s = scalar_ratio(m, data.rho[b]);
  if (!s) throw NotScalarMultiple("omega2(h) rho(a) rho(b) rho(a)^-1 is not a multiple of rho(b)");
  return s->inverse();
}

CharTable char_table(const AtlasPtr& atlas) {
  CharTable t;
  t.rows = commuting_pair_classes(atlas->group());
  t.columns = burnside_basis(*atlas);
  std::vector<Rep2> reps;
  std::vector<PermCocycleRep> perms;
  for (const auto& c : t.columns) {
    reps.push_back(Rep2::from_labels(atlas, {c}));
    perms.push_back(to_perm_cocycle(reps.back()));
  }
  for (const auto& row : t.rows) {
    auto [a, b] = row.representative;
    std::vector<CycloInt> entries;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      CycloInt v = gk_as_mark(a, b, BurnsideElement::basis(atlas, t.columns[j]));
      if (!(v == gk_rep(reps[j], a, b)) || !(v == gk_perm_cocycle(perms[j], a, b)))
        throw Error("CrossCheckFailure", "formulas disagree at pair (" + std::to_string(a) + ", " +
                                             std::to_string(b) + "), column " + std::to_string(j));
      entries.push_back(std::move(v));
    }
    t.entries.push_back(std::move(entries));
  }
  return t;
}

}  // namespace tworep
