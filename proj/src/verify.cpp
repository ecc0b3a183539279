#include "tworep/verify.hpp"

#include <optional>
#include <random>
#include <set>

#include "tworep/burnside.hpp"
#include "tworep/errors.hpp"
#include "tworep/gkchar.hpp"
#include "tworep/shapiro.hpp"

namespace tworep {

namespace {

std::string str(long long v) { return std::to_string(v); }

Subgroup find_subgroup(const GroupPtr& g, int order, bool cyclic) {
  for (const auto& s : all_subgroups(g)) {
    if (s.order() != order) continue;
    bool has_generator = false;
    for (Element x : s.elements()) has_generator |= g->element_order(x) == order;
    if (has_generator == cyclic) return s;
  }
  throw InvalidArgument(g->name() + " has no subgroup of order " + str(order));
}

GModule regular_module(const Subgroup& q, int level) {
  const FiniteGroup& local = *q.as_group();
  std::vector<std::vector<int>> action(local.order(), std::vector<int>(local.order()));
  for (int a = 0; a < local.order(); ++a)
    for (int b = 0; b < local.order(); ++b) action[a][b] = local.mul(a, b);
  return GModule::permutation(local, level, action);
}

std::optional<std::size_t> first_difference(const Cochain& a, const Cochain& b) {
  for (std::size_t i = 0; i < a.values().size(); ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

std::string pair_text(Element a, Element b) { return "(" + str(a) + ", " + str(b) + ")"; }

}  // namespace

SuiteReport verify_shapiro(const io::Corpus& corpus, const SuiteOptions& opt) {
  SuiteReport rep{"shapiro", true, {}, {}};
  const int iters = opt.iters > 0 ? opt.iters : 200;
  std::mt19937_64 rng(opt.seed);
  struct Case {
    std::string name;
    GroupPtr g;
    Subgroup q;
  };
  auto s3 = corpus.group("S3"), d4 = corpus.group("D4"), z4 = corpus.group("Z4");
  std::vector<Case> cases{{"S3 > A3", s3, find_subgroup(s3, 3, true)},
                          {"S3 > Z2", s3, find_subgroup(s3, 2, true)},
                          {"D4 > Z4", d4, find_subgroup(d4, 4, true)},
                          {"Z4 > Z2", z4, find_subgroup(z4, 2, true)}};
  long long checked = 0;
  bool poisoned = false;
  for (const auto& c : cases) {
    const int level = c.g->order();
    for (int regular = 0; regular < 2; ++regular) {
      GModule m = regular ? regular_module(c.q, level) : GModule::trivial(level);
      Shapiro sh(c.q, m);
      const std::string where = c.name + ", " + (regular ? "regular" : "trivial") + " module";
      for (int n = 1; n <= 2; ++n)
        for (int t = 0; t < iters; ++t) {
          const std::string at = where + ", degree " + str(n) + ", sample " + str(t) + ": ";
          Cochain mu = Cochain::random(c.q.as_group(), m, n, rng);
          Cochain psi_mu = sh.psi(mu);
          if (opt.poison && !poisoned) {
            psi_mu[0] = zmod::reduce(psi_mu[0] + 1, level);
            poisoned = true;
          }
          Cochain theta = Cochain::random(c.g, sh.coinduced(), n, rng);
          ++checked;
          if (auto i = first_difference(sh.phi(psi_mu), mu))
            return rep.fail(at + "phi(psi(mu)) differs from mu at flat index " + str(static_cast<long long>(*i))), rep;
          if (auto i = first_difference(differential(psi_mu), sh.psi(differential(mu))))
            return rep.fail(at + "d psi != psi d at flat index " + str(static_cast<long long>(*i))), rep;
          if (auto i = first_difference(differential(sh.phi(theta)), sh.phi(differential(theta))))
            return rep.fail(at + "d phi != phi d at flat index " + str(static_cast<long long>(*i))), rep;
          Cochain lhs = sh.psi(sh.phi(theta)) - theta;
          Cochain rhs = differential(sh.varpi(theta)) + sh.varpi(differential(theta));
          if (auto i = first_difference(lhs, rhs))
            return rep.fail(at + "psi phi - id != d varpi + varpi d at flat index " +
                            str(static_cast<long long>(*i))),
                   rep;
        }
    }
  }
  rep.notes.push_back("pairs: " + str(static_cast<long long>(cases.size())) + ", max degree 2");
  rep.notes.push_back("cochains checked: " + str(checked) + " (" + str(iters) + " per configuration)");
  return rep;
}

SuiteReport verify_oracle(const io::Corpus& corpus, const SuiteOptions& opt) {
  SuiteReport rep{"oracle", true, {}, {}};
  long long checks = 0;
  bool poisoned = false;
  for (const std::string name : {"V4", "Z4", "D4", "Q8"}) {
    const GroupPtr& g = corpus.group(name);
    auto schur = schur_classes(g);
    for (int i = 0; i < static_cast<int>(schur.order()); ++i) {
      const Cochain& mu = schur.representative(i);
      for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b) {
          if (!g->commute(a, b)) continue;
          RootOfUnity lin = gk_linear(mu, a, b);
          if (opt.poison && !poisoned) {
            lin = lin * RootOfUnity(mu.level(), 1);
            poisoned = true;
          }
          RootOfUnity orc = oracle_twisted_regular(mu, a, b);
          ++checks;
          if (!(lin == orc))
            return rep.fail(name + " class " + str(i) + " at " + pair_text(a, b) + ": gk_linear = zeta_" +
                            str(lin.level) + "^" + str(lin.exponent) + ", oracle = zeta_" + str(orc.level) +
                            "^" + str(orc.exponent)),
                   rep;
        }
    }
    if (name == "V4") {
      // the nontrivial class pairs any two distinct involutions to -1
      if (schur.order() != 2) return rep.fail("V4 should have 2 Schur classes"), rep;
      for (Element a = 1; a < 4; ++a)
        for (Element b = 1; b < 4; ++b) {
          if (a == b) continue;
          RootOfUnity v = gk_linear(schur.representative(1), a, b);
          if (!(v == RootOfUnity(v.level, v.level / 2)))
            return rep.fail("V4 nontrivial class at " + pair_text(a, b) + ": expected -1, got zeta_" +
                            str(v.level) + "^" + str(v.exponent)),
                   rep;
        }
      rep.notes.push_back("V4 nontrivial class gives -1 on every pair of distinct involutions");
    }
    rep.notes.push_back(name + ": " + str(static_cast<long long>(schur.order())) + " classes");
  }
  rep.notes.push_back("comparisons: " + str(checks));
  return rep;
}

SuiteReport verify_burnside(const io::Corpus& corpus, const SuiteOptions& opt) {
  SuiteReport rep{"burnside", true, {}, {}};
  const int iters = opt.iters > 0 ? opt.iters : 20;
  std::mt19937_64 rng(opt.seed);
  bool poisoned = false;
  for (const std::string name : {"V4", "Z4", "S3", "D4", "Q8"}) {
    const GroupPtr& g = corpus.group(name);
    auto atlas = make_atlas(g);
    auto basis = burnside_basis(*atlas);
    const int n = static_cast<int>(basis.size());

    // G-orbits on all (subgroup, class) pairs, counted directly
    std::set<std::pair<int, int>> seen;
    int orbits = 0;
    for (int i = 0; i < static_cast<int>(atlas->subgroups().size()); ++i)
      for (int j = 0; j < static_cast<int>(atlas->schur(i).order()); ++j) {
        if (seen.count({i, j})) continue;
        ++orbits;
        const Subgroup& p = atlas->subgroup(i);
        for (Element x = 0; x < g->order(); ++x) {
          const int k = atlas->index_of(p.conjugate(x));
          const Subgroup& q = atlas->subgroup(k);
          Cochain moved = conjugate_pullback(atlas->schur(i).representative(j), p, g->inv(x), q);
          seen.insert({k, atlas->schur(k).identify(moved)});
        }
      }
    if (orbits != n) return rep.fail(name + ": " + str(n) + " basis pairs but " + str(orbits) + " orbits"), rep;

    auto marks = mark_matrix(atlas);
    if (static_cast<int>(marks.rows.size()) != n) return rep.fail(name + ": mark matrix is not square"), rep;
    if (determinant(marks.entries).is_zero()) return rep.fail(name + ": mark matrix is singular"), rep;

    std::vector<BurnsideElement> e;
    for (const auto& b : basis) e.push_back(BurnsideElement::basis(atlas, b));
    std::vector<std::vector<BurnsideElement>> prod(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) prod[i].push_back(mul(e[i], e[j]));
    if (opt.poison && !poisoned) {
      prod[0][n - 1] += e[0];
      poisoned = true;
    }
    auto table_mul = [&](const BurnsideElement& u, const BurnsideElement& v) {
      BurnsideElement out(atlas);
      for (int i = 0; i < n; ++i) {
        CycloRat a = u.coefficient(basis[i]);
        if (a.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          CycloRat b = v.coefficient(basis[j]);
          if (!b.is_zero()) out += prod[i][j].scaled(a * b);
        }
      }
      return out;
    };
    const int one = static_cast<int>(std::find(basis.begin(), basis.end(),
                                               OrbitLabel{atlas->index_of(Subgroup::whole(g)), 0}) -
                                     basis.begin());
    for (int i = 0; i < n; ++i) {
      if (!(prod[one][i] == e[i]) || !(prod[i][one] == e[i]))
        return rep.fail(name + ": <triv, G> does not fix basis pair " + str(i)), rep;
      for (int j = 0; j < n; ++j) {
        if (!(prod[i][j] == prod[j][i]))
          return rep.fail(name + ": product of basis pairs " + pair_text(i, j) + " is not commutative"), rep;
        for (int k = 0; k < n; ++k)
          if (!(table_mul(prod[i][j], e[k]) == table_mul(e[i], prod[j][k])))
            return rep.fail(name + ": basis pairs (" + str(i) + ", " + str(j) + ", " + str(k) +
                            ") are not associative"),
                   rep;
      }
    }
    if (!(prod[0][0] == e[0].scaled(CycloRat::integer(g->order()))))
      return rep.fail(name + ": <triv,1>^2 != |G| <triv,1>"), rep;

    std::uniform_int_distribution<int> pick(0, n - 1), coeff(-3, 3);
    for (int t = 0; t < iters; ++t) {
      BurnsideElement u(atlas), v(atlas);
      for (int k = 0; k < 2; ++k) {
        u += e[pick(rng)].scaled(CycloRat::integer(coeff(rng)));
        v += e[pick(rng)].scaled(CycloRat::integer(coeff(rng)));
      }
      BurnsideElement uv = mul(u, v);
      for (const auto& row : marks.rows) {
        const Subgroup& p = atlas->subgroup(row.subgroup);
        auto alpha = character_values(row.alpha, atlas->level());
        if (!(mark(p, alpha, uv) == mark(p, alpha, u) * mark(p, alpha, v)))
          return rep.fail(name + ": mark at subgroup " + str(row.subgroup) + " is not multiplicative (sample " +
                          str(t) + ")"),
                 rep;
      }
    }
    rep.notes.push_back(name + ": " + str(n) + " basis pairs, mark determinant nonzero");
  }
  return rep;
}

namespace {

std::optional<std::string> interchange_witness(const CrossedModule& k) {
  std::vector<TwoMorphism> mors;
  for (Element s = 0; s < k.g()->order(); ++s)
    for (Element h = 0; h < k.h()->order(); ++h) mors.push_back(two_morphism(k, s, h));
  std::vector<std::pair<TwoMorphism, TwoMorphism>> composable;
  for (const auto& e : mors)
    for (const auto& f : mors)
      if (e.target == f.source) composable.emplace_back(f, e);
  auto text = [](const TwoMorphism& m) {
    return "(" + str(m.source) + " => " + str(m.target) + " by " + str(m.label) + ")";
  };
  for (const auto& [f, e] : composable) {
    const TwoMorphism fe = vertical_compose(k, f, e);
    if (!is_well_formed(k, fe)) return "vertical composite " + text(fe) + " is malformed";
    for (const auto& [f1, e1] : composable) {
      const TwoMorphism lhs = vertical_compose(k, horizontal_compose(k, f, f1), horizontal_compose(k, e, e1));
      const TwoMorphism rhs = horizontal_compose(k, fe, vertical_compose(k, f1, e1));
      if (!(lhs == rhs))
        return "interchange fails for f = " + text(f) + ", e = " + text(e) + ", f' = " + text(f1) +
               ", e' = " + text(e1);
    }
  }
  return std::nullopt;
}

}  // namespace

SuiteReport verify_crossed(const io::Corpus& corpus, const SuiteOptions& opt) {
  SuiteReport rep{"crossed", true, {}, {}};
  for (const auto& [name, k] : corpus.crossed) {
    if (name.rfind("broken_", 0) == 0) return rep.fail(name + " was accepted"), rep;
    const int size = k.g()->order() * k.h()->order();
    std::string law = "interchange law skipped (|G||H| > 64)";
    if (size <= 64) {
      if (auto w = interchange_witness(k)) return rep.fail(name + ": " + *w), rep;
      law = "interchange law holds";
    }
    rep.notes.push_back(name + ": |pi_1| = " + str(k.pi1().group->order()) + ", |pi_2| = " +
                        str(k.pi2().order()) + ", |triples| = " + str(static_cast<long long>(triples_G(k).size())) +
                        ", " + law);
  }
  for (const auto& [name, why] : corpus.rejected) {
    if (name.rfind("broken_", 0) != 0) return rep.fail(name + " was rejected: " + why), rep;
    rep.notes.push_back(name + ": rejected, " + why);
  }
  if (opt.poison && !corpus.crossed.empty()) {
    const CrossedModule& k = corpus.crossed.begin()->second;
    auto action = k.action_table();
    auto boundary = k.boundary_map();
    // send the last element of H to the identity under the action of the last element of G
    action.back().back() = 0;
    try {
      CrossedModule::validate(k.h(), k.g(), boundary, action);
      rep.notes.push_back("poisoned input was accepted");
    } catch (const Error& e) {
      return rep.fail(corpus.crossed.begin()->first + " with a poisoned action entry: " + e.what()), rep;
    }
  }
  return rep;
}

SuiteReport verify_three_way(const GroupPtr& group, const SuiteOptions& opt) {
  SuiteReport rep{"three-way", true, {}, {}};
  const int iters = opt.iters > 0 ? opt.iters : 50;
  std::mt19937_64 rng(opt.seed);
  auto atlas = make_atlas(group);
  const FiniteGroup& g = *group;
  bool poisoned = false;
  long long checks = 0;
  for (int t = 0; t < iters; ++t) {
    Rep2 r = random_rep2(atlas, rng);
    PermCocycleRep p = to_perm_cocycle(r);
    BurnsideElement u = from_rep2(r);
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b) {
        if (!g.commute(a, b)) continue;
        CycloInt x = gk_rep(r, a, b);
        CycloInt y = gk_perm_cocycle(p, a, b);
        if (opt.poison && !poisoned) {
          y += CycloInt::integer(1);
          poisoned = true;
        }
        CycloInt z = gk_as_mark(a, b, u);
        ++checks;
        if (!(x == y) || !(x == z))
          return rep.fail(g.name() + " sample " + str(t) + " at " + pair_text(a, b) + ": gk_rep = " +
                          x.to_string() + ", gk_perm_cocycle = " + y.to_string() + ", gk_as_mark = " + z.to_string()),
                 rep;
      }
  }
  rep.notes.push_back(g.name() + ": " + str(iters) + " random 2-representations, " + str(checks) + " comparisons");
  return rep;
}

SuiteReport run_suite(const std::string& name, const io::Corpus& corpus, const SuiteOptions& opt) {
  if (name == "shapiro") return verify_shapiro(corpus, opt);
  if (name == "oracle") return verify_oracle(corpus, opt);
  if (name == "burnside") return verify_burnside(corpus, opt);
  if (name == "crossed") return verify_crossed(corpus, opt);
  throw InvalidArgument("unknown suite " + name + " (expected shapiro, oracle, burnside or crossed)");
}

}  // namespace tworep
