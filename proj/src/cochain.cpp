#include "tworep/cochain.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "tworep/errors.hpp"

namespace tworep {

namespace {

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what) {
  if (&a != &b && !(a == b)) throw GroupMismatch(what);
}

// Sparse rows of d: C^n -> C^{n+1}, one per (tuple in G^{n+1}, x), in storage order.
template <class F>
void for_each_differential_row(const FiniteGroup& g, const GModule& m, int n, F&& f) {
  const int order = g.order();
  const int width = m.size();
  std::vector<std::pair<std::size_t, Value>> row;
  std::vector<Element> shorter(n);
  auto index_of = [&](const std::vector<Element>& t) {
    std::size_t idx = 0;
    for (Element e : t) idx = idx * order + e;
    return idx;
  };
  for_each_tuple(order, n + 1, [&](std::span<const Element> t) {
    for (int x = 0; x < width; ++x) {
      row.clear();
      // g_1 . c(g_2..g_{n+1})
      std::copy(t.begin() + 1, t.end(), shorter.begin());
      row.emplace_back(index_of(shorter) * width + m.act(g.inv(t[0]), x), 1);
      for (int k = 0; k < n; ++k) {
        for (int i = 0, j = 0; i < n + 1; ++i) {
          if (i == k) {
            shorter[j++] = g.mul(t[k], t[k + 1]);
            ++i;
          } else {
            shorter[j++] = t[i];
          }
        }
        row.emplace_back(index_of(shorter) * width + x, (k % 2 == 0) ? -1 : 1);
      }
      std::copy(t.begin(), t.end() - 1, shorter.begin());
      row.emplace_back(index_of(shorter) * width + x, (n % 2 == 0) ? -1 : 1);
      f(row);
    }
  });
}

// Orders of the p-primary parts from the counts |{x : p^k x = 0}|.
std::vector<Value> structure_from_orders(const std::vector<int>& orders) {
  const Value n = static_cast<Value>(orders.size());
  std::vector<Value> cyclic;
  Value rest = n;
  for (Value p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    // f(k) = log_p |Omega_k|; number of factors of order >= p^k is f(k) - f(k-1)
    std::vector<int> f{0};
    Value pk = 1;
    for (;;) {
      pk *= p;
      std::size_t count = std::count_if(orders.begin(), orders.end(),
                                        [&](int o) { return pk % o == 0; });
      int lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == f.back()) break;
      f.push_back(lg);
    }
    // factors with exponent exactly k: (f(k)-f(k-1)) - (f(k+1)-f(k))
    for (std::size_t k = 1; k < f.size(); ++k) {
      int at_least = f[k] - f[k - 1];
      int at_least_next = k + 1 < f.size() ? f[k + 1] - f[k] : 0;
      Value q = 1;
      for (std::size_t i = 0; i < k; ++i) q *= p;
      for (int i = 0; i < at_least - at_least_next; ++i) cyclic.push_back(q);
    }
  }
  return zmod::invariant_factors(cyclic);
}

}  // namespace

// ---------------------------------------------------------------- GModule

GModule GModule::trivial(int level) {
  if (level < 1) throw InvalidArgument("level must be positive");
  return GModule(level, 1, {});
}

GModule GModule::permutation(const FiniteGroup& group, int level,
                             const std::vector<std::vector<int>>& action) {
  if (level < 1) throw InvalidArgument("level must be positive");
  const int n = group.order();
  if (static_cast<int>(action.size()) != n) throw NotAnAction("action needs one row per element");
  const int size = action.empty() ? 0 : static_cast<int>(action[0].size());
  if (size < 1) throw NotAnAction("empty G-set");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * size);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(action[g].size()) != size) throw NotAnAction("ragged action table");
    std::vector<bool> seen(size, false);
    for (int x : action[g]) {
      if (x < 0 || x >= size || seen[x])
        throw NotAnAction("element " + std::to_string(g) + " does not permute the set");
      seen[x] = true;
      flat.push_back(x);
    }
  }
  for (int x = 0; x < size; ++x)
    if (flat[x] != x) throw NotAnAction("identity moves point " + std::to_string(x));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < size; ++x)
        if (flat[std::size_t(group.mul(g, h)) * size + x] !=
            flat[std::size_t(g) * size + flat[std::size_t(h) * size + x]])
          throw NotAnAction("(gh).x != g.(h.x) at g=" + std::to_string(g) +
                            " h=" + std::to_string(h) + " x=" + std::to_string(x));
  return GModule(level, size, std::move(flat));
}

std::vector<std::vector<int>> GModule::action_table(int group_order) const {
  std::vector<std::vector<int>> t(group_order, std::vector<int>(size_));
  for (int g = 0; g < group_order; ++g)
    for (int x = 0; x < size_; ++x) t[g][x] = act(g, x);
  return t;
}

GModule GModule::with_level(int new_level) const {
  if (new_level < 1) throw InvalidArgument("level must be positive");
  return GModule(new_level, size_, action_);
}

GModule GModule::restricted(const Subgroup& p) const {
  if (is_trivial()) return *this;
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(p.order()) * size_);
  for (Element g : p.elements())
    for (int x = 0; x < size_; ++x) flat.push_back(act(g, x));
  return GModule(level_, size_, std::move(flat));
}

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(GroupPtr group, GModule module, int degree)
    : group_(std::move(group)), module_(std::move(module)), degree_(degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
  tuples_ = ipow(group_->order(), degree);
  values_.assign(tuples_ * module_.size(), 0);
}

Cochain::Cochain(GroupPtr group, GModule module, int degree, std::vector<Value> values)
    : Cochain(std::move(group), std::move(module), degree) {
  if (values.size() != values_.size())
    throw InvalidArgument("expected " + std::to_string(values_.size()) + " values, got " +
                          std::to_string(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) values_[i] = zmod::reduce(values[i], level());
}

Cochain Cochain::random(GroupPtr group, GModule module, int degree, std::mt19937_64& rng) {
  Cochain c(std::move(group), std::move(module), degree);
  std::uniform_int_distribution<Value> dist(0, c.level() - 1);
  for (auto& v : c.values_) v = dist(rng);
  return c;
}

std::size_t Cochain::tuple_index(std::span<const Element> args) const noexcept {
  std::size_t idx = 0;
  for (Element e : args) idx = idx * group_->order() + e;
  return idx;
}

bool Cochain::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Value v) { return v == 0; });
}

Cochain Cochain::raised(int new_level) const {
  if (new_level % level() != 0)
    throw NotAMultiple(std::to_string(level()) + " does not divide " + std::to_string(new_level));
  Cochain out(group_, module_.with_level(new_level), degree_);
  const Value k = new_level / level();
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * k;
  return out;
}

void Cochain::check_compatible(const Cochain& o) const {
  require_same_group(*group_, *o.group_, "cochains over different groups");
  if (!(module_ == o.module_) || degree_ != o.degree_)
    throw InvalidArgument("cochains differ in module or degree");
}

Cochain& Cochain::operator+=(const Cochain& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] = zmod::reduce(values_[i] + o.values_[i], level());
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] = zmod::reduce(values_[i] - o.values_[i], level());
  return *this;
}

Cochain Cochain::operator-() const { return scaled(-1); }

Cochain Cochain::scaled(Value k) const {
  Cochain out = *this;
  for (auto& v : out.values_) v = zmod::reduce(v * k, level());
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.degree_ == b.degree_ && a.module_ == b.module_ && *a.group_ == *b.group_ &&
         a.values_ == b.values_;
}

// ---------------------------------------------------------------- differential

Cochain differential(const Cochain& c) {
  Cochain out(c.group(), c.module(), c.degree() + 1);
  const Value l = c.level();
  std::size_t i = 0;
  for_each_differential_row(*c.group(), c.module(), c.degree(), [&](const auto& row) {
    Value s = 0;
    for (const auto& [col, coef] : row) s += coef * c[col];
    out[i++] = zmod::reduce(s, l);
  });
  return out;
}

zmod::Matrix differential_matrix(const FiniteGroup& group, const GModule& module, int degree) {
  const std::size_t width = module.size();
  const std::size_t rows = ipow(group.order(), degree + 1) * width;
  const std::size_t cols = ipow(group.order(), degree) * width;
  zmod::Matrix d(static_cast<int>(rows), static_cast<int>(cols));
  const Value l = module.level();
  int r = 0;
  for_each_differential_row(group, module, degree, [&](const auto& row) {
    for (const auto& [col, coef] : row) d(r, static_cast<int>(col)) = zmod::reduce(d(r, static_cast<int>(col)) + coef, l);
    ++r;
  });
  return d;
}

bool is_cocycle(const Cochain& c) { return differential(c).is_zero(); }

// ---------------------------------------------------------------- coboundaries

CoboundarySolver::CoboundarySolver(GroupPtr group, GModule module, int degree)
    : group_(std::move(group)), module_(std::move(module)), degree_(degree) {
  if (degree < 1) throw DegreeZero("coboundaries start in degree 1");
  diag_ = zmod::diagonalize(differential_matrix(*group_, module_, degree - 1), module_.level(),
                            {.u = true, .v = true});
}

std::optional<Cochain> CoboundarySolver::preimage(const Cochain& c) const {
  require_same_group(*group_, *c.group(), "solver and cochain over different groups");
  if (!(c.module() == module_) || c.degree() != degree_)
    throw InvalidArgument("cochain does not match the solver's module or degree");
  auto x = zmod::solve(diag_, c.values());
  if (!x) return std::nullopt;
  return Cochain(group_, module_, degree_ - 1, std::move(*x));
}

std::vector<Value> CoboundarySolver::key(const Cochain& c) const {
  if (!(c.module() == module_) || c.degree() != degree_)
    throw InvalidArgument("cochain does not match the solver's module or degree");
  return zmod::cokernel_key(diag_, c.values());
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
  if (c.degree() == 0) throw DegreeZero("is_coboundary needs degree >= 1");
  if (!is_cocycle(c)) throw NotACocycle("is_coboundary expects a cocycle");
  auto w = CoboundarySolver(c.group(), c.module(), c.degree()).preimage(c);
  if (w && !(differential(*w) == c)) throw Error("InternalError", "coboundary witness failed");
  return w;
}

Cochain normalize_cocycle(const Cochain& c) {
  if (c.degree() != 2) throw InvalidArgument("normalize_cocycle expects degree 2");
  if (!is_cocycle(c)) throw NotACocycle("normalize_cocycle expects a cocycle");
  Cochain pi(c.group(), c.module(), 1);
  const int width = c.module().size();
  for (std::size_t t = 0; t < pi.tuple_count(); ++t)
    for (int x = 0; x < width; ++x) pi[t * width + x] = c.at({0, 0}, x);
  return c - differential(pi);
}

bool is_normalized(const Cochain& c) {
  if (c.degree() != 2) return false;
  const int width = c.module().size();
  for (Element g = 0; g < c.group()->order(); ++g)
    for (int x = 0; x < width; ++x)
      if (c.at({g, 0}, x) != 0 || c.at({0, g}, x) != 0) return false;
  return true;
}

// ---------------------------------------------------------------- H^2

CohomologyClassSet h2(const GroupPtr& group, const GModule& module, const Bounds& bounds) {
  const std::size_t n = group->order();
  const std::size_t width = module.size();
  if (n * n * n * width > bounds.max_cells)
    throw TooLarge("|G|^3 |X| = " + std::to_string(n * n * n * width) + " exceeds " +
                   std::to_string(bounds.max_cells));
  const Value l = module.level();
  const int c2 = static_cast<int>(n * n * width);

  // Z^2 = ker d^2, read off a diagonal form of the row-reduced matrix
  zmod::RowEchelon ech(c2, l);
  std::vector<Value> dense(c2);
  for_each_differential_row(*group, module, 2, [&](const auto& row) {
    std::fill(dense.begin(), dense.end(), 0);
    for (const auto& [col, coef] : row) dense[col] += coef;
    ech.insert(dense);
  });
  auto dz = zmod::diagonalize(ech.rows(), l, {.v = true, .v_inv = true});

  struct Gen {
    int column;
    Value order;
    Value scale;  // generator = scale * V[:, column]
  };
  std::vector<Gen> gens;
  for (int i = 0; i < c2; ++i) {
    Value order = i < dz.rank() ? dz.pivots[i] : l;
    if (order == 1) continue;
    gens.push_back({i, order, l / order});
  }
  const int k = static_cast<int>(gens.size());

  // relations: the orders, then d^1 of every basis 1-cochain in Z-coordinates
  zmod::Matrix d1 = differential_matrix(*group, module, 1);
  const int c1 = d1.cols();
  zmod::Matrix rel(k, k + c1);
  for (int j = 0; j < k; ++j) rel(j, j) = gens[j].order % l;
  for (int col = 0; col < c1; ++col) {
    std::vector<Value> b(c2);
    for (int r = 0; r < c2; ++r) b[r] = d1(r, col);
    auto y = dz.v_inv->apply(b, l);
    for (int j = 0; j < k; ++j) rel(j, k + col) = (y[gens[j].column] / gens[j].scale) % gens[j].order;
  }
  auto dr = zmod::diagonalize(rel, l, {.u_inv = true});

  std::vector<Value> factors;
  std::vector<std::vector<Value>> generators;  // as flat cochain values
  for (int i = 0; i < k; ++i) {
    Value order = i < dr.rank() ? dr.pivots[i] : l;
    if (order == 1) continue;
    std::vector<Value> values(c2, 0);
    for (int j = 0; j < k; ++j) {
      Value w = (*dr.u_inv)(j, i) * gens[j].scale % l;
      if (w == 0) continue;
      for (int r = 0; r < c2; ++r) values[r] = (values[r] + w * (*dz.v)(r, gens[j].column)) % l;
    }
    factors.push_back(order);
    generators.push_back(std::move(values));
  }

  std::size_t total = 1;
  for (Value f : factors) {
    total *= static_cast<std::size_t>(f);
    if (total > bounds.max_classes)
      throw TooLarge("H^2 has more than " + std::to_string(bounds.max_classes) + " classes");
  }

  CohomologyClassSet out{group, module, {}, zmod::invariant_factors(factors)};
  out.representatives.reserve(total);
  std::vector<Value> digits(factors.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Value> values(c2, 0);
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (digits[f] != 0)
        for (int r = 0; r < c2; ++r) values[r] = (values[r] + digits[f] * generators[f][r]) % l;
    out.representatives.push_back(normalize_cocycle(Cochain(group, module, 2, std::move(values))));
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (++digits[f] < factors[f]) break;
      digits[f] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------- C^x classes

CxClassifier::CxClassifier(GroupPtr group, int level)
    : level_(level), solver_(std::move(group), GModule::trivial(level * level), 2) {}

std::vector<Value> CxClassifier::key(const Cochain& c) const {
  if (!c.module().is_trivial() || c.degree() != 2)
    throw InvalidArgument("C^x classes need a degree-2 cochain with trivial action");
  if (level_ % c.level() != 0) throw NotAMultiple("cocycle level does not divide the classifier level");
  return solver_.key(c.raised(level_ * level_));
}

bool CxClassifier::same_class(const Cochain& a, const Cochain& b) const { return key(a) == key(b); }

bool cohomologous_over_Cx(const Cochain& a, const Cochain& b) {
  if (!is_cocycle(a) || !is_cocycle(b)) throw NotACocycle("cohomologous_over_Cx expects cocycles");
  require_same_group(*a.group(), *b.group(), "cocycles over different groups");
  const int l = std::lcm(a.level(), b.level());
  Cochain diff = a.raised(l) - b.raised(l);
  return !!CoboundarySolver(a.group(), GModule::trivial(l * l), 2).preimage(diff.raised(l * l));
}

int SchurClasses::identify(const Cochain& c) const {
  Cochain at = c.level() == level() ? c : c.raised(level());
  auto it = index_.find(classifier->key(at));
  if (it != index_.end()) return it->second;
  if (!is_cocycle(c)) throw NotACocycle("identify expects a cocycle");
  throw Error("InternalError", "cocycle matches no Schur class");
}

int SchurClasses::element_order(int i) const {
  int k = 1, acc = i;
  while (acc != 0) {
    acc = sum[acc][i];
    ++k;
  }
  return k;
}

SchurClasses schur_classes(const GroupPtr& group, int level, const Bounds& bounds) {
  if (level == 0) level = group->order();
  if (level % group->order() != 0)
    throw NotAMultiple("Schur classes need a level divisible by |G|");
  auto all = h2(group, GModule::trivial(level), bounds);
  SchurClasses s;
  s.classifier = std::make_shared<CxClassifier>(group, level);
  s.classes.group = group;
  s.classes.module = all.module;
  for (auto& rep : all.representatives) {
    auto key = s.classifier->key(rep);
    if (s.index_.count(key)) continue;
    s.index_.emplace(key, static_cast<int>(s.keys.size()));
    s.keys.push_back(std::move(key));
    s.classes.representatives.push_back(std::move(rep));
  }
  const int n = static_cast<int>(s.keys.size());
  s.sum.assign(n, std::vector<int>(n));
  s.negation.resize(n);
  for (int i = 0; i < n; ++i) {
    s.negation[i] = s.identify(-s.representative(i));
    for (int j = 0; j < n; ++j) s.sum[i][j] = s.identify(s.representative(i) + s.representative(j));
  }
  std::vector<int> orders(n);
  for (int i = 0; i < n; ++i) orders[i] = s.element_order(i);
  s.classes.invariant_factors = structure_from_orders(orders);
  return s;
}

// ---------------------------------------------------------------- restriction

Cochain restrict(const Cochain& c, const Subgroup& p) {
  require_same_group(*c.group(), *p.parent(), "restrict: subgroup of another group");
  Cochain out(p.as_group(), c.module().restricted(p), c.degree());
  const int width = c.module().size();
  std::vector<Element> parent_args(c.degree());
  std::size_t t = 0;
  for_each_tuple(p.order(), c.degree(), [&](std::span<const Element> local) {
    for (int i = 0; i < c.degree(); ++i) parent_args[i] = p.element(local[i]);
    for (int x = 0; x < width; ++x) out[t * width + x] = c.at(parent_args, x);
    ++t;
  });
  return out;
}

Cochain conjugate_pullback(const Cochain& c, const Subgroup& q, Element x, const Subgroup& p) {
  require_same_group(*c.group(), *q.as_group(), "conjugate_pullback: cochain not over Q");
  require_same_group(*q.parent(), *p.parent(), "conjugate_pullback: P and Q in different groups");
  if (!c.module().is_trivial()) throw InvalidArgument("conjugate_pullback needs a trivial module");
  const FiniteGroup& g = *p.parent();
  std::vector<Element> image(p.order());
  for (int i = 0; i < p.order(); ++i) {
    Element y = g.conj(x, p.element(i));
    if (!q.contains(y))
      throw NotContained("x p x^-1 = " + std::to_string(y) + " is not in Q (p = " +
                         std::to_string(p.element(i)) + ")");
    image[i] = q.local_index(y);
  }
  Cochain out(p.as_group(), c.module(), c.degree());
  std::vector<Element> args(c.degree());
  std::size_t t = 0;
  for_each_tuple(p.order(), c.degree(), [&](std::span<const Element> local) {
    for (int i = 0; i < c.degree(); ++i) args[i] = image[local[i]];
    out[t++] = c.at(args);
  });
  return out;
}

}  // namespace tworep
