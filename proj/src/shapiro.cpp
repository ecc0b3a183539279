#include "tworep/shapiro.hpp"

#include "tworep/errors.hpp"

namespace tworep {

Shapiro::Shapiro(Subgroup q, GModule module)
    : q_(std::move(q)), module_(std::move(module)), transversal_(right_transversal(q_)) {
  const FiniteGroup& g = *q_.parent();
  coset_.assign(g.order(), -1);
  for (int i = 0; i < static_cast<int>(transversal_.size()); ++i)
    for (Element h : q_.elements()) coset_[g.mul(h, transversal_[i])] = i;

  const int width = module_.size();
  const int points = static_cast<int>(transversal_.size()) * width;
  std::vector<std::vector<int>> action(g.order(), std::vector<int>(points));
  for (Element x = 0; x < g.order(); ++x) {
    // x (t, y) = (s, h^-1 y) where t x^-1 = h s
    for (int ti = 0; ti < static_cast<int>(transversal_.size()); ++ti) {
      Element prod = g.mul(transversal_[ti], g.inv(x));
      int si = coset_[prod];
      Element h = g.mul(prod, g.inv(transversal_[si]));
      Element h_inv_local = q_.local_index(g.inv(h));
      for (int y = 0; y < width; ++y)
        action[x][ti * width + y] = si * width + module_.act(h_inv_local, y);
    }
  }
  coinduced_ = GModule::permutation(g, module_.level(), action);
}

Factorization Shapiro::factorize(Element t, std::span<const Element> gs) const {
  const FiniteGroup& g = *q_.parent();
  Factorization f;
  f.s.push_back(t);
  for (Element gk : gs) {
    Element prod = g.mul(f.s.back(), gk);
    Element sk = transversal_[coset_[prod]];
    f.h.push_back(g.mul(prod, g.inv(sk)));
    f.s.push_back(sk);
  }
  return f;
}

Cochain Shapiro::psi(const Cochain& mu) const {
  if (!(*mu.group() == *q_.as_group()) || !(mu.module() == module_))
    throw InvalidArgument("psi expects a cochain over Q with the base module");
  const int n = mu.degree();
  const int width = module_.size();
  Cochain out(q_.parent(), coinduced_, n);
  std::vector<Element> local(n);
  std::size_t tuple = 0;
  for_each_tuple(q_.parent()->order(), n, [&](std::span<const Element> gs) {
    for (int ti = 0; ti < static_cast<int>(transversal_.size()); ++ti) {
      auto f = factorize(transversal_[ti], gs);
      for (int k = 0; k < n; ++k) local[k] = q_.local_index(f.h[k]);
      for (int y = 0; y < width; ++y)
        out[(tuple * transversal_.size() + ti) * width + y] = mu.at(local, y);
    }
    ++tuple;
  });
  return out;
}

Cochain Shapiro::phi(const Cochain& theta) const {
  if (!(*theta.group() == *q_.parent()) || !(theta.module() == coinduced_))
    throw InvalidArgument("phi expects a cochain over G with the coinduced module");
  const int n = theta.degree();
  const int width = module_.size();
  Cochain out(q_.as_group(), module_, n);
  std::vector<Element> args(n);
  std::size_t tuple = 0;
  for_each_tuple(q_.order(), n, [&](std::span<const Element> local) {
    for (int k = 0; k < n; ++k) args[k] = q_.element(local[k]);
    // the identity is the first transversal point
    for (int y = 0; y < width; ++y) out[tuple * width + y] = theta.at(args, y);
    ++tuple;
  });
  return out;
}

Cochain Shapiro::varpi(const Cochain& theta) const {
  if (theta.degree() == 0) throw DegreeZero("varpi needs degree >= 1");
  if (!(*theta.group() == *q_.parent()) || !(theta.module() == coinduced_))
    throw InvalidArgument("varpi expects a cochain over G with the coinduced module");
  const int n = theta.degree() - 1;
  const int width = module_.size();
  const Value l = theta.level();
  Cochain out(q_.parent(), coinduced_, n);
  std::vector<Element> args(n + 1);
  std::size_t tuple = 0;
  for_each_tuple(q_.parent()->order(), n, [&](std::span<const Element> gs) {
    for (int ti = 0; ti < static_cast<int>(transversal_.size()); ++ti) {
      auto f = factorize(transversal_[ti], gs);
      for (int y = 0; y < width; ++y) {
        Value acc = 0;
        for (int j = 0; j <= n; ++j) {
          for (int k = 0; k < j; ++k) args[k] = f.h[k];
          args[j] = f.s[j];
          for (int k = j; k < n; ++k) args[k + 1] = gs[k];
          Value v = theta.at(args, y);
          acc += (j % 2 == 0) ? -v : v;
        }
        out[(tuple * transversal_.size() + ti) * width + y] = zmod::reduce(acc, l);
      }
    }
    ++tuple;
  });
  return out;
}

}  // namespace tworep
