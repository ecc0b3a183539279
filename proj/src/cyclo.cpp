#include "tworep/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tworep/errors.hpp"

namespace tworep {

namespace {

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Polynomials are coefficient vectors, lowest degree first.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  Poly q(num.size() - dn, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt c = num[k + dn];
    q[k] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
  }
  trim(q);
  return q;
}

struct LevelData {
  Poly phi;
  int degree = 0;
  // power_basis[k] = x^k mod Phi_L for 0 <= k < L.
  std::vector<Poly> powers;
};

const LevelData& level_data(int level) {
  static std::recursive_mutex m;
  static std::map<int, LevelData> cache;
  std::lock_guard<std::recursive_mutex> lock(m);
  auto it = cache.find(level);
  if (it != cache.end()) return it->second;

  LevelData d;
  Poly q(level + 1, 0);
  q[0] = -1;
  q[level] = 1;
  for (int div = 1; div < level; ++div)
    if (level % div == 0) q = divide_monic(q, level_data(div).phi);
  d.phi = q;
  d.degree = static_cast<int>(q.size()) - 1;

  d.powers.assign(level, Poly(d.degree, 0));
  Poly cur(d.degree, 0);
  cur[0] = 1;
  for (int k = 0; k < level; ++k) {
    d.powers[k] = cur;
    // cur *= x, folding x^deg back with x^deg = -sum phi_i x^i.
    Poly next(d.degree, 0);
    const BigInt top = cur[d.degree - 1];
    for (int i = d.degree - 1; i > 0; --i) next[i] = cur[i - 1];
    for (int i = 0; i < d.degree; ++i) next[i] -= top * d.phi[i];
    cur = std::move(next);
  }
  return cache.emplace(level, std::move(d)).first->second;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(int level) {
  if (level < 1) throw InvalidArgument("cyclotomic level must be positive");
  return level_data(level).phi;
}

RootOfUnity::RootOfUnity(int level, long long exponent)
    : level(level), exponent(static_cast<int>(mod(exponent, level))) {
  if (level < 1) throw InvalidArgument("root of unity level must be positive");
}

int RootOfUnity::order() const { return level / std::gcd(level, exponent == 0 ? level : exponent); }

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  const int l = std::lcm(a.level, b.level);
  return static_cast<long long>(a.exponent) * (l / a.level) ==
         static_cast<long long>(b.exponent) * (l / b.level);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const int l = std::lcm(a.level, b.level);
  return RootOfUnity(l, static_cast<long long>(a.exponent) * (l / a.level) +
                            static_cast<long long>(b.exponent) * (l / b.level));
}

RootOfUnity raise_level(const RootOfUnity& r, int new_level) {
  if (new_level < 1 || new_level % r.level != 0)
    throw NotAMultiple(std::to_string(new_level) + " is not a multiple of " +
                       std::to_string(r.level));
  return RootOfUnity(new_level, static_cast<long long>(r.exponent) * (new_level / r.level));
}

CycloInt::CycloInt(int level) : level_(level), coeffs_(level_data(level).degree, 0) {}

CycloInt::CycloInt(int level, std::vector<BigInt> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {}

CycloInt CycloInt::integer(const BigInt& value, int level) {
  CycloInt c(level);
  c.coeffs_[0] = value;
  return c;
}

CycloInt CycloInt::zeta_power(int level, long long k) {
  return CycloInt(level, level_data(level).powers[mod(k, level)]);
}

bool CycloInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloInt::is_integer(BigInt* out) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  if (out) *out = coeffs_[0];
  return true;
}

CycloInt CycloInt::at_level(int new_level) const {
  if (new_level == level_) return *this;
  if (new_level % level_ != 0)
    throw NotAMultiple(std::to_string(new_level) + " is not a multiple of " +
                       std::to_string(level_));
  const auto& d = level_data(new_level);
  const int scale = new_level / level_;
  CycloInt out(new_level);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& p = d.powers[k * scale];
    for (int i = 0; i < d.degree; ++i) out.coeffs_[i] += coeffs_[k] * p[i];
  }
  return out;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  const int l = std::lcm(level_, o.level_);
  if (l != level_) *this = at_level(l);
  if (o.level_ == l) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    const CycloInt b = o.at_level(l);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  }
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) { return *this += -o; }

CycloInt CycloInt::operator-() const {
  CycloInt c = *this;
  for (auto& x : c.coeffs_) x = -x;
  return c;
}

CycloInt& CycloInt::operator*=(const CycloInt& o) {
  const int l = std::lcm(level_, o.level_);
  CycloInt a = at_level(l);
  CycloInt b = o.at_level(l);
  const auto& d = level_data(l);
  CycloInt out(l);
  for (int i = 0; i < d.degree; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d.degree; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const BigInt c = a.coeffs_[i] * b.coeffs_[j];
      const auto& p = d.powers[(i + j) % l];
      for (int k = 0; k < d.degree; ++k)
        if (p[k] != 0) out.coeffs_[k] += c * p[k];
    }
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const CycloInt& a, const CycloInt& b) {
  const int l = std::lcm(a.level_, b.level_);
  return a.at_level(l).coeffs_ == b.at_level(l).coeffs_;
}

BigInt CycloInt::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, abs(c));
  return g;
}

CycloInt CycloInt::divided_exactly(const BigInt& d) const {
  CycloInt c = *this;
  for (auto& x : c.coeffs_) {
    if (x % d != 0) throw InvalidArgument("inexact division");
    x /= d;
  }
  return c;
}

std::complex<double> CycloInt::to_complex() const {
  std::complex<double> z = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0)
      z += coeffs_[k].convert_to<double>() * std::polar(1.0, 2 * pi * k / level_);
  return z;
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    BigInt c = coeffs_[k];
    if (c == 0) continue;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "ζ";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycloInt root_to_cyclo(const RootOfUnity& r) { return CycloInt::zeta_power(r.level, r.exponent); }

CycloRat::CycloRat(CycloInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidArgument("zero denominator");
  reduce();
}

void CycloRat::reduce() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_.content(), den_);
  if (g > 1) {
    num_ = num_.divided_exactly(g);
    den_ /= g;
  }
}

CycloRat& CycloRat::operator+=(const CycloRat& o) {
  num_ = num_ * CycloInt::integer(o.den_) + o.num_ * CycloInt::integer(den_);
  den_ *= o.den_;
  reduce();
  return *this;
}

CycloRat& CycloRat::operator-=(const CycloRat& o) { return *this += -o; }

CycloRat& CycloRat::operator*=(const CycloRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

CycloRat& CycloRat::operator/=(const CycloRat& o) { return *this *= o.inverse(); }

bool operator==(const CycloRat& a, const CycloRat& b) {
  return a.num_ * CycloInt::integer(b.den_) == b.num_ * CycloInt::integer(a.den_);
}

CycloRat CycloRat::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  const int l = num_.level();
  const int n = static_cast<int>(num_.coeffs().size());
  // Solve (num * y) = 1 in Q[x]/Phi_L via the multiplication matrix.
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    CycloInt col = num_ * CycloInt::zeta_power(l, j);
    for (int i = 0; i < n; ++i) m[i][j] = BigRational(col.coeffs()[i]);
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw InvalidArgument("singular multiplication matrix");
    std::swap(m[piv], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[c][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  BigInt common = 1;
  std::vector<BigRational> y(n);
  for (int i = 0; i < n; ++i) {
    y[i] = m[i][n] / m[i][i];
    common = lcm(common, boost::multiprecision::denominator(y[i]));
  }
  CycloInt out(l);
  for (int i = 0; i < n; ++i) {
    BigRational v = y[i] * common;
    out += CycloInt::zeta_power(l, i) * CycloInt::integer(boost::multiprecision::numerator(v));
  }
  return CycloRat(out * CycloInt::integer(den_), common);
}

std::complex<double> CycloRat::to_complex() const {
  return num_.to_complex() / den_.convert_to<double>();
}

std::string CycloRat::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.str();
}

CycloRat determinant(std::vector<std::vector<CycloRat>> m) {
  const std::size_t n = m.size();
  CycloRat det = CycloRat::integer(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return CycloRat::integer(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    CycloRat inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      CycloRat f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace tworep
