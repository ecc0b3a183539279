#include "tworep/zmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "tworep/errors.hpp"

namespace tworep::zmod {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

namespace {

// s a + t b = gcd(a, b)
Int ext_gcd(Int a, Int b, Int& s, Int& t) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  s = s0;
  t = t0;
  return a;
}

// Operands are reduced (|a|, |b| < m) and m < 2^31, so the product fits.
inline Int mulmod(Int a, Int b, Int m) { return (a * b) % m; }

constexpr Int kMaxModulus = Int{1} << 31;

void check_modulus(Int m) {
  if (m < 1 || m >= kMaxModulus) throw InvalidArgument("modulus out of range: " + std::to_string(m));
}

// row_i <- a row_i + b row_j, row_j <- c row_i + d row_j
void rows_2x2(Matrix& x, int i, int j, Int a, Int b, Int c, Int d, Int m) {
  a = reduce(a, m), b = reduce(b, m), c = reduce(c, m), d = reduce(d, m);
  for (int k = 0; k < x.cols(); ++k) {
    Int xi = x(i, k), xj = x(j, k);
    x(i, k) = (a * xi + b * xj) % m;
    x(j, k) = (c * xi + d * xj) % m;
  }
}

// col_i <- a col_i + b col_j, col_j <- c col_i + d col_j
void cols_2x2(Matrix& x, int i, int j, Int a, Int b, Int c, Int d, Int m) {
  a = reduce(a, m), b = reduce(b, m), c = reduce(c, m), d = reduce(d, m);
  for (int k = 0; k < x.rows(); ++k) {
    Int xi = x(k, i), xj = x(k, j);
    x(k, i) = (a * xi + b * xj) % m;
    x(k, j) = (c * xi + d * xj) % m;
  }
}

void scale_row(Matrix& x, int i, Int u, Int m) {
  for (int k = 0; k < x.cols(); ++k) x(i, k) = mulmod(x(i, k), u, m);
}

void scale_col(Matrix& x, int i, Int u, Int m) {
  for (int k = 0; k < x.rows(); ++k) x(k, i) = mulmod(x(k, i), u, m);
}

struct Eliminator {
  Matrix& a;
  Int m;
  Diagonalization& out;

  // A <- E A with E acting on rows (i, j) as [[p, q], [r, s]], det = delta.
  void row_op(int i, int j, Int p, Int q, Int r, Int s, Int delta) {
    rows_2x2(a, i, j, p, q, r, s, m);
    if (out.u) rows_2x2(*out.u, i, j, p, q, r, s, m);
    if (out.u_inv) {
      Int di = inverse(reduce(delta, m), m);
      cols_2x2(*out.u_inv, i, j, mulmod(di, reduce(s, m), m), reduce(-mulmod(di, reduce(r, m), m), m),
               reduce(-mulmod(di, reduce(q, m), m), m), mulmod(di, reduce(p, m), m), m);
    }
  }

  // A <- A F with col_i <- p col_i + q col_j, col_j <- r col_i + s col_j.
  void col_op(int i, int j, Int p, Int q, Int r, Int s, Int delta) {
    cols_2x2(a, i, j, p, q, r, s, m);
    if (out.v) cols_2x2(*out.v, i, j, p, q, r, s, m);
    if (out.v_inv) {
      Int di = inverse(reduce(delta, m), m);
      rows_2x2(*out.v_inv, i, j, mulmod(di, reduce(s, m), m), reduce(-mulmod(di, reduce(r, m), m), m),
               reduce(-mulmod(di, reduce(q, m), m), m), mulmod(di, reduce(p, m), m), m);
    }
  }

  void row_scale(int i, Int unit) {
    scale_row(a, i, unit, m);
    if (out.u) scale_row(*out.u, i, unit, m);
    if (out.u_inv) scale_col(*out.u_inv, i, inverse(unit, m), m);
  }

  void swap_rows(int i, int j) {
    if (i != j) row_op(i, j, 0, 1, 1, 0, -1);
  }
  void swap_cols(int i, int j) {
    if (i != j) col_op(i, j, 0, 1, 1, 0, -1);
  }
};

// A unit u with u a = gcd(a, m) (mod m), for 0 < a < m.
Int normalizing_unit(Int a, Int m) {
  Int g = gcd(a, m);
  Int a1 = a / g, m1 = m / g;
  Int u = m1 == 1 ? 1 : inverse(reduce(a1, m1), m1);
  // lift u to a unit modulo m
  while (gcd(u, m) != 1) u += m1;
  return reduce(u, m);
}

}  // namespace

Int inverse(Int a, Int m) {
  if (m == 1) return 0;
  Int s, t;
  Int g = ext_gcd(reduce(a, m), m, s, t);
  if (g != 1) throw InvalidArgument("not a unit modulo " + std::to_string(m));
  return reduce(s, m);
}

Matrix Matrix::identity(int n) {
  Matrix id(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

std::vector<Int> Matrix::apply(const std::vector<Int>& x, Int modulus) const {
  std::vector<Int> y(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    __int128 acc = 0;
    for (int c = 0; c < cols_; ++c) {
      Int e = (*this)(r, c);
      if (e != 0 && x[c] != 0) acc = (acc + static_cast<__int128>(e) * x[c]) % modulus;
    }
    y[r] = reduce(static_cast<Int>(acc), modulus);
  }
  return y;
}

Diagonalization diagonalize(Matrix a, Int m, TransformRequest want) {
  check_modulus(m);
  Diagonalization out;
  out.modulus = m;
  out.rows = a.rows();
  out.cols = a.cols();
  if (want.u) out.u = Matrix::identity(a.rows());
  if (want.u_inv) out.u_inv = Matrix::identity(a.rows());
  if (want.v) out.v = Matrix::identity(a.cols());
  if (want.v_inv) out.v_inv = Matrix::identity(a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) a(r, c) = reduce(a(r, c), m);

  Eliminator el{a, m, out};
  const int n = std::min(a.rows(), a.cols());
  for (int k = 0; k < n; ++k) {
    // pivot: entry whose gcd with m is smallest
    int pr = -1, pc = -1;
    Int best = m;
    for (int r = k; r < a.rows() && best > 1; ++r)
      for (int c = k; c < a.cols(); ++c) {
        if (a(r, c) == 0) continue;
        Int g = gcd(a(r, c), m);
        if (g < best) {
          best = g;
          pr = r;
          pc = c;
          if (g == 1) break;
        }
      }
    if (pr < 0) break;
    el.swap_rows(k, pr);
    el.swap_cols(k, pc);
    el.row_scale(k, normalizing_unit(a(k, k), m));

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = k + 1; i < a.rows(); ++i) {
        Int b = a(i, k);
        if (b == 0) continue;
        Int g = a(k, k);
        if (b % g == 0) {
          el.row_op(k, i, 1, 0, -(b / g), 1, 1);
        } else {
          Int s, t;
          Int g2 = ext_gcd(g, b, s, t);
          el.row_op(k, i, s, t, -(b / g2), g / g2, 1);
        }
      }
      for (int j = k + 1; j < a.cols(); ++j) {
        Int b = a(k, j);
        if (b == 0) continue;
        Int g = a(k, k);
        if (b % g == 0) {
          el.col_op(k, j, 1, 0, -(b / g), 1, 1);
        } else {
          Int s, t;
          Int g2 = ext_gcd(g, b, s, t);
          el.col_op(k, j, s, t, -(b / g2), g / g2, 1);
          dirty = true;  // column k picked up new entries below the pivot
        }
      }
    }
    out.pivots.push_back(a(k, k));
  }
  return out;
}

std::optional<std::vector<Int>> solve(const Diagonalization& d, const std::vector<Int>& b) {
  if (!d.u || !d.v) throw InvalidArgument("solve needs u and v");
  const Int m = d.modulus;
  std::vector<Int> ub = d.u->apply(b, m);
  std::vector<Int> y(d.cols, 0);
  for (int i = 0; i < d.rows; ++i) {
    if (i < d.rank()) {
      if (ub[i] % d.pivots[i] != 0) return std::nullopt;
      y[i] = ub[i] / d.pivots[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return d.v->apply(y, m);
}

std::vector<Int> cokernel_key(const Diagonalization& d, const std::vector<Int>& b) {
  if (!d.u) throw InvalidArgument("cokernel_key needs u");
  std::vector<Int> ub = d.u->apply(b, d.modulus);
  for (int i = 0; i < d.rank(); ++i) ub[i] %= d.pivots[i];
  return ub;
}

RowEchelon::RowEchelon(int cols, Int modulus)
    : cols_(cols), modulus_(modulus), pivot_rows_(cols) {
  check_modulus(modulus);
}

void RowEchelon::insert(std::vector<Int> row) {
  const Int m = modulus_;
  for (auto& e : row) e = reduce(e, m);
  for (int c = 0; c < cols_; ++c) {
    Int x = row[c];
    if (x == 0) continue;
    auto& b = pivot_rows_[c];
    if (b.empty()) {
      Int u = normalizing_unit(x, m);
      for (int k = c; k < cols_; ++k) row[k] = mulmod(row[k], u, m);
      b = std::move(row);
      return;
    }
    Int g = b[c];
    if (x % g == 0) {
      const Int f = m - x / g;
      for (int k = c; k < cols_; ++k)
        if (b[k] != 0) row[k] = (row[k] + f * b[k]) % m;
    } else {
      Int s, t;
      Int g2 = ext_gcd(g, x, s, t);
      s = reduce(s, m), t = reduce(t, m);
      const Int p = reduce(-(x / g2), m), q = g / g2;
      for (int k = c; k < cols_; ++k) {
        Int bk = b[k], rk = row[k];
        b[k] = (s * bk + t * rk) % m;
        row[k] = (p * bk + q * rk) % m;
      }
    }
  }
}

Matrix RowEchelon::rows() const {
  int n = 0;
  for (const auto& r : pivot_rows_) n += !r.empty();
  Matrix out(n, cols_);
  int i = 0;
  for (const auto& r : pivot_rows_) {
    if (r.empty()) continue;
    for (int c = 0; c < cols_; ++c) out(i, c) = r[c];
    ++i;
  }
  return out;
}

std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders) {
  std::map<Int, std::vector<Int>> prime_powers;
  for (Int n : cyclic_orders) {
    for (Int p = 2; p * p <= n; ++p) {
      Int q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) prime_powers[p].push_back(q);
    }
    if (n > 1) prime_powers[n].push_back(n);
  }
  std::size_t len = 0;
  for (auto& [p, qs] : prime_powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    len = std::max(len, qs.size());
  }
  // largest factor first while building, reversed at the end
  std::vector<Int> factors(len, 1);
  for (auto& [p, qs] : prime_powers)
    for (std::size_t i = 0; i < qs.size(); ++i) factors[i] *= qs[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace tworep::zmod
