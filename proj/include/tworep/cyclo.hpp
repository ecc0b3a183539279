#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tworep {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

int euler_phi(int n);

/// Phi_L with integer coefficients, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(int level);

/// zeta_L^exponent with zeta_L = exp(2 pi i / L) and 0 <= exponent < L.
struct RootOfUnity {
  int level = 1;
  int exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(int level, long long exponent);

  static RootOfUnity one(int level = 1) { return RootOfUnity(level, 0); }

  RootOfUnity inverse() const { return RootOfUnity(level, -static_cast<long long>(exponent)); }
  /// Multiplicative order of the value.
  int order() const;

  /// Same complex number, compared at the lcm of the levels.
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
};

/// The same value written at `new_level`; throws NotAMultiple unless level | new_level.
RootOfUnity raise_level(const RootOfUnity& r, int new_level);

/// An element of Z[zeta_L], stored reduced modulo Phi_L in the power basis
/// 1, zeta, ..., zeta^(phi(L)-1). Mixed-level arithmetic embeds both operands
/// at the lcm of the levels.
class CycloInt {
 public:
  explicit CycloInt(int level = 1);
  static CycloInt integer(const BigInt& value, int level = 1);
  static CycloInt zeta_power(int level, long long k);

  int level() const noexcept { return level_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  /// True when the value is a rational integer; the integer is written to `out`.
  bool is_integer(BigInt* out = nullptr) const;

  /// Embedding Z[zeta_L] -> Z[zeta_M] for L | M.
  CycloInt at_level(int new_level) const;

  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  CycloInt& operator*=(const CycloInt& o);
  CycloInt operator-() const;
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(CycloInt a, const CycloInt& b) { return a *= b; }
  friend bool operator==(const CycloInt& a, const CycloInt& b);

  /// gcd of all coefficients (0 for the zero element).
  BigInt content() const;
  /// Exact division of every coefficient by `d`.
  CycloInt divided_exactly(const BigInt& d) const;

  std::complex<double> to_complex() const;
  /// Combination of powers, e.g. "2 - ζ^2 + 3ζ^5".
  std::string to_string() const;

 private:
  CycloInt(int level, std::vector<BigInt> coeffs);
  int level_;
  std::vector<BigInt> coeffs_;
};

CycloInt root_to_cyclo(const RootOfUnity& r);

/// numerator / denominator with positive denominator, reduced so that the
/// content of the numerator and the denominator are coprime.
class CycloRat {
 public:
  CycloRat() : num_(1), den_(1) {}
  CycloRat(CycloInt num, BigInt den = 1);  // NOLINT(google-explicit-constructor)
  static CycloRat integer(long long v) { return CycloRat(CycloInt::integer(v)); }

  const CycloInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  int level() const noexcept { return num_.level(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  CycloRat& operator+=(const CycloRat& o);
  CycloRat& operator-=(const CycloRat& o);
  CycloRat& operator*=(const CycloRat& o);
  CycloRat& operator/=(const CycloRat& o);
  CycloRat operator-() const { return CycloRat(-num_, den_); }
  friend CycloRat operator+(CycloRat a, const CycloRat& b) { return a += b; }
  friend CycloRat operator-(CycloRat a, const CycloRat& b) { return a -= b; }
  friend CycloRat operator*(CycloRat a, const CycloRat& b) { return a *= b; }
  friend CycloRat operator/(CycloRat a, const CycloRat& b) { return a /= b; }
  friend bool operator==(const CycloRat& a, const CycloRat& b);

  /// Multiplicative inverse in Q(zeta_L); throws InvalidArgument on zero.
  CycloRat inverse() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void reduce();
  CycloInt num_;
  BigInt den_;
};

/// Determinant over Q(zeta) by Gaussian elimination.
CycloRat determinant(std::vector<std::vector<CycloRat>> m);

}  // namespace tworep
