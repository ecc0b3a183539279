#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tworep::zmod {

using Int = std::int64_t;

inline Int reduce(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b);
/// Inverse of a unit modulo m.
Int inverse(Int a, Int m);

/// Dense row-major matrix with entries in [0, modulus).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  static Matrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Int& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  Int operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  std::vector<Int> apply(const std::vector<Int>& x, Int modulus) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

/// U A V = D over Z/L with D diagonal. Every nonzero pivot is a proper
/// divisor of L; the pivots are not normalized into a divisibility chain.
struct Diagonalization {
  Int modulus = 1;
  int rows = 0;
  int cols = 0;
  std::vector<Int> pivots;  // rank() entries, D(i,i) for i < rank
  std::optional<Matrix> u, u_inv, v, v_inv;

  int rank() const noexcept { return static_cast<int>(pivots.size()); }
};

struct TransformRequest {
  bool u = false;
  bool u_inv = false;
  bool v = false;
  bool v_inv = false;
};

Diagonalization diagonalize(Matrix a, Int modulus, TransformRequest want = {});

/// Some x with A x = b (mod L), given the diagonalization of A with u and v.
std::optional<std::vector<Int>> solve(const Diagonalization& d, const std::vector<Int>& b);

/// Canonical coordinates of b in coker(A): equal keys iff b - b' lies in im(A).
std::vector<Int> cokernel_key(const Diagonalization& d, const std::vector<Int>& b);

/// Row echelon basis of a submodule of (Z/L)^cols, fed one row at a time.
/// Holds at most `cols` rows, so a tall matrix never has to be stored.
class RowEchelon {
 public:
  RowEchelon(int cols, Int modulus);
  void insert(std::vector<Int> row);
  /// The basis rows, spanning the same submodule as every inserted row.
  Matrix rows() const;

 private:
  int cols_;
  Int modulus_;
  std::vector<std::vector<Int>> pivot_rows_;  // indexed by leading column, empty if none
};

/// Decomposes a finite abelian group given as a direct sum of cyclic factors
/// into invariant factors n_1 | n_2 | ... (trivial factors dropped).
std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders);

}  // namespace tworep::zmod
