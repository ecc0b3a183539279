#include <doctest.h>

#include <algorithm>
#include <random>

#include "tworep/zmod.hpp"

using namespace tworep;
using zmod::Int;

namespace {

zmod::Matrix product(const zmod::Matrix& a, const zmod::Matrix& b, Int m) {
  zmod::Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Int s = 0;
      for (int k = 0; k < a.cols(); ++k) s = (s + a(i, k) * b(k, j)) % m;
      c(i, j) = s;
    }
  return c;
}

}  // namespace

TEST_CASE("diagonalization is a factorization U A V = D") {
  std::mt19937_64 rng(7);
  for (Int m : {1, 2, 4, 6, 12, 36, 64}) {
    for (int trial = 0; trial < 20; ++trial) {
      int r = 1 + rng() % 6, c = 1 + rng() % 6;
      zmod::Matrix a(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) a(i, j) = rng() % m;
      auto d = zmod::diagonalize(a, m, {true, true, true, true});
      auto uav = product(product(*d.u, a, m), *d.v, m);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
          Int expect = (i == j && i < d.rank()) ? d.pivots[i] : 0;
          CHECK(uav(i, j) == expect);
        }
      auto uu = product(*d.u, *d.u_inv, m);
      auto vv = product(*d.v, *d.v_inv, m);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) CHECK(uu(i, j) == (i == j ? 1 % m : 0));
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) CHECK(vv(i, j) == (i == j ? 1 % m : 0));
      for (Int p : d.pivots) CHECK(m % p == 0);

      // random image vectors are solvable, solutions verify
      std::vector<Int> x(c);
      for (auto& e : x) e = rng() % m;
      auto b = a.apply(x, m);
      auto sol = zmod::solve(d, b);
      REQUIRE(sol.has_value());
      CHECK(a.apply(*sol, m) == b);
      CHECK(zmod::cokernel_key(d, b) == std::vector<Int>(r, 0));
    }
  }
}

TEST_CASE("unsolvable systems are detected") {
  zmod::Matrix a(1, 1);
  a(0, 0) = 2;
  auto d = zmod::diagonalize(a, 4, {true, false, true, false});
  CHECK_FALSE(zmod::solve(d, {1}).has_value());
  CHECK(zmod::solve(d, {2}).has_value());
}

TEST_CASE("invariant factors") {
  CHECK(zmod::invariant_factors({2, 3}) == std::vector<Int>{6});
  CHECK(zmod::invariant_factors({2, 2}) == std::vector<Int>{2, 2});
  CHECK(zmod::invariant_factors({4, 6, 1}) == std::vector<Int>{2, 12});
  CHECK(zmod::invariant_factors({}).empty());
}

TEST_CASE("row echelon keeps the kernel") {
  std::mt19937_64 rng(11);
  for (Int m : {2, 6, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      int r = 1 + rng() % 12, c = 1 + rng() % 5;
      zmod::Matrix a(r, c);
      zmod::RowEchelon ech(c, m);
      for (int i = 0; i < r; ++i) {
        std::vector<Int> row(c);
        for (int j = 0; j < c; ++j) row[j] = a(i, j) = rng() % (2 * m) - m / 2;
        ech.insert(row);
      }
      auto b = ech.rows();
      CHECK(b.rows() <= c);
      // same kernel: brute force over (Z/m)^c
      std::vector<Int> x(c, 0);
      for (;;) {
        auto ax = a.apply(x, m);
        auto bx = b.apply(x, m);
        bool az = std::all_of(ax.begin(), ax.end(), [](Int v) { return v == 0; });
        bool bz = std::all_of(bx.begin(), bx.end(), [](Int v) { return v == 0; });
        CHECK(az == bz);
        int k = 0;
        while (k < c && ++x[k] == m) x[k++] = 0;
        if (k == c) break;
      }
    }
  }
}
