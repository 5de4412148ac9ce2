#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bicat/exact_matrix.hpp"

using namespace bicat;

namespace {

// Enumerates every vector of F_p^n; used as the independent oracle for
// kernel and solvability claims on small instances.
std::vector<std::vector<unsigned>> all_vectors(unsigned p, std::size_t n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

ExactMatrix random_matrix(std::mt19937_64& rng, unsigned p, std::size_t r, std::size_t c) {
  ExactMatrix m(r, c, PrimeField(p));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<unsigned>(rng() % p);
  return m;
}

}  // namespace

TEST_CASE("prime field rejects composite moduli") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(97));
  CHECK_THROWS_AS(PrimeField(1), ValidationFailure);
  CHECK_THROWS_AS(PrimeField(4), ValidationFailure);
  CHECK_THROWS_AS(PrimeField(91), ValidationFailure);  // 7 * 13
}

TEST_CASE("field inverse") {
  PrimeField f5(5);
  for (unsigned a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
  CHECK_THROWS_AS(f5.inv(0), ValidationFailure);
}

TEST_CASE("rref: identity is fixed") {
  auto id = ExactMatrix::identity(2, PrimeField(2));
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref: duplicate rows over F_2") {
  auto m = ExactMatrix::from_rows({{1, 1}, {1, 1}}, PrimeField(2));
  auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.reduced == ExactMatrix::from_rows({{1, 1}, {0, 0}}, PrimeField(2)));
}

TEST_CASE("rref: invertible 2x2 over F_5") {
  // det [[2,4],[1,3]] = 2*3 - 4*1 = 2 != 0 mod 5, so rank 2.
  auto m = ExactMatrix::from_rows({{2, 4}, {1, 3}}, PrimeField(5));
  CHECK(rref(m).rank == 2);
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(7);
  for (unsigned p : {2u, 3u, 5u})
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_matrix(rng, p, 1 + rng() % 6, 1 + rng() % 6);
      auto once = rref(m).reduced;
      CHECK(rref(once).reduced == once);
    }
}

TEST_CASE("kernel_basis: identity and zero matrices") {
  auto id = ExactMatrix::identity(3, PrimeField(3));
  CHECK(kernel_basis(id).cols() == 0);
  ExactMatrix z(2, 3, PrimeField(2));
  auto k = kernel_basis(z);
  CHECK(k.cols() == 3);
  CHECK(k == ExactMatrix::identity(3, PrimeField(2)));
}

TEST_CASE("kernel_basis: [[1,1]] over F_2 against exhaustive oracle") {
  auto m = ExactMatrix::from_rows({{1, 1}}, PrimeField(2));
  // Oracle: enumerate all four vectors of F_2^2 and keep those annihilated.
  std::vector<std::vector<unsigned>> null_vectors;
  for (const auto& v : all_vectors(2, 2))
    if ((v[0] + v[1]) % 2 == 0) null_vectors.push_back(v);
  CHECK(null_vectors.size() == 2);  // zero and [1,1]
  auto k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK(k.col(0) == std::vector<unsigned>{1, 1});
}

TEST_CASE("solve: identity, inconsistent, underdetermined") {
  PrimeField f2(2);
  auto id = ExactMatrix::identity(2, f2);
  auto b = ExactMatrix::column({1, 0}, f2);
  CHECK(solve(id, b).value() == b);

  // Oracle: all four candidate x over F_2^2 fail for [[1,1],[1,1]] x = [1,0].
  auto ones = ExactMatrix::from_rows({{1, 1}, {1, 1}}, f2);
  for (const auto& v : all_vectors(2, 2))
    CHECK(ones * ExactMatrix::column(v, f2) != b);
  CHECK(!solve(ones, b).has_value());

  auto partial = ExactMatrix::from_rows({{1, 0}, {0, 0}}, f2);
  auto x = solve(partial, b);
  REQUIRE(x.has_value());
  CHECK(x->at(0, 0) == 1);
  CHECK(partial * *x == b);
}

TEST_CASE("solve solvability iff rank([a|b]) == rank(a)") {
  std::mt19937_64 rng(11);
  for (unsigned p : {2u, 3u, 5u})
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_matrix(rng, p, 1 + rng() % 5, 1 + rng() % 5);
      auto b = random_matrix(rng, p, a.rows(), 1);
      ExactMatrix aug(a.rows(), a.cols() + 1, a.field());
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b.at(r, 0);
      }
      bool solvable = solve(a, b).has_value();
      CHECK(solvable == (rank(aug) == rank(a)));
      if (solvable) CHECK(a * *solve(a, b) == b);
    }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(23);
  for (unsigned p : {2u, 3u, 5u})
    for (int trial = 0; trial < 25; ++trial) {
      auto m = random_matrix(rng, p, 1 + rng() % 8, 1 + rng() % 8);
      auto k = kernel_basis(m);
      CHECK(rank(m) + k.cols() == m.cols());
      if (k.cols() > 0) {
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());  // columns independent
      }
    }
}

TEST_CASE("kron: units and shapes") {
  PrimeField f3(3);
  CHECK(kron(ExactMatrix::identity(2, f3), ExactMatrix::identity(3, f3)) ==
        ExactMatrix::identity(6, f3));
  auto b = ExactMatrix::from_rows({{1, 2}, {0, 1}}, f3);
  auto one = ExactMatrix::identity(1, f3);
  CHECK(kron(one, b) == b);
  ExactMatrix a(2, 2, f3), c(3, 3, f3);
  CHECK(kron(a, c).rows() == 6);
  CHECK(kron(a, c).cols() == 6);
}

TEST_CASE("kron mixed-product law") {
  std::mt19937_64 rng(5);
  for (unsigned p : {2u, 3u})
    for (int trial = 0; trial < 15; ++trial) {
      std::size_t m = 1 + rng() % 3, n = 1 + rng() % 3, q = 1 + rng() % 3;
      std::size_t r = 1 + rng() % 3, s = 1 + rng() % 3;
      auto a = random_matrix(rng, p, m, n);
      auto c = random_matrix(rng, p, n, q);
      auto b = random_matrix(rng, p, r, s);
      auto d = random_matrix(rng, p, s, r);
      CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("inverse round trip and singular rejection") {
  PrimeField f5(5);
  auto m = ExactMatrix::from_rows({{2, 4}, {1, 3}}, f5);
  auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK(*mi * m == ExactMatrix::identity(2, f5));
  CHECK(m * *mi == ExactMatrix::identity(2, f5));
  CHECK(!inverse(ExactMatrix::from_rows({{1, 1}, {1, 1}}, PrimeField(2))).has_value());
}

TEST_CASE("vec/unvec respect column-major contract") {
  std::mt19937_64 rng(3);
  auto a = random_matrix(rng, 3, 2, 3);
  auto x = random_matrix(rng, 3, 3, 2);
  auto b = random_matrix(rng, 3, 2, 2);
  // vec(A X B) = kron(B^T, A) vec(X)
  CHECK(vec(a * x * b) == kron(b.transposed(), a) * vec(x));
  CHECK(unvec(vec(x), x.rows(), x.cols()) == x);
}
