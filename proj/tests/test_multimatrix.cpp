#include <catch2/catch_amalgamated.hpp>

#include "bicat/multimatrix.hpp"

using namespace bicat;

namespace {

MultiplicityBimodule make(std::vector<long long> lb, std::vector<long long> rb, IntMatrix e) {
  return MultiplicityBimodule::validated(MultimatrixAlgebra::validated(std::move(lb)),
                                         MultimatrixAlgebra::validated(std::move(rb)),
                                         std::move(e));
}

}  // namespace

TEST_CASE("nondegeneracy rejects zero rows") {
  CHECK_THROWS_AS(make({2, 2, 1}, {2, 2}, {{1, 0}, {0, 1}, {0, 0}}), ValidationFailure);
  CHECK_NOTHROW(make({2, 2}, {2, 2}, {{1, 0}, {0, 1}}));
}

TEST_CASE("interior tensor: identity is a strict unit") {
  auto e = make({2, 3}, {1, 1, 2}, {{1, 0, 2}, {0, 1, 1}});
  auto ul = unit_correspondence(e.left);
  auto ur = unit_correspondence(e.right);
  CHECK(interior_tensor(ul, e) == e);
  CHECK(interior_tensor(e, ur) == e);
}

TEST_CASE("interior tensor: [[1,1]] . [[1],[1]] = [[2]]") {
  auto e1 = make({1}, {1, 1}, {{1, 1}});
  auto e2 = make({1, 1}, {1}, {{1}, {1}});
  CHECK(interior_tensor(e1, e2).mult == IntMatrix{{2}});
}

TEST_CASE("interior tensor: permutation times its transpose is the unit") {
  auto e = make({2, 3}, {3, 2}, {{0, 1}, {1, 0}});
  CHECK(interior_tensor(e, conjugate(e)) == unit_correspondence(e.left));
  CHECK(interior_tensor(conjugate(e), e) == unit_correspondence(e.right));
}

TEST_CASE("interior tensor rejects mismatched middles") {
  auto e1 = make({1}, {1, 1}, {{1, 1}});
  auto e2 = make({2, 1}, {1}, {{1}, {1}});
  CHECK_THROWS_AS(interior_tensor(e1, e2), AlgebraMismatch);
}

TEST_CASE("unit correspondence shapes") {
  CHECK(unit_correspondence(MultimatrixAlgebra::validated({2, 3})).mult == int_identity(2));
  CHECK(unit_correspondence(MultimatrixAlgebra::validated({})).mult.empty());
}

TEST_CASE("fullness means no zero column") {
  CHECK(is_full(make({2, 2}, {2, 2}, {{1, 0}, {0, 1}})));
  CHECK(!is_full(make({1, 1}, {1, 1}, {{1, 0}, {1, 0}})));
  CHECK(is_full(make({1, 1}, {1}, {{1}, {1}})));
}

TEST_CASE("compacts_iso: permutation with matching blocks") {
  // k_j = sum_i E_ij n_i over the left block sizes n = [2,3].
  auto e = make({2, 3}, {3, 2}, {{0, 1}, {1, 0}});
  auto k = compacts_iso(e);
  CHECK(k.iso);
  CHECK(k.k_blocks == std::vector<long long>{3, 2});
}

TEST_CASE("compacts_iso: non-permutation shapes fail") {
  auto flat = make({2}, {1, 1}, {{1, 1}});
  auto k = compacts_iso(flat);
  CHECK(!k.iso);
  CHECK(k.k_blocks == std::vector<long long>{2, 2});

  auto doubled = make({2}, {2}, {{2}});
  auto kd = compacts_iso(doubled);
  CHECK(!kd.iso);
  CHECK(kd.k_blocks == std::vector<long long>{4});  // k = 2n
}

TEST_CASE("conjugate is an involution and transposes") {
  auto e = make({1, 1}, {1, 1}, {{1, 2}, {0, 1}});
  CHECK(conjugate(e).mult == IntMatrix{{1, 0}, {2, 1}});
  CHECK(conjugate(conjugate(e)) == e);
  auto u = unit_correspondence(MultimatrixAlgebra::validated({2, 2}));
  CHECK(conjugate(u) == u);
}

TEST_CASE("certify_equivalence_cstar: permutation certifies") {
  auto e = make({2, 3}, {3, 2}, {{0, 1}, {1, 0}});
  auto res = certify_equivalence_cstar(e);
  REQUIRE(res.equivalent);
  CHECK(res.inverse->mult == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("certify_equivalence_cstar: refutations name the condition") {
  auto res = certify_equivalence_cstar(make({2}, {1, 1}, {{1, 1}}));
  CHECK(!res.equivalent);
  CHECK(res.failed_condition == "compacts_iso");
  CHECK(res.k_blocks == std::vector<long long>{2, 2});

  auto notfull = certify_equivalence_cstar(make({1, 1}, {1, 1}, {{1, 0}, {1, 0}}));
  CHECK(!notfull.equivalent);
  CHECK(notfull.failed_condition == "full");
}

TEST_CASE("two multimatrix algebras are equivalent iff block counts match") {
  // Exhaustive search over permutation matrices is just "counts equal".
  auto a = MultimatrixAlgebra::validated({2, 5});
  auto b = MultimatrixAlgebra::validated({1, 7});
  auto e = MultiplicityBimodule::validated(a, b, int_identity(2));
  CHECK(certify_equivalence_cstar(e).equivalent);
}

TEST_CASE("strict associativity of interior tensor on a sweep") {
  // All composable triples of nondegenerate matrices with entries <= 2 and
  // at most 2 blocks per algebra; exact integer identity.
  std::vector<long long> sizes = {1, 2};
  auto enumerate = [&](std::size_t r, std::size_t c) {
    std::vector<IntMatrix> out;
    std::size_t total = 1;
    for (std::size_t k = 0; k < r * c; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      IntMatrix m(r, std::vector<long long>(c, 0));
      std::size_t x = code;
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < c; ++j) {
          m[i][j] = static_cast<long long>(x % 3);
          x /= 3;
          nonzero |= (m[i][j] != 0);
        }
        ok = nonzero;
      }
      if (ok) out.push_back(std::move(m));
    }
    return out;
  };
  int checked = 0;
  for (std::size_t b0 = 1; b0 <= 2; ++b0)
    for (std::size_t b1 = 1; b1 <= 2; ++b1)
      for (std::size_t b2 = 1; b2 <= 2; ++b2)
        for (std::size_t b3 = 1; b3 <= 2; ++b3) {
          auto a0 = MultimatrixAlgebra::validated(std::vector<long long>(b0, 1));
          auto a1 = MultimatrixAlgebra::validated(std::vector<long long>(b1, 1));
          auto a2 = MultimatrixAlgebra::validated(std::vector<long long>(b2, 1));
          auto a3 = MultimatrixAlgebra::validated(std::vector<long long>(b3, 1));
          for (const auto& e1 : enumerate(b0, b1))
            for (const auto& e2 : enumerate(b1, b2))
              for (const auto& e3 : enumerate(b2, b3)) {
                auto m1 = MultiplicityBimodule{a0, a1, e1};
                auto m2 = MultiplicityBimodule{a1, a2, e2};
                auto m3 = MultiplicityBimodule{a2, a3, e3};
                auto lhs = interior_tensor(interior_tensor(m1, m2), m3);
                auto rhs = interior_tensor(m1, interior_tensor(m2, m3));
                if (!(lhs == rhs)) FAIL("associativity broke");
                ++checked;
              }
        }
  CHECK(checked > 1000);
}
