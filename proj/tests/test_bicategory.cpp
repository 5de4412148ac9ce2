#include <catch2/catch_amalgamated.hpp>

#include "bicat/algebra_calculus.hpp"
#include "bicat/groupoid_calculus.hpp"
#include "bicat/morita_algebra.hpp"
#include "bicat/multimatrix_calculus.hpp"

using namespace bicat;

static_assert(ArrowCalculus<AlgebraCalculus>);
static_assert(ArrowCalculus<MultimatrixCalculus>);
static_assert(ArrowCalculus<GroupoidCalculus>);

namespace {

Bibundle classic_p2_point() {
  auto p2 = pair_groupoid(2);
  auto pt = trivial_groupoid(1);
  std::vector<int> tau = {0, 1}, sigma = {0, 0};
  std::vector<int> lact(4 * 2, -1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) lact[(i * 2 + j) * 2 + j] = i;
  std::vector<int> ract = {0, 1};
  return Bibundle::validated(p2, pt, 2, tau, sigma, lact, ract);
}

}  // namespace

TEST_CASE("associator on unit arrows is an identity 2-cell") {
  auto u = unit_bimodule(dual_numbers(2));
  auto a = AlgebraCalculus::associator(u, u, u);
  CHECK(a.is_iso());
  // Identity on the nose: source and target quotients coincide and the map
  // fixes every canonical representative.
  CHECK(a.source() == a.target());
  CHECK(a.matrix() == ExactMatrix::identity(a.source().dim(), PrimeField(2)));
}

TEST_CASE("associator on the column/row/column chain is invertible") {
  auto col = column_module(2, 2);
  auto row = row_module(2, 2);
  auto a = AlgebraCalculus::associator(col, row, col);
  CHECK(a.is_iso());
  CHECK(a.source().dim() == 2);  // (col . row) . col ~ col
}

TEST_CASE("unitors on the unit arrow coincide") {
  auto u = unit_bimodule(matrix_algebra(2, 2));
  auto l = AlgebraCalculus::left_unitor(u);
  auto r = AlgebraCalculus::right_unitor(u);
  CHECK(l.is_iso());
  CHECK(r.is_iso());
  // 1 o 1 -> 1 from either unitor: same quotient source, same map.
  CHECK(l.source() == r.source());
  CHECK(l.matrix() == r.matrix());
}

TEST_CASE("left unitor of the column module is a 2-dim iso") {
  auto l = AlgebraCalculus::left_unitor(column_module(2, 2));
  CHECK(l.is_iso());
  CHECK(l.source().dim() == 2);
  CHECK(l.target().dim() == 2);
}

TEST_CASE("pentagon and triangle on unit arrows") {
  auto u = unit_bimodule(dual_numbers(3));
  CHECK(check_pentagon<AlgebraCalculus>(u, u, u, u).holds);
  CHECK(check_triangle<AlgebraCalculus>(u, u).holds);
}

TEST_CASE("pentagon and triangle on the column/row corpus over F_2 and F_3") {
  for (unsigned p : {2u, 3u}) {
    auto col = column_module(2, p);
    auto row = row_module(2, p);
    auto um = unit_bimodule(matrix_algebra(2, p));
    auto uf = unit_bimodule(scalar_algebra(p));
    CHECK(check_pentagon<AlgebraCalculus>(col, row, col, row).holds);
    CHECK(check_pentagon<AlgebraCalculus>(row, col, row, col).holds);
    CHECK(check_pentagon<AlgebraCalculus>(um, col, uf, uf).holds);
    CHECK(check_triangle<AlgebraCalculus>(col, row).holds);
    CHECK(check_triangle<AlgebraCalculus>(row, col).holds);
    CHECK(check_left_unit<AlgebraCalculus>(col).holds);
    CHECK(check_right_unit<AlgebraCalculus>(row).holds);
  }
}

TEST_CASE("associator naturality on sampled 2-cells") {
  auto col = column_module(2, 2);
  auto row = row_module(2, 2);
  CHECK(associator_natural_on_samples<AlgebraCalculus>(col, row, col, 0));
  auto u = unit_bimodule(dual_numbers(2));
  CHECK(associator_natural_on_samples<AlgebraCalculus>(u, u, u, 1));
}

TEST_CASE("multimatrix calculus is strict and the checker confirms it") {
  auto a = MultimatrixAlgebra::validated({2, 1});
  auto b = MultimatrixAlgebra::validated({1, 1});
  auto e1 = MultiplicityBimodule::validated(a, b, {{1, 1}, {0, 1}});
  auto e2 = MultiplicityBimodule::validated(b, a, {{1, 0}, {1, 1}});
  auto assoc = MultimatrixCalculus::associator(e1, e2, e1);
  CHECK(assoc.source == assoc.target);  // literal identity
  CHECK(check_pentagon<MultimatrixCalculus>(e1, e2, e1, e2).holds);
  CHECK(check_triangle<MultimatrixCalculus>(e1, e2).holds);
  CHECK(check_left_unit<MultimatrixCalculus>(e1).holds);
  CHECK(check_right_unit<MultimatrixCalculus>(e1).holds);
}

TEST_CASE("groupoid coherence on the classic corpus") {
  auto m = classic_p2_point();
  auto mbar = opposite_bibundle(m);
  auto u2 = unit_bibundle(pair_groupoid(2));
  auto u1 = unit_bibundle(trivial_groupoid(1));
  CHECK(check_pentagon<GroupoidCalculus>(m, mbar, m, mbar).holds);
  CHECK(check_pentagon<GroupoidCalculus>(u2, m, u1, u1).holds);
  CHECK(check_triangle<GroupoidCalculus>(m, mbar).holds);
  CHECK(check_triangle<GroupoidCalculus>(mbar, m).holds);
  CHECK(check_left_unit<GroupoidCalculus>(m).holds);
  CHECK(check_right_unit<GroupoidCalculus>(mbar).holds);
  CHECK(associator_natural_on_samples<GroupoidCalculus>(m, mbar, m, 0));
}

TEST_CASE("verify_object_isomorphism: unit arrows certify an object with itself") {
  auto u = unit_bimodule(dual_numbers(2));
  auto res = verify_object_isomorphism<AlgebraCalculus>(u, u);
  REQUIRE(res.isomorphic);
  CHECK(AlgebraCalculus::is_iso(*res.iso_fg));
  CHECK(AlgebraCalculus::is_iso(*res.iso_gf));
}

TEST_CASE("verify_object_isomorphism: M_2(F_2) ~ F_2 via column and row") {
  auto res = verify_object_isomorphism<AlgebraCalculus>(column_module(2, 2), row_module(2, 2));
  REQUIRE(res.isomorphic);
  // symmetry: swapping the pair also certifies
  auto sym = verify_object_isomorphism<AlgebraCalculus>(row_module(2, 2), column_module(2, 2));
  CHECK(sym.isomorphic);
}

TEST_CASE("verify_object_isomorphism refutes F_2 x F_2 vs F_2 at dim <= 2") {
  auto r = direct_product(scalar_algebra(2), scalar_algebra(2));
  auto s = scalar_algebra(2);
  for (std::size_t d = 0; d <= 2; ++d)
    for (const auto& cand : enumerate_bimodules(r, s, d)) {
      auto res = verify_object_isomorphism<AlgebraCalculus>(cand, inverse_candidate(cand));
      CHECK(!res.isomorphic);
      CHECK(res.proven);
    }
}

TEST_CASE("certify_equivalence agrees with verify_object_isomorphism") {
  std::vector<Bimodule> corpus = {
      column_module(2, 2),
      row_module(2, 2),
      unit_bimodule(matrix_algebra(2, 2)),
      unit_bimodule(dual_numbers(2)),
      direct_sum(column_module(2, 2), column_module(2, 2)),
      zero_bimodule(scalar_algebra(2), scalar_algebra(2)),
  };
  {
    auto f2 = scalar_algebra(2);
    PrimeField f(2);
    std::vector<ExactMatrix> act{ExactMatrix::identity(2, f)};
    corpus.push_back(Bimodule::validated(f2, f2, 2, act, act));
  }
  for (const auto& m : corpus) {
    auto direct = certify_equivalence(m);
    auto via_bicat = verify_object_isomorphism<AlgebraCalculus>(m, inverse_candidate(m));
    CHECK(direct.equivalent == via_bicat.isomorphic);
  }
}

TEST_CASE("verify_object_isomorphism in the groupoid calculus matches biprincipality") {
  auto m = classic_p2_point();
  auto res = verify_object_isomorphism<GroupoidCalculus>(m, opposite_bibundle(m));
  REQUIRE(res.isomorphic);
  CHECK(check_biprincipal(m).biprincipal);

  // A regular but not right-principal bibundle: P2 acting on {0,1} over P2
  // base... use the functor bibundle from the 2-object discrete groupoid
  // into the point-pair: tau misses nothing but the right action cannot be
  // transitive on tau fibers when the carrier is too big.
  auto p2 = pair_groupoid(2);
  auto pt = trivial_groupoid(1);
  // Two disjoint copies of the classic bibundle carrier seen as (P2, point):
  // left action must be transitive on sigma fibers for left principality,
  // but the doubled carrier has two orbits over the single point.
  std::vector<int> tau = {0, 1, 0, 1}, sigma = {0, 0, 0, 0};
  std::vector<int> lact(4 * 4, -1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      lact[(i * 2 + j) * 4 + j] = i;          // first copy
      lact[(i * 2 + j) * 4 + (2 + j)] = 2 + i;  // second copy
    }
  std::vector<int> ract = {0, 1, 2, 3};
  auto doubled = Bibundle::validated(p2, pt, 4, tau, sigma, lact, ract);
  CHECK(!check_biprincipal(doubled).left.principal);
  auto refuted = verify_object_isomorphism<GroupoidCalculus>(doubled, opposite_bibundle(doubled));
  CHECK(!refuted.isomorphic);
  CHECK(refuted.proven);
}

TEST_CASE("verify_object_isomorphism symmetry transfers the certificate") {
  auto m = classic_p2_point();
  auto fwd = verify_object_isomorphism<GroupoidCalculus>(m, opposite_bibundle(m));
  auto bwd = verify_object_isomorphism<GroupoidCalculus>(opposite_bibundle(m), m);
  CHECK(fwd.isomorphic == bwd.isomorphic);
}

TEST_CASE("object mismatch is rejected") {
  auto u2 = unit_bimodule(dual_numbers(2));
  CHECK_THROWS_AS(verify_object_isomorphism<AlgebraCalculus>(u2, column_module(2, 2)),
                  ObjectMismatch);
}
