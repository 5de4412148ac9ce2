#include <catch2/catch_amalgamated.hpp>

#include "bicat/bimodule.hpp"

using namespace bicat;

TEST_CASE("unit bimodule over F_2 has identity actions") {
  auto u = unit_bimodule(scalar_algebra(2));
  CHECK(u.dim() == 1);
  CHECK(u.left_action(0) == ExactMatrix::identity(1, PrimeField(2)));
  CHECK(u.right_action(0) == ExactMatrix::identity(1, PrimeField(2)));
}

TEST_CASE("unit bimodule over M_2(F_2): left action of e_11 has rank 2") {
  auto u = unit_bimodule(matrix_algebra(2, 2));
  CHECK(u.dim() == 4);
  // e_11 = basis element 0 (index a*n+b with a=b=0)
  CHECK(rank(u.left_action(0)) == 2);
}

TEST_CASE("column and row modules validate") {
  auto col = column_module(2, 2);
  CHECK(col.dim() == 2);
  CHECK(col.left_algebra().dim() == 4);
  CHECK(col.right_algebra().dim() == 1);
  auto row = row_module(2, 2);
  CHECK(row.dim() == 2);
  CHECK(row.left_algebra().dim() == 1);
  CHECK(row.right_algebra().dim() == 4);
}

TEST_CASE("hom_to_bimodule: identity homomorphism gives the unit bimodule") {
  auto m2 = matrix_algebra(2, 2);
  auto viaid = hom_to_bimodule(m2, m2, ExactMatrix::identity(4, PrimeField(2)));
  CHECK(viaid == unit_bimodule(m2));
}

TEST_CASE("hom_to_bimodule: diagonal embedding of F_2 in M_2(F_2)") {
  auto f2 = scalar_algebra(2);
  auto m2 = matrix_algebra(2, 2);
  ExactMatrix rho(4, 1, PrimeField(2));  // 1 -> e_00 + e_11
  rho.at(0, 0) = 1;
  rho.at(3, 0) = 1;
  auto b = hom_to_bimodule(f2, m2, rho);
  CHECK(b.dim() == 4);
  CHECK(b.left_action(0) == ExactMatrix::identity(4, PrimeField(2)));  // scalar left action
}

TEST_CASE("hom_to_bimodule rejects non-multiplicative maps") {
  auto f2 = scalar_algebra(2);
  auto d = dual_numbers(2);
  // 1 -> 1 + x is unital but not multiplicative: (1+x)^2 = 1 + 2x = 1 != 1+x.
  ExactMatrix rho(2, 1, PrimeField(2));
  rho.at(0, 0) = 1;
  rho.at(1, 0) = 1;
  CHECK_THROWS_AS(hom_to_bimodule(f2, d, rho), NotAHomomorphism);
  // Non-unital map 1 -> 0.
  CHECK_THROWS_AS(hom_to_bimodule(f2, d, ExactMatrix(2, 1, PrimeField(2))), NotAHomomorphism);
}

TEST_CASE("tensor over scalars has full dimension: dim-1 case") {
  auto u = unit_bimodule(scalar_algebra(2));
  auto t = tensor_over(u, u);
  CHECK(t.cell.dim() == 1);
  CHECK(t.proj * t.section == ExactMatrix::identity(1, PrimeField(2)));
}

TEST_CASE("column (x)_{F_2} row has dim 4 and is the unit M_2(F_2) bimodule") {
  auto col = column_module(2, 2);
  auto row = row_module(2, 2);
  auto t = tensor_over(col, row);
  CHECK(t.cell.dim() == 4);
  auto iso = is_isomorphic_bimodule(t.cell, unit_bimodule(matrix_algebra(2, 2)));
  REQUIRE(iso.found());
  CHECK(iso.iso->is_iso());
}

TEST_CASE("row (x)_{M_2} column collapses to dim 1") {
  auto t = tensor_over(row_module(2, 2), column_module(2, 2));
  CHECK(t.cell.dim() == 1);
  auto f2 = scalar_algebra(2);
  CHECK(is_isomorphic_bimodule(t.cell, unit_bimodule(f2)).found());
}

TEST_CASE("tensor dimension bound, equality over scalars") {
  std::vector<Bimodule> corpus = {unit_bimodule(scalar_algebra(2)), column_module(2, 2),
                                  unit_bimodule(matrix_algebra(2, 2)),
                                  unit_bimodule(dual_numbers(2))};
  for (const auto& m : corpus)
    for (const auto& n : corpus) {
      if (!(m.right_algebra() == n.left_algebra())) continue;
      auto t = tensor_over(m, n);
      CHECK(t.cell.dim() <= m.dim() * n.dim());
      if (m.right_algebra().dim() == 1)  // S = F_p: no relations collapse
        CHECK(t.cell.dim() == m.dim() * n.dim());
    }
}

TEST_CASE("unitor existence: unit (x) m ~ m ~ m (x) unit on a corpus") {
  std::vector<Bimodule> corpus = {
      unit_bimodule(scalar_algebra(2)),   column_module(2, 2),
      row_module(2, 2),                   unit_bimodule(matrix_algebra(2, 2)),
      unit_bimodule(dual_numbers(3)),     column_module(2, 3),
      unit_bimodule(upper_triangular_2(2))};
  for (const auto& m : corpus) {
    auto lu = tensor_over(unit_bimodule(m.left_algebra()), m);
    auto ru = tensor_over(m, unit_bimodule(m.right_algebra()));
    CHECK(is_isomorphic_bimodule(lu.cell, m).found());
    CHECK(is_isomorphic_bimodule(ru.cell, m).found());
  }
}

TEST_CASE("dim-0 bimodules flow through tensor and hom") {
  auto f2 = scalar_algebra(2);
  auto z = zero_bimodule(f2, f2);
  auto t = tensor_over(z, unit_bimodule(f2));
  CHECK(t.cell.dim() == 0);
  CHECK(hom_space(z, z).empty());
  auto iso = is_isomorphic_bimodule(z, z);
  CHECK(iso.found());
  CHECK(iso.iso->is_iso());
}

TEST_CASE("hom_space(m, m) contains the identity") {
  auto m = column_module(2, 2);
  auto basis = hom_space(m, m);
  REQUIRE(!basis.empty());
  // Identity must be a combination of the basis; over (M_2, F_2) Schur gives
  // exactly the scalars.
  CHECK(basis.size() == 1);
  CHECK(basis[0].matrix() == ExactMatrix::identity(2, PrimeField(2)));
}

TEST_CASE("Schur count for the column module by brute force") {
  // Oracle: enumerate all 16 2x2 matrices over F_2 and keep those commuting
  // with every matrix unit (left action) and the identity (right action).
  auto col = column_module(2, 2);
  int count = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    ExactMatrix x(2, 2, PrimeField(2));
    x.at(0, 0) = bits & 1;
    x.at(0, 1) = (bits >> 1) & 1;
    x.at(1, 0) = (bits >> 2) & 1;
    x.at(1, 1) = (bits >> 3) & 1;
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i)
      ok = (x * col.left_action(i) == col.left_action(i) * x);
    if (ok) ++count;
  }
  CHECK(count == 2);  // 0 and the identity -> hom dim 1
  CHECK(hom_space(col, col).size() == 1);
}

TEST_CASE("hom additivity: hom(m (+) m, m) has twice the dimension") {
  auto m = column_module(2, 2);
  auto mm = direct_sum(m, m);
  CHECK(hom_space(mm, m).size() == 2 * hom_space(m, m).size());
}

TEST_CASE("iso search: reflexive, dim mismatch proven absent") {
  auto m = column_module(2, 2);
  auto self = is_isomorphic_bimodule(m, m);
  REQUIRE(self.found());
  CHECK(self.iso->is_iso());
  // Compose with inverse -> identity.
  CHECK(self.iso->inverted().after(*self.iso) == BimoduleMap::identity(m));

  auto bigger = direct_sum(m, m);
  auto r = is_isomorphic_bimodule(m, bigger);
  CHECK(!r.found());
  CHECK(r.exhaustive);  // dim mismatch is a proof
}

TEST_CASE("iso search is symmetric on the corpus") {
  auto col = column_module(2, 2);
  auto row = row_module(2, 2);
  auto t = tensor_over(col, row);
  auto u = unit_bimodule(matrix_algebra(2, 2));
  auto fwd = is_isomorphic_bimodule(t.cell, u);
  auto bwd = is_isomorphic_bimodule(u, t.cell);
  CHECK(fwd.found() == bwd.found());
}

TEST_CASE("non-isomorphic equal-dimension modules are refuted exhaustively") {
  // Over F_2[x]/(x^2): x acting as 0 vs x acting as the regular nilpotent on
  // dim 2 are non-isomorphic left modules (treated as bimodules with scalar
  // right action).
  auto d = dual_numbers(2);
  auto f2 = scalar_algebra(2);
  PrimeField f(2);
  std::vector<ExactMatrix> trivial = {ExactMatrix::identity(2, f), ExactMatrix(2, 2, f)};
  ExactMatrix nil(2, 2, f);
  nil.at(1, 0) = 1;
  std::vector<ExactMatrix> regular = {ExactMatrix::identity(2, f), nil};
  std::vector<ExactMatrix> scalar_right = {ExactMatrix::identity(2, f)};
  auto m_triv = Bimodule::validated(d, f2, 2, trivial, scalar_right);
  auto m_reg = Bimodule::validated(d, f2, 2, regular, scalar_right);
  auto r = is_isomorphic_bimodule(m_triv, m_reg);
  CHECK(!r.found());
  CHECK(r.exhaustive);
}

TEST_CASE("bimodule map validation rejects non-intertwiners") {
  auto col = column_module(2, 2);
  ExactMatrix bad(2, 2, PrimeField(2));
  bad.at(0, 1) = 1;  // e_{01}: does not commute with all matrix units
  CHECK_THROWS_AS(BimoduleMap::validated(col, col, bad), ValidationFailure);
}
