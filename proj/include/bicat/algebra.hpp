#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicat/exact_matrix.hpp"
#include "bicat/prime_field.hpp"

namespace bicat {

// Unital associative algebra over F_p given by structure constants on a
// fixed basis: e_i e_j = sum_k c[i][j][k] e_k. Associativity and the unit
// law are checked exhaustively on basis triples at construction.
class FiniteDimAlgebra {
public:
  static FiniteDimAlgebra validated(PrimeField field, std::size_t dim, std::vector<unsigned> c,
                                    std::vector<unsigned> unit) {
    if (dim == 0) throw ValidationFailure("algebra must have dim >= 1");
    if (c.size() != dim * dim * dim)
      throw ValidationFailure("structure table has " + std::to_string(c.size()) +
                              " entries, expected " + std::to_string(dim * dim * dim));
    if (unit.size() != dim)
      throw ValidationFailure("unit vector has wrong length " + std::to_string(unit.size()));
    for (auto& x : c) x %= field.modulus();
    for (auto& x : unit) x %= field.modulus();
    FiniteDimAlgebra a(field, dim, std::move(c), std::move(unit));

    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (a.mul(a.mul(a.basis_vector(i), a.basis_vector(j)), a.basis_vector(k)) !=
              a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k))))
            throw AssociativityViolation(i, j, k);
    for (std::size_t i = 0; i < dim; ++i) {
      auto e = a.basis_vector(i);
      if (a.mul(a.unit_, e) != e || a.mul(e, a.unit_) != e) throw UnitViolation(i);
    }
    return a;
  }

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  unsigned structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<unsigned>& unit() const { return unit_; }

  std::vector<unsigned> basis_vector(std::size_t i) const {
    std::vector<unsigned> v(dim_, 0);
    v[i] = 1;
    return v;
  }

  std::vector<unsigned> mul(const std::vector<unsigned>& x, const std::vector<unsigned>& y) const {
    std::vector<unsigned> z(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        unsigned xy = field_.mul(x[i], y[j]);
        for (std::size_t k = 0; k < dim_; ++k)
          z[k] = field_.add(z[k], field_.mul(xy, structure(i, j, k)));
      }
    }
    return z;
  }

  // Matrix of y -> x*y on basis coordinates.
  ExactMatrix left_mult(const std::vector<unsigned>& x) const {
    ExactMatrix out(dim_, dim_, field_);
    for (std::size_t j = 0; j < dim_; ++j) out.set_col(j, mul(x, basis_vector(j)));
    return out;
  }

  // Matrix of y -> y*x on basis coordinates.
  ExactMatrix right_mult(const std::vector<unsigned>& x) const {
    ExactMatrix out(dim_, dim_, field_);
    for (std::size_t j = 0; j < dim_; ++j) out.set_col(j, mul(basis_vector(j), x));
    return out;
  }

  ExactMatrix basis_left_mult(std::size_t i) const { return left_mult(basis_vector(i)); }
  ExactMatrix basis_right_mult(std::size_t i) const { return right_mult(basis_vector(i)); }

  FiniteDimAlgebra opposite() const {
    std::vector<unsigned> c_op(c_.size());
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          c_op[(i * dim_ + j) * dim_ + k] = structure(j, i, k);
    return FiniteDimAlgebra(field_, dim_, std::move(c_op), unit_);
  }

  bool operator==(const FiniteDimAlgebra&) const = default;

private:
  FiniteDimAlgebra(PrimeField field, std::size_t dim, std::vector<unsigned> c,
                   std::vector<unsigned> unit)
      : field_(field), dim_(dim), c_(std::move(c)), unit_(std::move(unit)) {}

  PrimeField field_;
  std::size_t dim_;
  std::vector<unsigned> c_;  // c[(i*dim + j)*dim + k]
  std::vector<unsigned> unit_;
};

// F_p itself as a one-dimensional algebra.
inline FiniteDimAlgebra scalar_algebra(unsigned p) {
  return FiniteDimAlgebra::validated(PrimeField(p), 1, {1}, {1});
}

// Full matrix algebra M_n(F_p) on the matrix-unit basis e_{ab} (index a*n+b);
// e_{ab} e_{cd} = [b==c] e_{ad}.
inline FiniteDimAlgebra matrix_algebra(std::size_t n, unsigned p) {
  std::size_t d = n * n;
  std::vector<unsigned> c(d * d * d, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t f = 0; f < n; ++f)
          if (b == e) {
            std::size_t i = a * n + b, j = e * n + f, k = a * n + f;
            c[(i * d + j) * d + k] = 1;
          }
  std::vector<unsigned> unit(d, 0);
  for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = 1;
  return FiniteDimAlgebra::validated(PrimeField(p), d, std::move(c), std::move(unit));
}

// F_p[x]/(x^k) on the basis 1, x, ..., x^{k-1}.
inline FiniteDimAlgebra truncated_polynomial_algebra(unsigned p, std::size_t k) {
  std::vector<unsigned> c(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i + j < k) c[(i * k + j) * k + (i + j)] = 1;
  std::vector<unsigned> unit(k, 0);
  unit[0] = 1;
  return FiniteDimAlgebra::validated(PrimeField(p), k, std::move(c), std::move(unit));
}

inline FiniteDimAlgebra dual_numbers(unsigned p) { return truncated_polynomial_algebra(p, 2); }

inline FiniteDimAlgebra direct_product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
  if (!(a.field() == b.field())) throw AlgebraMismatch("direct_product over different fields");
  std::size_t d = a.dim() + b.dim();
  std::vector<unsigned> c(d * d * d, 0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c[(i * d + j) * d + k] = a.structure(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        c[((a.dim() + i) * d + (a.dim() + j)) * d + (a.dim() + k)] = b.structure(i, j, k);
  std::vector<unsigned> unit(d, 0);
  for (std::size_t i = 0; i < a.dim(); ++i) unit[i] = a.unit()[i];
  for (std::size_t i = 0; i < b.dim(); ++i) unit[a.dim() + i] = b.unit()[i];
  return FiniteDimAlgebra::validated(a.field(), d, std::move(c), std::move(unit));
}

// Upper triangular 2x2 matrices over F_p on the basis e_{11}, e_{12}, e_{22}.
inline FiniteDimAlgebra upper_triangular_2(unsigned p) {
  std::size_t d = 3;
  std::vector<unsigned> c(d * d * d, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * d + j) * d + k] = 1; };
  set(0, 0, 0);  // e11 e11 = e11
  set(0, 1, 1);  // e11 e12 = e12
  set(1, 2, 1);  // e12 e22 = e12
  set(2, 2, 2);  // e22 e22 = e22
  return FiniteDimAlgebra::validated(PrimeField(p), d, std::move(c), {1, 0, 1});
}

}  // namespace bicat
