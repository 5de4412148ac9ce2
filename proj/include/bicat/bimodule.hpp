#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bicat/algebra.hpp"
#include "bicat/exact_matrix.hpp"
#include "bicat/iso_search.hpp"

namespace bicat {

// R-S bimodule: a finite-dimensional F_p space with a unital left
// representation of R and a unital right anti-representation of S that
// commute. All three conditions are checked on basis pairs at construction.
class Bimodule {
public:
  static Bimodule validated(FiniteDimAlgebra left, FiniteDimAlgebra right, std::size_t dim,
                            std::vector<ExactMatrix> left_action,
                            std::vector<ExactMatrix> right_action) {
    if (!(left.field() == right.field()))
      throw AlgebraMismatch("bimodule algebras over different fields");
    const PrimeField& f = left.field();
    if (left_action.size() != left.dim() || right_action.size() != right.dim())
      throw ValidationFailure("action list size does not match algebra dim");
    for (const auto& m : left_action)
      if (m.rows() != dim || m.cols() != dim || !(m.field() == f))
        throw ValidationFailure("left action matrix has shape " + m.shape());
    for (const auto& m : right_action)
      if (m.rows() != dim || m.cols() != dim || !(m.field() == f))
        throw ValidationFailure("right action matrix has shape " + m.shape());

    Bimodule b(std::move(left), std::move(right), dim, std::move(left_action),
               std::move(right_action));
    const auto& R = b.left_;
    const auto& S = b.right_;

    // L(e_i) L(e_j) = L(e_i e_j)
    for (std::size_t i = 0; i < R.dim(); ++i)
      for (std::size_t j = 0; j < R.dim(); ++j) {
        ExactMatrix rhs(dim, dim, f);
        for (std::size_t k = 0; k < R.dim(); ++k)
          rhs = rhs + b.left_action_[k].scaled(R.structure(i, j, k));
        if (b.left_action_[i] * b.left_action_[j] != rhs)
          throw ValidationFailure("left action not multiplicative on basis pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      }
    if (b.left_action_of(R.unit()) != ExactMatrix::identity(dim, f))
      throw ValidationFailure("left action of unit is not the identity");

    // Rt(e_i) Rt(e_j) = Rt(e_j e_i)
    for (std::size_t i = 0; i < S.dim(); ++i)
      for (std::size_t j = 0; j < S.dim(); ++j) {
        ExactMatrix rhs(dim, dim, f);
        for (std::size_t k = 0; k < S.dim(); ++k)
          rhs = rhs + b.right_action_[k].scaled(S.structure(j, i, k));
        if (b.right_action_[i] * b.right_action_[j] != rhs)
          throw ValidationFailure("right action not anti-multiplicative on basis pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      }
    if (b.right_action_of(S.unit()) != ExactMatrix::identity(dim, f))
      throw ValidationFailure("right action of unit is not the identity");

    for (std::size_t i = 0; i < R.dim(); ++i)
      for (std::size_t j = 0; j < S.dim(); ++j)
        if (b.left_action_[i] * b.right_action_[j] != b.right_action_[j] * b.left_action_[i])
          throw ValidationFailure("actions do not commute on basis pair (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
    return b;
  }

  const FiniteDimAlgebra& left_algebra() const { return left_; }
  const FiniteDimAlgebra& right_algebra() const { return right_; }
  const PrimeField& field() const { return left_.field(); }
  std::size_t dim() const { return dim_; }

  const ExactMatrix& left_action(std::size_t i) const { return left_action_[i]; }
  const ExactMatrix& right_action(std::size_t i) const { return right_action_[i]; }

  ExactMatrix left_action_of(const std::vector<unsigned>& a) const {
    ExactMatrix out(dim_, dim_, field());
    for (std::size_t i = 0; i < left_.dim(); ++i) out = out + left_action_[i].scaled(a[i]);
    return out;
  }

  ExactMatrix right_action_of(const std::vector<unsigned>& a) const {
    ExactMatrix out(dim_, dim_, field());
    for (std::size_t i = 0; i < right_.dim(); ++i) out = out + right_action_[i].scaled(a[i]);
    return out;
  }

  bool operator==(const Bimodule&) const = default;

private:
  Bimodule(FiniteDimAlgebra left, FiniteDimAlgebra right, std::size_t dim,
           std::vector<ExactMatrix> left_action, std::vector<ExactMatrix> right_action)
      : left_(std::move(left)),
        right_(std::move(right)),
        dim_(dim),
        left_action_(std::move(left_action)),
        right_action_(std::move(right_action)) {}

  FiniteDimAlgebra left_, right_;
  std::size_t dim_;
  std::vector<ExactMatrix> left_action_;
  std::vector<ExactMatrix> right_action_;
};

// Linear map intertwining both actions (a 2-cell of [Rings]).
class BimoduleMap {
public:
  static BimoduleMap validated(Bimodule source, Bimodule target, ExactMatrix matrix) {
    if (!(source.left_algebra() == target.left_algebra()) ||
        !(source.right_algebra() == target.right_algebra()))
      throw AlgebraMismatch("bimodule map between different algebra pairs");
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
      throw DimensionMismatch("bimodule map matrix " + matrix.shape());
    for (std::size_t i = 0; i < source.left_algebra().dim(); ++i)
      if (matrix * source.left_action(i) != target.left_action(i) * matrix)
        throw ValidationFailure("map does not intertwine left action of e" + std::to_string(i));
    for (std::size_t i = 0; i < source.right_algebra().dim(); ++i)
      if (matrix * source.right_action(i) != target.right_action(i) * matrix)
        throw ValidationFailure("map does not intertwine right action of e" + std::to_string(i));
    return BimoduleMap(std::move(source), std::move(target), std::move(matrix));
  }

  static BimoduleMap identity(const Bimodule& m) {
    return BimoduleMap(m, m, ExactMatrix::identity(m.dim(), m.field()));
  }

  const Bimodule& source() const { return source_; }
  const Bimodule& target() const { return target_; }
  const ExactMatrix& matrix() const { return matrix_; }

  bool is_iso() const {
    return matrix_.rows() == matrix_.cols() && rank(matrix_) == matrix_.rows();
  }

  BimoduleMap inverted() const {
    auto inv = inverse(matrix_);
    if (!inv) throw ValidationFailure("bimodule map is not invertible");
    return BimoduleMap(target_, source_, *inv);
  }

  // this o other (apply `other` first).
  BimoduleMap after(const BimoduleMap& other) const {
    if (!(other.target_ == source_)) throw NotComposable("bimodule map composition mismatch");
    return BimoduleMap(other.source_, target_, matrix_ * other.matrix_);
  }

  bool operator==(const BimoduleMap&) const = default;

private:
  BimoduleMap(Bimodule source, Bimodule target, ExactMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

  Bimodule source_, target_;
  ExactMatrix matrix_;
};

inline Bimodule unit_bimodule(const FiniteDimAlgebra& a) {
  std::vector<ExactMatrix> left, right;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    left.push_back(a.basis_left_mult(i));
    right.push_back(a.basis_right_mult(i));
  }
  return Bimodule::validated(a, a, a.dim(), std::move(left), std::move(right));
}

// Bimodule R -> S <- S induced by a unital algebra homomorphism rho: R -> S
// given on basis coordinates (S.dim x R.dim). Left action r(s) = rho(r) s.
inline Bimodule hom_to_bimodule(const FiniteDimAlgebra& r, const FiniteDimAlgebra& s,
                                const ExactMatrix& rho) {
  if (rho.rows() != s.dim() || rho.cols() != r.dim())
    throw DimensionMismatch("homomorphism matrix " + rho.shape());
  auto image = [&](const std::vector<unsigned>& x) {
    return (rho * ExactMatrix::column(x, r.field())).col(0);
  };
  if (image(r.unit()) != s.unit()) throw NotAHomomorphism("rho does not preserve the unit");
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (image(r.mul(r.basis_vector(i), r.basis_vector(j))) !=
          s.mul(image(r.basis_vector(i)), image(r.basis_vector(j))))
        throw NotAHomomorphism(i, j);
  std::vector<ExactMatrix> left, right;
  for (std::size_t i = 0; i < r.dim(); ++i) left.push_back(s.left_mult(image(r.basis_vector(i))));
  for (std::size_t i = 0; i < s.dim(); ++i) right.push_back(s.basis_right_mult(i));
  return Bimodule::validated(r, s, s.dim(), std::move(left), std::move(right));
}

// Column space F_p^n as an (M_n(F_p), F_p) bimodule.
inline Bimodule column_module(std::size_t n, unsigned p) {
  auto mn = matrix_algebra(n, p);
  PrimeField f(p);
  std::vector<ExactMatrix> left;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ExactMatrix e(n, n, f);
      e.at(a, b) = 1;
      left.push_back(e);
    }
  std::vector<ExactMatrix> right{ExactMatrix::identity(n, f)};
  return Bimodule::validated(mn, scalar_algebra(p), n, std::move(left), std::move(right));
}

// Row space F_p^n as an (F_p, M_n(F_p)) bimodule.
inline Bimodule row_module(std::size_t n, unsigned p) {
  auto mn = matrix_algebra(n, p);
  PrimeField f(p);
  std::vector<ExactMatrix> right;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // x e_{ab} moves coordinate a to slot b.
      ExactMatrix e(n, n, f);
      e.at(b, a) = 1;
      right.push_back(e);
    }
  std::vector<ExactMatrix> left{ExactMatrix::identity(n, f)};
  return Bimodule::validated(scalar_algebra(p), mn, n, std::move(left), std::move(right));
}

inline Bimodule zero_bimodule(const FiniteDimAlgebra& r, const FiniteDimAlgebra& s) {
  std::vector<ExactMatrix> left(r.dim(), ExactMatrix(0, 0, r.field()));
  std::vector<ExactMatrix> right(s.dim(), ExactMatrix(0, 0, r.field()));
  return Bimodule::validated(r, s, 0, std::move(left), std::move(right));
}

inline Bimodule direct_sum(const Bimodule& m, const Bimodule& n) {
  if (!(m.left_algebra() == n.left_algebra()) || !(m.right_algebra() == n.right_algebra()))
    throw AlgebraMismatch("direct_sum of bimodules over different pairs");
  std::size_t d = m.dim() + n.dim();
  auto block = [&](const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(d, d, m.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(m.dim() + i, m.dim() + j) = b.at(i, j);
    return out;
  };
  std::vector<ExactMatrix> left, right;
  for (std::size_t i = 0; i < m.left_algebra().dim(); ++i)
    left.push_back(block(m.left_action(i), n.left_action(i)));
  for (std::size_t i = 0; i < m.right_algebra().dim(); ++i)
    right.push_back(block(m.right_action(i), n.right_action(i)));
  return Bimodule::validated(m.left_algebra(), m.right_algebra(), d, std::move(left),
                             std::move(right));
}

// Horizontal composition data: the quotient M (x)_S N together with the
// projection from the scalar tensor space (basis x_i (x) y_j at index
// i*dim(N)+j) and the canonical section picking the representative basis.
struct BimoduleComposition {
  Bimodule cell;
  ExactMatrix proj;     // cell.dim x (dim(M)*dim(N))
  ExactMatrix section;  // (dim(M)*dim(N)) x cell.dim, proj * section = I
};

inline BimoduleComposition tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!(m.right_algebra() == n.left_algebra()))
    throw AlgebraMismatch("tensor_over: middle algebras differ");
  const FiniteDimAlgebra& s = m.right_algebra();
  const PrimeField& f = m.field();
  std::size_t md = m.dim(), nd = n.dim(), td = md * nd;

  // Relation rows: (x_i . e_s) (x) y_j  -  x_i (x) (e_s . y_j).
  ExactMatrix rel(md * s.dim() * nd, td, f);
  std::size_t row = 0;
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t sj = 0; sj < s.dim(); ++sj)
      for (std::size_t j = 0; j < nd; ++j, ++row) {
        for (std::size_t a = 0; a < md; ++a)
          rel.at(row, a * nd + j) = f.add(rel.at(row, a * nd + j), m.right_action(sj).at(a, i));
        for (std::size_t b = 0; b < nd; ++b)
          rel.at(row, i * nd + b) = f.sub(rel.at(row, i * nd + b), n.left_action(sj).at(b, j));
      }
  RrefResult red = rref(rel);
  std::vector<bool> is_pivot(td, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<std::size_t> rep_cols;  // non-pivot coordinates index the quotient basis
  for (std::size_t c = 0; c < td; ++c)
    if (!is_pivot[c]) rep_cols.push_back(c);
  std::size_t q = rep_cols.size();

  ExactMatrix proj(q, td, f);
  for (std::size_t t = 0; t < td; ++t) {
    // Reduce e_t modulo the relation row space; RREF rows only touch their
    // own pivot column among pivots, so a single pass suffices.
    std::vector<unsigned> v(td, 0);
    v[t] = 1;
    for (std::size_t pr = 0; pr < red.rank; ++pr) {
      unsigned coef = v[red.pivots[pr]];
      if (coef == 0) continue;
      for (std::size_t c = 0; c < td; ++c)
        v[c] = f.sub(v[c], f.mul(coef, red.reduced.at(pr, c)));
    }
    for (std::size_t k = 0; k < q; ++k) proj.at(k, t) = v[rep_cols[k]];
  }
  ExactMatrix section(td, q, f);
  for (std::size_t k = 0; k < q; ++k) section.at(rep_cols[k], k) = 1;

  std::vector<ExactMatrix> left, right;
  for (std::size_t i = 0; i < m.left_algebra().dim(); ++i) {
    ExactMatrix lift = kron(m.left_action(i), ExactMatrix::identity(nd, f));
    ExactMatrix act = proj * lift * section;
    if (act * proj != proj * lift)
      throw ValidationFailure("left action does not descend to the tensor quotient");
    left.push_back(std::move(act));
  }
  for (std::size_t i = 0; i < n.right_algebra().dim(); ++i) {
    ExactMatrix lift = kron(ExactMatrix::identity(md, f), n.right_action(i));
    ExactMatrix act = proj * lift * section;
    if (act * proj != proj * lift)
      throw ValidationFailure("right action does not descend to the tensor quotient");
    right.push_back(std::move(act));
  }
  Bimodule cell = Bimodule::validated(m.left_algebra(), n.right_algebra(), q, std::move(left),
                                      std::move(right));
  return BimoduleComposition{std::move(cell), std::move(proj), std::move(section)};
}

// Basis of the space of bimodule maps m -> n, via the kernel of the stacked
// intertwining constraints on vec(X).
inline std::vector<BimoduleMap> hom_space(const Bimodule& m, const Bimodule& n) {
  if (!(m.left_algebra() == n.left_algebra()) || !(m.right_algebra() == n.right_algebra()))
    throw AlgebraMismatch("hom_space between different algebra pairs");
  const PrimeField& f = m.field();
  std::size_t rows_per = n.dim() * m.dim();
  std::size_t n_constraints = m.left_algebra().dim() + m.right_algebra().dim();
  ExactMatrix big(n_constraints * rows_per, rows_per, f);
  std::size_t offset = 0;
  auto emit = [&](const ExactMatrix& on_src, const ExactMatrix& on_tgt) {
    // X A - B X = 0  ->  (kron(A^T, I) - kron(I, B)) vec(X) = 0
    ExactMatrix block = kron(on_src.transposed(), ExactMatrix::identity(n.dim(), f)) -
                        kron(ExactMatrix::identity(m.dim(), f), on_tgt);
    for (std::size_t r = 0; r < rows_per; ++r)
      for (std::size_t c = 0; c < rows_per; ++c) big.at(offset + r, c) = block.at(r, c);
    offset += rows_per;
  };
  for (std::size_t i = 0; i < m.left_algebra().dim(); ++i)
    emit(m.left_action(i), n.left_action(i));
  for (std::size_t i = 0; i < m.right_algebra().dim(); ++i)
    emit(m.right_action(i), n.right_action(i));

  ExactMatrix k = kernel_basis(big);
  std::vector<BimoduleMap> basis;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    ExactMatrix x = unvec(ExactMatrix::column(k.col(c), f), n.dim(), m.dim());
    basis.push_back(BimoduleMap::validated(m, n, std::move(x)));
  }
  return basis;
}

// Searches the hom space for an invertible element. Exhaustive over all
// F_p-combinations when p^dim(hom) <= 4096, otherwise up to 256 fixed-seed
// pseudo-random combinations; see IsoSearchOutcome for what the flag means.
inline IsoSearchOutcome<BimoduleMap> is_isomorphic_bimodule(const Bimodule& m, const Bimodule& n,
                                                            std::uint64_t seed = 0) {
  if (!(m.left_algebra() == n.left_algebra()) || !(m.right_algebra() == n.right_algebra()))
    throw AlgebraMismatch("is_isomorphic_bimodule between different algebra pairs");
  if (m.dim() != n.dim()) return {std::nullopt, true};
  if (m.dim() == 0)
    return {BimoduleMap::validated(m, n, ExactMatrix(0, 0, m.field())), true};
  auto basis = hom_space(m, n);
  std::size_t h = basis.size();
  if (h == 0) return {std::nullopt, true};
  const unsigned p = m.field().modulus();

  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < h; ++i) {
    total *= p;
    if (total > 4096) {
      exhaustive = false;
      break;
    }
  }

  auto try_coeffs = [&](const std::vector<unsigned>& coeffs) -> std::optional<BimoduleMap> {
    ExactMatrix x(n.dim(), m.dim(), m.field());
    for (std::size_t b = 0; b < h; ++b)
      if (coeffs[b]) x = x + basis[b].matrix().scaled(coeffs[b]);
    if (rank(x) != m.dim()) return std::nullopt;
    return BimoduleMap::validated(m, n, std::move(x));
  };

  if (exhaustive) {
    std::vector<unsigned> coeffs(h, 0);
    for (std::uint64_t step = 1; step < total; ++step) {
      std::size_t i = 0;
      while (++coeffs[i] == p) coeffs[i++] = 0;
      if (auto iso = try_coeffs(coeffs)) return {std::move(iso), true};
    }
    return {std::nullopt, true};
  }
  std::mt19937_64 rng(seed);
  for (int draw = 0; draw < 256; ++draw) {
    std::vector<unsigned> coeffs(h);
    bool nonzero = false;
    for (auto& c : coeffs) {
      c = static_cast<unsigned>(rng() % p);
      nonzero |= (c != 0);
    }
    if (!nonzero) continue;
    if (auto iso = try_coeffs(coeffs)) return {std::move(iso), false};
  }
  return {std::nullopt, false};
}

}  // namespace bicat
