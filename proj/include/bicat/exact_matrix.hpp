#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicat/errors.hpp"
#include "bicat/prime_field.hpp"

namespace bicat {

// Dense row-major matrix over F_p. Instances are tiny (dims <= ~64), so no
// sparsity and no fast elimination; all pivoting is deterministic (first
// nonzero in column order) to keep derived bases reproducible.
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, 0) {}

  static ExactMatrix identity(std::size_t n, PrimeField field) {
    ExactMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static ExactMatrix from_rows(const std::vector<std::vector<unsigned>>& rows_in,
                               PrimeField field) {
    std::size_t r = rows_in.size();
    std::size_t c = r == 0 ? 0 : rows_in[0].size();
    ExactMatrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows_in[i].size() != c) throw DimensionMismatch("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j] % field.modulus();
    }
    return m;
  }

  static ExactMatrix column(const std::vector<unsigned>& entries, PrimeField field) {
    ExactMatrix m(entries.size(), 1, field);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i] % field.modulus();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  unsigned& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  unsigned at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<unsigned> row(std::size_t r) const {
    return std::vector<unsigned>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  std::vector<unsigned> col(std::size_t c) const {
    std::vector<unsigned> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
  }

  void set_col(std::size_t c, const std::vector<unsigned>& v) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r] % field_.modulus();
  }

  bool is_zero() const {
    for (unsigned x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  ExactMatrix transposed() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  ExactMatrix operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_)
      throw DimensionMismatch("matrix product " + shape() + " * " + other.shape());
    ExactMatrix out(rows_, other.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        unsigned aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          out.at(i, j) = field_.add(out.at(i, j), field_.mul(aik, other.at(k, j)));
      }
    return out;
  }

  ExactMatrix operator+(const ExactMatrix& other) const {
    require_same_shape(other, "+");
    ExactMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], other.a_[i]);
    return out;
  }

  ExactMatrix operator-(const ExactMatrix& other) const {
    require_same_shape(other, "-");
    ExactMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], other.a_[i]);
    return out;
  }

  ExactMatrix scaled(unsigned c) const {
    ExactMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.mul(a_[i], c % field_.modulus());
    return out;
  }

  bool operator==(const ExactMatrix&) const = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      s += r ? ";" : "";
      for (std::size_t c = 0; c < cols_; ++c) s += (c ? "," : "") + std::to_string(at(r, c));
    }
    return s + "]";
  }

private:
  void require_same_shape(const ExactMatrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_))
      throw DimensionMismatch(std::string("operator") + op + " on " + shape() + " vs " +
                              other.shape());
  }

  std::size_t rows_, cols_;
  PrimeField field_;
  std::vector<unsigned> a_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

inline RrefResult rref(const ExactMatrix& m) {
  ExactMatrix r = m;
  const PrimeField& f = r.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    // Deterministic pivoting: first nonzero at or below pivot_row.
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(sel, c), r.at(pivot_row, c));
    unsigned inv = f.inv(r.at(pivot_row, col));
    for (std::size_t c = 0; c < r.cols(); ++c) r.at(pivot_row, c) = f.mul(r.at(pivot_row, c), inv);
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == pivot_row) continue;
      unsigned factor = r.at(row, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < r.cols(); ++c)
        r.at(row, c) = f.sub(r.at(row, c), f.mul(factor, r.at(pivot_row, c)));
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

// Columns of the result form a basis of {x : m x = 0}; column count equals
// cols(m) - rank(m). Free variables are set to 1 one at a time in ascending
// column order, so the basis is reproducible.
inline ExactMatrix kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ExactMatrix basis(m.cols(), free_cols.size(), f);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.at(fc, k) = 1;
    for (std::size_t prow = 0; prow < r.rank; ++prow)
      basis.at(r.pivots[prow], k) = f.neg(r.reduced.at(prow, fc));
  }
  return basis;
}

// Solves a x = b for matrix b (each column independently); nullopt iff some
// column of b lies outside the column space of a.
inline std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("solve: " + a.shape() + " vs rhs " + b.shape());
  const PrimeField& f = a.field();
  ExactMatrix aug(a.rows(), a.cols() + b.cols(), f);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
  }
  RrefResult red = rref(aug);
  // Any pivot in the rhs block means that rhs column is inconsistent.
  for (std::size_t p : red.pivots)
    if (p >= a.cols()) return std::nullopt;
  ExactMatrix x(a.cols(), b.cols(), f);
  for (std::size_t prow = 0; prow < red.rank; ++prow)
    for (std::size_t c = 0; c < b.cols(); ++c)
      x.at(red.pivots[prow], c) = red.reduced.at(prow, a.cols() + c);
  return x;
}

inline std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  auto x = solve(m, ExactMatrix::identity(m.rows(), m.field()));
  if (!x) return std::nullopt;
  // solve() finds some preimage; for singular m the rhs is inconsistent, so
  // reaching here means m is invertible and x is the two-sided inverse.
  return x;
}

inline ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      unsigned aij = a.at(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.field().mul(aij, b.at(k, l));
    }
  return out;
}

// Column-major vec: stacks columns, so vec(A X B) = kron(B^T, A) vec(X).
inline ExactMatrix vec(const ExactMatrix& m) {
  ExactMatrix v(m.rows() * m.cols(), 1, m.field());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) v.at(c * m.rows() + r, 0) = m.at(r, c);
  return v;
}

inline ExactMatrix unvec(const ExactMatrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1)
    throw DimensionMismatch("unvec: " + v.shape() + " into " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  ExactMatrix m(rows, cols, v.field());
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = v.at(c * rows + r, 0);
  return m;
}

inline ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: " + a.shape() + " on " + b.shape());
  ExactMatrix out(a.rows() + b.rows(), a.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
  return out;
}

}  // namespace bicat
