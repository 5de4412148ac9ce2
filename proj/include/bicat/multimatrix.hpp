#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicat/errors.hpp"

namespace bicat {

// Finite-dimensional C*-algebra: a direct sum of matrix blocks, recorded by
// its block sizes only. All the Hilbert-bimodule structure of the finite
// case collapses into multiplicity bookkeeping.
struct MultimatrixAlgebra {
  std::vector<long long> blocks;

  static MultimatrixAlgebra validated(std::vector<long long> blocks) {
    for (long long n : blocks)
      if (n < 1) throw ValidationFailure("multimatrix block size must be >= 1");
    return MultimatrixAlgebra{std::move(blocks)};
  }

  std::size_t block_count() const { return blocks.size(); }
  bool operator==(const MultimatrixAlgebra&) const = default;
};

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t r = a.size(), inner = r ? a[0].size() : 0, c = inner && !b.empty() ? b[0].size() : 0;
  if (b.size() != inner) throw DimensionMismatch("integer matrix product");
  IntMatrix out(r, std::vector<long long>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline IntMatrix int_transpose(const IntMatrix& a, std::size_t rows, std::size_t cols) {
  IntMatrix out(cols, std::vector<long long>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  return out;
}

inline bool int_is_permutation(const IntMatrix& e) {
  std::size_t r = e.size();
  if (r == 0) return true;
  std::size_t c = e[0].size();
  if (r != c) return false;
  for (std::size_t i = 0; i < r; ++i) {
    long long row_sum = 0;
    for (std::size_t j = 0; j < c; ++j) {
      if (e[i][j] != 0 && e[i][j] != 1) return false;
      row_sum += e[i][j];
    }
    if (row_sum != 1) return false;
  }
  for (std::size_t j = 0; j < c; ++j) {
    long long col_sum = 0;
    for (std::size_t i = 0; i < r; ++i) col_sum += e[i][j];
    if (col_sum != 1) return false;
  }
  return true;
}

// Hilbert bimodule between multimatrix algebras, reduced to its multiplicity
// matrix E (rows = left blocks, columns = right blocks). Nondegeneracy of
// the left action means no zero row.
struct MultiplicityBimodule {
  MultimatrixAlgebra left, right;
  IntMatrix mult;

  static MultiplicityBimodule validated(MultimatrixAlgebra left, MultimatrixAlgebra right,
                                        IntMatrix mult) {
    if (mult.size() != left.block_count())
      throw ValidationFailure("multiplicity matrix has " + std::to_string(mult.size()) +
                              " rows, expected " + std::to_string(left.block_count()));
    for (const auto& row : mult) {
      if (row.size() != right.block_count())
        throw ValidationFailure("multiplicity matrix row length mismatch");
      bool nonzero = false;
      for (long long v : row) {
        if (v < 0) throw ValidationFailure("multiplicities must be nonnegative");
        nonzero |= (v != 0);
      }
      if (!nonzero)
        throw ValidationFailure("nondegeneracy: multiplicity matrix has a zero row");
    }
    return MultiplicityBimodule{std::move(left), std::move(right), std::move(mult)};
  }

  bool operator==(const MultiplicityBimodule&) const = default;
};

// Interior (Rieffel/Connes) tensor product: multiplicity matrices compose by
// integer matrix multiplication, strictly.
inline MultiplicityBimodule interior_tensor(const MultiplicityBimodule& e1,
                                            const MultiplicityBimodule& e2) {
  if (!(e1.right == e2.left))
    throw AlgebraMismatch("interior_tensor: middle algebras differ");
  IntMatrix prod = int_mul(e1.mult, e2.mult);
  for (const auto& row : prod) {
    bool nonzero = false;
    for (long long v : row) nonzero |= (v != 0);
    if (!nonzero) throw DegenerateResult("interior tensor produced a zero row");
  }
  return MultiplicityBimodule{e1.left, e2.right, std::move(prod)};
}

// Standard form at finite dimension: multiplicity one per block.
inline MultiplicityBimodule unit_correspondence(const MultimatrixAlgebra& b) {
  return MultiplicityBimodule{b, b, int_identity(b.block_count())};
}

// Fullness: the right inner product spans every right block, i.e. no zero
// column.
inline bool is_full(const MultiplicityBimodule& e) {
  for (std::size_t j = 0; j < e.right.block_count(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < e.left.block_count(); ++i) nonzero |= (e.mult[i][j] != 0);
    if (!nonzero) return false;
  }
  return true;
}

struct CompactsIso {
  bool iso = false;
  std::vector<long long> k_blocks;  // K_B(M) block sizes k_j = sum_i E_ij n_i
};

// The canonical left action A -> K_B(M) is an isomorphism iff E is a
// permutation matrix; the computed K-block sizes are returned either way.
inline CompactsIso compacts_iso(const MultiplicityBimodule& e) {
  CompactsIso out;
  out.k_blocks.assign(e.right.block_count(), 0);
  for (std::size_t j = 0; j < e.right.block_count(); ++j)
    for (std::size_t i = 0; i < e.left.block_count(); ++i)
      out.k_blocks[j] += e.mult[i][j] * e.left.blocks[i];
  out.iso = int_is_permutation(e.mult);
  return out;
}

// Conjugate space: left and right swapped, multiplicities transposed.
inline MultiplicityBimodule conjugate(const MultiplicityBimodule& e) {
  return MultiplicityBimodule{
      e.right, e.left, int_transpose(e.mult, e.left.block_count(), e.right.block_count())};
}

struct CstarEquivalenceResult {
  bool equivalent = false;
  std::string failed_condition;  // "full" or "compacts_iso"
  std::optional<MultiplicityBimodule> inverse;
  std::vector<long long> k_blocks;
};

// Invertibility in the finite C* calculus: full plus compacts-iso, which
// together say E is a permutation matrix; then the conjugate inverts it and
// both interior-tensor round trips equal the unit correspondences exactly.
inline CstarEquivalenceResult certify_equivalence_cstar(const MultiplicityBimodule& e) {
  CstarEquivalenceResult out;
  auto k = compacts_iso(e);
  out.k_blocks = k.k_blocks;
  if (!is_full(e)) {
    out.failed_condition = "full";
    return out;
  }
  if (!k.iso) {
    out.failed_condition = "compacts_iso";
    return out;
  }
  MultiplicityBimodule inv = conjugate(e);
  if (!(interior_tensor(e, inv) == unit_correspondence(e.left)) ||
      !(interior_tensor(inv, e) == unit_correspondence(e.right)))
    throw ValidationFailure("permutation round trip failed to equal the unit");
  out.equivalent = true;
  out.inverse = std::move(inv);
  return out;
}

}  // namespace bicat
