#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bicat/bimodule.hpp"

namespace bicat {

namespace detail {

// Odometer over all dim x dim matrices mod p, in a fixed deterministic order.
inline bool next_matrix(ExactMatrix& m) {
  unsigned p = m.field().modulus();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (++m.at(r, c) < p) return true;
      m.at(r, c) = 0;
    }
  return false;
}

inline bool partial_rep_consistent(const FiniteDimAlgebra& a,
                                   const std::vector<ExactMatrix>& assigned, bool anti) {
  std::size_t just = assigned.size() - 1;
  std::size_t dim = assigned[0].rows();
  const PrimeField& f = a.field();
  auto check_pair = [&](std::size_t i, std::size_t j) {
    // product e_i e_j must be expressible with assigned images only
    for (std::size_t k = assigned.size(); k < a.dim(); ++k)
      if (a.structure(i, j, k) != 0) return true;  // defer
    ExactMatrix rhs(dim, dim, f);
    for (std::size_t k = 0; k < assigned.size(); ++k)
      rhs = rhs + assigned[k].scaled(a.structure(i, j, k));
    ExactMatrix lhs = anti ? assigned[j] * assigned[i] : assigned[i] * assigned[j];
    return lhs == rhs;
  };
  for (std::size_t other = 0; other <= just; ++other)
    if (!check_pair(just, other) || !check_pair(other, just)) return false;
  return true;
}

inline bool unit_acts_as_identity(const FiniteDimAlgebra& a,
                                  const std::vector<ExactMatrix>& images, std::size_t dim) {
  ExactMatrix u(dim, dim, a.field());
  for (std::size_t i = 0; i < a.dim(); ++i) u = u + images[i].scaled(a.unit()[i]);
  return u == ExactMatrix::identity(dim, a.field());
}

}  // namespace detail

// All unital left A-module structures on F_p^dim, enumerated by exhaustive
// action-matrix search with incremental multiplicativity pruning; returned as
// bimodules with scalar right action, deduplicated up to isomorphism when
// requested (first representative in enumeration order is kept).
inline std::vector<Bimodule> enumerate_left_modules(const FiniteDimAlgebra& a, std::size_t dim,
                                                    bool up_to_iso = true,
                                                    std::uint64_t seed = 0) {
  const PrimeField& f = a.field();
  auto scalars = scalar_algebra(f.modulus());
  std::vector<Bimodule> reps;
  std::vector<ExactMatrix> right{ExactMatrix::identity(dim, f)};
  if (dim == 0) {
    reps.push_back(Bimodule::validated(a, scalars, 0,
                                       std::vector<ExactMatrix>(a.dim(), ExactMatrix(0, 0, f)),
                                       std::vector<ExactMatrix>{ExactMatrix(0, 0, f)}));
    return reps;
  }

  std::vector<ExactMatrix> assigned;
  std::function<void()> rec = [&]() {
    if (assigned.size() == a.dim()) {
      if (!detail::unit_acts_as_identity(a, assigned, dim)) return;
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          ExactMatrix rhs(dim, dim, f);
          for (std::size_t k = 0; k < a.dim(); ++k)
            rhs = rhs + assigned[k].scaled(a.structure(i, j, k));
          if (assigned[i] * assigned[j] != rhs) return;
        }
      Bimodule cand = Bimodule::validated(a, scalars, dim, assigned, right);
      if (up_to_iso)
        for (const auto& r : reps)
          if (is_isomorphic_bimodule(r, cand, seed).found()) return;
      reps.push_back(std::move(cand));
      return;
    }
    ExactMatrix m(dim, dim, f);
    while (true) {
      assigned.push_back(m);
      if (detail::partial_rep_consistent(a, assigned, /*anti=*/false)) rec();
      assigned.pop_back();
      if (!detail::next_matrix(m)) break;
    }
  };
  rec();
  return reps;
}

// All (R,S)-bimodule structures on F_p^dim, by nested action-matrix search:
// left representation first, then right anti-representation with commutation
// checked against the completed left action.
inline std::vector<Bimodule> enumerate_bimodules(const FiniteDimAlgebra& r,
                                                 const FiniteDimAlgebra& s, std::size_t dim,
                                                 bool up_to_iso = true, std::uint64_t seed = 0) {
  if (!(r.field() == s.field())) throw AlgebraMismatch("enumerate_bimodules field mismatch");
  const PrimeField& f = r.field();
  std::vector<Bimodule> reps;
  if (dim == 0) {
    reps.push_back(zero_bimodule(r, s));
    return reps;
  }

  std::vector<ExactMatrix> left_assigned, right_assigned;

  std::function<void()> rec_right = [&]() {
    if (right_assigned.size() == s.dim()) {
      if (!detail::unit_acts_as_identity(s, right_assigned, dim)) return;
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
          ExactMatrix rhs(dim, dim, f);
          for (std::size_t k = 0; k < s.dim(); ++k)
            rhs = rhs + right_assigned[k].scaled(s.structure(j, i, k));
          if (right_assigned[i] * right_assigned[j] != rhs) return;
        }
      Bimodule cand = Bimodule::validated(r, s, dim, left_assigned, right_assigned);
      if (up_to_iso)
        for (const auto& kept : reps)
          if (is_isomorphic_bimodule(kept, cand, seed).found()) return;
      reps.push_back(std::move(cand));
      return;
    }
    ExactMatrix m(dim, dim, f);
    while (true) {
      bool commutes = true;
      for (const auto& l : left_assigned)
        if (l * m != m * l) {
          commutes = false;
          break;
        }
      if (commutes) {
        right_assigned.push_back(m);
        if (detail::partial_rep_consistent(s, right_assigned, /*anti=*/true)) rec_right();
        right_assigned.pop_back();
      }
      if (!detail::next_matrix(m)) break;
    }
  };

  std::function<void()> rec_left = [&]() {
    if (left_assigned.size() == r.dim()) {
      if (!detail::unit_acts_as_identity(r, left_assigned, dim)) return;
      for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
          ExactMatrix rhs(dim, dim, f);
          for (std::size_t k = 0; k < r.dim(); ++k)
            rhs = rhs + left_assigned[k].scaled(r.structure(i, j, k));
          if (left_assigned[i] * left_assigned[j] != rhs) return;
        }
      rec_right();
      return;
    }
    ExactMatrix m(dim, dim, f);
    while (true) {
      left_assigned.push_back(m);
      if (detail::partial_rep_consistent(r, left_assigned, /*anti=*/false)) rec_left();
      left_assigned.pop_back();
      if (!detail::next_matrix(m)) break;
    }
  };
  rec_left();
  return reps;
}

}  // namespace bicat
