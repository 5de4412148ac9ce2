#pragma once

#include <random>

#include "bicat/bicategory.hpp"
#include "bicat/bimodule.hpp"

namespace bicat {

// The bicategory of finite-dimensional F_p algebras with bimodules as
// 1-cells: horizontal composition is the bimodule tensor product, and the
// structural 2-cells are built by chasing canonical quotient representatives
// through the projection/section data.
struct AlgebraCalculus {
  using Object = FiniteDimAlgebra;
  using OneCell = Bimodule;
  using TwoCell = BimoduleMap;

  static const Object& left_object(const OneCell& f) { return f.left_algebra(); }
  static const Object& right_object(const OneCell& f) { return f.right_algebra(); }
  static bool objects_equal(const Object& a, const Object& b) { return a == b; }

  static OneCell unit(const Object& a) { return unit_bimodule(a); }

  static OneCell compose(const OneCell& f, const OneCell& g) { return tensor_over(f, g).cell; }

  // (x (x) y) (x) z  |->  x (x) (y (x) z) on canonical representatives.
  static TwoCell associator(const OneCell& m, const OneCell& n, const OneCell& p) {
    const PrimeField& f = m.field();
    auto mn = tensor_over(m, n);
    auto mn_p = tensor_over(mn.cell, p);
    auto np = tensor_over(n, p);
    auto m_np = tensor_over(m, np.cell);
    ExactMatrix ql = mn_p.proj * kron(mn.proj, ExactMatrix::identity(p.dim(), f));
    ExactMatrix sl = kron(mn.section, ExactMatrix::identity(p.dim(), f)) * mn_p.section;
    ExactMatrix qr = m_np.proj * kron(ExactMatrix::identity(m.dim(), f), np.proj);
    ExactMatrix alpha = qr * sl;
    if (alpha * ql != qr)
      throw ValidationFailure("associator is not well defined on the quotients");
    return BimoduleMap::validated(mn_p.cell, m_np.cell, std::move(alpha));
  }

  // class of r (x) x  |->  r.x
  static TwoCell left_unitor(const OneCell& m) {
    const PrimeField& f = m.field();
    const FiniteDimAlgebra& a = m.left_algebra();
    auto comp = tensor_over(unit_bimodule(a), m);
    ExactMatrix act(m.dim(), a.dim() * m.dim(), f);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < m.dim(); ++k)
        act.set_col(i * m.dim() + k, m.left_action(i).col(k));
    ExactMatrix lam = act * comp.section;
    if (lam * comp.proj != act)
      throw ValidationFailure("left unitor is not well defined on the quotient");
    return BimoduleMap::validated(comp.cell, m, std::move(lam));
  }

  // class of x (x) s  |->  x.s
  static TwoCell right_unitor(const OneCell& m) {
    const PrimeField& f = m.field();
    const FiniteDimAlgebra& b = m.right_algebra();
    auto comp = tensor_over(m, unit_bimodule(b));
    ExactMatrix act(m.dim(), m.dim() * b.dim(), f);
    for (std::size_t k = 0; k < m.dim(); ++k)
      for (std::size_t j = 0; j < b.dim(); ++j)
        act.set_col(k * b.dim() + j, m.right_action(j).col(k));
    ExactMatrix rho = act * comp.section;
    if (rho * comp.proj != act)
      throw ValidationFailure("right unitor is not well defined on the quotient");
    return BimoduleMap::validated(comp.cell, m, std::move(rho));
  }

  static TwoCell id2(const OneCell& f) { return BimoduleMap::identity(f); }

  static TwoCell vcompose(const TwoCell& second, const TwoCell& first) {
    return second.after(first);
  }

  static TwoCell hcompose(const TwoCell& phi, const TwoCell& psi) {
    auto src = tensor_over(phi.source(), psi.source());
    auto tgt = tensor_over(phi.target(), psi.target());
    ExactMatrix lift = kron(phi.matrix(), psi.matrix());
    ExactMatrix x = tgt.proj * lift * src.section;
    if (x * src.proj != tgt.proj * lift)
      throw ValidationFailure("horizontal composite does not descend to the quotients");
    return BimoduleMap::validated(src.cell, tgt.cell, std::move(x));
  }

  static bool is_iso(const TwoCell& u) { return u.is_iso(); }
  static bool equal2(const TwoCell& a, const TwoCell& b) { return a == b; }

  static IsoSearchOutcome<TwoCell> find_iso(const OneCell& f, const OneCell& g,
                                            std::uint64_t seed) {
    return is_isomorphic_bimodule(f, g, seed);
  }

  // Hom basis elements plus fixed-seed random combinations, capped.
  static std::vector<TwoCell> sample_2cells(const OneCell& f, const OneCell& g,
                                            std::uint64_t seed, std::size_t max) {
    auto basis = hom_space(f, g);
    std::vector<TwoCell> out;
    for (const auto& b : basis) {
      if (out.size() >= max) return out;
      out.push_back(b);
    }
    if (basis.empty()) return out;
    std::mt19937_64 rng(seed);
    const unsigned p = f.field().modulus();
    while (out.size() < max) {
      ExactMatrix x(g.dim(), f.dim(), f.field());
      for (const auto& b : basis) x = x + b.matrix().scaled(static_cast<unsigned>(rng() % p));
      out.push_back(BimoduleMap::validated(f, g, std::move(x)));
    }
    return out;
  }
};

}  // namespace bicat
