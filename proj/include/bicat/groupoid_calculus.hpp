#pragma once

#include <algorithm>

#include "bicat/bibundle.hpp"
#include "bicat/bicategory.hpp"

namespace bicat {

namespace detail {

// Index of (x, y) in the lex-ordered pullback pair list of a composition.
inline int pair_pos(const BibundleComposition& c, int x, int y) {
  auto it = std::lower_bound(c.pairs.begin(), c.pairs.end(), std::make_pair(x, y));
  if (it == c.pairs.end() || *it != std::make_pair(x, y))
    throw ValidationFailure("pair not in the pullback");
  return static_cast<int>(it - c.pairs.begin());
}

}  // namespace detail

// The bicategory of finite groupoids with regular bibundles as 1-cells and
// equivariant carrier maps as 2-cells; horizontal composition is the
// Hilsum-Skandalis orbit space, and the structural 2-cells are induced
// bijections of orbit sets, verified on every representative.
struct GroupoidCalculus {
  using Object = FiniteGroupoid;
  using OneCell = Bibundle;
  using TwoCell = BibundleMap;

  static const Object& left_object(const OneCell& f) { return f.left_groupoid(); }
  static const Object& right_object(const OneCell& f) { return f.right_groupoid(); }
  static bool objects_equal(const Object& a, const Object& b) { return a == b; }

  static OneCell unit(const Object& g) { return unit_bibundle(g); }
  static OneCell compose(const OneCell& f, const OneCell& g) { return hs_tensor(f, g).cell; }

  // [[x,y],z] |-> [x,[y,z]], checked on all composable triples.
  static TwoCell associator(const OneCell& m, const OneCell& n, const OneCell& p) {
    auto mn = hs_tensor(m, n);
    auto mn_p = hs_tensor(mn.cell, p);
    auto np = hs_tensor(n, p);
    auto m_np = hs_tensor(m, np.cell);
    std::vector<int> alpha(mn_p.cell.carrier(), -1);
    for (std::size_t pm = 0; pm < mn.pairs.size(); ++pm) {
      auto [x, y] = mn.pairs[pm];
      int o = mn.proj[pm];
      for (std::size_t z = 0; z < p.carrier(); ++z) {
        if (n.sigma(y) != p.tau(static_cast<int>(z))) continue;
        int lhs = mn_p.proj[detail::pair_pos(mn_p, o, static_cast<int>(z))];
        int w = np.proj[detail::pair_pos(np, y, static_cast<int>(z))];
        int rhs = m_np.proj[detail::pair_pos(m_np, x, w)];
        if (alpha[lhs] < 0)
          alpha[lhs] = rhs;
        else if (alpha[lhs] != rhs)
          throw ValidationFailure("associator is not well defined on orbits");
      }
    }
    return BibundleMap::validated(mn_p.cell, m_np.cell, std::move(alpha));
  }

  // [g, x] |-> g.x
  static TwoCell left_unitor(const OneCell& m) {
    auto comp = hs_tensor(unit_bibundle(m.left_groupoid()), m);
    std::vector<int> lam(comp.cell.carrier(), -1);
    for (std::size_t pm = 0; pm < comp.pairs.size(); ++pm) {
      auto [g, x] = comp.pairs[pm];
      int value = m.act_left(g, x);
      int o = comp.proj[pm];
      if (lam[o] < 0)
        lam[o] = value;
      else if (lam[o] != value)
        throw ValidationFailure("left unitor is not well defined on orbits");
    }
    return BibundleMap::validated(comp.cell, m, std::move(lam));
  }

  // [x, h] |-> x.h
  static TwoCell right_unitor(const OneCell& m) {
    auto comp = hs_tensor(m, unit_bibundle(m.right_groupoid()));
    std::vector<int> rho(comp.cell.carrier(), -1);
    for (std::size_t pm = 0; pm < comp.pairs.size(); ++pm) {
      auto [x, h] = comp.pairs[pm];
      int value = m.act_right(x, h);
      int o = comp.proj[pm];
      if (rho[o] < 0)
        rho[o] = value;
      else if (rho[o] != value)
        throw ValidationFailure("right unitor is not well defined on orbits");
    }
    return BibundleMap::validated(comp.cell, m, std::move(rho));
  }

  static TwoCell id2(const OneCell& f) { return BibundleMap::identity(f); }

  static TwoCell vcompose(const TwoCell& second, const TwoCell& first) {
    return second.after(first);
  }

  static TwoCell hcompose(const TwoCell& phi, const TwoCell& psi) {
    auto src = hs_tensor(phi.source(), psi.source());
    auto tgt = hs_tensor(phi.target(), psi.target());
    std::vector<int> table(src.cell.carrier(), -1);
    for (std::size_t pm = 0; pm < src.pairs.size(); ++pm) {
      auto [x, y] = src.pairs[pm];
      int value = tgt.proj[detail::pair_pos(tgt, phi.table()[x], psi.table()[y])];
      int o = src.proj[pm];
      if (table[o] < 0)
        table[o] = value;
      else if (table[o] != value)
        throw ValidationFailure("horizontal composite is not well defined on orbits");
    }
    return BibundleMap::validated(src.cell, tgt.cell, std::move(table));
  }

  static bool is_iso(const TwoCell& u) { return u.is_iso(); }
  static bool equal2(const TwoCell& a, const TwoCell& b) { return a == b; }

  static IsoSearchOutcome<TwoCell> find_iso(const OneCell& f, const OneCell& g, std::uint64_t) {
    return find_bibundle_iso(f, g);
  }

  static std::vector<TwoCell> sample_2cells(const OneCell& f, const OneCell& g, std::uint64_t,
                                            std::size_t max) {
    std::vector<TwoCell> out;
    enumerate_bibundle_maps(f, g, /*bijective_only=*/false, max,
                            [&](const std::vector<int>& table) {
                              out.push_back(BibundleMap::validated(f, g, table));
                              return true;
                            });
    return out;
  }
};

}  // namespace bicat
