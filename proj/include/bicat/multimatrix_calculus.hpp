#pragma once

#include "bicat/bicategory.hpp"
#include "bicat/multimatrix.hpp"

namespace bicat {

// In the finite C* calculus the interior tensor is strictly associative and
// unital, so the only 2-cells are identities between equal multiplicity
// matrices. The checkers still evaluate both sides and compare.
struct StrictTwoCell {
  MultiplicityBimodule source, target;

  static StrictTwoCell validated(MultiplicityBimodule source, MultiplicityBimodule target) {
    if (!(source == target))
      throw ValidationFailure("multimatrix 2-cells exist only between equal correspondences");
    return StrictTwoCell{std::move(source), std::move(target)};
  }

  bool operator==(const StrictTwoCell&) const = default;
};

struct MultimatrixCalculus {
  using Object = MultimatrixAlgebra;
  using OneCell = MultiplicityBimodule;
  using TwoCell = StrictTwoCell;

  static const Object& left_object(const OneCell& f) { return f.left; }
  static const Object& right_object(const OneCell& f) { return f.right; }
  static bool objects_equal(const Object& a, const Object& b) { return a == b; }

  static OneCell unit(const Object& a) { return unit_correspondence(a); }
  static OneCell compose(const OneCell& f, const OneCell& g) { return interior_tensor(f, g); }

  static TwoCell associator(const OneCell& m, const OneCell& n, const OneCell& p) {
    return StrictTwoCell::validated(interior_tensor(interior_tensor(m, n), p),
                                    interior_tensor(m, interior_tensor(n, p)));
  }
  static TwoCell left_unitor(const OneCell& m) {
    return StrictTwoCell::validated(interior_tensor(unit(m.left), m), m);
  }
  static TwoCell right_unitor(const OneCell& m) {
    return StrictTwoCell::validated(interior_tensor(m, unit(m.right)), m);
  }

  static TwoCell id2(const OneCell& f) { return StrictTwoCell{f, f}; }

  static TwoCell vcompose(const TwoCell& second, const TwoCell& first) {
    if (!(first.target == second.source)) throw NotComposable("strict 2-cell mismatch");
    return StrictTwoCell{first.source, second.target};
  }

  static TwoCell hcompose(const TwoCell& phi, const TwoCell& psi) {
    return StrictTwoCell::validated(interior_tensor(phi.source, psi.source),
                                    interior_tensor(phi.target, psi.target));
  }

  static bool is_iso(const TwoCell&) { return true; }
  static bool equal2(const TwoCell& a, const TwoCell& b) { return a == b; }

  static IsoSearchOutcome<TwoCell> find_iso(const OneCell& f, const OneCell& g, std::uint64_t) {
    if (f == g) return {StrictTwoCell{f, g}, true};
    return {std::nullopt, true};
  }

  static std::vector<TwoCell> sample_2cells(const OneCell& f, const OneCell& g, std::uint64_t,
                                            std::size_t) {
    if (f == g) return {StrictTwoCell{f, g}};
    return {};
  }
};

}  // namespace bicat
