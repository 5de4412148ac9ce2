#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicat/errors.hpp"
#include "bicat/iso_search.hpp"

namespace bicat {

// An arrow calculus plugs a concrete 1-cell/2-cell world (algebra bimodules,
// multiplicity matrices, groupoid bibundles) into the generic coherence and
// object-isomorphism machinery. Composition must come with enough projection
// data internally for the calculus to build its associator and unitors: the
// composed object alone is not enough.
template <typename C>
concept ArrowCalculus = requires(const typename C::Object& a, const typename C::OneCell& f,
                                 const typename C::TwoCell& u, std::uint64_t seed,
                                 std::size_t max) {
  { C::left_object(f) } -> std::convertible_to<typename C::Object>;
  { C::right_object(f) } -> std::convertible_to<typename C::Object>;
  { C::objects_equal(a, a) } -> std::convertible_to<bool>;
  { C::unit(a) } -> std::convertible_to<typename C::OneCell>;
  { C::compose(f, f) } -> std::convertible_to<typename C::OneCell>;
  { C::associator(f, f, f) } -> std::convertible_to<typename C::TwoCell>;
  { C::left_unitor(f) } -> std::convertible_to<typename C::TwoCell>;
  { C::right_unitor(f) } -> std::convertible_to<typename C::TwoCell>;
  { C::id2(f) } -> std::convertible_to<typename C::TwoCell>;
  { C::vcompose(u, u) } -> std::convertible_to<typename C::TwoCell>;
  { C::hcompose(u, u) } -> std::convertible_to<typename C::TwoCell>;
  { C::is_iso(u) } -> std::convertible_to<bool>;
  { C::equal2(u, u) } -> std::convertible_to<bool>;
  { C::find_iso(f, f, seed) } -> std::convertible_to<IsoSearchOutcome<typename C::TwoCell>>;
  { C::sample_2cells(f, f, seed, max) } -> std::convertible_to<std::vector<typename C::TwoCell>>;
};

enum class CoherenceLaw { pentagon, triangle, left_unit, right_unit };

inline const char* law_name(CoherenceLaw law) {
  switch (law) {
    case CoherenceLaw::pentagon: return "pentagon";
    case CoherenceLaw::triangle: return "triangle";
    case CoherenceLaw::left_unit: return "left-unit";
    case CoherenceLaw::right_unit: return "right-unit";
  }
  return "?";
}

struct CoherenceReport {
  CoherenceLaw law;
  bool holds = false;
  std::string witness;  // present iff !holds
};

template <ArrowCalculus C>
void require_composable(const typename C::OneCell& f, const typename C::OneCell& g) {
  if (!C::objects_equal(C::right_object(f), C::left_object(g)))
    throw NotComposable("cells are not composable");
}

// Both re-bracketing paths from ((m n) p) q to m (n (p q)), compared as
// concrete 2-cells, entrywise.
template <ArrowCalculus C>
CoherenceReport check_pentagon(const typename C::OneCell& m, const typename C::OneCell& n,
                               const typename C::OneCell& p, const typename C::OneCell& q) {
  require_composable<C>(m, n);
  require_composable<C>(n, p);
  require_composable<C>(p, q);
  auto mn = C::compose(m, n);
  auto pq = C::compose(p, q);
  auto lhs = C::vcompose(C::associator(m, n, pq), C::associator(mn, p, q));
  auto rhs = C::vcompose(
      C::hcompose(C::id2(m), C::associator(n, p, q)),
      C::vcompose(C::associator(m, C::compose(n, p), q), C::hcompose(C::associator(m, n, p), C::id2(q))));
  CoherenceReport rep{CoherenceLaw::pentagon, C::equal2(lhs, rhs), ""};
  if (!rep.holds) rep.witness = "the two re-bracketing composites differ";
  return rep;
}

// (m 1_b) n --associator--> m (1_b n) --1 o unitor--> m n  versus  the right
// unitor whiskered with n.
template <ArrowCalculus C>
CoherenceReport check_triangle(const typename C::OneCell& m, const typename C::OneCell& n) {
  require_composable<C>(m, n);
  auto b = C::right_object(m);
  auto lhs =
      C::vcompose(C::hcompose(C::id2(m), C::left_unitor(n)), C::associator(m, C::unit(b), n));
  auto rhs = C::hcompose(C::right_unitor(m), C::id2(n));
  CoherenceReport rep{CoherenceLaw::triangle, C::equal2(lhs, rhs), ""};
  if (!rep.holds) rep.witness = "triangle composite differs from the whiskered unitor";
  return rep;
}

template <ArrowCalculus C>
CoherenceReport check_left_unit(const typename C::OneCell& m) {
  CoherenceReport rep{CoherenceLaw::left_unit, C::is_iso(C::left_unitor(m)), ""};
  if (!rep.holds) rep.witness = "left unitor is not invertible";
  return rep;
}

template <ArrowCalculus C>
CoherenceReport check_right_unit(const typename C::OneCell& m) {
  CoherenceReport rep{CoherenceLaw::right_unit, C::is_iso(C::right_unitor(m)), ""};
  if (!rep.holds) rep.witness = "right unitor is not invertible";
  return rep;
}

// Naturality of the associator on sampled 2-cells: for sampled endo-2-cells
// alpha, beta, gamma the square
//   (m n) p --assoc--> m (n p)
// commutes with (alpha o beta) o gamma against alpha o (beta o gamma).
template <ArrowCalculus C>
bool associator_natural_on_samples(const typename C::OneCell& m, const typename C::OneCell& n,
                                   const typename C::OneCell& p, std::uint64_t seed,
                                   std::size_t max_samples = 3) {
  auto alphas = C::sample_2cells(m, m, seed, max_samples);
  auto betas = C::sample_2cells(n, n, seed + 1, max_samples);
  auto gammas = C::sample_2cells(p, p, seed + 2, max_samples);
  auto assoc = C::associator(m, n, p);
  for (const auto& a : alphas)
    for (const auto& b : betas)
      for (const auto& g : gammas) {
        auto lhs = C::vcompose(assoc, C::hcompose(C::hcompose(a, b), g));
        auto rhs = C::vcompose(C::hcompose(a, C::hcompose(b, g)), assoc);
        if (!C::equal2(lhs, rhs)) return false;
      }
  return true;
}

// Object isomorphism per the bicategorical definition: f in (a,b) and g in
// (b,a) with f g ~ 1_a and g f ~ 1_b, certified by explicit invertible
// 2-cells. A refutation names the failing side and says whether the iso
// search was exhaustive.
template <ArrowCalculus C>
struct ObjectIsoResult {
  bool isomorphic = false;
  std::optional<typename C::TwoCell> iso_fg;  // f o g -> 1_a
  std::optional<typename C::TwoCell> iso_gf;  // g o f -> 1_b
  std::string failed_side;                    // "f o g" or "g o f" or a composition error
  bool proven = true;
};

template <ArrowCalculus C>
ObjectIsoResult<C> verify_object_isomorphism(const typename C::OneCell& f,
                                             const typename C::OneCell& g,
                                             std::uint64_t seed = 0) {
  if (!C::objects_equal(C::right_object(f), C::left_object(g)) ||
      !C::objects_equal(C::right_object(g), C::left_object(f)))
    throw ObjectMismatch("cells are not opposite-oriented between the same objects");
  ObjectIsoResult<C> out;
  try {
    auto fg = C::compose(f, g);
    auto iso1 = C::find_iso(fg, C::unit(C::left_object(f)), seed);
    if (!iso1.found()) {
      out.failed_side = "f o g";
      out.proven = iso1.exhaustive;
      return out;
    }
    auto gf = C::compose(g, f);
    auto iso2 = C::find_iso(gf, C::unit(C::left_object(g)), seed);
    if (!iso2.found()) {
      out.failed_side = "g o f";
      out.proven = iso2.exhaustive;
      return out;
    }
    out.isomorphic = true;
    out.iso_fg = std::move(iso1.iso);
    out.iso_gf = std::move(iso2.iso);
  } catch (const NotRegular& e) {
    out.failed_side = std::string("composition rejected: ") + e.witness();
    out.proven = true;
  }
  return out;
}

}  // namespace bicat
