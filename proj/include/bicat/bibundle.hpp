#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicat/groupoid.hpp"
#include "bicat/iso_search.hpp"

namespace bicat {

enum class ActionSide { left, right };

// Groupoid action on a finite set over a base map. Left actions act along
// tau: M -> G_0 (defined when s(x) = tau(m)); right actions act along
// sigma: M -> H_0 (defined when sigma(m) = t(h)). Tables are checked
// exhaustively.
class GroupoidAction {
public:
  static GroupoidAction validated(FiniteGroupoid g, ActionSide side, std::size_t carrier,
                                  std::vector<int> base, std::vector<int> act) {
    GroupoidAction a(std::move(g), side, carrier, std::move(base), std::move(act));
    const FiniteGroupoid& gg = a.groupoid_;
    std::size_t n1 = gg.arrow_count();
    if (a.base_.size() != carrier || a.act_.size() != n1 * carrier)
      throw ValidationFailure("action table sizes are inconsistent");
    for (int q : a.base_)
      if (q < 0 || static_cast<std::size_t>(q) >= gg.object_count())
        throw ValidationFailure("base map value out of range");
    for (std::size_t x = 0; x < n1; ++x)
      for (std::size_t m = 0; m < carrier; ++m) {
        int v = a.act_[x * carrier + m];
        bool should = (side == ActionSide::left) ? gg.s(static_cast<int>(x)) == a.base_[m]
                                                 : a.base_[m] == gg.t(static_cast<int>(x));
        if (should != (v >= 0))
          throw ActionViolation("action defined off the fiber product at arrow " +
                                std::to_string(x) + ", point " + std::to_string(m));
        if (v >= 0) {
          if (static_cast<std::size_t>(v) >= carrier)
            throw ActionViolation("action value out of range");
          int expected_base = (side == ActionSide::left) ? gg.t(static_cast<int>(x))
                                                         : gg.s(static_cast<int>(x));
          if (a.base_[v] != expected_base)
            throw ActionViolation("base map not equivariant at arrow " + std::to_string(x) +
                                  ", point " + std::to_string(m));
        }
      }
    for (std::size_t m = 0; m < carrier; ++m) {
      int u = gg.unit_arrow(a.base_[m]);
      if (a.apply(u, static_cast<int>(m)) != static_cast<int>(m))
        throw ActionViolation("unit arrow does not act as identity on point " + std::to_string(m));
    }
    for (std::size_t x = 0; x < n1; ++x)
      for (std::size_t y = 0; y < n1; ++y) {
        if (!gg.composable(static_cast<int>(x), static_cast<int>(y))) continue;
        int xy = gg.compose(static_cast<int>(x), static_cast<int>(y));
        for (std::size_t m = 0; m < carrier; ++m) {
          if (side == ActionSide::left) {
            // x(ym) = (xy)m whenever s(y) = tau(m)
            if (gg.s(static_cast<int>(y)) != a.base_[m]) continue;
            if (a.apply(static_cast<int>(x), a.apply(static_cast<int>(y), static_cast<int>(m))) !=
                a.apply(xy, static_cast<int>(m)))
              throw ActionViolation("compatibility fails on (" + std::to_string(x) + "," +
                                    std::to_string(y) + "," + std::to_string(m) + ")");
          } else {
            // (mx)y = m(xy) whenever sigma(m) = t(x)
            if (a.base_[m] != gg.t(static_cast<int>(x))) continue;
            if (a.apply(static_cast<int>(y), a.apply(static_cast<int>(x), static_cast<int>(m))) !=
                a.apply(xy, static_cast<int>(m)))
              throw ActionViolation("compatibility fails on (" + std::to_string(m) + "," +
                                    std::to_string(x) + "," + std::to_string(y) + ")");
          }
        }
      }
    return a;
  }

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  ActionSide side() const { return side_; }
  std::size_t carrier() const { return carrier_; }
  int base(int m) const { return base_[m]; }
  const std::vector<int>& base_table() const { return base_; }
  const std::vector<int>& action_table() const { return act_; }

  // Left: apply(x, m) = x.m; right: apply(h, m) = m.h. -1 when undefined.
  int apply(int arrow, int m) const { return act_[static_cast<std::size_t>(arrow) * carrier_ + m]; }

  bool operator==(const GroupoidAction&) const = default;

private:
  GroupoidAction(FiniteGroupoid g, ActionSide side, std::size_t carrier, std::vector<int> base,
                 std::vector<int> act)
      : groupoid_(std::move(g)),
        side_(side),
        carrier_(carrier),
        base_(std::move(base)),
        act_(std::move(act)) {}

  FiniteGroupoid groupoid_;
  ActionSide side_;
  std::size_t carrier_;
  std::vector<int> base_;
  std::vector<int> act_;
};

// G-M-H bibundle: commuting left G and right H actions on a shared carrier.
class Bibundle {
public:
  static Bibundle validated(GroupoidAction left, GroupoidAction right) {
    if (left.side() != ActionSide::left || right.side() != ActionSide::right)
      throw ValidationFailure("bibundle needs a left and a right action");
    if (left.carrier() != right.carrier())
      throw ValidationFailure("bibundle actions have different carriers");
    std::size_t carrier = left.carrier();
    const FiniteGroupoid& g = left.groupoid();
    const FiniteGroupoid& h = right.groupoid();
    for (std::size_t m = 0; m < carrier; ++m) {
      for (std::size_t x = 0; x < g.arrow_count(); ++x) {
        int xm = left.apply(static_cast<int>(x), static_cast<int>(m));
        if (xm >= 0 && right.base(xm) != right.base(static_cast<int>(m)))
          throw ActionViolation("sigma(xm) != sigma(m) at arrow " + std::to_string(x) +
                                ", point " + std::to_string(m));
      }
      for (std::size_t hh = 0; hh < h.arrow_count(); ++hh) {
        int mh = right.apply(static_cast<int>(hh), static_cast<int>(m));
        if (mh >= 0 && left.base(mh) != left.base(static_cast<int>(m)))
          throw ActionViolation("tau(mh) != tau(m) at arrow " + std::to_string(hh) + ", point " +
                                std::to_string(m));
      }
    }
    for (std::size_t x = 0; x < g.arrow_count(); ++x)
      for (std::size_t hh = 0; hh < h.arrow_count(); ++hh)
        for (std::size_t m = 0; m < carrier; ++m) {
          int xm = left.apply(static_cast<int>(x), static_cast<int>(m));
          int mh = right.apply(static_cast<int>(hh), static_cast<int>(m));
          if (xm < 0 || mh < 0) continue;
          if (right.apply(static_cast<int>(hh), xm) != left.apply(static_cast<int>(x), mh))
            throw ActionViolation("(xm)h != x(mh) on (" + std::to_string(x) + "," +
                                  std::to_string(m) + "," + std::to_string(hh) + ")");
        }
    return Bibundle(std::move(left), std::move(right));
  }

  static Bibundle validated(FiniteGroupoid g, FiniteGroupoid h, std::size_t carrier,
                            std::vector<int> tau, std::vector<int> sigma, std::vector<int> left_act,
                            std::vector<int> right_act) {
    return validated(GroupoidAction::validated(std::move(g), ActionSide::left, carrier,
                                               std::move(tau), std::move(left_act)),
                     GroupoidAction::validated(std::move(h), ActionSide::right, carrier,
                                               std::move(sigma), std::move(right_act)));
  }

  const FiniteGroupoid& left_groupoid() const { return left_.groupoid(); }
  const FiniteGroupoid& right_groupoid() const { return right_.groupoid(); }
  const GroupoidAction& left_action() const { return left_; }
  const GroupoidAction& right_action() const { return right_; }
  std::size_t carrier() const { return left_.carrier(); }
  int tau(int m) const { return left_.base(m); }
  int sigma(int m) const { return right_.base(m); }
  int act_left(int x, int m) const { return left_.apply(x, m); }
  int act_right(int m, int h) const { return right_.apply(h, m); }

  bool operator==(const Bibundle&) const = default;

private:
  Bibundle(GroupoidAction left, GroupoidAction right)
      : left_(std::move(left)), right_(std::move(right)) {}

  GroupoidAction left_, right_;
};

struct PrincipalityReport {
  bool principal = false;
  bool base_surjective = false;
  bool action_bijection = false;
  std::string witness;
};

// Left principal: sigma is surjective and (x, m) -> (xm, m) is a bijection
// from G *_{G_0} M onto M *_{H_0} M. ("Surjective submersion" degrades to
// surjectivity on finite sets.)
inline PrincipalityReport check_left_principal(const Bibundle& b) {
  PrincipalityReport rep;
  const FiniteGroupoid& g = b.left_groupoid();
  std::vector<bool> hit(b.right_groupoid().object_count(), false);
  for (std::size_t m = 0; m < b.carrier(); ++m) hit[b.sigma(static_cast<int>(m))] = true;
  rep.base_surjective = true;
  for (std::size_t q = 0; q < hit.size(); ++q)
    if (!hit[q]) {
      rep.base_surjective = false;
      rep.witness = "sigma misses object " + std::to_string(q);
      return rep;
    }
  std::map<std::pair<int, int>, int> seen;
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < g.arrow_count(); ++x)
    for (std::size_t m = 0; m < b.carrier(); ++m) {
      int xm = b.act_left(static_cast<int>(x), static_cast<int>(m));
      if (xm < 0) continue;
      ++pairs;
      auto key = std::make_pair(xm, static_cast<int>(m));
      if (seen.count(key)) {
        rep.witness = "(x,m) -> (xm,m) is not injective at target (" + std::to_string(xm) + "," +
                      std::to_string(m) + ")";
        return rep;
      }
      seen[key] = static_cast<int>(x);
    }
  std::size_t fiber_pairs = 0;
  for (std::size_t m1 = 0; m1 < b.carrier(); ++m1)
    for (std::size_t m2 = 0; m2 < b.carrier(); ++m2)
      if (b.sigma(static_cast<int>(m1)) == b.sigma(static_cast<int>(m2))) {
        ++fiber_pairs;
        if (!seen.count({static_cast<int>(m1), static_cast<int>(m2)})) {
          rep.witness = "pair (" + std::to_string(m1) + "," + std::to_string(m2) +
                        ") has no arrow moving the second point to the first";
          return rep;
        }
      }
  rep.action_bijection = (pairs == fiber_pairs);
  rep.principal = rep.base_surjective && rep.action_bijection;
  return rep;
}

inline PrincipalityReport check_right_principal(const Bibundle& b) {
  PrincipalityReport rep;
  const FiniteGroupoid& h = b.right_groupoid();
  std::vector<bool> hit(b.left_groupoid().object_count(), false);
  for (std::size_t m = 0; m < b.carrier(); ++m) hit[b.tau(static_cast<int>(m))] = true;
  rep.base_surjective = true;
  for (std::size_t q = 0; q < hit.size(); ++q)
    if (!hit[q]) {
      rep.base_surjective = false;
      rep.witness = "tau misses object " + std::to_string(q);
      return rep;
    }
  std::map<std::pair<int, int>, int> seen;
  std::size_t pairs = 0;
  for (std::size_t hh = 0; hh < h.arrow_count(); ++hh)
    for (std::size_t m = 0; m < b.carrier(); ++m) {
      int mh = b.act_right(static_cast<int>(m), static_cast<int>(hh));
      if (mh < 0) continue;
      ++pairs;
      auto key = std::make_pair(mh, static_cast<int>(m));
      if (seen.count(key)) {
        rep.witness = "(m,h) -> (mh,m) is not injective";
        return rep;
      }
      seen[key] = static_cast<int>(hh);
    }
  std::size_t fiber_pairs = 0;
  for (std::size_t m1 = 0; m1 < b.carrier(); ++m1)
    for (std::size_t m2 = 0; m2 < b.carrier(); ++m2)
      if (b.tau(static_cast<int>(m1)) == b.tau(static_cast<int>(m2))) {
        ++fiber_pairs;
        if (!seen.count({static_cast<int>(m1), static_cast<int>(m2)})) {
          rep.witness = "tau-fiber pair (" + std::to_string(m1) + "," + std::to_string(m2) +
                        ") not reached by the right action";
          return rep;
        }
      }
  rep.action_bijection = (pairs == fiber_pairs);
  rep.principal = rep.base_surjective && rep.action_bijection;
  return rep;
}

// Regular = left principal; right-action properness is automatic on finite
// discrete sets and is recorded in reports rather than checked.
inline bool is_regular(const Bibundle& b) { return check_left_principal(b).principal; }

struct BiprincipalReport {
  PrincipalityReport left, right;
  bool biprincipal = false;
  std::string properness_note;
};

inline BiprincipalReport check_biprincipal(const Bibundle& b) {
  BiprincipalReport rep;
  rep.left = check_left_principal(b);
  rep.right = check_right_principal(b);
  rep.biprincipal = rep.left.principal && rep.right.principal;
  rep.properness_note =
      "both actions are proper automatically: finite discrete actions are proper";
  return rep;
}

inline Bibundle unit_bibundle(const FiniteGroupoid& g) {
  std::size_t n1 = g.arrow_count();
  std::vector<int> tau(n1), sigma(n1);
  std::vector<int> lact(n1 * n1, -1), ract(n1 * n1, -1);
  for (std::size_t x = 0; x < n1; ++x) {
    tau[x] = g.t(static_cast<int>(x));
    sigma[x] = g.s(static_cast<int>(x));
  }
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t m = 0; m < n1; ++m) {
      if (g.composable(static_cast<int>(a), static_cast<int>(m)))
        lact[a * n1 + m] = g.compose(static_cast<int>(a), static_cast<int>(m));
      if (g.composable(static_cast<int>(m), static_cast<int>(a)))
        ract[a * n1 + m] = g.compose(static_cast<int>(m), static_cast<int>(a));
    }
  return Bibundle::validated(g, g, n1, std::move(tau), std::move(sigma), std::move(lact),
                             std::move(ract));
}

// Functor between finite groupoids, checked to preserve s, t, units and
// composition.
struct GroupoidFunctor {
  FiniteGroupoid source, target;
  std::vector<int> psi0, psi1;

  static GroupoidFunctor validated(FiniteGroupoid source, FiniteGroupoid target,
                                   std::vector<int> psi0, std::vector<int> psi1) {
    GroupoidFunctor f{std::move(source), std::move(target), std::move(psi0), std::move(psi1)};
    const auto& g = f.source;
    const auto& h = f.target;
    if (f.psi0.size() != g.object_count() || f.psi1.size() != g.arrow_count())
      throw NotAFunctor("functor table sizes are inconsistent");
    for (int q : f.psi0)
      if (q < 0 || static_cast<std::size_t>(q) >= h.object_count())
        throw NotAFunctor("object image out of range");
    for (int x : f.psi1)
      if (x < 0 || static_cast<std::size_t>(x) >= h.arrow_count())
        throw NotAFunctor("arrow image out of range");
    for (std::size_t x = 0; x < g.arrow_count(); ++x) {
      if (h.s(f.psi1[x]) != f.psi0[g.s(static_cast<int>(x))] ||
          h.t(f.psi1[x]) != f.psi0[g.t(static_cast<int>(x))])
        throw NotAFunctor("endpoints not preserved at arrow " + std::to_string(x));
    }
    for (std::size_t q = 0; q < g.object_count(); ++q)
      if (f.psi1[g.unit_arrow(static_cast<int>(q))] != h.unit_arrow(f.psi0[q]))
        throw NotAFunctor("units not preserved at object " + std::to_string(q));
    for (std::size_t x = 0; x < g.arrow_count(); ++x)
      for (std::size_t y = 0; y < g.arrow_count(); ++y)
        if (g.composable(static_cast<int>(x), static_cast<int>(y)) &&
            f.psi1[g.compose(static_cast<int>(x), static_cast<int>(y))] !=
                h.compose(f.psi1[x], f.psi1[y]))
          throw NotAFunctor("composition not preserved at (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
    return f;
  }
};

// Bibundle with total space G_0 *_{H_0} H induced by a functor Psi: G -> H;
// left G action through Psi, right H action by multiplication.
inline Bibundle functor_to_bibundle(const GroupoidFunctor& f) {
  const auto& g = f.source;
  const auto& h = f.target;
  std::vector<std::pair<int, int>> points;  // (q, h) with Psi0(q) = t(h)
  for (std::size_t q = 0; q < g.object_count(); ++q)
    for (std::size_t hh = 0; hh < h.arrow_count(); ++hh)
      if (f.psi0[q] == h.t(static_cast<int>(hh)))
        points.emplace_back(static_cast<int>(q), static_cast<int>(hh));
  auto index_of = [&](int q, int arrow) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].first == q && points[i].second == arrow) return static_cast<int>(i);
    return -1;
  };
  std::size_t carrier = points.size();
  std::vector<int> tau(carrier), sigma(carrier);
  for (std::size_t i = 0; i < carrier; ++i) {
    tau[i] = points[i].first;
    sigma[i] = h.s(points[i].second);
  }
  std::vector<int> lact(g.arrow_count() * carrier, -1);
  for (std::size_t x = 0; x < g.arrow_count(); ++x)
    for (std::size_t i = 0; i < carrier; ++i)
      if (g.s(static_cast<int>(x)) == points[i].first)
        lact[x * carrier + i] =
            index_of(g.t(static_cast<int>(x)), h.compose(f.psi1[x], points[i].second));
  std::vector<int> ract(h.arrow_count() * carrier, -1);
  for (std::size_t k = 0; k < h.arrow_count(); ++k)
    for (std::size_t i = 0; i < carrier; ++i)
      if (sigma[i] == h.t(static_cast<int>(k)))
        ract[k * carrier + i] = index_of(points[i].first, h.compose(points[i].second, static_cast<int>(k)));
  return Bibundle::validated(g, h, carrier, std::move(tau), std::move(sigma), std::move(lact),
                             std::move(ract));
}

// Same carrier with the two actions interchanged through the inverses.
inline Bibundle opposite_bibundle(const Bibundle& m) {
  const FiniteGroupoid& g = m.left_groupoid();
  const FiniteGroupoid& h = m.right_groupoid();
  std::size_t carrier = m.carrier();
  std::vector<int> tau(carrier), sigma(carrier);
  for (std::size_t i = 0; i < carrier; ++i) {
    tau[i] = m.sigma(static_cast<int>(i));
    sigma[i] = m.tau(static_cast<int>(i));
  }
  std::vector<int> lact(h.arrow_count() * carrier, -1);
  for (std::size_t x = 0; x < h.arrow_count(); ++x)
    for (std::size_t i = 0; i < carrier; ++i)
      lact[x * carrier + i] = m.act_right(static_cast<int>(i), h.inv(static_cast<int>(x)));
  std::vector<int> ract(g.arrow_count() * carrier, -1);
  for (std::size_t x = 0; x < g.arrow_count(); ++x)
    for (std::size_t i = 0; i < carrier; ++i)
      ract[x * carrier + i] = m.act_left(g.inv(static_cast<int>(x)), static_cast<int>(i));
  return Bibundle::validated(h, g, carrier, std::move(tau), std::move(sigma), std::move(lact),
                             std::move(ract));
}

// Equivariant carrier map between parallel bibundles (a 2-cell of [LG]).
class BibundleMap {
public:
  static BibundleMap validated(Bibundle source, Bibundle target, std::vector<int> map) {
    if (!(source.left_groupoid() == target.left_groupoid()) ||
        !(source.right_groupoid() == target.right_groupoid()))
      throw GroupoidMismatch("bibundle map between different groupoid pairs");
    if (map.size() != source.carrier()) throw ValidationFailure("bibundle map size mismatch");
    for (int v : map)
      if (v < 0 || static_cast<std::size_t>(v) >= target.carrier())
        throw ValidationFailure("bibundle map value out of range");
    for (std::size_t m = 0; m < source.carrier(); ++m)
      if (source.tau(static_cast<int>(m)) != target.tau(map[m]) ||
          source.sigma(static_cast<int>(m)) != target.sigma(map[m]))
        throw ValidationFailure("bibundle map does not preserve base maps at point " +
                                std::to_string(m));
    const FiniteGroupoid& g = source.left_groupoid();
    const FiniteGroupoid& h = source.right_groupoid();
    for (std::size_t x = 0; x < g.arrow_count(); ++x)
      for (std::size_t m = 0; m < source.carrier(); ++m) {
        int xm = source.act_left(static_cast<int>(x), static_cast<int>(m));
        if (xm >= 0 && map[xm] != target.act_left(static_cast<int>(x), map[m]))
          throw ValidationFailure("bibundle map not left-equivariant");
      }
    for (std::size_t hh = 0; hh < h.arrow_count(); ++hh)
      for (std::size_t m = 0; m < source.carrier(); ++m) {
        int mh = source.act_right(static_cast<int>(m), static_cast<int>(hh));
        if (mh >= 0 && map[mh] != target.act_right(map[m], static_cast<int>(hh)))
          throw ValidationFailure("bibundle map not right-equivariant");
      }
    return BibundleMap(std::move(source), std::move(target), std::move(map));
  }

  static BibundleMap identity(const Bibundle& b) {
    std::vector<int> id(b.carrier());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    return BibundleMap(b, b, std::move(id));
  }

  const Bibundle& source() const { return source_; }
  const Bibundle& target() const { return target_; }
  const std::vector<int>& table() const { return map_; }

  bool is_iso() const {
    if (source_.carrier() != target_.carrier()) return false;
    std::vector<bool> hit(target_.carrier(), false);
    for (int v : map_) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  BibundleMap inverted() const {
    if (!is_iso()) throw ValidationFailure("bibundle map is not invertible");
    std::vector<int> inv(source_.carrier());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<int>(i);
    return BibundleMap(target_, source_, std::move(inv));
  }

  BibundleMap after(const BibundleMap& other) const {
    if (!(other.target_ == source_)) throw NotComposable("bibundle map composition mismatch");
    std::vector<int> comp(other.map_.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = map_[other.map_[i]];
    return BibundleMap(other.source_, target_, std::move(comp));
  }

  bool operator==(const BibundleMap&) const = default;

private:
  BibundleMap(Bibundle source, Bibundle target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  Bibundle source_, target_;
  std::vector<int> map_;
};

// Backtracking enumeration of equivariant maps a -> b; always exhaustive at
// these carrier sizes. When `bijective_only` is set the result is an
// isomorphism search.
inline void enumerate_bibundle_maps(const Bibundle& a, const Bibundle& b, bool bijective_only,
                                    std::size_t max_results,
                                    const std::function<bool(const std::vector<int>&)>& emit) {
  if (!(a.left_groupoid() == b.left_groupoid()) || !(a.right_groupoid() == b.right_groupoid()))
    return;
  if (bijective_only && a.carrier() != b.carrier()) return;
  std::size_t n = a.carrier();
  std::vector<int> map(n, -1);
  std::vector<bool> used(b.carrier(), false);
  std::size_t found = 0;
  const FiniteGroupoid& g = a.left_groupoid();
  const FiniteGroupoid& h = a.right_groupoid();

  auto consistent = [&](int m) {
    for (std::size_t x = 0; x < g.arrow_count(); ++x) {
      int xm = a.act_left(static_cast<int>(x), m);
      if (xm >= 0 && map[xm] >= 0 &&
          map[xm] != b.act_left(static_cast<int>(x), map[m]))
        return false;
      // also the reverse: if m = x m', constraints come from iterating all m
    }
    for (std::size_t hh = 0; hh < h.arrow_count(); ++hh) {
      int mh = a.act_right(m, static_cast<int>(hh));
      if (mh >= 0 && map[mh] >= 0 && map[mh] != b.act_right(map[m], static_cast<int>(hh)))
        return false;
    }
    // constraints where m is the image: x m' = m
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      if (map[m2] < 0) continue;
      for (std::size_t x = 0; x < g.arrow_count(); ++x)
        if (a.act_left(static_cast<int>(x), static_cast<int>(m2)) == m &&
            map[m] != b.act_left(static_cast<int>(x), map[m2]))
          return false;
      for (std::size_t hh = 0; hh < h.arrow_count(); ++hh)
        if (a.act_right(static_cast<int>(m2), static_cast<int>(hh)) == m &&
            map[m] != b.act_right(map[m2], static_cast<int>(hh)))
          return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t m) -> bool {
    if (m == n) {
      ++found;
      return !emit(map) || found >= max_results;
    }
    for (std::size_t y = 0; y < b.carrier(); ++y) {
      if (bijective_only && used[y]) continue;
      if (b.tau(static_cast<int>(y)) != a.tau(static_cast<int>(m)) ||
          b.sigma(static_cast<int>(y)) != a.sigma(static_cast<int>(m)))
        continue;
      map[m] = static_cast<int>(y);
      used[y] = true;
      bool stop = consistent(static_cast<int>(m)) && rec(m + 1);
      used[y] = false;
      map[m] = -1;
      if (stop) return true;
    }
    return false;
  };
  rec(0);
}

// Exhaustive search for an equivariant bijection; absence is proven.
inline IsoSearchOutcome<BibundleMap> find_bibundle_iso(const Bibundle& a, const Bibundle& b) {
  if (!(a.left_groupoid() == b.left_groupoid()) || !(a.right_groupoid() == b.right_groupoid()))
    throw GroupoidMismatch("find_bibundle_iso between different groupoid pairs");
  std::optional<BibundleMap> result;
  enumerate_bibundle_maps(a, b, /*bijective_only=*/true, 1, [&](const std::vector<int>& map) {
    result = BibundleMap::validated(a, b, map);
    return false;  // stop
  });
  return {std::move(result), true};
}

// Hilsum-Skandalis tensor product: the orbit space of the diagonal middle
// action on the pullback, with projection data for coherence checks.
struct BibundleComposition {
  Bibundle cell;
  std::vector<std::pair<int, int>> pairs;  // pullback pairs (x in M, y in N), lex order
  std::vector<int> proj;                   // pair index -> orbit index
  std::vector<int> reps;                   // orbit index -> pair index of least member
};

inline BibundleComposition hs_tensor(const Bibundle& m, const Bibundle& n) {
  if (!(m.right_groupoid() == n.left_groupoid()))
    throw GroupoidMismatch("hs_tensor: middle groupoids differ");
  if (!is_regular(m))
    throw NotRegular("hs_tensor: left factor is not regular (left principal)");
  const FiniteGroupoid& g = m.left_groupoid();
  const FiniteGroupoid& h = m.right_groupoid();
  const FiniteGroupoid& k = n.right_groupoid();

  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_index;
  for (std::size_t x = 0; x < m.carrier(); ++x)
    for (std::size_t y = 0; y < n.carrier(); ++y)
      if (m.sigma(static_cast<int>(x)) == n.tau(static_cast<int>(y))) {
        pair_index[{static_cast<int>(x), static_cast<int>(y)}] = static_cast<int>(pairs.size());
        pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }

  // Orbits of (x,y) ~ (xh, h^{-1}y); pairs are lex-ordered so the first
  // member of each orbit encountered is the lexicographically least.
  std::vector<int> orbit(pairs.size(), -1);
  std::vector<int> reps;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (orbit[p] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(p));
    std::vector<std::size_t> stack{p};
    orbit[p] = id;
    while (!stack.empty()) {
      auto [x, y] = pairs[stack.back()];
      stack.pop_back();
      for (std::size_t hh = 0; hh < h.arrow_count(); ++hh) {
        if (h.t(static_cast<int>(hh)) != m.sigma(x)) continue;
        int xh = m.act_right(x, static_cast<int>(hh));
        int hy = n.act_left(h.inv(static_cast<int>(hh)), y);
        auto it = pair_index.find({xh, hy});
        if (it == pair_index.end())
          throw ValidationFailure("diagonal action left the pullback");
        if (orbit[it->second] < 0) {
          orbit[it->second] = id;
          stack.push_back(static_cast<std::size_t>(it->second));
        }
      }
    }
  }
  std::size_t carrier = reps.size();

  std::vector<int> tau(carrier), sigma(carrier);
  for (std::size_t o = 0; o < carrier; ++o) {
    tau[o] = m.tau(pairs[reps[o]].first);
    sigma[o] = n.sigma(pairs[reps[o]].second);
  }
  // Base maps must be constant on orbits.
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (m.tau(pairs[p].first) != tau[orbit[p]] || n.sigma(pairs[p].second) != sigma[orbit[p]])
      throw ValidationFailure("base maps are not orbit invariants");

  std::vector<int> lact(g.arrow_count() * carrier, -1);
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [x, y] = pairs[p];
      if (g.s(static_cast<int>(a)) != m.tau(x)) continue;
      int target = orbit[pair_index.at({m.act_left(static_cast<int>(a), x), y})];
      int& slot = lact[a * carrier + orbit[p]];
      if (slot < 0)
        slot = target;
      else if (slot != target)
        throw ValidationFailure("left action is not well defined on orbits");
    }
  std::vector<int> ract(k.arrow_count() * carrier, -1);
  for (std::size_t a = 0; a < k.arrow_count(); ++a)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [x, y] = pairs[p];
      if (n.sigma(y) != k.t(static_cast<int>(a))) continue;
      int target = orbit[pair_index.at({x, n.act_right(y, static_cast<int>(a))})];
      int& slot = ract[a * carrier + orbit[p]];
      if (slot < 0)
        slot = target;
      else if (slot != target)
        throw ValidationFailure("right action is not well defined on orbits");
    }
  Bibundle cell = Bibundle::validated(g, k, carrier, std::move(tau), std::move(sigma),
                                      std::move(lact), std::move(ract));
  return BibundleComposition{std::move(cell), std::move(pairs), std::move(orbit), std::move(reps)};
}

// --- left actions as bibundles over the one-point groupoid -----------------

// A left G-action is the same thing as a (G, 1)-bibundle with trivial right
// action; this embedding lets hs_tensor induce representations.
inline Bibundle action_as_bibundle(const GroupoidAction& a) {
  if (a.side() != ActionSide::left) throw ValidationFailure("expected a left action");
  auto point = trivial_groupoid(1);
  std::size_t carrier = a.carrier();
  std::vector<int> sigma(carrier, 0);
  std::vector<int> ract(carrier);
  for (std::size_t i = 0; i < carrier; ++i) ract[i] = static_cast<int>(i);
  return Bibundle::validated(a.groupoid(), point, carrier, a.base_table(), std::move(sigma),
                             a.action_table(), std::move(ract));
}

inline GroupoidAction bibundle_as_action(const Bibundle& b) {
  return GroupoidAction::validated(b.left_groupoid(), ActionSide::left, b.carrier(),
                                   b.left_action().base_table(),
                                   b.left_action().action_table());
}

// Transport of a representation along a regular bibundle:
// A -> (M *_{H_0} A)/H with the base map induced by tau.
inline GroupoidAction induce_action(const Bibundle& m, const GroupoidAction& a) {
  if (!(m.right_groupoid() == a.groupoid()))
    throw GroupoidMismatch("induce_action: bibundle and action do not match");
  auto composed = hs_tensor(m, action_as_bibundle(a));
  return bibundle_as_action(composed.cell);
}

inline IsoSearchOutcome<BibundleMap> find_action_iso(const GroupoidAction& a,
                                                     const GroupoidAction& b) {
  return find_bibundle_iso(action_as_bibundle(a), action_as_bibundle(b));
}

inline std::size_t equivariant_map_count(const GroupoidAction& a, const GroupoidAction& b) {
  std::size_t count = 0;
  enumerate_bibundle_maps(action_as_bibundle(a), action_as_bibundle(b), /*bijective_only=*/false,
                          static_cast<std::size_t>(-1), [&](const std::vector<int>&) {
                            ++count;
                            return true;
                          });
  return count;
}

}  // namespace bicat
