#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bicat/errors.hpp"

namespace bicat {

// Finite groupoid with total structure tables. Arrows compose as functions:
// x*y is defined exactly when s(x) = t(y), with t(xy) = t(x), s(xy) = s(y).
// Every axiom is checked exhaustively at construction.
class FiniteGroupoid {
public:
  static FiniteGroupoid validated(std::size_t n_objects, std::vector<int> source,
                                  std::vector<int> target, std::vector<int> compose,
                                  std::vector<int> inverse, std::vector<int> unit_arrows) {
    FiniteGroupoid g(n_objects, std::move(source), std::move(target), std::move(compose),
                     std::move(inverse), std::move(unit_arrows));
    std::size_t n1 = g.arrow_count();
    if (g.source_.size() != n1 || g.target_.size() != n1 || g.inverse_.size() != n1 ||
        g.compose_.size() != n1 * n1 || g.unit_arrows_.size() != n_objects)
      throw ValidationFailure("groupoid table sizes are inconsistent");
    auto obj_ok = [&](int q) { return q >= 0 && static_cast<std::size_t>(q) < n_objects; };
    auto arr_ok = [&](int x) { return x >= 0 && static_cast<std::size_t>(x) < n1; };
    for (std::size_t x = 0; x < n1; ++x)
      if (!obj_ok(g.source_[x]) || !obj_ok(g.target_[x]) || !arr_ok(g.inverse_[x]))
        throw ValidationFailure("arrow " + std::to_string(x) + " has out-of-range tables");
    for (std::size_t q = 0; q < n_objects; ++q)
      if (!arr_ok(g.unit_arrows_[q]))
        throw ValidationFailure("unit arrow of object " + std::to_string(q) + " out of range");

    for (std::size_t x = 0; x < n1; ++x)
      for (std::size_t y = 0; y < n1; ++y) {
        int xy = g.compose_[x * n1 + y];
        bool should = g.source_[x] == g.target_[y];
        if (should != (xy >= 0))
          throw ValidationFailure("compose defined off G_2 at (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
        if (xy >= 0) {
          if (!arr_ok(xy)) throw ValidationFailure("compose value out of range");
          if (g.target_[xy] != g.target_[x] || g.source_[xy] != g.source_[y])
            throw ValidationFailure("source/target of composite wrong at (" + std::to_string(x) +
                                    "," + std::to_string(y) + ")");
        }
      }
    for (std::size_t x = 0; x < n1; ++x)
      for (std::size_t y = 0; y < n1; ++y) {
        if (g.source_[x] != g.target_[y]) continue;
        for (std::size_t z = 0; z < n1; ++z) {
          if (g.source_[y] != g.target_[z]) continue;
          if (g.compose(g.compose(x, y), z) != g.compose(x, g.compose(y, z)))
            throw ValidationFailure("associativity fails on triple (" + std::to_string(x) + "," +
                                    std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    for (std::size_t q = 0; q < n_objects; ++q) {
      int u = g.unit_arrows_[q];
      if (g.source_[u] != static_cast<int>(q) || g.target_[u] != static_cast<int>(q))
        throw ValidationFailure("unit arrow of object " + std::to_string(q) +
                                " is not an endo-arrow");
      for (std::size_t x = 0; x < n1; ++x) {
        if (g.target_[x] == static_cast<int>(q) && g.compose(u, static_cast<int>(x)) != static_cast<int>(x))
          throw ValidationFailure("left unit law fails at object " + std::to_string(q));
        if (g.source_[x] == static_cast<int>(q) && g.compose(static_cast<int>(x), u) != static_cast<int>(x))
          throw ValidationFailure("right unit law fails at object " + std::to_string(q));
      }
    }
    for (std::size_t x = 0; x < n1; ++x) {
      int ix = g.inverse_[x];
      if (g.source_[ix] != g.target_[x] || g.target_[ix] != g.source_[x])
        throw ValidationFailure("inverse of arrow " + std::to_string(x) + " has wrong endpoints");
      if (g.compose(ix, static_cast<int>(x)) != g.unit_arrows_[g.source_[x]] ||
          g.compose(static_cast<int>(x), ix) != g.unit_arrows_[g.target_[x]])
        throw ValidationFailure("inverse law fails on arrow " + std::to_string(x));
    }
    return g;
  }

  std::size_t object_count() const { return n_objects_; }
  std::size_t arrow_count() const { return source_.size(); }
  int s(int x) const { return source_[x]; }
  int t(int x) const { return target_[x]; }
  bool composable(int x, int y) const { return source_[x] == target_[y]; }
  int compose(int x, int y) const { return compose_[static_cast<std::size_t>(x) * arrow_count() + y]; }
  int inv(int x) const { return inverse_[x]; }
  int unit_arrow(int q) const { return unit_arrows_[q]; }

  const std::vector<int>& source_table() const { return source_; }
  const std::vector<int>& target_table() const { return target_; }
  const std::vector<int>& compose_table() const { return compose_; }
  const std::vector<int>& inverse_table() const { return inverse_; }
  const std::vector<int>& unit_table() const { return unit_arrows_; }

  // Connected components of objects under reachability via arrows; each
  // orbit is sorted, and orbits are ordered by their least object.
  std::vector<std::vector<int>> orbits() const {
    std::vector<int> parent(n_objects_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t x = 0; x < arrow_count(); ++x) {
      int a = find(source_[x]), b = find(target_[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<int>> groups(n_objects_);
    for (std::size_t q = 0; q < n_objects_; ++q) groups[find(static_cast<int>(q))].push_back(static_cast<int>(q));
    std::vector<std::vector<int>> out;
    for (auto& gset : groups)
      if (!gset.empty()) out.push_back(std::move(gset));
    return out;
  }

  std::vector<int> isotropy_arrows(int q) const {
    std::vector<int> out;
    for (std::size_t x = 0; x < arrow_count(); ++x)
      if (source_[x] == q && target_[x] == q) out.push_back(static_cast<int>(x));
    return out;
  }

  bool operator==(const FiniteGroupoid&) const = default;

private:
  FiniteGroupoid(std::size_t n_objects, std::vector<int> source, std::vector<int> target,
                 std::vector<int> compose, std::vector<int> inverse, std::vector<int> unit_arrows)
      : n_objects_(n_objects),
        source_(std::move(source)),
        target_(std::move(target)),
        compose_(std::move(compose)),
        inverse_(std::move(inverse)),
        unit_arrows_(std::move(unit_arrows)) {}

  std::size_t n_objects_;
  std::vector<int> source_, target_;
  std::vector<int> compose_;  // compose_[x*n1 + y] = xy, or -1 off G_2
  std::vector<int> inverse_;
  std::vector<int> unit_arrows_;
};

// Abstract finite group as a multiplication table on indices 0..n-1.
struct GroupTable {
  std::vector<std::vector<int>> mul;
  int identity = 0;

  std::size_t order() const { return mul.size(); }

  int inverse_of(int x) const {
    for (std::size_t y = 0; y < order(); ++y)
      if (mul[x][y] == identity) return static_cast<int>(y);
    return -1;
  }

  int element_order(int x) const {
    int acc = x, ord = 1;
    while (acc != identity) {
      acc = mul[acc][x];
      ++ord;
    }
    return ord;
  }
};

inline GroupTable isotropy_group(const FiniteGroupoid& g, int q) {
  auto arrows = g.isotropy_arrows(q);
  std::vector<int> index_of(g.arrow_count(), -1);
  for (std::size_t i = 0; i < arrows.size(); ++i) index_of[arrows[i]] = static_cast<int>(i);
  GroupTable table;
  table.mul.assign(arrows.size(), std::vector<int>(arrows.size(), 0));
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = 0; j < arrows.size(); ++j)
      table.mul[i][j] = index_of[g.compose(arrows[i], arrows[j])];
  table.identity = index_of[g.unit_arrow(q)];
  return table;
}

// Brute-force isomorphism test for small groups: backtracking on images with
// homomorphic closure after each assignment. Returns the element bijection
// a-index -> b-index if one exists.
inline std::optional<std::vector<int>> group_isomorphism(const GroupTable& a,
                                                         const GroupTable& b) {
  std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  std::vector<int> ord_a(n), ord_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    ord_a[i] = a.element_order(static_cast<int>(i));
    ord_b[i] = b.element_order(static_cast<int>(i));
  }
  {
    auto sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  img[a.identity] = b.identity;
  used[b.identity] = true;

  // Close the partial map under multiplication; returns assignments made, or
  // nullopt on contradiction.
  auto propagate = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> trail;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (img[x] < 0) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (img[y] < 0) continue;
          int xy = a.mul[x][y];
          int want = b.mul[img[x]][img[y]];
          if (img[xy] < 0) {
            if (used[want]) {
              for (int t : trail) { used[img[t]] = false; img[t] = -1; }
              return std::nullopt;
            }
            img[xy] = want;
            used[want] = true;
            trail.push_back(xy);
            changed = true;
          } else if (img[xy] != want) {
            for (int t : trail) { used[img[t]] = false; img[t] = -1; }
            return std::nullopt;
          }
        }
      }
    }
    return trail;
  };

  std::function<bool()> rec = [&]() -> bool {
    int x = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (img[i] < 0) {
        x = static_cast<int>(i);
        break;
      }
    if (x < 0) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || ord_b[y] != ord_a[x]) continue;
      img[x] = static_cast<int>(y);
      used[y] = true;
      if (auto trail = propagate()) {
        if (rec()) return true;
        for (int t : *trail) { used[img[t]] = false; img[t] = -1; }
      }
      used[y] = false;
      img[x] = -1;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return img;
}

// --- builders -------------------------------------------------------------

inline FiniteGroupoid trivial_groupoid(std::size_t n_objects) {
  std::size_t n1 = n_objects;
  std::vector<int> s(n1), t(n1), inv(n1), units(n_objects);
  std::vector<int> comp(n1 * n1, -1);
  for (std::size_t i = 0; i < n1; ++i) {
    s[i] = t[i] = inv[i] = units[i] = static_cast<int>(i);
    comp[i * n1 + i] = static_cast<int>(i);
  }
  return FiniteGroupoid::validated(n_objects, s, t, comp, inv, units);
}

// Pair groupoid: arrows (i,j) from j to i, encoded as i*n + j.
inline FiniteGroupoid pair_groupoid(std::size_t n) {
  std::size_t n1 = n * n;
  std::vector<int> s(n1), t(n1), inv(n1), units(n);
  std::vector<int> comp(n1 * n1, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t x = i * n + j;
      s[x] = static_cast<int>(j);
      t[x] = static_cast<int>(i);
      inv[x] = static_cast<int>(j * n + i);
    }
  for (std::size_t q = 0; q < n; ++q) units[q] = static_cast<int>(q * n + q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        comp[(i * n + j) * n1 + (j * n + k)] = static_cast<int>(i * n + k);
  return FiniteGroupoid::validated(n, s, t, comp, inv, units);
}

// One-object groupoid from a group multiplication table.
inline FiniteGroupoid group_groupoid(const GroupTable& g) {
  std::size_t n1 = g.order();
  std::vector<int> s(n1, 0), t(n1, 0), inv(n1);
  std::vector<int> comp(n1 * n1, -1);
  for (std::size_t x = 0; x < n1; ++x) {
    inv[x] = g.inverse_of(static_cast<int>(x));
    for (std::size_t y = 0; y < n1; ++y) comp[x * n1 + y] = g.mul[x][y];
  }
  return FiniteGroupoid::validated(1, s, t, comp, inv, {g.identity});
}

inline GroupTable cyclic_group_table(std::size_t n) {
  GroupTable g;
  g.mul.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.mul[i][j] = static_cast<int>((i + j) % n);
  g.identity = 0;
  return g;
}

inline GroupTable klein_four_table() {
  // Z/2 x Z/2 with elements 00, 01, 10, 11 under xor.
  GroupTable g;
  g.mul.assign(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.mul[i][j] = i ^ j;
  g.identity = 0;
  return g;
}

inline GroupTable symmetric3_table() {
  // Permutations of {0,1,2} listed as id,(01),(02),(12),(012),(021);
  // composition is "right then left".
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  GroupTable g;
  g.mul.assign(6, std::vector<int>(6, 0));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int k = 0; k < 3; ++k) comp[k] = perms[i][perms[j][k]];
      for (int k = 0; k < 6; ++k)
        if (perms[k] == comp) g.mul[i][j] = k;
    }
  g.identity = 0;
  return g;
}

inline FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  std::size_t n0 = a.object_count() + b.object_count();
  std::size_t n1 = a.arrow_count() + b.arrow_count();
  int oo = static_cast<int>(a.object_count());
  int ao = static_cast<int>(a.arrow_count());
  std::vector<int> s(n1), t(n1), inv(n1), units(n0);
  std::vector<int> comp(n1 * n1, -1);
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    s[x] = a.s(static_cast<int>(x));
    t[x] = a.t(static_cast<int>(x));
    inv[x] = a.inv(static_cast<int>(x));
    for (std::size_t y = 0; y < a.arrow_count(); ++y)
      if (a.composable(static_cast<int>(x), static_cast<int>(y)))
        comp[x * n1 + y] = a.compose(static_cast<int>(x), static_cast<int>(y));
  }
  for (std::size_t x = 0; x < b.arrow_count(); ++x) {
    s[ao + x] = oo + b.s(static_cast<int>(x));
    t[ao + x] = oo + b.t(static_cast<int>(x));
    inv[ao + x] = ao + b.inv(static_cast<int>(x));
    for (std::size_t y = 0; y < b.arrow_count(); ++y)
      if (b.composable(static_cast<int>(x), static_cast<int>(y)))
        comp[(ao + x) * n1 + (ao + y)] = ao + b.compose(static_cast<int>(x), static_cast<int>(y));
  }
  for (std::size_t q = 0; q < a.object_count(); ++q) units[q] = a.unit_arrow(static_cast<int>(q));
  for (std::size_t q = 0; q < b.object_count(); ++q)
    units[oo + q] = ao + b.unit_arrow(static_cast<int>(q));
  return FiniteGroupoid::validated(n0, s, t, comp, inv, units);
}

// Degenerate at finite scale: every source fiber is discrete, so the fibers
// are connected exactly when they are single points.
inline bool is_s_connected(const FiniteGroupoid& g) {
  std::vector<int> fiber(g.object_count(), 0);
  for (std::size_t x = 0; x < g.arrow_count(); ++x) ++fiber[g.s(static_cast<int>(x))];
  for (int c : fiber)
    if (c > 1) return false;
  return true;
}

}  // namespace bicat
