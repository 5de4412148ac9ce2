#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bicat/bibundle.hpp"
#include "bicat/groupoid_morita.hpp"

namespace bicat {

// All left H-actions on carriers of exactly `size` points, by exhaustive
// table search with incremental axiom pruning; deduplicated up to
// equivariant isomorphism when requested.
inline std::vector<GroupoidAction> enumerate_left_actions(const FiniteGroupoid& h,
                                                          std::size_t size,
                                                          bool up_to_iso = true) {
  std::vector<GroupoidAction> reps;
  std::size_t n1 = h.arrow_count();
  std::vector<int> base(size, 0);

  auto try_actions = [&]() {
    // Slots (arrow, point) with s(arrow) = base[point], filled by DFS.
    std::vector<std::pair<int, int>> slots;
    for (std::size_t x = 0; x < n1; ++x)
      for (std::size_t m = 0; m < size; ++m)
        if (h.s(static_cast<int>(x)) == base[m]) slots.emplace_back(static_cast<int>(x), static_cast<int>(m));
    std::vector<int> act(n1 * size, -1);

    auto consistent_after = [&](int x, int m) {
      int xm = act[static_cast<std::size_t>(x) * size + m];
      // units act as identity
      if (x == h.unit_arrow(base[m]) && xm != m) return false;
      if (base[xm] != h.t(x)) return false;
      // compatibility x(ym) = (xy)m on all fully assigned instances
      for (std::size_t y = 0; y < n1; ++y) {
        // triple (x, y, m): y acts first
        if (h.composable(x, static_cast<int>(y)) && h.s(static_cast<int>(y)) == base[m]) {
          int ym = act[y * size + m];
          int xym = act[static_cast<std::size_t>(h.compose(x, static_cast<int>(y))) * size + m];
          if (ym >= 0) {
            int x_ym = act[static_cast<std::size_t>(x) * size + ym];
            if (x_ym >= 0 && xym >= 0 && x_ym != xym) return false;
          }
        }
        // triple (y, x, m): x acts first (x just assigned)
        if (h.composable(static_cast<int>(y), x)) {
          int y_xm = act[y * size + xm];
          int yxm = act[static_cast<std::size_t>(h.compose(static_cast<int>(y), x)) * size + m];
          if (y_xm >= 0 && yxm >= 0 && y_xm != yxm) return false;
        }
      }
      return true;
    };

    // Incremental pruning above is sound but not complete; sweep every
    // compatibility instance before accepting a leaf.
    auto full_check = [&]() {
      for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t y = 0; y < n1; ++y) {
          if (!h.composable(static_cast<int>(x), static_cast<int>(y))) continue;
          int xy = h.compose(static_cast<int>(x), static_cast<int>(y));
          for (std::size_t m = 0; m < size; ++m) {
            if (h.s(static_cast<int>(y)) != base[m]) continue;
            int ym = act[y * size + m];
            if (act[static_cast<std::size_t>(x) * size + ym] !=
                act[static_cast<std::size_t>(xy) * size + m])
              return false;
          }
        }
      return true;
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
      if (i == slots.size()) {
        if (!full_check()) return;
        auto cand = GroupoidAction::validated(h, ActionSide::left, size, base, act);
        if (up_to_iso)
          for (const auto& r : reps)
            if (find_action_iso(r, cand).found()) return;
        reps.push_back(std::move(cand));
        return;
      }
      auto [x, m] = slots[i];
      for (std::size_t v = 0; v < size; ++v) {
        act[static_cast<std::size_t>(x) * size + m] = static_cast<int>(v);
        if (consistent_after(x, m)) dfs(i + 1);
      }
      act[static_cast<std::size_t>(x) * size + m] = -1;
    };
    dfs(0);
  };

  // Odometer over base maps.
  while (true) {
    try_actions();
    std::size_t i = 0;
    while (i < size && ++base[i] == static_cast<int>(h.object_count())) base[i++] = 0;
    if (i == size) break;
  }
  return reps;
}

// Rep-category transport along a biprincipal bibundle: enumerate all left
// H-actions up to the size cap and check that induction preserves
// equivariant-map counts, stays injective on iso classes, and round-trips
// through the opposite bibundle.
struct GroupoidRepReport {
  std::size_t corpus_size = 0;
  bool map_counts_preserved = true;
  bool injective_on_iso_classes = true;
  bool round_trips = true;
  std::vector<std::string> failures;

  bool all_pass() const {
    return map_counts_preserved && injective_on_iso_classes && round_trips;
  }
};

inline GroupoidRepReport groupoid_rep_report(const Bibundle& m, std::size_t size_cap) {
  auto bip = check_biprincipal(m);
  if (!bip.biprincipal)
    throw NotCertified("groupoid rep check needs a biprincipal bibundle certificate");
  GroupoidRepReport rep;
  const FiniteGroupoid& h = m.right_groupoid();
  std::vector<GroupoidAction> corpus;
  for (std::size_t s = 0; s <= size_cap; ++s)
    for (auto& a : enumerate_left_actions(h, s)) corpus.push_back(std::move(a));
  rep.corpus_size = corpus.size();

  auto mbar = opposite_bibundle(m);
  std::vector<GroupoidAction> images;
  for (const auto& a : corpus) images.push_back(induce_action(m, a));

  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      std::size_t want = equivariant_map_count(corpus[i], corpus[j]);
      std::size_t got = equivariant_map_count(images[i], images[j]);
      if (want != got) {
        rep.map_counts_preserved = false;
        rep.failures.push_back("equivariant map count changed on corpus pair (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j)
      if (find_action_iso(images[i], images[j]).found()) {
        rep.injective_on_iso_classes = false;
        rep.failures.push_back("induction identified corpus actions " + std::to_string(i) +
                               " and " + std::to_string(j));
      }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto back = induce_action(mbar, images[i]);
    if (!find_action_iso(back, corpus[i]).found()) {
      rep.round_trips = false;
      rep.failures.push_back("round trip failed on corpus action " + std::to_string(i));
    }
  }
  return rep;
}

}  // namespace bicat
