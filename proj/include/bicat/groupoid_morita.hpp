#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicat/bibundle.hpp"
#include "bicat/groupoid.hpp"

namespace bicat {

struct MoritaObstruction {
  std::size_t g_orbit_count = 0, h_orbit_count = 0;
  std::vector<std::size_t> g_isotropy_orders, h_isotropy_orders;  // per orbit, in orbit order
  std::string reason;
};

struct MoritaVerdict {
  enum class Status { equivalent, not_equivalent, unknown } status =
      Status::unknown;
  std::optional<Bibundle> certificate;
  std::optional<MoritaObstruction> obstruction;
  std::string note;
};

// Morita decision by complete invariants: orbit count plus the multiset of
// isotropy groups up to isomorphism. On success an explicit biprincipal
// bibundle is assembled from the matching; on failure the invariant mismatch
// is reported. Isotropy groups larger than `max_isotropy_order` make the
// verdict "unknown" instead of guessing.
inline MoritaVerdict morita_decide(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                   std::size_t max_isotropy_order = 24) {
  MoritaVerdict verdict;
  auto g_orbits = g.orbits();
  auto h_orbits = h.orbits();

  std::vector<GroupTable> g_iso, h_iso;
  std::vector<int> g_reps, h_reps;
  for (const auto& orb : g_orbits) {
    g_reps.push_back(orb.front());
    g_iso.push_back(isotropy_group(g, orb.front()));
  }
  for (const auto& orb : h_orbits) {
    h_reps.push_back(orb.front());
    h_iso.push_back(isotropy_group(h, orb.front()));
  }
  for (const auto& t : g_iso)
    if (t.order() > max_isotropy_order) {
      verdict.status = MoritaVerdict::Status::unknown;
      verdict.note = "isotropy group exceeds the comparison bound";
      return verdict;
    }
  for (const auto& t : h_iso)
    if (t.order() > max_isotropy_order) {
      verdict.status = MoritaVerdict::Status::unknown;
      verdict.note = "isotropy group exceeds the comparison bound";
      return verdict;
    }

  MoritaObstruction obs;
  obs.g_orbit_count = g_orbits.size();
  obs.h_orbit_count = h_orbits.size();
  for (const auto& t : g_iso) obs.g_isotropy_orders.push_back(t.order());
  for (const auto& t : h_iso) obs.h_isotropy_orders.push_back(t.order());

  if (g_orbits.size() != h_orbits.size()) {
    obs.reason = "orbit counts differ";
    verdict.status = MoritaVerdict::Status::not_equivalent;
    verdict.obstruction = std::move(obs);
    return verdict;
  }

  // Perfect matching of orbits along isotropy isomorphism, with the witness
  // isomorphisms kept for the certificate.
  std::size_t k = g_orbits.size();
  std::vector<std::vector<std::optional<std::vector<int>>>> iso_cache(
      k, std::vector<std::optional<std::vector<int>>>(k));
  std::vector<std::vector<bool>> tried(k, std::vector<bool>(k, false));
  auto iso_of = [&](std::size_t i, std::size_t j) -> const std::optional<std::vector<int>>& {
    if (!tried[i][j]) {
      tried[i][j] = true;
      iso_cache[i][j] = group_isomorphism(g_iso[i], h_iso[j]);
    }
    return iso_cache[i][j];
  };
  std::vector<int> match(k, -1);
  std::vector<bool> used(k, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j] || !iso_of(i, j)) continue;
      match[i] = static_cast<int>(j);
      used[j] = true;
      if (assign(i + 1)) return true;
      used[j] = false;
      match[i] = -1;
    }
    return false;
  };
  if (!assign(0)) {
    obs.reason = "isotropy iso-class multisets differ";
    verdict.status = MoritaVerdict::Status::not_equivalent;
    verdict.obstruction = std::move(obs);
    return verdict;
  }

  // Certificate carrier: for each matched orbit pair, s-fibers at the
  // representatives glued along the isotropy isomorphism theta:
  // (x, y) ~ (x gamma, y theta(gamma)).
  struct Point {
    int x, y;  // representative pair
  };
  std::vector<Point> points;
  std::vector<int> tau_tab, sigma_tab;
  std::vector<std::vector<std::vector<int>>> orbit_of_piece;  // piece -> local lookup
  std::vector<std::vector<int>> piece_gfiber, piece_hfiber;
  std::vector<int> piece_of_point;

  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = static_cast<std::size_t>(match[i]);
    int q = g_reps[i], r = h_reps[j];
    const auto& theta = *iso_of(i, j);
    auto gamma_arrows = g.isotropy_arrows(q);
    auto lambda_arrows = h.isotropy_arrows(r);
    std::vector<int> p_fiber, q_fiber;
    for (std::size_t x = 0; x < g.arrow_count(); ++x)
      if (g.s(static_cast<int>(x)) == q) p_fiber.push_back(static_cast<int>(x));
    for (std::size_t y = 0; y < h.arrow_count(); ++y)
      if (h.s(static_cast<int>(y)) == r) q_fiber.push_back(static_cast<int>(y));

    // Local orbit ids over the fiber product, -1 = unseen.
    std::vector<std::vector<int>> local(p_fiber.size(), std::vector<int>(q_fiber.size(), -1));
    auto index_in = [](const std::vector<int>& v, int val) {
      for (std::size_t ii = 0; ii < v.size(); ++ii)
        if (v[ii] == val) return static_cast<int>(ii);
      return -1;
    };
    for (std::size_t a = 0; a < p_fiber.size(); ++a)
      for (std::size_t b = 0; b < q_fiber.size(); ++b) {
        if (local[a][b] >= 0) continue;
        int id = static_cast<int>(points.size());
        points.push_back(Point{p_fiber[a], q_fiber[b]});
        tau_tab.push_back(g.t(p_fiber[a]));
        sigma_tab.push_back(h.t(q_fiber[b]));
        piece_of_point.push_back(static_cast<int>(i));
        for (std::size_t gi = 0; gi < gamma_arrows.size(); ++gi) {
          int x2 = g.compose(p_fiber[a], gamma_arrows[gi]);
          int lam = lambda_arrows[theta[gi]];
          int y2 = h.compose(q_fiber[b], lam);
          local[index_in(p_fiber, x2)][index_in(q_fiber, y2)] = id;
        }
      }
    orbit_of_piece.push_back(std::move(local));
    piece_gfiber.push_back(std::move(p_fiber));
    piece_hfiber.push_back(std::move(q_fiber));
  }

  std::size_t carrier = points.size();
  auto find_point = [&](int piece, int x, int y) {
    const auto& pf = piece_gfiber[piece];
    const auto& qf = piece_hfiber[piece];
    int a = -1, b = -1;
    for (std::size_t ii = 0; ii < pf.size(); ++ii)
      if (pf[ii] == x) a = static_cast<int>(ii);
    for (std::size_t ii = 0; ii < qf.size(); ++ii)
      if (qf[ii] == y) b = static_cast<int>(ii);
    return orbit_of_piece[piece][a][b];
  };

  std::vector<int> lact(g.arrow_count() * carrier, -1);
  for (std::size_t arr = 0; arr < g.arrow_count(); ++arr)
    for (std::size_t pt = 0; pt < carrier; ++pt) {
      if (g.s(static_cast<int>(arr)) != tau_tab[pt]) continue;
      int piece = piece_of_point[pt];
      lact[arr * carrier + pt] =
          find_point(piece, g.compose(static_cast<int>(arr), points[pt].x), points[pt].y);
    }
  // [x,y].h = [x, h^{-1} y]: left-composing keeps y in the s-fiber and sends
  // sigma = t(y) to s(h) as a right action must.
  std::vector<int> ract(h.arrow_count() * carrier, -1);
  for (std::size_t arr = 0; arr < h.arrow_count(); ++arr)
    for (std::size_t pt = 0; pt < carrier; ++pt) {
      if (sigma_tab[pt] != h.t(static_cast<int>(arr))) continue;
      int piece = piece_of_point[pt];
      ract[arr * carrier + pt] =
          find_point(piece, points[pt].x,
                     h.compose(h.inv(static_cast<int>(arr)), points[pt].y));
    }

  verdict.certificate = Bibundle::validated(g, h, carrier, std::move(tau_tab),
                                            std::move(sigma_tab), std::move(lact),
                                            std::move(ract));
  verdict.status = MoritaVerdict::Status::equivalent;
  verdict.note = "matched orbits with isomorphic isotropy; certificate glued from s-fibers";
  return verdict;
}

}  // namespace bicat
