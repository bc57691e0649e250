#pragma once

// Test-only reference implementations. They deliberately avoid the
// library's code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "dcsim/geometry.hpp"
#include "dcsim/radio.hpp"

namespace oracle {

/// Crossing-number point-in-polygon with a boundary tolerance: a point within
/// `tol` of any edge counts as inside.
inline bool point_in_polygon(dcsim::Vec2 p, const std::vector<dcsim::Vec2>& poly, double tol = 1e-9) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = poly[i];
    const auto b = poly[(i + 1) % n];
    const double ex = b.x - a.x, ey = b.y - a.y;
    const double t = std::clamp(((p.x - a.x) * ex + (p.y - a.y) * ey) / (ex * ex + ey * ey), 0.0, 1.0);
    const double dx = a.x + t * ex - p.x, dy = a.y + t * ey - p.y;
    if (dx * dx + dy * dy <= tol * tol) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto pi = poly[i];
    const auto pj = poly[j];
    if ((pi.y > p.y) != (pj.y > p.y) && p.x < (pj.x - pi.x) * (p.y - pi.y) / (pj.y - pi.y) + pi.x) inside = !inside;
  }
  return inside;
}

/// Strict interior: inside and farther than `margin` from every edge.
inline bool strictly_inside(dcsim::Vec2 p, const std::vector<dcsim::Vec2>& poly, double margin = 1e-9) {
  if (!point_in_polygon(p, poly, 0.0)) return false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = poly[i];
    const auto b = poly[(i + 1) % n];
    const double ex = b.x - a.x, ey = b.y - a.y;
    const double t = std::clamp(((p.x - a.x) * ex + (p.y - a.y) * ey) / (ex * ex + ey * ey), 0.0, 1.0);
    if (std::hypot(a.x + t * ex - p.x, a.y + t * ey - p.y) <= margin) return false;
  }
  return true;
}

struct LiteralResult {
  std::map<int, int> A1;
  std::map<int, int> A2;
  std::map<int, std::vector<double>> RSRP_B;
  int count = 0;
};

/// Algorithm 1 transcribed step by step on a plain RSRP table
/// rsrp[u][j]. The inner while runs at most one pass per UE: j* is fixed for
/// u, so a second pass could only re-admit the same UE.
inline LiteralResult centralized_literal(const std::vector<std::vector<double>>& RSRP, int N, int n) {
  const int numU = static_cast<int>(RSRP.size());
  const int numB = numU == 0 ? 0 : static_cast<int>(RSRP[0].size());
  LiteralResult r;
  // steps 1-4
  int count = 0;
  // steps 5-9
  for (int u = 0; u < numU; ++u) {
    int istar = 0;
    for (int j = 1; j < numB; ++j)
      if (RSRP[u][j] > RSRP[u][istar]) istar = j;
    r.A1[u] = istar;
    r.RSRP_B[istar].push_back(RSRP[u][istar]);
  }
  auto jstar_of = [&](int u) {
    int best = -1;
    for (int j = 0; j < numB; ++j) {
      if (j == r.A1[u]) continue;
      if (best < 0 || RSRP[u][j] > RSRP[u][best]) best = j;
    }
    return best;
  };
  // step 10
  std::vector<int> U;
  for (int u = 0; u < numU; ++u) U.push_back(u);
  if (numB < 2) U.clear();
  std::stable_sort(U.begin(), U.end(), [&](int a, int b) { return RSRP[a][jstar_of(a)] > RSRP[b][jstar_of(b)]; });
  // steps 11-19
  for (int u : U) {
    while (count < N) {
      const int jstar = jstar_of(u);
      int worse = 0;
      for (double existing : r.RSRP_B[jstar])
        if (RSRP[u][jstar] > existing) ++worse;
      if (worse >= n) {
        r.A2[u] = jstar;
        count = count + 1;
        r.RSRP_B[jstar].push_back(RSRP[u][jstar]);
      }
      break;
    }
  }
  r.count = count;
  return r;
}

struct RandomInstance {
  std::vector<std::vector<double>> rsrp;
  int num_nodes = 1;
  int capacity_N = 0;
  int rank_n = 1;
};

/// Up to 6 nodes and 8 UEs; integer-valued RSRP in a narrow range so that
/// ties are common.
inline RandomInstance random_instance(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> nodes(1, 6), ues(0, 8), level(-90, -70), cap(0, 9), rank(1, 3);
  RandomInstance inst;
  const int nb = nodes(gen), nu = ues(gen);
  inst.num_nodes = nb;
  inst.rsrp.assign(nu, std::vector<double>(nb));
  for (auto& row : inst.rsrp)
    for (auto& v : row) v = level(gen);
  inst.capacity_N = cap(gen);
  inst.rank_n = rank(gen);
  return inst;
}

inline dcsim::Matrix to_matrix(const std::vector<std::vector<double>>& rows, std::size_t cols) {
  dcsim::Matrix m(rows.size(), cols);
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (std::size_t j = 0; j < cols; ++j) m(u, j) = rows[u][j];
  return m;
}

}  // namespace oracle
