#pragma once

// Shared test utilities: seeded RNG and uniform random tree samplers.

#include <random>

#include "supertree/enumerate.hpp"
#include "supertree/trees.hpp"

namespace supertree::testing {

// Uniform d-ary plane tree on exactly k vertices, sampled by subtree-size
// composition weighted with Fuss-Catalan counts (double weights are exact
// enough at test scale).
inline DaryTree random_dary(int d, int k, std::mt19937& rng) {
  std::vector<double> cnt(k + 1);
  for (int i = 0; i <= k; ++i) cnt[i] = count_dary(d, i).convert_to<double>();
  // g[j][m] = weight of filling j slots with m vertices total
  std::vector<std::vector<double>> g(d + 1, std::vector<double>(k, 0.0));
  g[0][0] = 1.0;
  for (int j = 1; j <= d; ++j)
    for (int m = 0; m <= k - 1; ++m)
      for (int s = 0; s <= m; ++s) g[j][m] += cnt[s] * g[j - 1][m - s];

  DaryTree t;
  t.d = d;
  struct Build {
    int d;
    const std::vector<double>& cnt;
    const std::vector<std::vector<double>>& g;
    std::mt19937& rng;
    DaryTree& t;
    int node(int m) {  // subtree with m vertices
      int id = t.size();
      t.slots.insert(t.slots.end(), d, -1);
      int rest = m - 1;
      for (int j = d; j >= 1; --j) {
        // size of this slot, conditioned on filling j slots with `rest`
        std::uniform_real_distribution<double> u(0.0, g[j][rest]);
        double x = u(rng), acc = 0.0;
        int pick = 0;
        for (int s = 0; s <= rest; ++s) {
          acc += cnt[s] * g[j - 1][rest - s];
          if (x <= acc) {
            pick = s;
            break;
          }
        }
        if (pick > 0) {
          int c = node(pick);
          t.slots[static_cast<std::size_t>(id) * d + (d - j)] = c;
          rest -= pick;
        }
      }
      return id;
    }
  } build{d, cnt, g, rng, t};
  build.node(k);
  return t;
}

inline BracketTree random_bracket(int d, int k, std::mt19937& rng) {
  std::vector<double> cnt(k + 1, 0.0);
  std::vector<std::vector<double>> forest(d + 1, std::vector<double>(k, 0.0));
  cnt[1] = 1.0;
  // forests of exactly j trees with m vertices, built bottom-up by size
  for (int n = 1; n <= k; ++n) {
    if (n >= 2) {
      double total = 0.0;
      for (int j = 1; j <= d; ++j) total += forest[j][n - 1];
      cnt[n] = total;
    }
    for (int m = 0; m <= k - 1; ++m) {
      forest[0][m] = m == 0 ? 1.0 : 0.0;
      for (int j = 1; j <= d; ++j) {
        forest[j][m] = 0.0;
        for (int s = 1; s <= m; ++s) forest[j][m] += cnt[s] * forest[j - 1][m - s];
      }
    }
  }
  BracketTree t;
  t.d = d;
  struct Build {
    int d;
    const std::vector<double>& cnt;
    const std::vector<std::vector<double>>& forest;
    std::mt19937& rng;
    BracketTree& t;
    int node(int m) {
      int id = t.size();
      t.kids.emplace_back();
      int rest = m - 1;
      if (rest == 0) return id;
      // number of children
      double total = 0.0;
      for (int j = 1; j <= d; ++j) total += forest[j][rest];
      std::uniform_real_distribution<double> uj(0.0, total);
      double xj = uj(rng), accj = 0.0;
      int j = 1;
      for (; j <= d; ++j) {
        accj += forest[j][rest];
        if (xj <= accj) break;
      }
      j = std::min(j, d);
      for (; j >= 1; --j) {
        std::uniform_real_distribution<double> u(0.0, forest[j][rest]);
        double x = u(rng), acc = 0.0;
        int pick = 1;
        for (int s = 1; s <= rest; ++s) {
          acc += cnt[s] * forest[j - 1][rest - s];
          if (x <= acc) {
            pick = s;
            break;
          }
        }
        int c = node(pick);
        t.kids[id].push_back(c);
        rest -= pick;
      }
      return id;
    }
  } build{d, cnt, forest, rng, t};
  build.node(k);
  return t;
}

}  // namespace supertree::testing
