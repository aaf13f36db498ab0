#pragma once

// Test-side oracles and generators. Nothing here calls into the solver, so the
// suites can compare against it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "tangle/core.hpp"

namespace testing_support {

using tangle::Layer;
using tangle::Move;
using tangle::SwapList;
using tangle::Tangle;
using tangle::WireId;

inline SwapList make_list(int n, std::initializer_list<std::tuple<int, int, int>> entries) {
  SwapList l(n);
  for (auto [i, j, c] : entries) l.set(i, j, c);
  return l;
}

/// Every non-empty set of disjoint positions in 1..n-1.
inline std::vector<std::vector<int>> all_moves(int n) {
  std::vector<std::vector<int>> out;
  const int slots = n - 1;
  for (std::uint32_t mask = 1; mask < (1u << std::max(slots, 0)); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::vector<int> ps;
    for (int p = 0; p < slots; ++p)
      if (mask >> p & 1u) ps.push_back(p + 1);
    out.push_back(ps);
  }
  return out;
}

/// Plain depth-first search over whole moves: no memo, no prune. Each swap
/// must still be owed by the list, which bounds the depth by total().
inline bool naive_feasible(const SwapList& list) {
  const int n = list.wires();
  const auto moves = all_moves(n);
  std::vector<std::vector<int>> rem(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) rem[i][j] = list.count(i, j);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) order[p] = p + 1;
  long long left = list.total();

  std::function<bool()> dfs = [&]() -> bool {
    if (left == 0) return true;
    for (const auto& m : moves) {
      bool ok = true;
      for (int p : m) ok = ok && rem[order[p - 1]][order[p]] > 0;
      if (!ok) continue;
      for (int p : m) {
        int a = order[p - 1], b = order[p];
        --rem[a][b], --rem[b][a];
        std::swap(order[p - 1], order[p]);
      }
      left -= static_cast<long long>(m.size());
      bool found = dfs();
      left += static_cast<long long>(m.size());
      for (int p : m) {
        std::swap(order[p - 1], order[p]);
        int a = order[p - 1], b = order[p];
        ++rem[a][b], ++rem[b][a];
      }
      if (found) return true;
    }
    return false;
  };
  return dfs();
}

/// Swap counts of a tangle, recomputed without the library.
inline SwapList count_swaps(const Tangle& t) {
  const int n = static_cast<int>(t.start.order.size());
  SwapList out(n);
  std::vector<int> order = t.start.order;
  for (const Move& m : t.moves)
    for (int p : m.positions) {
      int a = order[p - 1], b = order[p];
      out.set(a, b, out.count(a, b) + 1);
      std::swap(order[p - 1], order[p]);
    }
  return out;
}

/// Random tangle from the identity: each move picks a random non-empty set of
/// disjoint positions.
inline Tangle random_tangle(std::mt19937_64& rng, int n, int moves) {
  Tangle t{Layer::identity(n), {}};
  for (int k = 0; k < moves; ++k) {
    std::vector<int> ps;
    for (int p = 1; p <= n - 1; ++p)
      if ((ps.empty() || ps.back() < p - 1) && rng() % 2 == 0) ps.push_back(p);
    if (ps.empty()) ps.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)));
    t.moves.emplace_back(ps);
  }
  return t;
}

/// Every list on n wires with total count <= max_total, pairs in (1,2), (1,3),
/// ... order.
inline void for_each_list(int n, int max_total, const std::function<void(const SwapList&)>& visit) {
  SwapList l(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
    if (k == pairs.size()) {
      visit(l);
      return;
    }
    for (int c = 0; c <= budget; ++c) {
      l.set(pairs[k].first, pairs[k].second, c);
      rec(k + 1, budget - c);
    }
    l.set(pairs[k].first, pairs[k].second, 0);
  };
  rec(0, max_total);
}

/// Inversions between the identity and `target`: the simple list realized by
/// any tangle that sorts into `target` with each pair swapping at most once.
inline SwapList inversion_list(const std::vector<int>& target) {
  const int n = static_cast<int>(target.size());
  SwapList l(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (target[a] > target[b]) l.set(target[a], target[b], 1);
  return l;
}

}  // namespace testing_support
