#pragma once

// Simple lists (every pair swaps at most once) are realized by odd-even
// transposition sort toward the final order their parities force. The result
// is within one layer of the minimum height.

#include <set>
#include <utility>
#include <vector>

#include "tangle/core.hpp"

namespace tangle::simple {

struct SimpleListTarget {
  Layer target;
  /// Pairs (i < j) that must swap exactly once: the count-1 pairs.
  std::set<std::pair<WireId, WireId>> inversion_pairs;
};

inline SimpleListTarget target_permutation(const SwapList& list) {
  if (!classify_list(list).simple) throw Error(Errc::NotSimple, "some pair swaps more than once");
  SimpleListTarget out{required_final_order(list), {}};
  for (const PairCount& e : list.entries()) out.inversion_pairs.emplace(e.i, e.j);
  return out;
}

/// Pairs whose relative order differs between two layers.
inline std::set<std::pair<WireId, WireId>> inversions(const Layer& from, const Layer& to) {
  std::vector<int> rank(from.order.size() + 1);
  for (std::size_t p = 0; p < to.order.size(); ++p) rank[static_cast<std::size_t>(to.order[p])] = static_cast<int>(p);
  std::set<std::pair<WireId, WireId>> out;
  for (std::size_t a = 0; a < from.order.size(); ++a)
    for (std::size_t b = a + 1; b < from.order.size(); ++b) {
      WireId u = from.order[a], v = from.order[b];
      if (rank[static_cast<std::size_t>(u)] > rank[static_cast<std::size_t>(v)])
        out.emplace(std::min(u, v), std::max(u, v));
    }
  return out;
}

/// Alternating phases starting with the odd phase, which compares positions
/// (1,2), (3,4), ...; the even phase compares (2,3), (4,5), .... A pair
/// swaps iff it is out of order with respect to the target. Phases without
/// swaps are dropped, and the run ends after an odd+even cycle with none.
inline Tangle odd_even_realize(const Layer& start, const Layer& target) {
  if (start.size() != target.size())
    throw Error(Errc::LengthMismatch, std::to_string(start.size()) + " vs " + std::to_string(target.size()) + " wires");
  if (!is_permutation(start) || !is_permutation(target))
    throw Error(Errc::InvalidLayer, "start and target must be permutations of 1..n");
  const int n = start.size();
  std::vector<int> rank(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p < n; ++p) rank[static_cast<std::size_t>(target.order[static_cast<std::size_t>(p)])] = p;

  Tangle t{start, {}};
  Layer cur = start;
  auto phase = [&](int first) {
    std::vector<int> swaps;
    for (int p = first; p + 1 <= n; p += 2) {
      WireId a = cur.order[static_cast<std::size_t>(p - 1)];
      WireId b = cur.order[static_cast<std::size_t>(p)];
      if (rank[static_cast<std::size_t>(a)] > rank[static_cast<std::size_t>(b)]) swaps.push_back(p);
    }
    if (swaps.empty()) return false;
    Move m(std::move(swaps));
    cur = apply_move(cur, m);
    t.moves.push_back(std::move(m));
    return true;
  };
  for (;;) {
    bool odd = phase(1);
    bool even = phase(2);
    if (!odd && !even) break;
  }
  return t;
}

}  // namespace tangle::simple
