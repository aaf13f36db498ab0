#pragma once

// Tangle data model: swap lists, layers, moves, tangles, and the checks that
// relate them. Wires are named by their position in the initial layer, so the
// start layer of every tangle handled here is the identity 1..n.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangle/error.hpp"

namespace tangle {

/// 1-based wire label, equal to the wire's position in the initial layer.
using WireId = int;

struct PairCount {
  WireId i = 0;  // i < j
  WireId j = 0;
  int count = 0;

  friend bool operator==(const PairCount&, const PairCount&) = default;
};

/// Symmetric multiset of swaps over n wires, stored as the strict upper
/// triangle of the count matrix. Pairs never set have count 0.
class SwapList {
 public:
  SwapList() = default;
  explicit SwapList(int wires)
      : n_(wires), counts_(wires > 1 ? static_cast<std::size_t>(wires) * (wires - 1) / 2 : 0, 0) {
    if (wires < 0) throw Error(Errc::OutOfRange, "negative wire count");
  }

  int wires() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return counts_.size(); }

  int count(WireId i, WireId j) const {
    if (i == j) return 0;
    return counts_[index(i, j)];
  }

  void set(WireId i, WireId j, int value) {
    if (i == j) throw Error(Errc::SelfPair, "wire " + std::to_string(i) + " paired with itself");
    if (value < 0) throw Error(Errc::NegativeCount, "count " + std::to_string(value));
    counts_[index(i, j)] = value;
  }

  /// Sum of all pair counts.
  long long total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), 0LL);
  }

  int max_count() const noexcept {
    return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
  }

  /// Number of swaps wire w takes part in.
  long long wire_total(WireId w) const {
    long long sum = 0;
    for (WireId v = 1; v <= n_; ++v) sum += count(w, v);
    return sum;
  }

  /// Nonzero pairs in lexicographic (i, j) order.
  std::vector<PairCount> entries() const {
    std::vector<PairCount> out;
    for (WireId i = 1; i <= n_; ++i)
      for (WireId j = i + 1; j <= n_; ++j)
        if (int c = count(i, j); c != 0) out.push_back({i, j, c});
    return out;
  }

  /// Raw upper-triangle counts in (1,2), (1,3), ..., (n-1,n) order.
  std::span<const int> raw() const noexcept { return counts_; }

  std::size_t index(WireId i, WireId j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_)
      throw Error(Errc::OutOfRange,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." + std::to_string(n_));
    return static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2 + static_cast<std::size_t>(j - i - 1);
  }

  friend bool operator==(const SwapList&, const SwapList&) = default;

 private:
  int n_ = 0;
  std::vector<int> counts_;
};

struct RawEntry {
  long long i = 0;
  long long j = 0;
  long long count = 0;
};

/// Canonicalizes a list given as loose entries. Duplicate entries for the same
/// unordered pair are rejected rather than summed.
inline SwapList validate_list(long long wires, std::span<const RawEntry> entries) {
  if (wires < 1 || wires > 65535) throw Error(Errc::OutOfRange, "wire count " + std::to_string(wires));
  SwapList list(static_cast<int>(wires));
  std::vector<bool> seen(list.pair_count(), false);
  for (const RawEntry& e : entries) {
    if (e.i == e.j) throw Error(Errc::SelfPair, "wire " + std::to_string(e.i) + " paired with itself");
    if (e.i < 1 || e.j < 1 || e.i > wires || e.j > wires)
      throw Error(Errc::OutOfRange, "pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") with " +
                                        std::to_string(wires) + " wires");
    if (e.count < 0) throw Error(Errc::NegativeCount, "count " + std::to_string(e.count));
    if (e.count > 1'000'000'000) throw Error(Errc::OutOfRange, "count " + std::to_string(e.count));
    auto idx = list.index(static_cast<int>(e.i), static_cast<int>(e.j));
    if (seen[idx])
      throw Error(Errc::DuplicatePair, "pair (" + std::to_string(std::min(e.i, e.j)) + "," +
                                           std::to_string(std::max(e.i, e.j)) + ") listed twice");
    seen[idx] = true;
    list.set(static_cast<int>(e.i), static_cast<int>(e.j), static_cast<int>(e.count));
  }
  return list;
}

/// One horizontal level: the wires read left to right.
struct Layer {
  std::vector<WireId> order;

  static Layer identity(int n) {
    Layer l;
    l.order.resize(static_cast<std::size_t>(n));
    std::iota(l.order.begin(), l.order.end(), 1);
    return l;
  }

  int size() const noexcept { return static_cast<int>(order.size()); }
  bool is_identity() const noexcept {
    for (std::size_t p = 0; p < order.size(); ++p)
      if (order[p] != static_cast<WireId>(p + 1)) return false;
    return true;
  }

  friend bool operator==(const Layer&, const Layer&) = default;
  friend auto operator<=>(const Layer&, const Layer&) = default;
};

inline bool is_permutation(const Layer& layer) {
  std::vector<bool> seen(layer.order.size() + 1, false);
  for (WireId w : layer.order) {
    if (w < 1 || w > layer.size() || seen[static_cast<std::size_t>(w)]) return false;
    seen[static_cast<std::size_t>(w)] = true;
  }
  return true;
}

/// A set of disjoint adjacent transpositions. Position p (1-based) exchanges
/// the wires at p and p + 1. Positions are kept sorted.
struct Move {
  std::vector<int> positions;

  Move() = default;
  Move(std::initializer_list<int> ps) : positions(ps) { normalize(); }
  explicit Move(std::vector<int> ps) : positions(std::move(ps)) { normalize(); }

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;

 private:
  void normalize() {
    std::sort(positions.begin(), positions.end());
    if (positions.empty()) throw Error(Errc::EmptyMove, "a move needs at least one swap");
    for (std::size_t k = 1; k < positions.size(); ++k)
      if (positions[k] - positions[k - 1] <= 1)
        throw Error(Errc::OverlappingPositions, "positions " + std::to_string(positions[k - 1]) + " and " +
                                                    std::to_string(positions[k]) + " share a wire");
  }
};

inline Layer apply_move(const Layer& layer, const Move& move) {
  Layer next = layer;
  int prev = -1;
  for (int p : move.positions) {
    if (p < 1 || p > layer.size() - 1)
      throw Error(Errc::PositionOutOfRange, "position " + std::to_string(p) + " with " +
                                                std::to_string(layer.size()) + " wires");
    if (prev >= 0 && p - prev <= 1)
      throw Error(Errc::OverlappingPositions, "positions " + std::to_string(prev) + " and " + std::to_string(p));
    prev = p;
    std::swap(next.order[static_cast<std::size_t>(p - 1)], next.order[static_cast<std::size_t>(p)]);
  }
  return next;
}

/// Start layer plus moves. Height counts layers, so a move-free tangle has
/// height 1.
struct Tangle {
  Layer start;
  std::vector<Move> moves;

  int wires() const noexcept { return start.size(); }
  int height() const noexcept { return static_cast<int>(moves.size()) + 1; }

  std::vector<Layer> layers() const {
    std::vector<Layer> out;
    out.reserve(moves.size() + 1);
    out.push_back(start);
    for (const Move& m : moves) out.push_back(apply_move(out.back(), m));
    return out;
  }

  Layer final_layer() const {
    Layer cur = start;
    for (const Move& m : moves) cur = apply_move(cur, m);
    return cur;
  }

  friend bool operator==(const Tangle&, const Tangle&) = default;
};

inline void validate_tangle(const Tangle& t) {
  if (!is_permutation(t.start)) throw Error(Errc::InvalidTangle, "start layer is not a permutation");
  try {
    (void)t.final_layer();
  } catch (const Error& e) {
    throw Error(Errc::InvalidTangle, e.what());
  }
}

inline SwapList realized_multiset(const Tangle& t) {
  validate_tangle(t);
  SwapList out(t.wires());
  Layer cur = t.start;
  for (const Move& m : t.moves) {
    for (int p : m.positions) {
      WireId a = cur.order[static_cast<std::size_t>(p - 1)];
      WireId b = cur.order[static_cast<std::size_t>(p)];
      out.set(a, b, out.count(a, b) + 1);
    }
    cur = apply_move(cur, m);
  }
  return out;
}

struct Violation {
  WireId i = 0;
  WireId j = 0;
  int expected = 0;
  int actual = 0;
};

struct Verdict {
  bool ok = true;
  std::optional<Violation> violation;

  std::string describe() const {
    if (ok) return "OK";
    const Violation& v = *violation;
    return "pair (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") expected " + std::to_string(v.expected) +
           " got " + std::to_string(v.actual);
  }
};

inline Verdict verify_realizes(const Tangle& t, const SwapList& list) {
  if (t.wires() != list.wires())
    throw Error(Errc::WireCountMismatch, "tangle has " + std::to_string(t.wires()) + " wires, list has " +
                                             std::to_string(list.wires()));
  if (!t.start.is_identity()) throw Error(Errc::InvalidTangle, "start layer must be the identity order");
  SwapList realized = realized_multiset(t);
  for (WireId i = 1; i <= list.wires(); ++i)
    for (WireId j = i + 1; j <= list.wires(); ++j)
      if (realized.count(i, j) != list.count(i, j))
        return Verdict{false, Violation{i, j, list.count(i, j), realized.count(i, j)}};
  return Verdict{};
}

/// Final layer forced by count parities, or nullopt when the parity tournament
/// is cyclic. Each swap toggles the relative order of its pair, so wire i ends
/// left of wire j iff (i < j) XOR count(i, j) is odd.
inline std::optional<Layer> try_final_order(const SwapList& list) {
  const int n = list.wires();
  // In a transitive tournament the out-degrees are exactly 0..n-1.
  std::vector<int> wins(static_cast<std::size_t>(n) + 1, 0);
  for (WireId i = 1; i <= n; ++i)
    for (WireId j = i + 1; j <= n; ++j) {
      bool i_first = (list.count(i, j) % 2) == 0;
      ++wins[static_cast<std::size_t>(i_first ? i : j)];
    }
  Layer out;
  out.order.assign(static_cast<std::size_t>(n), 0);
  for (WireId w = 1; w <= n; ++w) {
    auto slot = static_cast<std::size_t>(n - 1 - wins[static_cast<std::size_t>(w)]);
    if (out.order[slot] != 0) return std::nullopt;
    out.order[slot] = w;
  }
  return out;
}

/// Necessary, not sufficient, condition for feasibility.
inline Layer required_final_order(const SwapList& list) {
  if (auto layer = try_final_order(list)) return *std::move(layer);
  throw Error(Errc::CyclicOrder, "count parities force a cyclic final order");
}

struct ListClass {
  bool simple = false;
  bool odd = false;
  bool even = false;
  bool nonseparable = false;

  friend bool operator==(const ListClass&, const ListClass&) = default;
};

/// True iff no wires i < k < j have count(i,k) = count(k,j) = 0 < count(i,j).
inline bool is_nonseparable(const SwapList& list) {
  const int n = list.wires();
  for (WireId i = 1; i <= n; ++i)
    for (WireId j = i + 2; j <= n; ++j) {
      if (list.count(i, j) == 0) continue;
      for (WireId k = i + 1; k < j; ++k)
        if (list.count(i, k) == 0 && list.count(k, j) == 0) return false;
    }
  return true;
}

inline ListClass classify_list(const SwapList& list) {
  ListClass c{true, true, true, is_nonseparable(list)};
  for (int v : list.raw()) {
    if (v > 1) c.simple = false;
    if (v != 0 && v % 2 == 0) c.odd = false;
    if (v % 2 != 0) c.even = false;
  }
  return c;
}

/// The rigid family list L_n: wires 1..n-2 pairwise swap once, wires n-1 and
/// n swap n-1 times, and each wire i <= n-2 swaps twice with exactly one of
/// n-1, n. The choice alternates and is anchored at wire n-2, which always
/// meets n: wire i meets n iff n - i is even. For odd n this is the familiar
/// pattern (odd i meets n); for even n the pattern flips, which is what keeps
/// the order of swaps along every wire unique.
inline SwapList gen_ln(int n) {
  if (n < 3) throw Error(Errc::TooFewWires, "L_n needs n >= 3, got " + std::to_string(n));
  SwapList list(n);
  for (WireId i = 1; i <= n - 2; ++i)
    for (WireId j = i + 1; j <= n - 2; ++j) list.set(i, j, 1);
  list.set(n - 1, n, n - 1);
  for (WireId i = 1; i <= n - 2; ++i) list.set(i, (n - i) % 2 == 0 ? n : n - 1, 2);
  return list;
}

}  // namespace tangle
