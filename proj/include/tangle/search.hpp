#pragma once

// Exact search over (layer, remaining swaps) states.
//
// Every move consumes at least one remaining swap, so the state graph is a
// finite DAG of depth at most the list's total multiplicity. Results that
// depend only on a state (dead ends, failing move budgets) are memoized in a
// table shared by all worker threads; a state is only recorded once its whole
// subtree has been explored, so concurrent readers never see partial results.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "tangle/core.hpp"

namespace tangle::search {

struct SearchOptions {
  /// Node budget. Exceeding it raises BudgetExhausted, never a verdict.
  std::optional<std::uint64_t> max_nodes;
  unsigned threads = 1;
  /// Discard states whose remaining-count parities force a cyclic final order.
  bool parity_prune = true;
  /// Discard states where a remaining pair is separated by a wire that can no
  /// longer cross either of them.
  bool blocker_prune = true;
  /// decide_feasible only: successors are single swaps. Any parallel move
  /// serializes into single swaps, so verdicts are unaffected.
  bool single_swap_moves = true;
};

struct Stats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t states_memoized = 0;
  double wall_seconds = 0.0;
};

enum class Status { Feasible, Infeasible };

struct FeasibilityResult {
  Status status = Status::Infeasible;
  std::optional<Tangle> witness;
  Stats stats;

  bool feasible() const noexcept { return status == Status::Feasible; }
};

/// Search node in value form. encode() is the memo key: the layer's wire ids
/// followed by the remaining counts of the upper triangle, one byte each.
struct SearchState {
  Layer layer;
  SwapList remaining;

  std::string encode() const {
    std::string key;
    key.reserve(layer.order.size() + remaining.pair_count());
    for (WireId w : layer.order) key.push_back(static_cast<char>(w));
    for (int c : remaining.raw()) key.push_back(static_cast<char>(c));
    return key;
  }
};

namespace detail {

inline constexpr int kMaxWires = 255;
inline constexpr int kMaxCount = 255;

/// Mutable search cursor: current layer, remaining counts (full symmetric
/// matrix for O(1) access), per-wire remaining totals.
class Cursor {
 public:
  explicit Cursor(const SwapList& list) : n_(list.wires()) {
    if (n_ > kMaxWires) throw Error(Errc::OutOfRange, "search supports at most 255 wires");
    if (list.max_count() > kMaxCount) throw Error(Errc::OutOfRange, "search supports counts up to 255");
    const auto un = static_cast<std::size_t>(n_);
    layer_.resize(un);
    pos_.resize(un + 1);
    for (int p = 0; p < n_; ++p) {
      layer_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p + 1);
      pos_[static_cast<std::size_t>(p + 1)] = p;
    }
    rem_.assign(un * un, 0);
    wire_rem_.assign(un + 1, 0);
    for (const PairCount& e : list.entries()) {
      cell(e.i, e.j) = static_cast<std::uint8_t>(e.count);
      cell(e.j, e.i) = static_cast<std::uint8_t>(e.count);
      wire_rem_[static_cast<std::size_t>(e.i)] += e.count;
      wire_rem_[static_cast<std::size_t>(e.j)] += e.count;
      total_ += e.count;
    }
  }

  int wires() const noexcept { return n_; }
  long long total() const noexcept { return total_; }
  WireId at(int p) const noexcept { return layer_[static_cast<std::size_t>(p)]; }
  int position(WireId w) const noexcept { return pos_[static_cast<std::size_t>(w)]; }
  int rem(WireId a, WireId b) const noexcept {
    return rem_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b - 1)];
  }
  long long wire_rem(WireId w) const noexcept { return wire_rem_[static_cast<std::size_t>(w)]; }

  /// 0-based left position p; the pair at (p, p+1) still has swaps left.
  bool eligible(int p) const noexcept { return rem(at(p), at(p + 1)) > 0; }

  void swap_at(int p) noexcept { exchange(p, -1); }
  void unswap_at(int p) noexcept { exchange(p, +1); }

  void key(std::string& out) const {
    out.clear();
    out.append(layer_.begin(), layer_.end());
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        out.push_back(static_cast<char>(rem_[static_cast<std::size_t>(i * n_ + j)]));
  }

  Layer layer() const {
    Layer l;
    l.order.assign(layer_.begin(), layer_.end());
    return l;
  }

  SearchState state() const {
    SearchState s{layer(), SwapList(n_)};
    for (WireId i = 1; i <= n_; ++i)
      for (WireId j = i + 1; j <= n_; ++j) s.remaining.set(i, j, rem(i, j));
    return s;
  }

 private:
  std::uint8_t& cell(WireId a, WireId b) {
    return rem_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b - 1)];
  }

  void exchange(int p, int delta) noexcept {
    const auto up = static_cast<std::size_t>(p);
    WireId a = layer_[up];
    WireId b = layer_[up + 1];
    if (delta > 0) std::swap(a, b);  // undo: the pair currently sits reversed
    cell(a, b) = static_cast<std::uint8_t>(cell(a, b) + delta);
    cell(b, a) = static_cast<std::uint8_t>(cell(b, a) + delta);
    wire_rem_[static_cast<std::size_t>(a)] += delta;
    wire_rem_[static_cast<std::size_t>(b)] += delta;
    total_ += delta;
    std::swap(layer_[up], layer_[up + 1]);
    pos_[static_cast<std::size_t>(layer_[up])] = p;
    pos_[static_cast<std::size_t>(layer_[up + 1])] = p + 1;
  }

  int n_;
  std::vector<std::uint8_t> layer_;
  std::vector<int> pos_;
  std::vector<std::uint8_t> rem_;
  std::vector<long long> wire_rem_;
  long long total_ = 0;
};

/// Parity tournament of the remaining counts relative to the current layer is
/// transitive. Swapping a pair toggles both its order and its parity, so this
/// is invariant along every path: it can only reject a root.
inline bool parity_consistent(const Cursor& c) {
  const int n = c.wires();
  std::vector<int> wins(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      WireId a = c.at(p), b = c.at(q);
      bool a_first = c.rem(a, b) % 2 == 0;
      ++wins[static_cast<std::size_t>(a_first ? a : b)];
    }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (WireId w = 1; w <= n; ++w) {
    auto s = static_cast<std::size_t>(wins[static_cast<std::size_t>(w)]);
    if (seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

/// Some pair with swaps left has a wire between them that has no swaps left
/// with either, so the pair can never become adjacent again.
inline bool has_blocked_pair(const Cursor& c) {
  const int n = c.wires();
  for (int a = 0; a + 2 < n; ++a) {
    const WireId left = c.at(a);
    if (c.wire_rem(left) == 0) continue;
    for (int b = a + 2; b < n; ++b) {
      const WireId right = c.at(b);
      if (c.rem(left, right) == 0) continue;
      for (int w = a + 1; w < b; ++w) {
        const WireId mid = c.at(w);
        if (c.rem(left, mid) == 0 && c.rem(mid, right) == 0) return true;
      }
    }
  }
  return false;
}

inline bool passes_prunes(const Cursor& c, const SearchOptions& opts) {
  if (opts.blocker_prune && has_blocked_pair(c)) return false;
  if (opts.parity_prune && !parity_consistent(c)) return false;
  return true;
}

/// Lower bound on the number of moves still needed: a wire joins at most one
/// swap per move, and a move holds at most floor(n/2) swaps.
inline long long move_lower_bound(const Cursor& c) {
  if (c.total() == 0) return 0;
  long long per_wire = 0;
  for (WireId w = 1; w <= c.wires(); ++w) per_wire = std::max(per_wire, c.wire_rem(w));
  const long long width = c.wires() / 2;
  return std::max(per_wire, (c.total() + width - 1) / width);
}

inline std::vector<int> eligible_positions(const Cursor& c) {
  std::vector<int> out;
  for (int p = 0; p + 1 < c.wires(); ++p)
    if (c.eligible(p)) out.push_back(p);
  return out;
}

/// Calls fn(positions) for every non-empty set of eligible, pairwise
/// non-adjacent 0-based positions, in lexicographic order of the sorted
/// position vectors. Stops early when fn returns true.
template <typename Fn>
bool for_each_move(const std::vector<int>& eligible, Fn&& fn) {
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t k = from; k < eligible.size(); ++k) {
      const int p = eligible[k];
      if (!chosen.empty() && p - chosen.back() <= 1) continue;
      chosen.push_back(p);
      if (fn(static_cast<const std::vector<int>&>(chosen))) return true;
      if (self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

template <typename Fn>
bool for_each_successor(const Cursor& c, bool single_swaps, Fn&& fn) {
  std::vector<int> eligible = eligible_positions(c);
  if (single_swaps) {
    std::vector<int> one(1);
    for (int p : eligible) {
      one[0] = p;
      if (fn(static_cast<const std::vector<int>&>(one))) return true;
    }
    return false;
  }
  return for_each_move(eligible, fn);
}

inline void apply_positions(Cursor& c, const std::vector<int>& ps) {
  for (int p : ps) c.swap_at(p);
}
inline void undo_positions(Cursor& c, const std::vector<int>& ps) {
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) c.unswap_at(*it);
}

inline Move to_move(const std::vector<int>& zero_based) {
  std::vector<int> ps(zero_based.size());
  std::transform(zero_based.begin(), zero_based.end(), ps.begin(), [](int p) { return p + 1; });
  return Move(std::move(ps));
}

/// Sharded map with insert-or-raise semantics; behaves as one logical map.
class StateMemo {
 public:
  /// Stored value for key, or -1.
  int find(const std::string& key) const {
    const Shard& s = shard(key);
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    return it == s.map.end() ? -1 : it->second;
  }

  void raise(const std::string& key, int value) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mu);
    auto [it, inserted] = s.map.try_emplace(key, value);
    if (!inserted && it->second < value) it->second = value;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const Shard& s : shards_) {
      std::lock_guard lock(s.mu);
      total += s.map.size();
    }
    return total;
  }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, int> map;
  };

  const Shard& shard(const std::string& key) const { return shards_[std::hash<std::string>{}(key) % kShards]; }
  Shard& shard(const std::string& key) { return shards_[std::hash<std::string>{}(key) % kShards]; }

  std::array<Shard, kShards> shards_;
};

class NodeBudget {
 public:
  explicit NodeBudget(std::optional<std::uint64_t> limit) : limit_(limit) {}

  /// Counts one expansion; false once the budget is gone.
  bool spend() {
    std::uint64_t k = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limit_ && k > *limit_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return std::min(used_.load(), limit_.value_or(UINT64_MAX)); }

 private:
  std::optional<std::uint64_t> limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

enum class Outcome { Solved, Dead, Aborted };

/// Depth-first feasibility search from one prefix. Children are tried in
/// lexicographic move order, so the first solution found is the
/// lexicographically smallest completion of the prefix.
class FeasibilityWorker {
 public:
  FeasibilityWorker(const SearchOptions& opts, StateMemo& memo, NodeBudget& budget,
                    const std::atomic<std::size_t>* best = nullptr, std::size_t task = 0)
      : opts_(opts), memo_(memo), budget_(budget), best_(best), task_(task) {}

  Outcome run(Cursor& c, std::vector<Move>& path) {
    if (c.total() == 0) return Outcome::Solved;
    if (cancelled() || !budget_.spend()) return Outcome::Aborted;
    std::string key;
    c.key(key);
    if (memo_.find(key) >= 0) return Outcome::Dead;
    if (!passes_prunes(c, opts_)) {
      memo_.raise(key, 0);
      return Outcome::Dead;
    }
    Outcome result = Outcome::Dead;
    for_each_successor(c, opts_.single_swap_moves, [&](const std::vector<int>& ps) {
      apply_positions(c, ps);
      path.push_back(to_move(ps));
      Outcome o = run(c, path);
      if (o == Outcome::Solved) {
        result = o;
        return true;
      }
      path.pop_back();
      undo_positions(c, ps);
      if (o == Outcome::Aborted) {
        result = o;
        return true;
      }
      return false;
    });
    if (result == Outcome::Dead) memo_.raise(key, 0);
    return result;
  }

 private:
  bool cancelled() const {
    return budget_.exhausted() || (best_ != nullptr && best_->load(std::memory_order_relaxed) < task_);
  }

  const SearchOptions& opts_;
  StateMemo& memo_;
  NodeBudget& budget_;
  const std::atomic<std::size_t>* best_;
  std::size_t task_;
};

struct Task {
  std::vector<std::vector<int>> prefix;  // 0-based positions per move
};

/// Splits the root into prefixes in lexicographic order until there are
/// enough tasks to keep `workers` threads busy.
inline std::vector<Task> split_frontier(const Cursor& root, bool single_swaps, std::size_t wanted) {
  std::vector<Task> frontier{Task{}};
  for (int depth = 0; depth < 4 && frontier.size() < wanted; ++depth) {
    std::vector<Task> next;
    bool grew = false;
    for (Task& t : frontier) {
      Cursor c = root;
      for (const auto& ps : t.prefix) apply_positions(c, ps);
      if (c.total() == 0) {
        next.push_back(std::move(t));
        continue;
      }
      for_each_successor(c, single_swaps, [&](const std::vector<int>& ps) {
        Task child = t;
        child.prefix.push_back(ps);
        next.push_back(std::move(child));
        grew = true;
        return false;
      });
    }
    frontier = std::move(next);
    if (!grew) break;
  }
  return frontier;
}

template <typename Clock = std::chrono::steady_clock>
double seconds_since(typename Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

inline Tangle make_tangle(int n, std::vector<Move> moves) {
  return Tangle{Layer::identity(n), std::move(moves)};
}

}  // namespace detail

/// Decides whether any tangle realizes the list. Feasible results carry the
/// lexicographically smallest witness under the configured successor rule;
/// the witness and verdict do not depend on the thread count.
inline FeasibilityResult decide_feasible(const SwapList& list, const SearchOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  detail::Cursor root(list);
  detail::StateMemo memo;
  detail::NodeBudget budget(opts.max_nodes);
  FeasibilityResult result;

  auto exhausted = [&] {
    return Error(Errc::BudgetExhausted, "node budget of " + std::to_string(opts.max_nodes.value_or(0)) + " exhausted");
  };
  auto finish = [&](Status status, std::optional<Tangle> witness) {
    result.status = status;
    result.witness = std::move(witness);
    result.stats.nodes_expanded = budget.used();
    result.stats.states_memoized = memo.size();
    result.stats.wall_seconds = detail::seconds_since(start);
    return result;
  };

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    std::vector<Move> path;
    detail::Cursor c = root;
    auto o = detail::FeasibilityWorker(opts, memo, budget).run(c, path);
    if (o == detail::Outcome::Solved) return finish(Status::Feasible, detail::make_tangle(list.wires(), path));
    if (o == detail::Outcome::Aborted) throw exhausted();
    return finish(Status::Infeasible, std::nullopt);
  }

  if (!detail::passes_prunes(root, opts)) return finish(Status::Infeasible, std::nullopt);
  std::vector<detail::Task> tasks = detail::split_frontier(root, opts.single_swap_moves, 4 * threads);
  std::vector<detail::Outcome> outcomes(tasks.size(), detail::Outcome::Aborted);
  std::vector<std::vector<Move>> paths(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{SIZE_MAX};

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      if (best.load() < i || budget.exhausted()) continue;
      detail::Cursor c = root;
      std::vector<Move>& path = paths[i];
      for (const auto& ps : tasks[i].prefix) {
        detail::apply_positions(c, ps);
        path.push_back(detail::to_move(ps));
      }
      outcomes[i] = detail::FeasibilityWorker(opts, memo, budget, &best, i).run(c, path);
      if (outcomes[i] == detail::Outcome::Solved) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(threads, tasks.size()); ++t) pool.emplace_back(worker);
    worker();
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (outcomes[i] == detail::Outcome::Dead) continue;
    if (outcomes[i] == detail::Outcome::Solved)
      return finish(Status::Feasible, detail::make_tangle(list.wires(), std::move(paths[i])));
    // An earlier task was cut short, so the lexicographic winner is unknown.
    throw exhausted();
  }
  return finish(Status::Infeasible, std::nullopt);
}

/// Minimum-height realization by iterative deepening on the number of moves,
/// starting from the per-wire and per-layer-width lower bound. Among
/// minimum-height witnesses the lexicographically smallest move sequence is
/// returned.
inline FeasibilityResult minimize_height(const SwapList& list, const SearchOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  SearchOptions decide_opts = opts;
  FeasibilityResult any = decide_feasible(list, decide_opts);
  if (!any.feasible()) return any;

  detail::Cursor root(list);
  detail::StateMemo memo;  // value = largest move budget known to fail
  detail::NodeBudget budget(opts.max_nodes);
  std::vector<Move> path;
  bool aborted = false;

  auto dfs = [&](auto&& self, int moves_left) -> bool {
    if (root.total() == 0) return true;
    if (moves_left <= 0 || detail::move_lower_bound(root) > moves_left) return false;
    if (!budget.spend()) {
      aborted = true;
      return false;
    }
    std::string key;
    root.key(key);
    if (memo.find(key) >= moves_left) return false;
    if (!detail::passes_prunes(root, opts)) {
      memo.raise(key, INT_MAX);
      return false;
    }
    bool solved = false;
    detail::for_each_successor(root, false, [&](const std::vector<int>& ps) {
      detail::apply_positions(root, ps);
      path.push_back(detail::to_move(ps));
      if (self(self, moves_left - 1)) {
        solved = true;
        return true;
      }
      path.pop_back();
      detail::undo_positions(root, ps);
      return aborted;
    });
    if (!solved && !aborted) memo.raise(key, moves_left);
    return solved;
  };

  const long long upper = static_cast<long long>(any.witness->moves.size());
  for (long long limit = detail::move_lower_bound(root); limit <= upper; ++limit) {
    if (dfs(dfs, static_cast<int>(limit))) {
      FeasibilityResult r;
      r.status = Status::Feasible;
      r.witness = detail::make_tangle(list.wires(), std::move(path));
      r.stats.nodes_expanded = budget.used() + any.stats.nodes_expanded;
      r.stats.states_memoized = memo.size();
      r.stats.wall_seconds = detail::seconds_since(start);
      return r;
    }
    if (aborted) throw Error(Errc::BudgetExhausted, "node budget exhausted while minimizing height");
  }
  // The single-swap witness already meets `upper` moves.
  throw std::logic_error("minimize_height: no witness within the feasible upper bound");
}

/// Visits every distinct realizing tangle once, in lexicographic order of the
/// move sequence. Returns the number visited. Throws LimitReached when more
/// than `limit` realizations exist.
inline std::uint64_t enumerate_realizations(const SwapList& list, const std::function<void(const Tangle&)>& visit,
                                            std::optional<std::uint64_t> limit = std::nullopt,
                                            const SearchOptions& opts = {}) {
  detail::Cursor c(list);
  detail::StateMemo dead;
  Tangle current{Layer::identity(list.wires()), {}};
  std::uint64_t visited = 0;

  auto dfs = [&](auto&& self) -> std::uint64_t {
    if (c.total() == 0) {
      if (limit && visited >= *limit)
        throw Error(Errc::LimitReached, "more than " + std::to_string(*limit) + " realizations");
      ++visited;
      visit(current);
      return 1;
    }
    std::string key;
    c.key(key);
    if (dead.find(key) >= 0) return 0;
    if (!detail::passes_prunes(c, opts)) {
      dead.raise(key, 0);
      return 0;
    }
    std::uint64_t found = 0;
    detail::for_each_successor(c, false, [&](const std::vector<int>& ps) {
      detail::apply_positions(c, ps);
      current.moves.push_back(detail::to_move(ps));
      found += self(self);
      current.moves.pop_back();
      detail::undo_positions(c, ps);
      return false;
    });
    if (found == 0) dead.raise(key, 0);
    return found;
  };
  dfs(dfs);
  return visited;
}

/// Per wire, the partners it swaps with in tangle order.
using SwapOrderSignature = std::vector<std::vector<WireId>>;

inline SwapOrderSignature swap_order_signature(const Tangle& t) {
  SwapOrderSignature sig(static_cast<std::size_t>(t.wires()) + 1);
  Layer cur = t.start;
  for (const Move& m : t.moves) {
    for (int p : m.positions) {
      WireId a = cur.order[static_cast<std::size_t>(p - 1)];
      WireId b = cur.order[static_cast<std::size_t>(p)];
      sig[static_cast<std::size_t>(a)].push_back(b);
      sig[static_cast<std::size_t>(b)].push_back(a);
    }
    cur = apply_move(cur, m);
  }
  sig.erase(sig.begin());  // index 0 unused; entry w-1 belongs to wire w
  return sig;
}

struct UniqueOrderResult {
  bool unique = false;
  std::size_t distinct_signatures = 0;
  std::uint64_t realizations = 0;
  std::vector<SwapOrderSignature> signatures;  // sorted
};

/// Whether all realizations share the same order of swaps along every wire.
inline UniqueOrderResult check_unique_swap_order(const SwapList& list,
                                                 std::optional<std::uint64_t> limit = std::nullopt) {
  std::set<SwapOrderSignature> seen;
  UniqueOrderResult r;
  r.realizations =
      enumerate_realizations(list, [&](const Tangle& t) { seen.insert(swap_order_signature(t)); }, limit);
  if (r.realizations == 0) throw Error(Errc::InfeasibleList, "no tangle realizes the list");
  r.distinct_signatures = seen.size();
  r.unique = seen.size() == 1;
  r.signatures.assign(seen.begin(), seen.end());
  return r;
}

/// Plain depth-first search over single swaps with no memo and no pruning.
/// Exponential; kept as an independent cross-check for small lists.
inline std::optional<Tangle> brute_force_feasible(const SwapList& list,
                                                  std::optional<std::uint64_t> max_nodes = std::nullopt) {
  const int n = list.wires();
  Layer layer = Layer::identity(n);
  SwapList left = list;
  std::vector<Move> path;
  std::uint64_t nodes = 0;
  long long remaining = list.total();

  auto dfs = [&](auto&& self) -> bool {
    if (remaining == 0) return true;
    if (max_nodes && ++nodes > *max_nodes) throw Error(Errc::BudgetExhausted, "brute force budget exhausted");
    for (int p = 1; p < n; ++p) {
      WireId a = layer.order[static_cast<std::size_t>(p - 1)];
      WireId b = layer.order[static_cast<std::size_t>(p)];
      if (left.count(a, b) == 0) continue;
      left.set(a, b, left.count(a, b) - 1);
      std::swap(layer.order[static_cast<std::size_t>(p - 1)], layer.order[static_cast<std::size_t>(p)]);
      --remaining;
      path.push_back(Move{p});
      if (self(self)) return true;
      path.pop_back();
      ++remaining;
      std::swap(layer.order[static_cast<std::size_t>(p - 1)], layer.order[static_cast<std::size_t>(p)]);
      left.set(a, b, left.count(a, b) + 1);
    }
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return Tangle{Layer::identity(n), std::move(path)};
}

}  // namespace tangle::search
