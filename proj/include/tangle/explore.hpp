#pragma once

// Exhaustive runs over non-separable even lists, reporting any list the
// solver proves infeasible. Reports state findings; they never assert that
// every such list is feasible.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tangle/core.hpp"
#include "tangle/io.hpp"
#include "tangle/search.hpp"

namespace tangle::explore {

/// Visits every list on n wires whose counts are even, at most max_mult, and
/// non-separable. Order: odometer over pairs (1,2), (1,3), ..., (n-1,n) with
/// the last pair varying fastest.
inline std::uint64_t enumerate_nonseparable_even(int n, int max_mult,
                                                 const std::function<void(const SwapList&)>& visit) {
  if (n < 2) throw Error(Errc::InvalidArgument, "need at least 2 wires");
  if (max_mult < 0 || max_mult % 2 != 0) throw Error(Errc::InvalidArgument, "max multiplicity must be even and >= 0");
  SwapList list(n);
  std::vector<std::pair<WireId, WireId>> pairs;
  for (WireId i = 1; i <= n; ++i)
    for (WireId j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::uint64_t visited = 0;
  for (;;) {
    if (is_nonseparable(list)) {
      ++visited;
      visit(list);
    }
    std::size_t k = pairs.size();
    while (k > 0) {
      auto [i, j] = pairs[k - 1];
      if (list.count(i, j) + 2 <= max_mult) {
        list.set(i, j, list.count(i, j) + 2);
        break;
      }
      list.set(i, j, 0);
      --k;
    }
    if (k == 0) break;
  }
  return visited;
}

struct ConjectureReport {
  int wires = 0;
  int max_mult = 0;
  std::uint64_t tested = 0;
  std::uint64_t feasible = 0;
  std::vector<SwapList> counterexamples;  // proven infeasible, double-checked
  std::vector<SwapList> unknowns;         // budget exhausted
  double wall_seconds = 0.0;

  /// Line-oriented summary. Everything except the `wall_seconds` line is a
  /// deterministic function of (wires, max_mult, budget).
  std::string to_text() const {
    std::ostringstream ss;
    ss << "wires " << wires << '\n'
       << "max_mult " << max_mult << '\n'
       << "tested " << tested << '\n'
       << "feasible " << feasible << '\n'
       << "counterexamples " << counterexamples.size() << '\n'
       << "unknowns " << unknowns.size() << '\n';
    auto dump = [&](const char* tag, const std::vector<SwapList>& lists) {
      for (const SwapList& l : lists) {
        ss << tag;
        for (const PairCount& e : l.entries()) ss << ' ' << e.i << '-' << e.j << ':' << e.count;
        ss << '\n';
      }
    };
    dump("counterexample", counterexamples);
    dump("unknown", unknowns);
    ss << "wall_seconds " << wall_seconds << '\n';
    return ss.str();
  }
};

/// Independent confirmation that a list is infeasible: the solver with every
/// prune disabled and the plain brute force must agree.
inline bool confirm_infeasible(const SwapList& list, std::optional<std::uint64_t> budget) {
  search::SearchOptions bare;
  bare.max_nodes = budget;
  bare.parity_prune = false;
  bare.blocker_prune = false;
  if (search::decide_feasible(list, bare).feasible()) return false;
  return !search::brute_force_feasible(list, budget).has_value();
}

inline ConjectureReport test_conjecture(int n, int max_mult, std::optional<std::uint64_t> budget = std::nullopt,
                                        unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SwapList> lists;
  enumerate_nonseparable_even(n, max_mult, [&](const SwapList& l) { lists.push_back(l); });

  enum class Verdict { Feasible, Infeasible, Unknown };
  std::vector<Verdict> verdicts(lists.size(), Verdict::Unknown);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    search::SearchOptions opts;
    opts.max_nodes = budget;
    for (std::size_t i = next.fetch_add(1); i < lists.size(); i = next.fetch_add(1)) {
      try {
        verdicts[i] = search::decide_feasible(lists[i], opts).feasible() ? Verdict::Feasible : Verdict::Infeasible;
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExhausted) throw;
        verdicts[i] = Verdict::Unknown;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    worker();
  }

  ConjectureReport r;
  r.wires = n;
  r.max_mult = max_mult;
  r.tested = lists.size();
  for (std::size_t i = 0; i < lists.size(); ++i) {
    switch (verdicts[i]) {
      case Verdict::Feasible: ++r.feasible; break;
      case Verdict::Unknown: r.unknowns.push_back(lists[i]); break;
      case Verdict::Infeasible: {
        bool confirmed = false;
        try {
          confirmed = confirm_infeasible(lists[i], budget);
        } catch (const Error& e) {
          if (e.code() != Errc::BudgetExhausted) throw;
          r.unknowns.push_back(lists[i]);
          break;
        }
        if (!confirmed)
          throw std::logic_error("solver and brute force disagree on " + io::list_to_string(lists[i]));
        r.counterexamples.push_back(lists[i]);
        break;
      }
    }
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace tangle::explore
