// Acceptance gate. One PASS/FAIL line per criterion; exit status is the number
// of failures. Limits and sample sizes are pinned below.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tangle/cli.hpp"
#include "tangle/tangle.hpp"

using namespace tangle;
using testing_support::make_list;

namespace {

constexpr double kQuickCheckSeconds = 1.0;
constexpr double kFiveWireUniqueSeconds = 300.0;
constexpr int kOracleMaxWires = 4;
constexpr int kOracleMaxTotal = 6;
constexpr unsigned kParallelThreads = 4;
constexpr int kRandomTangles = 1000;
constexpr int kRandomFormulas = 200;
constexpr int kRandomReductions = 100;
constexpr int kSixWirePermutations = 500;
constexpr std::uint64_t kSeed = 20261016;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<Tangle> witnesses;  // from criteria 1-3, rendered in criterion 10

const SwapList kL = make_list(3, {{1, 2, 1}, {1, 3, 1}});
const SwapList kLPrime = make_list(3, {{1, 2, 2}, {1, 3, 1}});

// 1. Three-wire lists: feasible with a verified witness, and infeasible.
Outcome three_wire_verdicts() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& [list, want] : {std::pair{kL, true}, std::pair{kLPrime, false}}) {
    auto start = Clock::now();
    search::FeasibilityResult r = search::decide_feasible(list);
    std::istringstream in(io::list_to_string(list));
    std::ostringstream out, err;
    int code = cli::run({"check", "-"}, in, out, err);
    double t = seconds_since(start);
    detail << (want ? "L " : "L' ") << t << "s ";
    if (r.feasible() != want) o.fail("wrong verdict");
    if (code != (want ? 0 : 1) || out.str().rfind(want ? "FEASIBLE\n" : "INFEASIBLE\n", 0) != 0)
      o.fail("cli verdict: " + out.str());
    if (want && !(r.witness && verify_realizes(*r.witness, list).ok)) o.fail("witness does not verify");
    if (t >= kQuickCheckSeconds) o.fail("too slow");
    if (r.witness) witnesses.push_back(*r.witness);
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

// 2. The rigid family has a unique swap order along every wire.
Outcome rigid_family_unique_order() {
  Outcome o;
  std::ostringstream detail;
  for (int n : {3, 4, 5}) {
    auto start = Clock::now();
    search::UniqueOrderResult first = search::check_unique_swap_order(gen_ln(n));
    double t = seconds_since(start);
    search::UniqueOrderResult second = search::check_unique_swap_order(gen_ln(n));
    detail << "n=" << n << " realizations " << first.realizations << " signatures " << first.distinct_signatures
           << " (" << t << "s) ";
    if (!first.unique) o.fail("n=" + std::to_string(n) + " not unique");
    if (first.realizations != second.realizations || first.signatures != second.signatures)
      o.fail("n=" + std::to_string(n) + " counts differ between runs");
    if (n == 5 && t >= kFiveWireUniqueSeconds) o.fail("n=5 too slow");
    witnesses.push_back(*search::decide_feasible(gen_ln(n)).witness);
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

// 3. Parallel pruned solver against the naive oracle on a full grid.
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t lists = 0, feasible = 0, disagreements = 0;
  search::SearchOptions opts;
  opts.threads = kParallelThreads;
  for (int n = 1; n <= kOracleMaxWires; ++n)
    testing_support::for_each_list(n, kOracleMaxTotal, [&](const SwapList& l) {
      ++lists;
      bool expected = testing_support::naive_feasible(l);
      search::FeasibilityResult r = search::decide_feasible(l, opts);
      if (r.feasible() != expected) {
        if (disagreements++ == 0) o.fail("disagreement on " + io::list_to_string(l));
        return;
      }
      if (r.feasible()) {
        ++feasible;
        if (!verify_realizes(*r.witness, l).ok) o.fail("bad witness for " + io::list_to_string(l));
        witnesses.push_back(*r.witness);
      }
    });
  if (o.pass)
    o.detail = std::to_string(lists) + " lists, " + std::to_string(feasible) + " feasible, 0 disagreements";
  return o;
}

// 4. Parities of a realized list force the final layer.
Outcome parity_final_order() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (int k = 0; k < kRandomTangles; ++k) {
    int n = 2 + static_cast<int>(rng() % 9);
    Tangle t = testing_support::random_tangle(rng, n, static_cast<int>(rng() % 25));
    auto layer = try_final_order(testing_support::count_swaps(t));
    if (!layer || *layer != t.final_layer()) o.fail("mismatch on trial " + std::to_string(k));
  }
  try {
    required_final_order(kLPrime);
    o.fail("L' accepted");
  } catch (const Error& e) {
    if (e.code() != Errc::CyclicOrder) o.fail("L' gave the wrong error");
  }
  if (o.pass) o.detail = std::to_string(kRandomTangles) + " random tangles; L' cyclic";
  return o;
}

bool nae_by_hand(const reduction::NaeFormula& f, std::uint64_t mask) {
  for (const auto& c : f.clauses) {
    int trues = 0;
    for (const auto& l : c) trues += l.negated != static_cast<bool>((mask >> (l.var - 1)) & 1u);
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

bool check_lifting(const reduction::NaeFormula& f, Outcome& o) {
  bool expected = false;
  for (std::uint64_t m = 0; m < (1ull << f.variables) && !expected; ++m) expected = nae_by_hand(f, m);
  reduction::PositiveDiffResult r = reduction::to_positive_diff(f);
  for (const auto& c : r.formula.clauses) {
    bool distinct = c[0] != c[1] && c[0] != c[2] && c[1] != c[2];
    bool in_range = true;
    for (int v : c) in_range = in_range && v >= 1 && v <= r.formula.variables;
    if (!distinct || !in_range) {
      o.fail("bad output clause");
      return false;
    }
  }
  bool before = reduction::brute_force_nae(f).has_value();
  bool after = reduction::brute_force_nae(r.formula).has_value();
  if (before != expected || after != expected) {
    std::ostringstream s;
    reduction::write_formula(s, f);
    o.fail("satisfiability changed for " + s.str());
    return false;
  }
  return true;
}

// 5. Removing negations and repeats keeps NAE satisfiability.
Outcome lifting_preserves_satisfiability() {
  Outcome o;
  std::size_t formulas = 0;
  for (int vars = 1; vars <= 3; ++vars) {
    std::vector<reduction::Literal> lits;
    for (int v = 1; v <= vars; ++v) lits.push_back({v, false}), lits.push_back({v, true});
    std::vector<reduction::NaeClause> clauses;  // literal multisets
    for (std::size_t a = 0; a < lits.size(); ++a)
      for (std::size_t b = a; b < lits.size(); ++b)
        for (std::size_t c = b; c < lits.size(); ++c) clauses.push_back({lits[a], lits[b], lits[c]});
    std::function<void(reduction::NaeFormula&, std::size_t)> rec = [&](reduction::NaeFormula& f, std::size_t from) {
      ++formulas;
      if (!check_lifting(f, o)) return;
      if (f.clauses.size() == 3) return;
      for (std::size_t k = from; k < clauses.size() && o.pass; ++k) {
        f.clauses.push_back(clauses[k]);
        rec(f, k);
        f.clauses.pop_back();
      }
    };
    reduction::NaeFormula f{vars, {}};
    rec(f, 0);
    if (!o.pass) return o;
  }
  std::mt19937_64 rng(kSeed + 5);
  for (int k = 0; k < kRandomFormulas && o.pass; ++k) {
    reduction::NaeFormula f{1 + static_cast<int>(rng() % 5), {}};
    int m = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < m; ++j) {
      reduction::NaeClause c;
      for (auto& l : c) l = {1 + static_cast<int>(rng() % static_cast<std::uint64_t>(f.variables)), rng() % 2 == 0};
      f.clauses.push_back(c);
    }
    ++formulas;
    check_lifting(f, o);
  }
  if (o.pass) o.detail = std::to_string(formulas) + " formulas, 0 failures";
  return o;
}

// 6. Gadget list shape, plus the golden instance.
Outcome reduction_structure() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 6);
  for (int k = 0; k < kRandomReductions; ++k) {
    int n = 3 + static_cast<int>(rng() % 4);
    int m = static_cast<int>(rng() % 7);
    reduction::PositiveDiffFormula f{n, {}};
    for (int j = 0; j < m; ++j) {
      std::vector<int> vs(static_cast<std::size_t>(n));
      std::iota(vs.begin(), vs.end(), 1);
      std::shuffle(vs.begin(), vs.end(), rng);
      f.clauses.push_back({vs[0], vs[1], vs[2]});
    }
    reduction::ReductionInstance inst = reduction::build_list(f);
    const SwapList& l = inst.list;
    if (l.wires() != 9 + 13 * (n + m)) o.fail("wire count");
    if (l.max_count() != 8) o.fail("max multiplicity " + std::to_string(l.max_count()));
    if (l.count(inst.wire_of(reduction::roles::lambda()), inst.wire_of(reduction::roles::lambda_prime())) != 8)
      o.fail("lambda pair");
    for (int i = 1; i <= l.wires(); ++i)
      for (int j = i + 1; j <= l.wires(); ++j)
        if (l.count(i, j) != l.count(j, i)) o.fail("asymmetric");
  }
  std::ifstream golden(TANGLE_TEST_DATA_DIR "/golden/reduction_n3_m1.list", std::ios::binary);
  std::stringstream expected;
  expected << golden.rdbuf();
  std::ostringstream actual;
  reduction::write_instance(actual, reduction::build_list(reduction::PositiveDiffFormula{3, {{1, 2, 3}}}));
  if (!golden || actual.str() != expected.str()) o.fail("golden instance differs");
  if (o.pass) o.detail = std::to_string(kRandomReductions) + " random instances; golden file matches";
  return o;
}

bool embeds(const reduction::PositiveDiffFormula& f, const reduction::Assignment& a, Outcome& o) {
  try {
    reduction::LoopPlan p = reduction::embed_assignment(f, a);
    reduction::check_loop_plan(f, a, p);
    return true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotNAE) o.fail(std::string("unexpected error ") + e.what());
    return false;
  }
}

// 7. Embedding succeeds exactly on NAE assignments.
Outcome embedding() {
  Outcome o;
  reduction::PositiveDiffFormula single{3, {{1, 2, 3}}};
  for (int mask = 0; mask < 8; ++mask) {
    reduction::Assignment a{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    bool nae = mask != 0 && mask != 7;
    if (embeds(single, a, o) != nae) o.fail("single clause, mask " + std::to_string(mask));
  }
  reduction::PositiveDiffFormula example{5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {2, 3, 5}}};
  if (!embeds(example, {true, false, false, true, true}, o)) o.fail("stated assignment rejected");
  for (int mask = 0; mask < 32; ++mask) {
    reduction::Assignment a;
    for (int v = 0; v < 5; ++v) a.push_back((mask >> v) & 1);
    if (embeds(example, a, o) != reduction::nae_satisfies(example, a)) o.fail("example formula, mask " + std::to_string(mask));
  }
  if (o.pass) o.detail = "8 single-clause assignments; example formula with its stated assignment and all 32 others";
  return o;
}

bool odd_even_ok(const SwapList& l, Outcome& o, int* height) {
  Tangle t = simple::odd_even_realize(Layer::identity(l.wires()), simple::target_permutation(l).target);
  SwapList realized = testing_support::count_swaps(t);
  if (realized.max_count() > 1) o.fail("pair swapped twice");
  if (!verify_realizes(t, l).ok) o.fail("odd-even tangle does not verify");
  *height = t.height();
  return o.pass;
}

// 8. Odd-even transposition stays within one layer of optimal.
Outcome odd_even_bound() {
  Outcome o;
  std::size_t checked = 0, tight = 0;
  for (int n = 1; n <= 5 && o.pass; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs) && o.pass; ++mask) {
      SwapList l(n);
      int bit = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) l.set(i, j, (mask >> bit++) & 1);
      bool feasible = search::decide_feasible(l).feasible();
      if (feasible != try_final_order(l).has_value()) o.fail("simple list feasibility mismatch");
      if (!feasible) continue;
      ++checked;
      int h = 0;
      if (!odd_even_ok(l, o, &h)) break;
      int best = search::minimize_height(l).witness->height();
      if (h > best + 1) o.fail("height " + std::to_string(h) + " vs optimum " + std::to_string(best));
      tight += h == best;
    }
  }
  std::mt19937_64 rng(kSeed + 8);
  for (int k = 0; k < kSixWirePermutations && o.pass; ++k) {
    std::vector<int> target(6);
    std::iota(target.begin(), target.end(), 1);
    std::shuffle(target.begin(), target.end(), rng);
    int h = 0;
    odd_even_ok(testing_support::inversion_list(target), o, &h);
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " feasible simple lists (" + std::to_string(tight) + " at optimum), " +
               std::to_string(kSixWirePermutations) + " six-wire permutations";
  return o;
}

// 9. Exhaustive conjecture run over small non-separable even lists.
Outcome conjecture_run() {
  Outcome o;
  explore::ConjectureReport a = explore::test_conjecture(3, 4, cli::kDefaultMaxNodes, 1);
  explore::ConjectureReport b = explore::test_conjecture(3, 4, cli::kDefaultMaxNodes, kParallelThreads);
  auto strip = [](const std::string& s) { return s.substr(0, s.find("wall_seconds")); };
  if (!a.unknowns.empty()) o.fail(std::to_string(a.unknowns.size()) + " unknowns");
  if (strip(a.to_text()) != strip(b.to_text())) o.fail("report not deterministic");
  for (const SwapList& c : a.counterexamples)
    if (testing_support::naive_feasible(c)) o.fail("counterexample is feasible: " + io::list_to_string(c));
  if (o.pass)
    o.detail = std::to_string(a.tested) + " lists, " + std::to_string(a.feasible) + " feasible, " +
               std::to_string(a.counterexamples.size()) + " counterexamples";
  return o;
}

// 10. ASCII drawings round-trip; SVG is well-formed.
Outcome rendering() {
  Outcome o;
  for (const Tangle& t : witnesses)
    if (render::parse_ascii(render::render_ascii(t)) != t.layers()) o.fail("ascii round trip failed");
  Tangle l7 = *search::decide_feasible(gen_ln(7)).witness;
  render::RenderOptions opts;
  opts.format = render::Format::Svg;
  try {
    std::istringstream in(render::render_tangle(l7, opts));
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    std::size_t paths = 0;
    for (const auto& child : tree.get_child("svg")) paths += child.first == "path";
    if (paths != 7) o.fail("svg has " + std::to_string(paths) + " paths");
  } catch (const std::exception& e) {
    o.fail(std::string("svg not well-formed: ") + e.what());
  }
  if (o.pass) o.detail = std::to_string(witnesses.size()) + " witnesses round-trip; 7-wire SVG parses";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"three-wire feasibility verdicts", three_wire_verdicts},
      {"unique swap order of the rigid family", rigid_family_unique_order},
      {"solver matches naive oracle", oracle_equivalence},
      {"parity forces the final order", parity_final_order},
      {"negation removal keeps NAE satisfiability", lifting_preserves_satisfiability},
      {"gadget list structure", reduction_structure},
      {"assignment embedding", embedding},
      {"odd-even transposition height bound", odd_even_bound},
      {"non-separable even list exploration", conjecture_run},
      {"rendering", rendering},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures;
}
