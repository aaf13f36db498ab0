#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "support.hpp"
#include "tangle/core.hpp"
#include "tangle/io.hpp"

using namespace tangle;
using testing_support::make_list;

namespace {

Tangle three_wire_witness() { return Tangle{Layer::identity(3), {Move{1}, Move{2}}}; }

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no tangle::Error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(ValidateList, AcceptsSmallList) {
  std::vector<RawEntry> raw{{1, 2, 1}, {1, 3, 1}};
  SwapList l = validate_list(3, raw);
  EXPECT_EQ(l, make_list(3, {{1, 2, 1}, {1, 3, 1}}));
}

TEST(ValidateList, RejectsBadEntries) {
  std::vector<RawEntry> self{{2, 2, 1}}, neg{{1, 2, -1}}, out{{1, 4, 1}}, dup{{1, 2, 1}, {2, 1, 3}};
  EXPECT_EQ(code_of([&] { validate_list(3, self); }), Errc::SelfPair);
  EXPECT_EQ(code_of([&] { validate_list(2, neg); }), Errc::NegativeCount);
  EXPECT_EQ(code_of([&] { validate_list(3, out); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([&] { validate_list(3, dup); }), Errc::DuplicatePair);
}

TEST(SwapList, SymmetricAccess) {
  SwapList l(4);
  l.set(3, 1, 5);
  EXPECT_EQ(l.count(1, 3), 5);
  EXPECT_EQ(l.count(3, 1), 5);
  EXPECT_EQ(l.count(2, 2), 0);
  EXPECT_EQ(l.wire_total(1), 5);
  EXPECT_EQ(l.total(), 5);
}

TEST(ApplyMove, Basics) {
  EXPECT_EQ(apply_move(Layer::identity(3), Move{1}).order, (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(apply_move(Layer::identity(4), Move{1, 3}).order, (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(code_of([] { Move{1, 2}; }), Errc::OverlappingPositions);
  EXPECT_EQ(code_of([] { apply_move(Layer::identity(3), Move{3}); }), Errc::PositionOutOfRange);
  EXPECT_EQ(code_of([] { Move(std::vector<int>{}); }), Errc::EmptyMove);
}

TEST(ApplyMove, IsAnInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Tangle t = testing_support::random_tangle(rng, n, 1);
    Layer l = Layer::identity(n);
    std::shuffle(l.order.begin(), l.order.end(), rng);
    EXPECT_EQ(apply_move(apply_move(l, t.moves[0]), t.moves[0]), l);
  }
}

TEST(RealizedMultiset, Examples) {
  EXPECT_EQ(realized_multiset(three_wire_witness()), make_list(3, {{1, 2, 1}, {1, 3, 1}}));
  EXPECT_EQ(realized_multiset(Tangle{Layer::identity(3), {}}), SwapList(3));
  EXPECT_EQ(realized_multiset(Tangle{Layer::identity(2), {Move{1}, Move{1}}}), make_list(2, {{1, 2, 2}}));
}

TEST(RealizedMultiset, MatchesIndependentCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Tangle t = testing_support::random_tangle(rng, n, static_cast<int>(rng() % 12));
    EXPECT_EQ(realized_multiset(t), testing_support::count_swaps(t));
  }
}

TEST(VerifyRealizes, Examples) {
  SwapList l = make_list(3, {{1, 2, 1}, {1, 3, 1}});
  EXPECT_TRUE(verify_realizes(three_wire_witness(), l).ok);

  Verdict flat = verify_realizes(Tangle{Layer::identity(3), {}}, l);
  ASSERT_FALSE(flat.ok);
  EXPECT_EQ(flat.violation->i, 1);
  EXPECT_EQ(flat.violation->j, 2);
  EXPECT_EQ(flat.violation->expected, 1);
  EXPECT_EQ(flat.violation->actual, 0);

  Verdict bad = verify_realizes(three_wire_witness(), make_list(3, {{1, 2, 2}, {1, 3, 1}}));
  ASSERT_FALSE(bad.ok);
  EXPECT_EQ(bad.violation->i, 1);
  EXPECT_EQ(bad.violation->j, 2);

  EXPECT_EQ(code_of([&] { verify_realizes(three_wire_witness(), SwapList(4)); }), Errc::WireCountMismatch);
}

TEST(RequiredFinalOrder, Examples) {
  EXPECT_EQ(required_final_order(make_list(3, {{1, 2, 1}, {1, 3, 1}})).order, (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(code_of([] { required_final_order(make_list(3, {{1, 2, 2}, {1, 3, 1}})); }), Errc::CyclicOrder);
  EXPECT_EQ(required_final_order(SwapList(4)).order, (std::vector<int>{1, 2, 3, 4}));
}

// Every realizable list has a transitive parity tournament whose order is the
// final layer of any realization.
TEST(RequiredFinalOrder, MatchesRandomTangles) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Tangle t = testing_support::random_tangle(rng, n, static_cast<int>(rng() % 20));
    EXPECT_EQ(required_final_order(testing_support::count_swaps(t)), t.final_layer());
  }
}

TEST(ClassifyList, Examples) {
  EXPECT_EQ(classify_list(make_list(3, {{1, 2, 1}, {1, 3, 1}})), (ListClass{true, true, false, true}));
  EXPECT_FALSE(classify_list(make_list(3, {{1, 3, 2}})).nonseparable);
  EXPECT_EQ(classify_list(make_list(3, {{1, 2, 2}, {2, 3, 4}})), (ListClass{false, false, true, true}));
  EXPECT_EQ(classify_list(SwapList(3)), (ListClass{true, true, true, true}));
}

TEST(ClassifyList, CountFlagsIgnoreWireNames) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    SwapList l(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) l.set(i, j, static_cast<int>(rng() % 4));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    SwapList r(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) r.set(perm[i - 1], perm[j - 1], l.count(i, j));
    ListClass a = classify_list(l), b = classify_list(r);
    EXPECT_EQ(a.simple, b.simple);
    EXPECT_EQ(a.odd, b.odd);
    EXPECT_EQ(a.even, b.even);
  }
}

TEST(GenLn, SevenWireMatrix) {
  // Rows of the printed 7-wire matrix (upper triangle).
  const int m[7][7] = {
      {0, 1, 1, 1, 1, 0, 2}, {1, 0, 1, 1, 1, 2, 0}, {1, 1, 0, 1, 1, 0, 2}, {1, 1, 1, 0, 1, 2, 0},
      {1, 1, 1, 1, 0, 0, 2}, {0, 2, 0, 2, 0, 0, 6}, {2, 0, 2, 0, 2, 6, 0},
  };
  SwapList l = gen_ln(7);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) EXPECT_EQ(l.count(i, j), m[i - 1][j - 1]) << i << "," << j;
}

TEST(GenLn, SmallCases) {
  EXPECT_EQ(gen_ln(3), make_list(3, {{1, 3, 2}, {2, 3, 2}}));
  // Even n: wire n-2 still meets n and the pattern alternates away from it.
  EXPECT_EQ(gen_ln(4), make_list(4, {{1, 2, 1}, {1, 3, 2}, {2, 4, 2}, {3, 4, 3}}));
  EXPECT_EQ(code_of([] { gen_ln(2); }), Errc::TooFewWires);
}

TEST(GenLn, Totals) {
  for (int n = 3; n <= 12; ++n) {
    SwapList l = gen_ln(n);
    long long k = n - 2;
    EXPECT_EQ(l.total(), k * (k - 1) / 2 + (n - 1) + 2 * k) << n;
    EXPECT_EQ(l.count(n - 1, n), n - 1);
    for (int i = 1; i <= n - 2; ++i) EXPECT_EQ(l.count(i, n - 1) + l.count(i, n), 2);
    EXPECT_TRUE(try_final_order(l).has_value());
  }
}

TEST(ListIo, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    SwapList l(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng() % 3 == 0) l.set(i, j, static_cast<int>(rng() % 9));
    EXPECT_EQ(io::list_from_string(io::list_to_string(l)), l);
  }
}

TEST(ListIo, ParsesCommentsAndRejectsJunk) {
  EXPECT_EQ(io::list_from_string("# three wires\nwires 3\n\n1 2 1  # first\n3 1 1\n"),
            make_list(3, {{1, 2, 1}, {1, 3, 1}}));
  EXPECT_EQ(code_of([] { io::list_from_string("1 2 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::list_from_string("wires 3\n1 2\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::list_from_string("wires 3\n1 2 x\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::list_from_string("wires 3\n1 1 1\n"); }), Errc::SelfPair);
  EXPECT_EQ(code_of([] { io::list_from_string("wires 3\n1 2 1\n2 1 1\n"); }), Errc::DuplicatePair);
}

TEST(TangleIo, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 10);
    Tangle t = testing_support::random_tangle(rng, n, static_cast<int>(rng() % 10));
    EXPECT_EQ(io::tangle_from_string(io::tangle_to_string(t)), t);
  }
}

TEST(TangleIo, RejectsUnreachableLayers) {
  EXPECT_EQ(code_of([] { io::tangle_from_string("1 2 3\n3 2 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::tangle_from_string("1 2 3\n1 2 3\n"); }), Errc::ParseError);
  EXPECT_ANY_THROW(io::tangle_from_string("1 2 3\n1 2\n"));
  EXPECT_ANY_THROW(io::tangle_from_string("1 1 3\n"));
}
