#include "ses/alignment.hpp"

#include <gtest/gtest.h>

#include "ses/error.hpp"
#include "support/oracles.hpp"

namespace ses {
namespace {

using testing::brute_force_lcs;
using testing::brute_force_script_cost;
using testing::EditGraph;
using testing::small_universe;

TEST(LongestCommonSubstring, Examples) {
  EXPECT_EQ(longest_common_substring(U"cats", U"cat"), (LcsResult{0, 0, 3}));
  EXPECT_EQ(longest_common_substring(U"did", U"do"), (LcsResult{0, 0, 1}));
  EXPECT_EQ(longest_common_substring(U"xyz", U"абв"), (LcsResult{0, 0, 0}));
  EXPECT_EQ(longest_common_substring(U"", U"abc"), (LcsResult{0, 0, 0}));
}

TEST(LongestCommonSubstring, FrozenValuesAgreeWithOracle) {
  const auto hit = brute_force_lcs(U"did", U"do");
  EXPECT_EQ(hit.start_a, 0u);
  EXPECT_EQ(hit.start_b, 0u);
  EXPECT_EQ(hit.length, 1u);
}

TEST(LongestCommonSubstring, TiesPreferLeftmostInFirstThenSecond) {
  // "ab" and "ba" both length 2 in "abxba"; the first occurrence in `a` wins.
  EXPECT_EQ(longest_common_substring(U"abxba", U"baab"), (LcsResult{0, 2, 2}));
  // Same span of `a` occurring twice in `b`: leftmost in `b`.
  EXPECT_EQ(longest_common_substring(U"zq", U"qzzq"), (LcsResult{0, 2, 2}));
}

TEST(LongestCommonSubstring, MatchesBruteForceOnSmallUniverse) {
  const auto universe = small_universe(4, 4);
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      const LcsResult got = longest_common_substring(a, b);
      const auto want = brute_force_lcs(a, b);
      ASSERT_EQ(got.length, want.length);
      if (want.length > 0) {
        ASSERT_EQ(got.start_in_a, want.start_a);
        ASSERT_EQ(got.start_in_b, want.start_b);
      }
    }
  }
}

TEST(LevenshteinAlign, Examples) {
  EXPECT_EQ(levenshtein_align(U"did", U"do"),
            (Alignment{AlignOp::match(U'd'), AlignOp::replace(U'i', U'o'), AlignOp::del(U'd')}));
  EXPECT_EQ(levenshtein_align(U"", U"ab"), (Alignment{AlignOp::insert(U'a'), AlignOp::insert(U'b')}));
  EXPECT_EQ(levenshtein_align(U"cats", U"cat"),
            (Alignment{AlignOp::match(U'c'), AlignOp::match(U'a'), AlignOp::match(U't'),
                       AlignOp::del(U's')}));
  EXPECT_TRUE(levenshtein_align(U"", U"").empty());
}

TEST(LevenshteinAlign, DistanceAndReplayAgainstEditGraph) {
  const auto universe = small_universe(4, 5);
  const EditGraph graph(universe, 4, U'a');
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const auto dist = graph.distances_from(i);
    for (std::size_t j = 0; j < universe.size(); ++j) {
      const Alignment ops = levenshtein_align(universe[i], universe[j]);
      ASSERT_EQ(edit_count(ops), dist[j]);
      ASSERT_EQ(replay(ops, universe[i]), universe[j]);
    }
  }
}

TEST(LevenshteinAlign, OpInvariants) {
  for (const auto& op : levenshtein_align(U"Straße", U"strasse")) {
    switch (op.kind) {
      case AlignKind::Match:
        EXPECT_EQ(op.a_char, op.b_char);
        break;
      case AlignKind::Replace:
        ASSERT_TRUE(op.a_char && op.b_char);
        EXPECT_NE(*op.a_char, *op.b_char);
        break;
      case AlignKind::Delete:
        EXPECT_TRUE(op.a_char && !op.b_char);
        break;
      case AlignKind::Insert:
        EXPECT_TRUE(!op.a_char && op.b_char);
        break;
    }
  }
}

TEST(LevenshteinAlign, Deterministic) {
  const auto first = levenshtein_align(U"folklorearen", U"folklore");
  for (int k = 0; k < 5; ++k) EXPECT_EQ(levenshtein_align(U"folklorearen", U"folklore"), first);
}

TEST(MinScriptAlign, Examples) {
  EXPECT_EQ(min_script_align(U"id", U"o", 2, 1, 1),
            (Alignment{AlignOp::del(U'i'), AlignOp::del(U'd'), AlignOp::insert(U'o')}));
  EXPECT_EQ(min_script_align(U"a", U"a", 2, 1, 1), (Alignment{AlignOp::match(U'a')}));
  EXPECT_EQ(min_script_align(U"ab", U"b", 2, 1, 1),
            (Alignment{AlignOp::del(U'a'), AlignOp::match(U'b')}));
  EXPECT_EQ(brute_force_script_cost(U"ab", U"b", 2, 1, 1), 2u);
}

TEST(MinScriptAlign, OptimalAgainstExhaustiveEnumeration) {
  const auto universe = small_universe(3, 4);
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      const Alignment ops = min_script_align(a, b, 2, 1, 1);
      unsigned cost = 0;
      for (std::size_t k = 0; k < ops.size(); ++k) {
        ASSERT_NE(ops[k].kind, AlignKind::Replace);
        cost += ops[k].kind == AlignKind::Insert ? 2 : 1;
        if (k + 1 < ops.size()) {
          ASSERT_FALSE(ops[k].kind == AlignKind::Insert && ops[k + 1].kind == AlignKind::Delete)
              << "insert before delete";
        }
      }
      ASSERT_EQ(cost, brute_force_script_cost(a, b, 2, 1, 1));
      ASSERT_EQ(replay(ops, a), b);
    }
  }
}

TEST(Replay, RejectsForeignSource) {
  const Alignment ops = levenshtein_align(U"cats", U"cat");
  EXPECT_THROW(replay(ops, U"cat"), Error);
  EXPECT_THROW(replay(ops, U"dogs"), Error);
}

}  // namespace
}  // namespace ses
