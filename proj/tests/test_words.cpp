#include <gtest/gtest.h>

#include "insrobust/primitivity.hpp"
#include "insrobust/word.hpp"
#include "support.hpp"

namespace {

using namespace insrobust;
using insrobust::testing::for_each_word;
using insrobust::testing::for_each_word_up_to;

const Alphabet ab = Alphabet::from_chars("ab");

TEST(Alphabet, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(Alphabet::from_chars("aba"), std::invalid_argument);
  EXPECT_THROW(Alphabet::from_chars(""), std::invalid_argument);
  EXPECT_THROW(ab.word("abc"), std::invalid_argument);
  EXPECT_EQ(Alphabet::first(3).str(Alphabet::first(3).word({2, 0, 1})), "cab");
}

TEST(Alphabet, SupportsAllByteValues) {
  std::vector<std::string> symbols;
  for (int i = 0; i < 256; ++i) symbols.push_back("s" + std::to_string(i));
  const Alphabet big(symbols);
  EXPECT_EQ(big.size(), 256u);
  EXPECT_EQ(big.index_of("s255"), 255);
  symbols.push_back("extra");
  EXPECT_THROW(Alphabet{symbols}, std::invalid_argument);
}

TEST(Word, RejectsOutOfRangeSymbols) {
  EXPECT_THROW(Word({0, 2}, 2), std::invalid_argument);
  EXPECT_THROW(Word({}, 0), std::invalid_argument);
}

TEST(BorderArray, Examples) {
  EXPECT_EQ(border_array(ab.word("aab")), (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(border_array(ab.word("aaaa")), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(border_array(ab.word("abaab")), (std::vector<std::size_t>{0, 0, 1, 1, 2}));
  EXPECT_TRUE(border_array(ab.word("")).empty());
}

TEST(BorderArray, MatchesBruteForceOnAllTernaryWordsUpTo8) {
  for_each_word_up_to(8, 3, [](const Word& w) {
    ASSERT_EQ(border_array(w), insrobust::testing::brute_border_array(w));
  });
}

TEST(IsPrimitive, Examples) {
  EXPECT_FALSE(is_primitive(ab.word("abab")));
  EXPECT_TRUE(is_primitive(ab.word("a")));
  EXPECT_TRUE(is_primitive(ab.word("aabaa")));
  EXPECT_THROW(is_primitive(ab.word("")), std::invalid_argument);
}

TEST(IsPrimitive, MatchesDivisorOracleOnAllBinaryWordsUpTo14) {
  for_each_word_up_to(14, 2, [](const Word& w) {
    ASSERT_EQ(is_primitive(w), insrobust::testing::brute_is_primitive(w)) << ab.str(w);
  });
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(ab.word("abab")), (PrimitiveRoot{ab.word("ab"), 2}));
  EXPECT_EQ(primitive_root(ab.word("aaa")), (PrimitiveRoot{ab.word("a"), 3}));
  EXPECT_EQ(primitive_root(ab.word("aabaab")), (PrimitiveRoot{ab.word("aab"), 2}));
  EXPECT_EQ(primitive_root(ab.word("aabaa")), (PrimitiveRoot{ab.word("aabaa"), 1}));
  EXPECT_THROW(primitive_root(ab.word("")), std::invalid_argument);
}

TEST(PrimitiveRoot, ReconstructsEveryTernaryWordUpTo9) {
  for_each_word_up_to(9, 3, [](const Word& w) {
    const auto [root, e] = primitive_root(w);
    ASSERT_TRUE(is_primitive(root));
    ASSERT_EQ(root.power(e), w);
    ASSERT_EQ(e == 1, is_primitive(w));
    ASSERT_EQ(std::make_pair(root.size(), e), insrobust::testing::brute_root(w));
  });
}

TEST(Rotate, Examples) {
  EXPECT_EQ(rotate(ab.word("aab"), 1), ab.word("aba"));
  EXPECT_EQ(rotate(ab.word("aab"), 0), ab.word("aab"));
  EXPECT_EQ(rotate(ab.word("aab"), 3), ab.word("aab"));
  EXPECT_EQ(rotate(ab.word("abba"), 2), ab.word("baab"));
  EXPECT_THROW(rotate(ab.word("aab"), 4), std::out_of_range);
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(ab.word("aab")), ab.word("baa"));
  EXPECT_EQ(reverse(ab.word("")), ab.word(""));
  EXPECT_EQ(reverse(ab.word("abba")), ab.word("abba"));
}

TEST(Insert, Examples) {
  EXPECT_EQ(insert(ab.word("ab"), 1, 0), ab.word("aab"));
  EXPECT_EQ(insert(ab.word("aab"), 1, 1), ab.word("abab"));
  EXPECT_EQ(insert(ab.word(""), 0, 0), ab.word("a"));
  EXPECT_THROW(insert(ab.word("ab"), 3, 0), std::out_of_range);
  EXPECT_THROW(insert(ab.word("ab"), 0, 2), std::invalid_argument);
}

TEST(Primitivity, InvariantUnderReversalBinaryAndTernary) {
  for_each_word_up_to(12, 2, [](const Word& w) {
    ASSERT_EQ(is_primitive(w), is_primitive(reverse(w)));
    ASSERT_EQ(reverse(reverse(w)), w);
  });
  for_each_word_up_to(8, 3, [](const Word& w) { ASSERT_EQ(is_primitive(w), is_primitive(reverse(w))); });
}

TEST(Primitivity, InvariantUnderRotationBinaryUpTo12) {
  for_each_word_up_to(12, 2, [](const Word& w) {
    const bool p = is_primitive(w);
    for (std::size_t i = 0; i <= w.size(); ++i) ASSERT_EQ(is_primitive(rotate(w, i)), p);
  });
}

}  // namespace
