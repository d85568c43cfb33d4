#include <gtest/gtest.h>

#include "insrobust/record.hpp"
#include "insrobust/text.hpp"
#include "support.hpp"

namespace {

using namespace insrobust;

const Alphabet ab = Alphabet::from_chars("ab");

auto bytes = [](const std::string& s) { return split_bytes(s); };

TEST(OutputRecord, StableFieldOrder) {
  EXPECT_EQ(to_jsonl(make_record(ab.word("aab"), ab, classify_fast(ab.word("aab"), ab))),
            R"({"word":"aab","verdict":"non-ins-robust","witnesses":[{"position":1,"letter":"b","root":"ab","power":2}]})");
  EXPECT_EQ(to_jsonl(make_record(ab.word("abab"), ab, classify_fast(ab.word("abab"), ab))),
            R"({"word":"abab","verdict":"non-primitive","root":"ab","exponent":2})");
  EXPECT_EQ(to_jsonl(make_record(ab.word("abba"), ab, classify_fast(ab.word("abba"), ab))),
            R"({"word":"abba","verdict":"ins-robust"})");
}

TEST(OutputRecord, RoundTripsAndRevalidates) {
  // Every binary word up to 8 and ternary up to 5, with both classifiers.
  auto check = [](const Alphabet& a) {
    return [&a](const Word& w) {
      for (const auto& c : {classify_fast(w, a), classify_oracle(w, a)}) {
        const auto rec = make_record(w, a, c);
        const auto back = parse_jsonl(to_jsonl(rec));
        ASSERT_EQ(back, rec);
        ASSERT_EQ(to_jsonl(back), to_jsonl(rec));
        ASSERT_TRUE(validate_record(back, a, bytes)) << to_jsonl(rec);
      }
    };
  };
  insrobust::testing::for_each_word_up_to(8, 2, check(ab));
  const Alphabet abc = Alphabet::from_chars("abc");
  insrobust::testing::for_each_word_up_to(5, 3, check(abc));
}

TEST(OutputRecord, ValidationCatchesTampering) {
  auto rec = make_record(ab.word("aab"), ab, classify_fast(ab.word("aab"), ab));
  rec.witnesses[0].position = 0;
  EXPECT_FALSE(validate_record(rec, ab, bytes));
  auto np = make_record(ab.word("abab"), ab, classify_fast(ab.word("abab"), ab));
  np.exponent = 3;
  EXPECT_FALSE(validate_record(np, ab, bytes));
  auto ir = make_record(ab.word("aab"), ab, classify_fast(ab.word("aab"), ab));
  ir.verdict = "ins-robust";
  ir.witnesses.clear();
  EXPECT_TRUE(validate_record(ir, ab, bytes));  // claim is not re-derived, only witnesses are checked
  ir.verdict = "non-ins-robust";
  EXPECT_FALSE(validate_record(ir, ab, bytes));
}

TEST(Text, Utf8Tokenizer) {
  EXPECT_EQ(split_utf8("aé€😀"), (std::vector<std::string>{"a", "é", "€", "😀"}));
  EXPECT_THROW(split_utf8("\xC3"), std::invalid_argument);
  EXPECT_THROW(split_utf8("\xFF"), std::invalid_argument);
  EXPECT_EQ(split_bytes("é").size(), 2u);
}

TEST(Text, InferAlphabetAcrossBatch) {
  const Alphabet a = infer_alphabet({"ba", "c"}, SymbolMode::bytes);
  EXPECT_EQ(a.symbols(), (std::vector<std::string>{"a", "b", "c"}));
  const Alphabet u = infer_alphabet({"αβ"}, SymbolMode::unicode);
  EXPECT_EQ(u.size(), 2u);
  const Word w = u.word(split_utf8("αββ"));
  EXPECT_EQ(classify_fast(w, u).verdict(), Verdict::non_ins_robust);
}

}  // namespace
