#include <gtest/gtest.h>

#include "listed_words.hpp"
#include "oracles.hpp"
#include "richsf/construction.hpp"
#include "richsf/pal_index.hpp"
#include "richsf/squarefree.hpp"

namespace richsf {
namespace {

Word tokens(std::string_view text) { return parse_word(text, WordFormat::tokens); }

TEST(PaperAlphabet, Examples) {
  const auto names = [](unsigned n) { return paper_alphabet(n).names; };
  EXPECT_EQ(names(4), (std::vector<PaperLetterName>{A(0), A(2), A(4), B(4)}));
  EXPECT_EQ(names(5), (std::vector<PaperLetterName>{A(1), A(3), B(3), A(5), B(5)}));
  EXPECT_EQ(names(1), (std::vector<PaperLetterName>{A(1)}));
  EXPECT_EQ(names(2), (std::vector<PaperLetterName>{A(0), A(2)}));
  const LetterTable t = paper_alphabet(9);
  for (Letter id = 0; id < t.size(); ++id) EXPECT_EQ(t.id(t.name(id)), id);
}

TEST(ConstructB, Examples) {
  EXPECT_EQ(construct_b(1), digits("1"));
  EXPECT_EQ(construct_b(2), digits("121"));
  EXPECT_EQ(construct_b(3), digits("1213121"));
  EXPECT_THROW(construct_b(0), std::invalid_argument);
  EXPECT_THROW(construct_b(30), CapExceeded);
  for (unsigned n = 1; n <= 12; ++n) {
    const Word b = construct_b(n);
    EXPECT_EQ(b.size(), (std::size_t{1} << n) - 1);
    EXPECT_TRUE(is_rich(b));
    EXPECT_TRUE(is_square_free(b));
  }
}

TEST(ConstructW, BaseCases) {
  Construction c;
  EXPECT_EQ(c.record(1).w, tokens("A1"));
  EXPECT_EQ(c.record(2).w, tokens("A0 A2 A0"));
  EXPECT_EQ(c.record(3).w, tokens("A3 A1 B3 A1 A3 A1 B3"));
  EXPECT_EQ(c.record(5).v, tokens("A5 A3 A1 A3"));
  EXPECT_EQ(c.record(5).u, tokens("B3 A1 A3 A1"));
  EXPECT_EQ(c.record(6).v, tokens("A0 A6 A0 A4 A0 A2 A0 A4 A0"));
  EXPECT_EQ(c.record(6).u, tokens("A0 B4 A0 A2 A0 A4 A0 A2 A0"));
  EXPECT_TRUE(c.record(3).v.empty());
  EXPECT_EQ(c.record(4).v, tokens("A0"));
}

TEST(ConstructW, IsomorphicToListedWords) {
  Construction c;
  const auto& listed = fixtures::longest_words();
  const auto cls = [](const std::string& s) { return canonical_class(digits(s)); };
  EXPECT_EQ(canonical_class(c.record(3).w), cls(listed.at(3)[0]));
  EXPECT_EQ(canonical_class(c.record(4).w), cls(listed.at(4)[0]));
  EXPECT_EQ(canonical_class(c.record(5).w), cls(listed.at(5)[1]));
  EXPECT_EQ(canonical_class(c.record(6).w), cls(listed.at(6)[1]));
  // w_7 carries w_5 in its middle block, and w_5 sits in the class of the
  // second listed five-letter word, so w_7 lands with the second listed
  // seven-letter word rather than the fourth.
  EXPECT_EQ(canonical_class(c.record(7).w), cls(listed.at(7)[1]));
  EXPECT_NE(canonical_class(c.record(7).w), cls(listed.at(7)[3]));
}

TEST(ConstructW, Lengths) {
  const std::vector<std::size_t> expected{1,    3,    7,     15,    33,    67,    145,   291,
                                          629,  1259, 2721,  5443,  11765, 23531, 50865, 101731};
  Construction c;
  for (unsigned n = 1; n <= expected.size(); ++n) EXPECT_EQ(c.record(n).w.size(), expected[n - 1]) << n;
}

TEST(ConstructW, RichSquareFreeWithNLetters) {
  Construction c;
  for (unsigned n = 1; n <= 12; ++n) {
    const Word& w = c.record(n).w;
    EXPECT_EQ(w.alphabet_size(), n);
    EXPECT_TRUE(is_rich(w));
    EXPECT_TRUE(is_square_free(w));
  }
  for (unsigned n = 1; n <= 5; ++n) {
    const Word& w = c.record(n).w;
    EXPECT_TRUE(oracle::rich(w));
    EXPECT_FALSE(oracle::has_square(w));
  }
}

TEST(ConstructW, PrefixesOfConstructedWordsAreRich) {
  Construction c;
  for (unsigned n = 1; n <= 12; ++n) {
    PalIndex idx(n);
    for (Letter a : c.record(n).w) ASSERT_TRUE(idx.push(a).created_node) << n;
  }
}

TEST(ConstructW, DecompositionLetters) {
  Construction c;
  for (unsigned n = 7; n <= 12; ++n) {
    const auto& parts = *c.record(n).parts;
    EXPECT_NE(parts.c, parts.d);
    EXPECT_TRUE(c.record(n - 6).w.starts_with(parts.P));
    EXPECT_TRUE(reverse(c.record(n - 4).v).starts_with(parts.P));
  }
}

TEST(ConstructW, CapRefusal) {
  try {
    construct_w(12, LengthCap{1000});
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.n(), 10u);  // the first record over the cap on the way to 12
    EXPECT_EQ(e.refused_length(), 1259u);
  }
  EXPECT_NO_THROW(construct_w(9, LengthCap{629}));
  EXPECT_THROW(construct_w(9, LengthCap{628}), CapExceeded);
  EXPECT_THROW(construct_w(0), std::invalid_argument);
}

TEST(VerifyRecord, AllPassUpToSixteen) {
  Construction c;
  for (unsigned n = 1; n <= 16; ++n) {
    const VerificationReport r = verify_record(c.record(n), c);
    EXPECT_TRUE(r.ok()) << "n=" << n << ": " << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_FALSE(r.checks.empty());
  }
  EXPECT_TRUE(verify_record(construct_w(7)).ok());
  EXPECT_TRUE(verify_record(construct_w(12)).ok());
}

TEST(VerifyRecord, FlagsTamperedRecords) {
  Construction c;
  ConstructionRecord broken = c.record(9);
  broken.w = broken.w + Letter{0};
  EXPECT_FALSE(verify_record(broken, c).ok());

  ConstructionRecord swapped = c.record(8);
  swapped.u = reverse(swapped.u);
  EXPECT_FALSE(verify_record(swapped, c).ok());

  ConstructionRecord bad_parts = c.record(11);
  bad_parts.parts->d = bad_parts.parts->c;
  EXPECT_FALSE(verify_record(bad_parts, c).ok());
}

}  // namespace
}  // namespace richsf
