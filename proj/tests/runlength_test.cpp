#include "stickyinsdel/runlength.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace stickyinsdel {
namespace {

Sequence seq(const std::string& text, std::uint32_t q = 0) {
  return parse_sequence(text, q);
}

TEST(Encode, WorkedExample) {
  // 00311120 = 0^2 3^1 1^3 2^1 0^1
  RunProfile p = encode(seq("00311120", 4));
  EXPECT_EQ(p.composition().letters(), (std::vector<Symbol>{0, 3, 1, 2, 0}));
  EXPECT_EQ(p.lengths().values(), (std::vector<RunLength>{2, 1, 3, 1, 1}));
}

TEST(Encode, SingleRun) {
  RunProfile p = encode(seq("0"));
  EXPECT_EQ(p.composition().letters(), (std::vector<Symbol>{0}));
  EXPECT_EQ(p.lengths().values(), (std::vector<RunLength>{1}));
}

TEST(Encode, AllRunsLengthOne) {
  RunProfile p = encode(seq("0101"));
  EXPECT_EQ(p.composition().letters(), (std::vector<Symbol>{0, 1, 0, 1}));
  EXPECT_EQ(p.lengths().values(), (std::vector<RunLength>{1, 1, 1, 1}));
}

TEST(Decode, WorkedExample) {
  Sequence x = decode(Composition({0, 3, 1, 2, 0}, 4),
                      RunLengthVector({2, 1, 3, 1, 1}));
  EXPECT_EQ(to_text(x), "00311120");
}

TEST(Decode, SingleLongRun) {
  Sequence x = decode(Composition({5}, 6), RunLengthVector({3}));
  EXPECT_EQ(to_text(x), "555");
}

TEST(Decode, TwoUnitRuns) {
  Sequence x = decode(Composition({0, 1}, 2), RunLengthVector({1, 1}));
  EXPECT_EQ(to_text(x), "01");
}

TEST(RunCount, Examples) {
  EXPECT_EQ(run_count(seq("00311120")), 5u);
  EXPECT_EQ(run_count(seq("0")), 1u);
  EXPECT_EQ(run_count(seq("0000000")), 1u);
}

TEST(Invariants, RejectsBadInputs) {
  EXPECT_THROW(Sequence({}, 2), InvalidInput);
  EXPECT_THROW(Sequence({0, 2}, 2), InvalidInput);
  EXPECT_THROW(Sequence({0}, 1), InvalidInput);
  EXPECT_THROW(Composition({0, 0}, 2), InvalidInput);
  EXPECT_THROW(RunLengthVector({1, 0}), InvalidInput);
  EXPECT_THROW(RunLengthVector({}), InvalidInput);
  EXPECT_THROW(RunProfile(Composition({0, 1}, 2), RunLengthVector({1})),
               InvalidInput);
}

TEST(Roundtrip, RandomSequences) {
  std::mt19937_64 rng(20240317);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t q = 2 + rng() % 11;  // covers q > 10 comma form
    const std::size_t n = 1 + rng() % 40;
    std::vector<Symbol> symbols(n);
    for (auto& s : symbols) s = static_cast<Symbol>(rng() % q);
    Sequence x(symbols, q);

    RunProfile p = encode(x);
    EXPECT_EQ(decode(p), x);
    EXPECT_EQ(encode(decode(p)), p);
    EXPECT_EQ(run_count(x), p.run_count());
    EXPECT_EQ(p.lengths().total(), static_cast<RunLength>(n));

    // composition well-formedness
    const auto& letters = p.composition().letters();
    for (std::size_t i = 1; i < letters.size(); ++i) {
      EXPECT_NE(letters[i], letters[i - 1]);
    }

    // text roundtrip in whichever form the emitter picked
    EXPECT_EQ(parse_sequence(to_text(x), q), x);
  }
}

TEST(Text, CompactAndCommaForms) {
  EXPECT_EQ(to_text(seq("00311120", 4)), "00311120");
  Sequence wide({0, 0, 11, 3}, 12);
  EXPECT_EQ(to_text(wide), "0,0,11,3");
  EXPECT_EQ(parse_sequence("0,0,11,3"), wide);
  EXPECT_EQ(parse_sequence(" 0011 \n"), seq("0011"));
  EXPECT_THROW(parse_sequence(""), InvalidInput);
  EXPECT_THROW(parse_sequence("01a"), InvalidInput);
  EXPECT_THROW(parse_sequence("0,,1"), InvalidInput);
  EXPECT_THROW(parse_sequence("012", 2), InvalidInput);
}

TEST(Text, InferredAlphabetIsAtLeastBinary) {
  EXPECT_EQ(parse_sequence("000").alphabet_size(), 2u);
  EXPECT_EQ(parse_sequence("00311120").alphabet_size(), 4u);
}

}  // namespace
}  // namespace stickyinsdel
