#include <gtest/gtest.h>

#include "generators.hpp"
#include "instrseq/error.hpp"
#include "instrseq/extraction.hpp"
#include "oracles.hpp"

namespace instrseq {
namespace {

using testing::Rng;

TEST(ExtractionProperties, AgreesWithDirectUnfolding) {
  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    CodeSeq x = testing::random_code(rng, 10);
    ExtractionResult all = extract_all(x);
    const auto n = static_cast<Position>(x.size());
    for (Position j = 0; j <= n + 1; ++j) {
      LinearSpec spec = extract_at(x, j);
      EXPECT_EQ(pi(7, spec), testing::oracle::approx_code(x, j, 7)) << to_string(x) << " at " << j;
      if (j >= 1 && j <= n) {
        EXPECT_TRUE(decide_equal(spec, all.spec.with_root(all.position_state[static_cast<std::size_t>(j - 1)])));
      }
    }
  }
}

TEST(ExtractionProperties, ResultIsReachableAndRooted) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    CodeSeq x = testing::random_code(rng, 12);
    LinearSpec spec = extract_ltr(x);
    EXPECT_EQ(spec.root(), 0u);
    EXPECT_EQ(residual_states(spec).size(), spec.size());
  }
}

TEST(ExtractionProperties, PaddingRelativizesPositions) {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    CodeSeq x = testing::random_code(rng, 8);
    const std::size_t left = testing::uniform(rng, 0, 3), right = testing::uniform(rng, 0, 3);
    const auto k = static_cast<Position>(testing::uniform(rng, 0, x.size() + 1));
    CodeSeq padded = pad(x, left, right);
    EXPECT_EQ(padded.size(), x.size() + left + right);
    EXPECT_TRUE(decide_equal(extract_at(x, k), extract_at(padded, k + static_cast<Position>(left))));
  }
}

TEST(ExtractionProperties, EntryNormalizeMovesEntry) {
  Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    CodeSeq x = testing::random_program(rng, 10);
    const auto k = static_cast<Position>(testing::uniform(rng, 1, x.size()));
    LinearSpec reference = extract_at(x, k);
    EXPECT_TRUE(decide_equal(reference, extract_ltr(entry_normalize(x, k, Orientation::Forward))));
    EXPECT_TRUE(decide_equal(reference, extract_rtl(entry_normalize(x, k, Orientation::Backward))));
  }
}

TEST(ExtractionProperties, EntryNormalizeRejectsNonPrograms) {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    CodeSeq x = testing::random_code(rng, 8);
    if (is_program(x)) continue;
    EXPECT_THROW(entry_normalize(x, 1, Orientation::Forward), PreconditionError);
    EXPECT_THROW(entry_normalize(x, 1, Orientation::Backward), PreconditionError);
  }
}

}  // namespace
}  // namespace instrseq
