#include <gtest/gtest.h>

#include "generators.hpp"
#include "instrseq/codegen.hpp"
#include "instrseq/extraction.hpp"
#include "instrseq/pga.hpp"
#include "oracles.hpp"

namespace instrseq {
namespace {

using testing::Rng;

TEST(CodegenProperties, EncodersRoundTrip) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    LinearSpec p = testing::random_spec(rng, 8);
    for (const EncoderOutput& out : {spec_to_code(p), spec_to_code_cminus(p)}) {
      EXPECT_EQ(out.code.size(), 3 * p.size());
      EXPECT_TRUE(is_program(out.code));
      EXPECT_TRUE(decide_equal(extract_ltr(out.code), p));
      for (StateId s = 0; s < p.size(); ++s) {
        EXPECT_TRUE(decide_equal(extract_at(out.code, out.block_of[s]), p.with_root(s)));
      }
    }
  }
}

TEST(PgaProperties, ExtractionAgreesWithUnfolding) {
  Rng rng(42);
  for (int i = 0; i < 400; ++i) {
    PgaProgram p = testing::random_pga(rng);
    EXPECT_EQ(pi(7, pga_extract(p)), testing::oracle::approx_pga(p, 0, 7)) << to_string(p);
  }
}

TEST(PgaProperties, CanonicalFormPreservesExtraction) {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    PgaProgram p = testing::random_pga(rng);
    PgaProgram c = canonicalize(p);
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_TRUE(decide_equal(pga_extract(p), pga_extract(c))) << to_string(p);
    EXPECT_EQ(parse_pga(to_string(p)), p);
  }
}

TEST(PgaProperties, BridgesPreserveExtraction) {
  Rng rng(44);
  for (int i = 0; i < 200; ++i) {
    CodeSeq x = testing::random_program(rng, 12);
    EXPECT_TRUE(decide_equal(extract_ltr(x), pga_extract(p2pga(x)))) << to_string(x);
    PgaProgram p = canonicalize(testing::random_pga(rng));
    CodeSeq c = pga2c(p);
    EXPECT_TRUE(decide_equal(extract_ltr(c), pga_extract(p))) << to_string(p);
  }
}

}  // namespace
}  // namespace instrseq
