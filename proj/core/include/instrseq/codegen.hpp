#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "instrseq/code.hpp"
#include "instrseq/thread.hpp"

namespace instrseq {

struct EncoderOutput {
  CodeSeq code;
  /// block_of[s] is the 1-based position where the block for state s starts.
  std::vector<Position> block_of;
};

/// C-program of length 3 * size() whose left-to-right extraction is the
/// thread of `spec`. The root block comes first, the remaining states follow
/// in index order.
EncoderOutput spec_to_code(const LinearSpec& spec);
/// As spec_to_code, but only uses {+/a, /#k, \#k, !}.
EncoderOutput spec_to_code_cminus(const LinearSpec& spec);

/// One state per distinct subterm of `t`, root first.
LinearSpec spec_from_finite(const FiniteThread& t);

/// P_0 = S, P_{i+1} = P_{F(i+1)} <|a|> P_i, rooted at P_{n-1}. `f[i - 1]` is
/// F(i) for i in 1..n-1; state ids equal the P indices.
LinearSpec pf_thread(std::size_t n, const std::vector<std::size_t>& f, const Action& a = Action("a"));

struct PsiReport {
  std::size_t n = 0;
  std::size_t max_length = 0;
  std::size_t distinct_count = 0;
  std::uint64_t expected_distinct = 0;
  /// Encoded program length for each F, in lexicographic order of F.
  std::vector<std::size_t> lengths;
};

inline constexpr std::uint64_t kDefaultPsiCap = 100000;

/// Enumerates all n^(n-1) functions F, encodes each P^F thread and counts the
/// distinct threads. Throws PreconditionError if n^(n-1) exceeds `cap`.
PsiReport psi_experiment(std::size_t n, std::uint64_t cap = kDefaultPsiCap);

/// {"n":..,"maxLength":..,"distinctCount":..,"expectedDistinct":..}
std::string to_json(const PsiReport& report);

}  // namespace instrseq
