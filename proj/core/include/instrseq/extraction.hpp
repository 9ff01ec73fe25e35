#pragma once

#include <vector>

#include "instrseq/code.hpp"
#include "instrseq/thread.hpp"

namespace instrseq {

/// Global solution of the extraction equations of a piece of code: one spec
/// containing a state for every position (jump positions are resolved to the
/// state they chase to) plus one shared S and one shared D state.
struct ExtractionResult {
  LinearSpec spec;
  /// position_state[p - 1] is the state denoting |X|_p.
  std::vector<StateId> position_state;
  /// True iff some equation referred to a position outside 1..l(X).
  bool references_outside = false;
};

/// Builds the equations for all positions; the spec root is the state for
/// `start` (or the D state when `start` is out of range).
ExtractionResult extract_all(const CodeSeq& code, Position start = 1);

/// |X|_j, restricted to the states reachable from its root.
LinearSpec extract_at(const CodeSeq& code, Position j);
/// Left-to-right extraction, |X|_1.
LinearSpec extract_ltr(const CodeSeq& code);
/// Right-to-left extraction, |X|_l(X).
LinearSpec extract_rtl(const CodeSeq& code);

/// Prepends `left` and appends `right` abort instructions. Extraction at k in
/// X equals extraction at k + left in the result.
CodeSeq pad(const CodeSeq& code, std::size_t left, std::size_t right);

/// For a C-program X and 1 <= k <= l(X): `/#k;X` (Forward) whose
/// left-to-right extraction is |X|_k, or `X;\#(l(X)+1-k)` (Backward) whose
/// right-to-left extraction is |X|_k. Throws PreconditionError otherwise.
CodeSeq entry_normalize(const CodeSeq& code, Position k, Orientation direction);

}  // namespace instrseq
