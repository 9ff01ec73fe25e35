#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "instrseq/action.hpp"

namespace instrseq {

/// The ten C-instruction kinds.
enum class Op : std::uint8_t {
  FwdBasic,    // /a
  FwdPosTest,  // +/a
  FwdNegTest,  // -/a
  FwdJump,     // /#k
  BwdBasic,    // \a
  BwdPosTest,  // +\a
  BwdNegTest,  // -\a
  BwdJump,     // \#k
  Halt,        // !
  Abort,       // #
};

inline constexpr std::size_t kOpCount = 10;

enum class Orientation : std::uint8_t { Forward, Backward };

using Counter = std::uint64_t;
using Position = std::int64_t;

struct Instruction {
  Op op = Op::Halt;
  Action action;     // set for basic and test instructions
  Counter counter{}; // set for jumps, always >= 1

  static Instruction basic(Action a, Orientation o = Orientation::Forward);
  static Instruction pos_test(Action a, Orientation o = Orientation::Forward);
  static Instruction neg_test(Action a, Orientation o = Orientation::Forward);
  /// Throws PreconditionError if k == 0.
  static Instruction jump(Counter k, Orientation o = Orientation::Forward);
  static Instruction halt() { return {}; }
  static Instruction abort() { return {Op::Abort, {}, 0}; }

  bool has_action() const noexcept;
  bool is_test() const noexcept;
  bool is_jump() const noexcept { return op == Op::FwdJump || op == Op::BwdJump; }
  bool is_forward() const noexcept;
  bool is_backward() const noexcept;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

std::string to_string(const Instruction& i);

/// A set of instruction kinds, used for membership in reduced instruction sets.
class OpSet {
 public:
  OpSet() = default;
  OpSet(std::initializer_list<Op> ops) {
    for (Op op : ops) insert(op);
  }
  void insert(Op op) { bits_.set(static_cast<std::size_t>(op)); }
  bool contains(Op op) const { return bits_.test(static_cast<std::size_t>(op)); }

  static OpSet all();
  /// {+/a, /#k, \#k, !}
  static OpSet c_minus();
  /// {+/a, /#k, \#k, !, #}
  static OpSet reduced();

 private:
  std::bitset<kOpCount> bits_;
};

/// A non-empty finite sequence of C-instructions. Concatenation is flat, so
/// (X;Y);Z and X;(Y;Z) are the same value.
class CodeSeq {
 public:
  /// Throws PreconditionError on an empty sequence.
  explicit CodeSeq(std::vector<Instruction> instructions);
  CodeSeq(std::initializer_list<Instruction> instructions)
      : CodeSeq(std::vector<Instruction>(instructions)) {}

  std::size_t size() const noexcept { return instrs_.size(); }
  /// 1-based access, matching instruction positions.
  const Instruction& at(Position pos) const;
  std::span<const Instruction> instructions() const noexcept { return instrs_; }
  auto begin() const noexcept { return instrs_.begin(); }
  auto end() const noexcept { return instrs_.end(); }

  /// All actions occurring in the sequence.
  std::set<Action> actions() const;

  friend bool operator==(const CodeSeq&, const CodeSeq&) = default;

 private:
  std::vector<Instruction> instrs_;
};

/// Parses `/a;+/b;\c;+/d;!;\#5` style text. Throws ParseError.
CodeSeq parse_code(std::string_view text);
std::string to_string(const CodeSeq& code);

CodeSeq concat(const CodeSeq& x, const CodeSeq& y);
CodeSeq concat(std::span<const CodeSeq> parts);

/// Successor positions the extraction equation at `pos` refers to.
std::vector<Position> successors(const CodeSeq& code, Position pos);

/// True iff no position of `code` refers to a position outside 1..size().
bool is_program(const CodeSeq& code);
/// True iff every jump counter is at most k.
bool is_in_ck(const CodeSeq& code, Counter k);
/// Largest jump counter, 0 if there are no jumps.
Counter max_jump_counter(const CodeSeq& code);
bool uses_only(const CodeSeq& code, const OpSet& allowed);

}  // namespace instrseq
