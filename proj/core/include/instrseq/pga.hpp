#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "instrseq/action.hpp"
#include "instrseq/code.hpp"
#include "instrseq/thread.hpp"

namespace instrseq {

struct PgaInstruction {
  enum class Kind : std::uint8_t { Basic, PosTest, NegTest, Jump, Halt };

  Kind kind = Kind::Halt;
  Action action;
  Counter counter{};  // jumps only; #0 is allowed

  static PgaInstruction basic(Action a) { return {Kind::Basic, std::move(a), 0}; }
  static PgaInstruction pos_test(Action a) { return {Kind::PosTest, std::move(a), 0}; }
  static PgaInstruction neg_test(Action a) { return {Kind::NegTest, std::move(a), 0}; }
  static PgaInstruction jump(Counter k) { return {Kind::Jump, {}, k}; }
  static PgaInstruction halt() { return {}; }

  friend bool operator==(const PgaInstruction&, const PgaInstruction&) = default;
};

/// prefix alone, or prefix;(period)^w. Not both empty.
class PgaProgram {
 public:
  /// Throws PreconditionError when both parts are empty.
  PgaProgram(std::vector<PgaInstruction> prefix, std::vector<PgaInstruction> period = {});

  const std::vector<PgaInstruction>& prefix() const noexcept { return prefix_; }
  const std::vector<PgaInstruction>& period() const noexcept { return period_; }
  bool is_periodic() const noexcept { return !period_.empty(); }

  friend bool operator==(const PgaProgram&, const PgaProgram&) = default;

 private:
  std::vector<PgaInstruction> prefix_;
  std::vector<PgaInstruction> period_;
};

std::string to_string(const PgaInstruction& u);
/// `a;+b;#2;!`, `(+a;!;#3)^w`, `a;(b)^w`.
std::string to_string(const PgaProgram& p);
/// Throws ParseError.
PgaProgram parse_pga(std::string_view text);

/// Smallest equivalent canonical form: the period is reduced to its primitive
/// root ((Y;Y)^w = Y^w) and prefix instructions matching the end of the
/// period are rotated into it (X;u;(Y;u)^w = X;(u;Y)^w).
PgaProgram canonicalize(const PgaProgram& p);
/// P;Q with P^w;Q = P^w when P is periodic.
PgaProgram concat(const PgaProgram& p, const PgaProgram& q);

/// Thread extraction on the SPI denoted by `p`. Jump chains that never reach a
/// non-jump instruction yield D.
LinearSpec pga_extract(const PgaProgram& p);

/// The pre-projection instruction map for a forward-only C instruction at a
/// program of length n (\#k maps to #(n-k), # to #0). Throws
/// PreconditionError for backward basic and test instructions.
PgaInstruction pga_image(const Instruction& i, std::size_t n);
/// (psi(h(X)_1);...;psi(h(X)_n))^w. Throws PreconditionError unless X is a
/// C-program.
PgaProgram p2pga(const CodeSeq& code);
/// Embeds a PGA program into C with equal left-to-right extraction.
CodeSeq pga2c(const PgaProgram& p);

}  // namespace instrseq
