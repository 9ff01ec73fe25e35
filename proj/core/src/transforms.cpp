#include "instrseq/transforms.hpp"

#include <algorithm>
#include <array>

#include "instrseq/error.hpp"

namespace instrseq {
namespace {

constexpr auto Fwd = Orientation::Forward;
constexpr auto Bwd = Orientation::Backward;

Instruction fj(Counter k) { return Instruction::jump(k, Fwd); }
Instruction bj(Counter k) { return Instruction::jump(k, Bwd); }
Instruction abort_() { return Instruction::abort(); }

using Block = std::array<Instruction, 3>;

// Blocks of h: the instruction at position j+1 of X lands at 3j+1 of h(X)
// and every successor k of it becomes block start 3(k-1)+1.
Block h_block(const Instruction& i) {
  const Action& a = i.action;
  switch (i.op) {
    case Op::FwdBasic: return {Instruction::basic(a), fj(2), abort_()};
    case Op::FwdPosTest: return {Instruction::pos_test(a), fj(2), fj(4)};
    case Op::FwdNegTest: return {Instruction::neg_test(a), fj(2), fj(4)};
    case Op::FwdJump: return {fj(3 * i.counter), abort_(), abort_()};
    case Op::BwdBasic: return {Instruction::basic(a), bj(4), abort_()};
    case Op::BwdPosTest: return {Instruction::pos_test(a), bj(4), bj(8)};
    case Op::BwdNegTest: return {Instruction::neg_test(a), bj(4), bj(8)};
    case Op::BwdJump: return {bj(3 * i.counter), abort_(), abort_()};
    case Op::Halt: return {Instruction::halt(), abort_(), abort_()};
    case Op::Abort: return {abort_(), abort_(), abort_()};
  }
  return {};
}

Block h_pos_block(const Instruction& i) {
  const Action& a = i.action;
  switch (i.op) {
    case Op::FwdBasic: return {Instruction::pos_test(a), fj(2), fj(1)};
    case Op::FwdNegTest: return {Instruction::pos_test(a), fj(5), fj(1)};
    case Op::BwdBasic: return {Instruction::pos_test(a), bj(4), bj(5)};
    // true reply continues at block j-2 (3j+2-7), false at block j-1 (3j+3-5)
    case Op::BwdNegTest: return {Instruction::pos_test(a), bj(7), bj(5)};
    default: return h_block(i);
  }
}

template <typename BlockFn>
CodeSeq blockwise(const CodeSeq& code, BlockFn fn) {
  std::vector<Instruction> out;
  out.reserve(3 * code.size());
  for (const auto& i : code) {
    auto block = fn(i);
    out.insert(out.end(), block.begin(), block.end());
  }
  return CodeSeq(std::move(out));
}

Op reorient(Op op) {
  switch (op) {
    case Op::FwdBasic: return Op::BwdBasic;
    case Op::FwdPosTest: return Op::BwdPosTest;
    case Op::FwdNegTest: return Op::BwdNegTest;
    case Op::FwdJump: return Op::BwdJump;
    case Op::BwdBasic: return Op::FwdBasic;
    case Op::BwdPosTest: return Op::FwdPosTest;
    case Op::BwdNegTest: return Op::FwdNegTest;
    case Op::BwdJump: return Op::FwdJump;
    default: return op;
  }
}

Op negate(Op op) {
  switch (op) {
    case Op::FwdPosTest: return Op::FwdNegTest;
    case Op::FwdNegTest: return Op::FwdPosTest;
    case Op::BwdPosTest: return Op::BwdNegTest;
    case Op::BwdNegTest: return Op::BwdPosTest;
    default: return op;
  }
}

}  // namespace

CodeSeq apply_h(const CodeSeq& code) { return blockwise(code, h_block); }

CodeSeq apply_h_pos(const CodeSeq& code) { return blockwise(code, h_pos_block); }

CodeSeq apply_g(const CodeSeq& code) {
  std::vector<Instruction> out;
  out.reserve(3 * code.size());
  for (auto it = code.instructions().rbegin(); it != code.instructions().rend(); ++it) {
    auto block = h_block(*it);
    for (auto b = block.rbegin(); b != block.rend(); ++b) out.push_back(rev(*b));
  }
  return CodeSeq(std::move(out));
}

Instruction rev(const Instruction& i) {
  Instruction out = i;
  out.op = reorient(i.op);
  return out;
}

CodeSeq rev(const CodeSeq& code) {
  std::vector<Instruction> out;
  out.reserve(code.size());
  for (auto it = code.instructions().rbegin(); it != code.instructions().rend(); ++it) out.push_back(rev(*it));
  return CodeSeq(std::move(out));
}

CodeSeq swap(const CodeSeq& code, const Action& a, const Action& b) {
  return apply_tec(TecAutomorphism::swap(a, b), code);
}

CodeSeq flip(const CodeSeq& code, const Action& a) { return apply_tec(TecAutomorphism::flip(a), code); }

// ---------------------------------------------------------------------------
// TEC-automorphisms

TecAutomorphism TecAutomorphism::swap(const Action& a, const Action& b) {
  TecAutomorphism alpha;
  if (a != b) {
    alpha.perm_.emplace(a, b);
    alpha.perm_.emplace(b, a);
  }
  return alpha;
}

TecAutomorphism TecAutomorphism::flip(const Action& c) {
  TecAutomorphism alpha;
  alpha.flips_.insert(c);
  return alpha;
}

const Action& TecAutomorphism::relabel(const Action& a) const {
  auto it = perm_.find(a);
  return it == perm_.end() ? a : it->second;
}

std::set<Action> TecAutomorphism::support() const {
  std::set<Action> out;
  for (const auto& [a, _] : perm_) out.insert(a);
  return out;
}

Instruction TecAutomorphism::operator()(const Instruction& i) const {
  if (!i.has_action()) return i;
  Instruction out = i;
  out.action = relabel(i.action);
  if (out.is_test() && flips_.contains(out.action)) out.op = negate(out.op);
  return out;
}

CodeSeq TecAutomorphism::operator()(const CodeSeq& code) const {
  std::vector<Instruction> out;
  out.reserve(code.size());
  for (const auto& i : code) out.push_back((*this)(i));
  return CodeSeq(std::move(out));
}

CodeSeq apply_tec(const TecAutomorphism& alpha, const CodeSeq& code) { return alpha(code); }

// Same algebra as compose_bijections, over the dynamic alphabet: swaps are
// pushed through flips (swap_{a,b} o flip_c = flip_{swap(c)} o swap_{a,b})
// and flip_c o flip_c cancels.
TecAutomorphism compose_tec(const TecAutomorphism& outer, const TecAutomorphism& inner) {
  TecAutomorphism out;
  std::set<Action> moved = inner.support();
  for (const auto& a : outer.support()) moved.insert(a);
  for (const auto& a : moved) {
    const Action& image = outer.relabel(inner.relabel(a));
    if (image != a) out.perm_.emplace(a, image);
  }
  for (const auto& c : inner.flips_) out.flips_.insert(outer.relabel(c));
  for (const auto& c : outer.flips_) {
    if (!out.flips_.erase(c)) out.flips_.insert(c);
  }
  return out;
}

TecAutomorphism inverse(const TecAutomorphism& alpha) {
  TecAutomorphism out;
  for (const auto& [a, b] : alpha.perm_) out.perm_.emplace(b, a);
  for (const auto& c : alpha.flips_) out.flips_.insert(out.relabel(c));
  return out;
}

bool is_involution(const TecAutomorphism& alpha) { return compose_tec(alpha, alpha) == TecAutomorphism(); }

StructuralBijection associated_bijection(const TecAutomorphism& alpha, const std::set<Action>& alphabet) {
  std::set<Action> domain = alphabet;
  for (const auto& a : alpha.support()) domain.insert(a);
  for (const auto& c : alpha.flips()) domain.insert(c);
  std::map<Action, Action> perm;
  for (const auto& a : domain) perm.emplace(a, alpha.relabel(a));
  return StructuralBijection(std::move(perm), alpha.flips());
}

CodeSeq apply_tec_anti(const TecAntiAutomorphism& beta, const CodeSeq& code) {
  return rev(apply_tec(beta.automorphism, code));
}

TecAutomorphism compose_tec_anti(const TecAntiAutomorphism& outer, const TecAntiAutomorphism& inner) {
  // rev o a o rev o b = a o b, since TEC-automorphisms commute with rev.
  return compose_tec(outer.automorphism, inner.automorphism);
}

}  // namespace instrseq
