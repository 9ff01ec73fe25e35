#pragma once

#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "instrseq/code.hpp"
#include "instrseq/pga.hpp"
#include "instrseq/thread.hpp"

// Reference evaluators that work directly from the defining equations and
// share no code with the library's graph construction.
namespace instrseq::testing::oracle {

/// Depth-n approximation of |X|_j by unfolding the extraction equations.
/// A run of more than l(X) consecutive jumps is an action-free loop.
inline FiniteThread approx_code(const CodeSeq& x, Position j, std::size_t n) {
  if (n == 0) return FiniteThread::deadlock();
  const auto len = static_cast<Position>(x.size());
  for (Position hops = 0; hops <= len; ++hops) {
    if (j < 1 || j > len) return FiniteThread::deadlock();
    const Instruction& i = x.at(j);
    const Position dir = i.is_forward() ? 1 : -1;
    switch (i.op) {
      case Op::FwdJump:
      case Op::BwdJump:
        j += dir * static_cast<Position>(i.counter);
        continue;
      case Op::Halt: return FiniteThread::terminate();
      case Op::Abort: return FiniteThread::deadlock();
      case Op::FwdBasic:
      case Op::BwdBasic:
        return FiniteThread::prefix(i.action, approx_code(x, j + dir, n - 1));
      case Op::FwdPosTest:
      case Op::BwdPosTest:
        return FiniteThread::post(i.action, approx_code(x, j + dir, n - 1), approx_code(x, j + 2 * dir, n - 1));
      case Op::FwdNegTest:
      case Op::BwdNegTest:
        return FiniteThread::post(i.action, approx_code(x, j + 2 * dir, n - 1), approx_code(x, j + dir, n - 1));
    }
  }
  return FiniteThread::deadlock();
}

/// Depth-n approximation of the PGA program, read as the infinite instruction
/// stream prefix;period;period;... with the single-pass equations.
inline FiniteThread approx_pga(const PgaProgram& p, std::size_t start, std::size_t n) {
  if (n == 0) return FiniteThread::deadlock();
  const auto& pre = p.prefix();
  const auto& per = p.period();
  auto fetch = [&](std::size_t pos) -> const PgaInstruction* {
    if (pos < pre.size()) return &pre[pos];
    if (per.empty()) return nullptr;
    return &per[(pos - pre.size()) % per.size()];
  };
  auto normal = [&](std::size_t pos) {
    return (pos < pre.size() || per.empty()) ? pos : pre.size() + (pos - pre.size()) % per.size();
  };
  std::set<std::size_t> chain;
  std::size_t pos = start;
  while (true) {
    const PgaInstruction* u = fetch(pos);
    if (u == nullptr) return FiniteThread::deadlock();
    switch (u->kind) {
      case PgaInstruction::Kind::Halt: return FiniteThread::terminate();
      case PgaInstruction::Kind::Basic:
        return FiniteThread::prefix(u->action, approx_pga(p, pos + 1, n - 1));
      case PgaInstruction::Kind::PosTest:
        return FiniteThread::post(u->action, approx_pga(p, pos + 1, n - 1), approx_pga(p, pos + 2, n - 1));
      case PgaInstruction::Kind::NegTest:
        return FiniteThread::post(u->action, approx_pga(p, pos + 2, n - 1), approx_pga(p, pos + 1, n - 1));
      case PgaInstruction::Kind::Jump:
        if (u->counter == 0 || !chain.insert(normal(pos)).second) return FiniteThread::deadlock();
        pos += u->counter;
        continue;
    }
  }
}

/// Unfolds both specs side by side to depth n and compares the trees.
class ApproxComparator {
 public:
  ApproxComparator(const LinearSpec& p, const LinearSpec& q) : p_(p), q_(q) {}

  bool equal_to_depth(std::size_t n) { return same(p_.root(), q_.root(), n); }

 private:
  bool same(StateId s, StateId t, std::size_t n) {
    if (n == 0) return true;
    auto key = std::make_tuple(s, t, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Equation& x = p_.state(s);
    const Equation& y = q_.state(t);
    bool result = false;
    if (x.kind != y.kind) {
      result = false;
    } else if (x.kind != Equation::Kind::Post) {
      result = true;
    } else {
      result = x.action == y.action && same(x.on_true, y.on_true, n - 1) && same(x.on_false, y.on_false, n - 1);
    }
    memo_.emplace(key, result);
    return result;
  }

  const LinearSpec& p_;
  const LinearSpec& q_;
  std::map<std::tuple<StateId, StateId, std::size_t>, bool> memo_;
};

/// Equality by comparing pi_{N-1} where N counts the states of both specs.
inline bool approx_equal(const LinearSpec& p, const LinearSpec& q) {
  const std::size_t n = p.size() + q.size();
  return ApproxComparator(p, q).equal_to_depth(n - 1);
}

}  // namespace instrseq::testing::oracle
