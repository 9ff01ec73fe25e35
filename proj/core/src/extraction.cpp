#include "instrseq/extraction.hpp"

#include "goto_graph.hpp"
#include "instrseq/error.hpp"

namespace instrseq {

ExtractionResult extract_all(const CodeSeq& code, Position start) {
  using detail::GotoNode;
  const auto n = static_cast<Position>(code.size());
  bool outside = false;
  // Node index p - 1 holds the equation for position p.
  auto node = [&](Position p) -> std::size_t {
    if (p < 1 || p > n) {
      outside = true;
      return detail::kOutside;
    }
    return static_cast<std::size_t>(p - 1);
  };

  std::vector<GotoNode> nodes;
  nodes.reserve(code.size());
  for (Position j = 1; j <= n; ++j) {
    const Instruction& i = code.at(j);
    const auto k = static_cast<Position>(i.counter);
    switch (i.op) {
      case Op::FwdBasic: nodes.push_back(GotoNode::post(i.action, node(j + 1), node(j + 1))); break;
      case Op::FwdPosTest: nodes.push_back(GotoNode::post(i.action, node(j + 1), node(j + 2))); break;
      case Op::FwdNegTest: nodes.push_back(GotoNode::post(i.action, node(j + 2), node(j + 1))); break;
      case Op::FwdJump: nodes.push_back(GotoNode::forward(node(j + k))); break;
      case Op::BwdBasic: nodes.push_back(GotoNode::post(i.action, node(j - 1), node(j - 1))); break;
      case Op::BwdPosTest: nodes.push_back(GotoNode::post(i.action, node(j - 1), node(j - 2))); break;
      case Op::BwdNegTest: nodes.push_back(GotoNode::post(i.action, node(j - 2), node(j - 1))); break;
      case Op::BwdJump: nodes.push_back(GotoNode::forward(node(j - k))); break;
      case Op::Halt: nodes.push_back(GotoNode::halt()); break;
      case Op::Abort: nodes.push_back(GotoNode::abort()); break;
    }
  }
  const bool references_outside = outside;
  const std::size_t root = start >= 1 && start <= n ? static_cast<std::size_t>(start - 1) : detail::kOutside;
  auto resolved = detail::resolve(nodes, root);
  return {std::move(resolved.spec), std::move(resolved.state_of), references_outside};
}

LinearSpec extract_at(const CodeSeq& code, Position j) {
  return restrict_to_reachable(extract_all(code, j).spec);
}

LinearSpec extract_ltr(const CodeSeq& code) { return extract_at(code, 1); }

LinearSpec extract_rtl(const CodeSeq& code) {
  return extract_at(code, static_cast<Position>(code.size()));
}

CodeSeq pad(const CodeSeq& code, std::size_t left, std::size_t right) {
  std::vector<Instruction> out(left, Instruction::abort());
  out.insert(out.end(), code.begin(), code.end());
  out.insert(out.end(), right, Instruction::abort());
  return CodeSeq(std::move(out));
}

CodeSeq entry_normalize(const CodeSeq& code, Position k, Orientation direction) {
  if (!is_program(code)) {
    throw PreconditionError("entry normalization requires a C-program (no jumps outside its range)");
  }
  const auto n = static_cast<Position>(code.size());
  if (k < 1 || k > n) throw PreconditionError("entry position out of range");
  if (direction == Orientation::Forward) {
    return concat(CodeSeq{Instruction::jump(static_cast<Counter>(k))}, code);
  }
  return concat(code, CodeSeq{Instruction::jump(static_cast<Counter>(n + 1 - k), Orientation::Backward)});
}

}  // namespace instrseq
