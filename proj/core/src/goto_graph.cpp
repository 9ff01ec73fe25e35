#include "goto_graph.hpp"

namespace instrseq::detail {

ResolvedGraph resolve(const std::vector<GotoNode>& nodes, std::size_t root) {
  constexpr StateId kS = 0;
  constexpr StateId kD = 1;
  constexpr StateId kUnresolved = std::numeric_limits<StateId>::max();

  std::vector<StateId> state_of(nodes.size(), kUnresolved);
  StateId next_state = 2;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    switch (nodes[i].kind) {
      case GotoNode::Kind::Halt: state_of[i] = kS; break;
      case GotoNode::Kind::Abort: state_of[i] = kD; break;
      case GotoNode::Kind::Post: state_of[i] = next_state++; break;
      case GotoNode::Kind::Forward: break;
    }
  }

  // Each forward chain is walked once; `on_path` marks nodes of the chain
  // currently being chased so a revisit is detected in O(1).
  std::vector<char> on_path(nodes.size(), 0);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < nodes.size(); ++start) {
    if (state_of[start] != kUnresolved) continue;
    path.clear();
    std::size_t at = start;
    StateId result = kD;
    while (true) {
      if (at == kOutside || at >= nodes.size()) {
        result = kD;
        break;
      }
      if (state_of[at] != kUnresolved) {
        result = state_of[at];
        break;
      }
      if (on_path[at]) {
        result = kD;
        break;
      }
      on_path[at] = 1;
      path.push_back(at);
      at = nodes[at].on_true;
    }
    for (std::size_t p : path) {
      state_of[p] = result;
      on_path[p] = 0;
    }
  }

  auto target = [&](std::size_t t) { return t == kOutside || t >= nodes.size() ? kD : state_of[t]; };

  std::vector<Equation> eqs(next_state);
  eqs[kS] = Equation::terminate();
  eqs[kD] = Equation::deadlock();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].kind != GotoNode::Kind::Post) continue;
    eqs[state_of[i]] = Equation::post(nodes[i].action, target(nodes[i].on_true), target(nodes[i].on_false));
  }
  StateId root_state = target(root);
  return {LinearSpec(std::move(eqs), root_state), std::move(state_of)};
}

}  // namespace instrseq::detail
