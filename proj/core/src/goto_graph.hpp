#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "instrseq/thread.hpp"

namespace instrseq::detail {

inline constexpr std::size_t kOutside = std::numeric_limits<std::size_t>::max();

/// A node of an equation system where some equations merely forward to
/// another node (jumps, hidden service requests). Targets may be kOutside,
/// which denotes D.
struct GotoNode {
  enum class Kind : std::uint8_t { Halt, Abort, Post, Forward };

  Kind kind = Kind::Abort;
  Action action;
  std::size_t on_true = kOutside;  // Forward target for Kind::Forward
  std::size_t on_false = kOutside;

  static GotoNode halt() { return {Kind::Halt, {}, kOutside, kOutside}; }
  static GotoNode abort() { return {}; }
  static GotoNode post(Action a, std::size_t t, std::size_t f) { return {Kind::Post, std::move(a), t, f}; }
  static GotoNode forward(std::size_t target) { return {Kind::Forward, {}, target, kOutside}; }
};

struct ResolvedGraph {
  /// Shared S state, shared D state, then one state per Post node.
  LinearSpec spec;
  /// Resolved state of every node.
  std::vector<StateId> state_of;
};

/// Chases forward chains to the first non-forward node. A chain that leaves
/// the node range ends in D; a chain that revisits one of its own nodes is an
/// action-free loop and also ends in D. The spec root is the state of `root`
/// (or D when root is kOutside).
ResolvedGraph resolve(const std::vector<GotoNode>& nodes, std::size_t root);

}  // namespace instrseq::detail
