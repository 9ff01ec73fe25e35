#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "instrseq/action.hpp"

namespace instrseq {

using StateId = std::size_t;

/// Right-hand side of one equation of a finite linear recursive
/// specification: S, D, or x_t <| a |> x_f.
struct Equation {
  enum class Kind : std::uint8_t { S, D, Post };

  Kind kind = Kind::D;
  Action action;
  StateId on_true = 0;
  StateId on_false = 0;

  static Equation terminate() { return {Kind::S, {}, 0, 0}; }
  static Equation deadlock() { return {Kind::D, {}, 0, 0}; }
  static Equation post(Action a, StateId t, StateId f) { return {Kind::Post, std::move(a), t, f}; }
  /// a o x, stored as x <| a |> x.
  static Equation prefix(Action a, StateId next) { return post(std::move(a), next, next); }

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// A regular thread given as a finite linear recursive specification with a
/// designated root. State ids are indices into states().
class LinearSpec {
 public:
  /// Throws PreconditionError if the root or any target is not a state.
  LinearSpec(std::vector<Equation> states, StateId root);

  static LinearSpec terminate();
  static LinearSpec deadlock();

  const std::vector<Equation>& states() const noexcept { return states_; }
  const Equation& state(StateId id) const { return states_.at(id); }
  std::size_t size() const noexcept { return states_.size(); }
  StateId root() const noexcept { return root_; }
  LinearSpec with_root(StateId root) const { return LinearSpec(states_, root); }

  std::set<Action> actions() const;

  friend bool operator==(const LinearSpec&, const LinearSpec&) = default;

 private:
  std::vector<Equation> states_;
  StateId root_;
};

/// A finite BTA term. Subterms are shared, so copies are cheap.
class FiniteThread {
 public:
  enum class Kind : std::uint8_t { S, D, Post };

  static FiniteThread terminate();
  static FiniteThread deadlock();
  static FiniteThread post(Action a, FiniteThread on_true, FiniteThread on_false);
  static FiniteThread prefix(Action a, FiniteThread next);
  /// a^n o tail
  static FiniteThread prefix_chain(const Action& a, std::size_t n, FiniteThread tail);

  Kind kind() const noexcept;
  const Action& action() const;
  const FiniteThread& on_true() const;
  const FiniteThread& on_false() const;
  /// Least n with pi(n, *this) == *this. D has depth 0 and S depth 1.
  std::size_t depth() const;

  friend bool operator==(const FiniteThread& x, const FiniteThread& y);

 private:
  struct Node;
  explicit FiniteThread(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// S, D, `a*P` for a o P and `(P <|a|> Q)` otherwise.
std::string to_string(const FiniteThread& t);
/// One equation per line: `x0 = x1 <|a|> x2`.
std::string to_string(const LinearSpec& spec);

/// Depth-n approximation of the thread denoted by the root of `spec`.
FiniteThread pi(std::size_t n, const LinearSpec& spec);
/// Depth-n truncation of a finite thread.
FiniteThread pi(std::size_t n, const FiniteThread& t);

/// States reachable from the root (the residual threads), including the root.
std::set<StateId> residual_states(const LinearSpec& spec);

/// Keeps only the states reachable from the root, renumbered in breadth-first
/// order (root = 0, true branch before false branch).
LinearSpec restrict_to_reachable(const LinearSpec& spec);

/// Bisimulation classes of all states of `spec`: two states get the same
/// class iff they denote the same thread. Classes are numbered by first
/// occurrence.
std::vector<std::size_t> equivalence_classes(const LinearSpec& spec);

/// Disjoint union of two specs; states of `q` are shifted by p.size().
/// The root is p's root.
LinearSpec disjoint_union(const LinearSpec& p, const LinearSpec& q);

bool decide_equal(const LinearSpec& p, const LinearSpec& q);

/// Minimal spec denoting the same thread, with states in breadth-first order.
/// Two specs are decide_equal iff their minimal forms are identical.
LinearSpec minimize(const LinearSpec& spec);

/// {"root": id, "states": [{"id": n, "kind": "S"|"D"|"post", ...}]}
std::string to_json(const LinearSpec& spec);
/// Accepts arbitrary (unique, non-negative) ids and renumbers them densely in
/// order of appearance. Throws ParseError.
LinearSpec spec_from_json(std::string_view json);

}  // namespace instrseq
