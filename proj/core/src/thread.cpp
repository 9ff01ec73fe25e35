#include "instrseq/thread.hpp"

#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "instrseq/error.hpp"

namespace instrseq {

LinearSpec::LinearSpec(std::vector<Equation> states, StateId root)
    : states_(std::move(states)), root_(root) {
  if (root_ >= states_.size()) throw PreconditionError("root is not a state of the specification");
  for (const auto& eq : states_) {
    if (eq.kind != Equation::Kind::Post) continue;
    if (eq.on_true >= states_.size() || eq.on_false >= states_.size()) {
      throw PreconditionError("equation refers to an unknown state");
    }
    if (eq.action.empty()) throw PreconditionError("postconditional equation without an action");
  }
}

LinearSpec LinearSpec::terminate() { return LinearSpec({Equation::terminate()}, 0); }
LinearSpec LinearSpec::deadlock() { return LinearSpec({Equation::deadlock()}, 0); }

std::set<Action> LinearSpec::actions() const {
  std::set<Action> out;
  for (const auto& eq : states_) {
    if (eq.kind == Equation::Kind::Post) out.insert(eq.action);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteThread

struct FiniteThread::Node {
  Kind kind;
  Action action;
  std::vector<FiniteThread> branches;  // {true, false} for Post, empty otherwise
  std::size_t depth;
};

FiniteThread FiniteThread::terminate() {
  static const auto node = std::make_shared<const Node>(Node{Kind::S, {}, {}, 1});
  return FiniteThread(node);
}

FiniteThread FiniteThread::deadlock() {
  static const auto node = std::make_shared<const Node>(Node{Kind::D, {}, {}, 0});
  return FiniteThread(node);
}

FiniteThread FiniteThread::post(Action a, FiniteThread on_true, FiniteThread on_false) {
  std::size_t depth = 1 + std::max(on_true.node_->depth, on_false.node_->depth);
  std::vector<FiniteThread> branches{std::move(on_true), std::move(on_false)};
  return FiniteThread(std::make_shared<const Node>(Node{Kind::Post, std::move(a), std::move(branches), depth}));
}

FiniteThread FiniteThread::prefix(Action a, FiniteThread next) {
  FiniteThread copy = next;
  return post(std::move(a), std::move(copy), std::move(next));
}

FiniteThread FiniteThread::prefix_chain(const Action& a, std::size_t n, FiniteThread tail) {
  for (std::size_t i = 0; i < n; ++i) tail = prefix(a, tail);
  return tail;
}

FiniteThread::Kind FiniteThread::kind() const noexcept { return node_->kind; }

const Action& FiniteThread::action() const {
  if (node_->kind != Kind::Post) throw PreconditionError("S and D carry no action");
  return node_->action;
}

const FiniteThread& FiniteThread::on_true() const {
  if (node_->kind != Kind::Post) throw PreconditionError("S and D have no branches");
  return node_->branches[0];
}

const FiniteThread& FiniteThread::on_false() const {
  if (node_->kind != Kind::Post) throw PreconditionError("S and D have no branches");
  return node_->branches[1];
}

std::size_t FiniteThread::depth() const { return node_->depth; }

bool operator==(const FiniteThread& x, const FiniteThread& y) {
  using Node = FiniteThread::Node;
  struct PairHash {
    std::size_t operator()(const std::pair<const Node*, const Node*>& p) const noexcept {
      return std::hash<const void*>()(p.first) * 31 ^ std::hash<const void*>()(p.second);
    }
  };
  std::unordered_set<std::pair<const Node*, const Node*>, PairHash> known_equal;
  std::vector<std::pair<const Node*, const Node*>> todo{{x.node_.get(), y.node_.get()}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (a == b) continue;
    if (a->kind != b->kind || a->depth != b->depth) return false;
    if (a->kind != FiniteThread::Kind::Post) continue;
    if (a->action != b->action) return false;
    if (!known_equal.insert({a, b}).second) continue;
    todo.emplace_back(a->branches[0].node_.get(), b->branches[0].node_.get());
    todo.emplace_back(a->branches[1].node_.get(), b->branches[1].node_.get());
  }
  return true;
}

std::string to_string(const FiniteThread& t) {
  switch (t.kind()) {
    case FiniteThread::Kind::S: return "S";
    case FiniteThread::Kind::D: return "D";
    case FiniteThread::Kind::Post: break;
  }
  if (t.on_true() == t.on_false()) return t.action().name() + "*" + to_string(t.on_true());
  return "(" + to_string(t.on_true()) + " <|" + t.action().name() + "|> " + to_string(t.on_false()) + ")";
}

std::string to_string(const LinearSpec& spec) {
  std::string out;
  for (StateId i = 0; i < spec.size(); ++i) {
    const auto& eq = spec.state(i);
    out += (i == spec.root() ? "*x" : "x") + std::to_string(i) + " = ";
    switch (eq.kind) {
      case Equation::Kind::S: out += "S"; break;
      case Equation::Kind::D: out += "D"; break;
      case Equation::Kind::Post:
        if (eq.on_true == eq.on_false) {
          out += eq.action.name() + "*x" + std::to_string(eq.on_true);
        } else {
          out += "x" + std::to_string(eq.on_true) + " <|" + eq.action.name() + "|> x" +
                 std::to_string(eq.on_false);
        }
        break;
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximation and residuals

FiniteThread pi(std::size_t n, const LinearSpec& spec) {
  std::map<std::pair<StateId, std::size_t>, FiniteThread> memo;
  auto go = [&](auto& self, StateId s, std::size_t depth) -> FiniteThread {
    if (depth == 0) return FiniteThread::deadlock();
    const auto& eq = spec.state(s);
    if (eq.kind == Equation::Kind::S) return FiniteThread::terminate();
    if (eq.kind == Equation::Kind::D) return FiniteThread::deadlock();
    auto key = std::make_pair(s, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    FiniteThread t = self(self, eq.on_true, depth - 1);
    FiniteThread f = eq.on_false == eq.on_true ? t : self(self, eq.on_false, depth - 1);
    FiniteThread result = FiniteThread::post(eq.action, std::move(t), std::move(f));
    memo.emplace(key, result);
    return result;
  };
  return go(go, spec.root(), n);
}

FiniteThread pi(std::size_t n, const FiniteThread& t) {
  if (n == 0) return FiniteThread::deadlock();
  if (t.kind() != FiniteThread::Kind::Post) return t;
  if (t.depth() <= n) return t;
  return FiniteThread::post(t.action(), pi(n - 1, t.on_true()), pi(n - 1, t.on_false()));
}

std::set<StateId> residual_states(const LinearSpec& spec) {
  std::set<StateId> seen{spec.root()};
  std::vector<StateId> todo{spec.root()};
  while (!todo.empty()) {
    StateId s = todo.back();
    todo.pop_back();
    const auto& eq = spec.state(s);
    if (eq.kind != Equation::Kind::Post) continue;
    for (StateId next : {eq.on_true, eq.on_false}) {
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

LinearSpec restrict_to_reachable(const LinearSpec& spec) {
  std::vector<StateId> order{spec.root()};
  std::unordered_map<StateId, StateId> renumber{{spec.root(), 0}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto& eq = spec.state(order[head]);
    if (eq.kind != Equation::Kind::Post) continue;
    for (StateId next : {eq.on_true, eq.on_false}) {
      if (renumber.emplace(next, order.size()).second) order.push_back(next);
    }
  }
  std::vector<Equation> states;
  states.reserve(order.size());
  for (StateId old : order) {
    Equation eq = spec.state(old);
    if (eq.kind == Equation::Kind::Post) {
      eq.on_true = renumber.at(eq.on_true);
      eq.on_false = renumber.at(eq.on_false);
    }
    states.push_back(std::move(eq));
  }
  return LinearSpec(std::move(states), 0);
}

// ---------------------------------------------------------------------------
// Equality by partition refinement

std::vector<std::size_t> equivalence_classes(const LinearSpec& spec) {
  const std::size_t n = spec.size();
  std::vector<std::size_t> cls(n);
  std::size_t count = 0;
  {
    std::map<std::pair<int, std::string>, std::size_t> initial;
    for (StateId s = 0; s < n; ++s) {
      const auto& eq = spec.state(s);
      auto key = std::make_pair(static_cast<int>(eq.kind), eq.action.name());
      auto [it, fresh] = initial.emplace(key, initial.size());
      cls[s] = it->second;
    }
    count = initial.size();
  }
  while (true) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> split;
    std::vector<std::size_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      const auto& eq = spec.state(s);
      auto key = eq.kind == Equation::Kind::Post
                     ? std::make_tuple(cls[s], cls[eq.on_true] + 1, cls[eq.on_false] + 1)
                     : std::make_tuple(cls[s], std::size_t{0}, std::size_t{0});
      auto [it, fresh] = split.emplace(key, split.size());
      next[s] = it->second;
    }
    cls = std::move(next);
    if (split.size() == count) break;
    count = split.size();
  }
  return cls;
}

LinearSpec disjoint_union(const LinearSpec& p, const LinearSpec& q) {
  std::vector<Equation> states = p.states();
  const std::size_t shift = p.size();
  for (Equation eq : q.states()) {
    if (eq.kind == Equation::Kind::Post) {
      eq.on_true += shift;
      eq.on_false += shift;
    }
    states.push_back(std::move(eq));
  }
  return LinearSpec(std::move(states), p.root());
}

bool decide_equal(const LinearSpec& p, const LinearSpec& q) {
  auto cls = equivalence_classes(disjoint_union(p, q));
  return cls[p.root()] == cls[p.size() + q.root()];
}

LinearSpec minimize(const LinearSpec& spec) {
  LinearSpec reachable = restrict_to_reachable(spec);
  auto cls = equivalence_classes(reachable);
  std::vector<StateId> representative(reachable.size(), reachable.size());
  for (StateId s = reachable.size(); s-- > 0;) representative[cls[s]] = s;
  std::vector<Equation> quotient;
  std::size_t classes = 0;
  for (auto c : cls) classes = std::max(classes, c + 1);
  quotient.reserve(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    Equation eq = reachable.state(representative[c]);
    if (eq.kind == Equation::Kind::Post) {
      eq.on_true = cls[eq.on_true];
      eq.on_false = cls[eq.on_false];
    }
    quotient.push_back(std::move(eq));
  }
  return restrict_to_reachable(LinearSpec(std::move(quotient), cls[reachable.root()]));
}

}  // namespace instrseq
