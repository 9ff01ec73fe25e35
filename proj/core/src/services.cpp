#include "instrseq/services.hpp"

#include <charconv>
#include <deque>
#include <map>
#include <set>

#include "goto_graph.hpp"
#include "instrseq/error.hpp"
#include "instrseq/extraction.hpp"

namespace instrseq {
namespace {

// "push:3" -> 3 when the prefix matches and 1 <= value <= limit.
std::optional<int> indexed_method(std::string_view method, std::string_view name, int limit) {
  if (method.size() <= name.size() + 1 || method.substr(0, name.size()) != name || method[name.size()] != ':') {
    return std::nullopt;
  }
  std::string_view digits = method.substr(name.size() + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1 || value > limit) return std::nullopt;
  return value;
}

}  // namespace

StepResult BooleanRegister::step(const ServiceState& state, std::string_view method) const {
  if (method == "set:T") return StepResult::answer(true, {1});
  if (method == "set:F") return StepResult::answer(true, {0});
  if (method == "get") return StepResult::answer(state.at(0) != 0, state);
  return StepResult::unknown();
}

BoundedStack::BoundedStack(std::string focus, std::size_t capacity, int alphabet)
    : Service(std::move(focus)), capacity_(capacity), alphabet_(alphabet) {
  if (alphabet_ < 1) throw PreconditionError("stack alphabet must be at least 1");
}

StepResult BoundedStack::step(const ServiceState& state, std::string_view method) const {
  if (method == "pop") {
    if (state.empty()) return StepResult::answer(false, state);
    ServiceState next(state.begin(), state.end() - 1);
    return StepResult::answer(true, std::move(next));
  }
  if (auto i = indexed_method(method, "push", alphabet_)) {
    if (state.size() >= capacity_) return StepResult::overflow();
    ServiceState next = state;
    next.push_back(*i);
    return StepResult::answer(true, std::move(next));
  }
  if (auto i = indexed_method(method, "topeq", alphabet_)) {
    return StepResult::answer(!state.empty() && state.back() == *i, state);
  }
  return StepResult::unknown();
}

std::size_t BoundedStack::state_bound() const {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t depth = 0; depth <= capacity_; ++depth) {
    total += layer;
    layer *= static_cast<std::size_t>(alphabet_);
  }
  return total;
}

std::string BoundedStack::describe() const {
  return "stack:" + focus() + ":capacity=" + std::to_string(capacity_) + ":alphabet=" + std::to_string(alphabet_);
}

TableService::TableService(std::string focus, int state_count, int initial,
                           std::map<std::pair<int, std::string>, Transition> table)
    : Service(std::move(focus)), state_count_(state_count), initial_(initial), table_(std::move(table)) {
  if (state_count_ < 1 || initial_ < 0 || initial_ >= state_count_) {
    throw PreconditionError("table service needs a valid initial state");
  }
  for (const auto& [key, tr] : table_) {
    if (key.first < 0 || key.first >= state_count_ || tr.next < 0 || tr.next >= state_count_) {
      throw PreconditionError("table service transition outside its state space");
    }
  }
}

StepResult TableService::step(const ServiceState& state, std::string_view method) const {
  auto it = table_.find({state.at(0), std::string(method)});
  if (it == table_.end()) return StepResult::unknown();
  return StepResult::answer(it->second.reply, {it->second.next});
}

std::unique_ptr<Service> parse_service(std::string_view text) {
  auto fields = [&] {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
      auto colon = text.find(':', start);
      out.push_back(text.substr(start, colon - start));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    return out;
  }();
  auto identifier = [&](std::string_view focus) {
    if (focus.empty() || scan_action(focus) != focus.size() || focus.find('.') != std::string_view::npos) {
      throw ParseError(0, "invalid service focus '" + std::string(focus) + "'");
    }
    return std::string(focus);
  };
  if (fields[0] == "reg") {
    if (fields.size() != 2) throw ParseError(0, "expected reg:<focus>");
    return std::make_unique<BooleanRegister>(identifier(fields[1]));
  }
  if (fields[0] == "stack") {
    if (fields.size() < 3) throw ParseError(0, "expected stack:<focus>:capacity=K[:alphabet=N]");
    std::size_t capacity = 0;
    int alphabet = 1;
    bool have_capacity = false;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      auto eq = fields[i].find('=');
      if (eq == std::string_view::npos) throw ParseError(0, "expected key=value in stack service");
      auto key = fields[i].substr(0, eq);
      auto value = fields[i].substr(eq + 1);
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size() || v > 1'000'000) {
        throw ParseError(0, "invalid number in stack service");
      }
      if (key == "capacity") {
        capacity = static_cast<std::size_t>(v);
        have_capacity = true;
      } else if (key == "alphabet") {
        alphabet = static_cast<int>(v);
      } else {
        throw ParseError(0, "unknown stack parameter '" + std::string(key) + "'");
      }
    }
    if (!have_capacity) throw ParseError(0, "stack service needs capacity=K");
    if (alphabet < 1) throw ParseError(0, "stack alphabet must be at least 1");
    return std::make_unique<BoundedStack>(identifier(fields[1]), capacity, alphabet);
  }
  throw ParseError(0, "unknown service kind '" + std::string(fields[0]) + "'");
}

LinearSpec use(const LinearSpec& thread, const Service& service) {
  using detail::GotoNode;
  using Config = std::pair<StateId, ServiceState>;

  std::map<Config, std::size_t> index;
  std::vector<Config> configs;
  // parent[i] = (predecessor node, action taken) for error paths.
  std::vector<std::pair<std::size_t, std::string>> parent;
  std::vector<GotoNode> nodes;

  auto intern = [&](Config c, std::size_t from, const std::string& via) {
    auto [it, fresh] = index.emplace(c, configs.size());
    if (fresh) {
      configs.push_back(std::move(c));
      parent.emplace_back(from, via);
      nodes.emplace_back();
    }
    return it->second;
  };
  auto path_to = [&](std::size_t node) {
    std::vector<std::string> path;
    while (node != detail::kOutside) {
      if (!parent[node].second.empty()) path.push_back(parent[node].second);
      node = parent[node].first;
    }
    return std::vector<std::string>(path.rbegin(), path.rend());
  };

  intern({thread.root(), service.initial()}, detail::kOutside, "");
  for (std::size_t at = 0; at < configs.size(); ++at) {
    const auto [s, sigma] = configs[at];
    const Equation& eq = thread.state(s);
    switch (eq.kind) {
      case Equation::Kind::S: nodes[at] = GotoNode::halt(); continue;
      case Equation::Kind::D: nodes[at] = GotoNode::abort(); continue;
      case Equation::Kind::Post: break;
    }
    const std::string& name = eq.action.name();
    if (eq.action.focus() != service.focus()) {
      std::size_t t = intern({eq.on_true, sigma}, at, name + "/T");
      std::size_t f = intern({eq.on_false, sigma}, at, name + "/F");
      nodes[at] = GotoNode::post(eq.action, t, f);
      continue;
    }
    StepResult r = service.step(sigma, eq.action.method());
    switch (r.status) {
      case StepResult::Status::UnknownMethod: nodes[at] = GotoNode::abort(); break;
      case StepResult::Status::CapacityExceeded: {
        auto path = path_to(at);
        path.push_back(name);
        throw ServiceError("service '" + service.describe() + "' cannot serve '" + name + "': capacity exceeded",
                           std::move(path));
      }
      case StepResult::Status::Reply: {
        StateId next = r.reply ? eq.on_true : eq.on_false;
        nodes[at] = GotoNode::forward(intern({next, std::move(r.next)}, at, name + (r.reply ? "/T" : "/F")));
        break;
      }
    }
  }
  return restrict_to_reachable(detail::resolve(nodes, 0).spec);
}

CodeSeq zn_program(std::size_t n) {
  if (n == 0) throw PreconditionError("Z_n needs n >= 1");
  std::vector<Instruction> out;
  out.reserve(5 * n + 1);
  const Action a("a");
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(Instruction::pos_test(a));
    out.push_back(Instruction::basic(Action("b" + std::to_string(i) + ".set:T")));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(Instruction::pos_test(Action("b" + std::to_string(i) + ".get")));
    out.push_back(Instruction::basic(Action("c")));
    out.push_back(Instruction::basic(Action("d")));
  }
  out.push_back(Instruction::halt());
  return CodeSeq(std::move(out));
}

std::vector<StateId> n_residuals(const LinearSpec& spec, std::size_t n) {
  std::vector<StateId> layer{spec.root()};
  for (std::size_t depth = 0; depth < n; ++depth) {
    std::vector<StateId> next;
    next.reserve(2 * layer.size());
    for (StateId s : layer) {
      const auto& eq = spec.state(s);
      if (eq.kind != Equation::Kind::Post) return {};
      next.push_back(eq.on_true);
      next.push_back(eq.on_false);
    }
    layer = std::move(next);
  }
  // Breadth-first expansion interleaves reply sequences by prefix, so the
  // layer is already ordered lexicographically with true < false.
  return layer;
}

bool has_a_n_property(const LinearSpec& spec, const Action& a, std::size_t n) {
  if (n == 0 || n >= 63) return false;
  const FiniteThread chain = FiniteThread::prefix_chain(a, n, FiniteThread::deadlock());
  if (pi(n, spec) != chain) return false;
  const auto residuals = n_residuals(spec, n);
  if (residuals.size() != (std::size_t{1} << n)) return false;
  const FiniteThread starts_with_a = FiniteThread::prefix(a, FiniteThread::deadlock());
  const auto cls = equivalence_classes(spec);
  std::set<std::size_t> seen;
  for (StateId r : residuals) {
    if (!seen.insert(cls[r]).second) return false;
    if (pi(1, spec.with_root(r)) == starts_with_a) return false;
  }
  return true;
}

std::optional<Position> code_has_a_n_property(const CodeSeq& code, const Action& a, std::size_t n) {
  const ExtractionResult all = extract_all(code);
  for (Position i = 1; i <= static_cast<Position>(code.size()); ++i) {
    if (has_a_n_property(all.spec.with_root(all.position_state[static_cast<std::size_t>(i - 1)]), a, n)) return i;
  }
  return std::nullopt;
}

}  // namespace instrseq
