#include "instrseq/pga.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "goto_graph.hpp"
#include "instrseq/error.hpp"
#include "instrseq/transforms.hpp"

namespace instrseq {

PgaProgram::PgaProgram(std::vector<PgaInstruction> prefix, std::vector<PgaInstruction> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (prefix_.empty() && period_.empty()) throw PreconditionError("empty PGA program");
}

std::string to_string(const PgaInstruction& u) {
  switch (u.kind) {
    case PgaInstruction::Kind::Basic: return u.action.name();
    case PgaInstruction::Kind::PosTest: return "+" + u.action.name();
    case PgaInstruction::Kind::NegTest: return "-" + u.action.name();
    case PgaInstruction::Kind::Jump: return "#" + std::to_string(u.counter);
    case PgaInstruction::Kind::Halt: return "!";
  }
  return {};
}

namespace {

std::string join(const std::vector<PgaInstruction>& us) {
  std::string out;
  for (const auto& u : us) {
    if (!out.empty()) out += ';';
    out += to_string(u);
  }
  return out;
}

class PgaParser {
 public:
  explicit PgaParser(std::string_view text) : text_(text) {}

  PgaProgram parse() {
    std::vector<PgaInstruction> prefix;
    std::vector<PgaInstruction> period;
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty PGA program");
    while (true) {
      if (peek() == '(') {
        ++pos_;
        period = sequence();
        skip_space();
        if (peek() != ')') throw ParseError(pos_, "expected ')'");
        ++pos_;
        if (text_.substr(pos_, 2) != "^w") throw ParseError(pos_, "expected '^w' after a repeated part");
        pos_ += 2;
        skip_space();
        if (!at_end()) throw ParseError(pos_, "the repeated part must be the last component");
        break;
      }
      prefix.push_back(instruction());
      skip_space();
      if (at_end()) break;
      if (peek() != ';') throw ParseError(pos_, "expected ';'");
      ++pos_;
      skip_space();
    }
    return PgaProgram(std::move(prefix), std::move(period));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::vector<PgaInstruction> sequence() {
    std::vector<PgaInstruction> out;
    skip_space();
    if (peek() == ')') throw ParseError(pos_, "empty repeated part");
    while (true) {
      out.push_back(instruction());
      skip_space();
      if (peek() != ';') break;
      ++pos_;
      skip_space();
    }
    return out;
  }

  PgaInstruction instruction() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      return PgaInstruction::halt();
    }
    if (c == '#') {
      ++pos_;
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(start, "expected a jump counter");
      Counter k = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
      if (ec != std::errc{} || k > (Counter{1} << 40)) throw ParseError(start, "jump counter too large");
      return PgaInstruction::jump(k);
    }
    int sign = 0;
    if (c == '+' || c == '-') {
      sign = c == '+' ? 1 : -1;
      ++pos_;
    }
    std::size_t len = scan_action(text_.substr(pos_));
    if (len == 0) throw ParseError(pos_, "expected an instruction");
    Action a(std::string(text_.substr(pos_, len)));
    pos_ += len;
    if (sign > 0) return PgaInstruction::pos_test(std::move(a));
    if (sign < 0) return PgaInstruction::neg_test(std::move(a));
    return PgaInstruction::basic(std::move(a));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Positions are 1-based over prefix;period. Positions past the end wrap into
// the period, or leave the program when there is none.
struct Layout {
  std::size_t prefix;
  std::size_t period;

  std::size_t length() const { return prefix + period; }

  // Reduced position in 1..length(), or 0 when outside.
  std::uint64_t reduce(std::uint64_t target) const {
    if (target <= length()) return target;
    if (period == 0) return 0;
    return prefix + (target - prefix - 1) % period + 1;
  }
};

}  // namespace

std::string to_string(const PgaProgram& p) {
  std::string out = join(p.prefix());
  if (p.is_periodic()) {
    if (!out.empty()) out += ';';
    out += "(" + join(p.period()) + ")^w";
  }
  return out;
}

PgaProgram parse_pga(std::string_view text) { return PgaParser(text).parse(); }

PgaProgram canonicalize(const PgaProgram& p) {
  if (!p.is_periodic()) return p;
  std::vector<PgaInstruction> period = p.period();
  // Primitive root: the smallest d dividing |Y| with Y = (Y_1..d)^(|Y|/d).
  for (std::size_t d = 1; d < period.size(); ++d) {
    if (period.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < period.size() && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) {
      period.resize(d);
      break;
    }
  }
  std::vector<PgaInstruction> prefix = p.prefix();
  while (!prefix.empty() && prefix.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    prefix.pop_back();
  }
  return PgaProgram(std::move(prefix), std::move(period));
}

PgaProgram concat(const PgaProgram& p, const PgaProgram& q) {
  if (p.is_periodic()) return p;
  std::vector<PgaInstruction> prefix = p.prefix();
  prefix.insert(prefix.end(), q.prefix().begin(), q.prefix().end());
  return PgaProgram(std::move(prefix), q.period());
}

LinearSpec pga_extract(const PgaProgram& p) {
  using detail::GotoNode;
  const Layout layout{p.prefix().size(), p.period().size()};
  auto node = [&](std::uint64_t target) -> std::size_t {
    auto r = layout.reduce(target);
    return r == 0 ? detail::kOutside : static_cast<std::size_t>(r - 1);
  };
  std::vector<GotoNode> nodes;
  nodes.reserve(layout.length());
  for (std::uint64_t i = 1; i <= layout.length(); ++i) {
    const PgaInstruction& u = i <= layout.prefix ? p.prefix()[i - 1] : p.period()[i - 1 - layout.prefix];
    switch (u.kind) {
      case PgaInstruction::Kind::Basic: nodes.push_back(GotoNode::post(u.action, node(i + 1), node(i + 1))); break;
      case PgaInstruction::Kind::PosTest: nodes.push_back(GotoNode::post(u.action, node(i + 1), node(i + 2))); break;
      case PgaInstruction::Kind::NegTest: nodes.push_back(GotoNode::post(u.action, node(i + 2), node(i + 1))); break;
      case PgaInstruction::Kind::Jump:
        nodes.push_back(u.counter == 0 ? GotoNode::abort() : GotoNode::forward(node(i + u.counter)));
        break;
      case PgaInstruction::Kind::Halt: nodes.push_back(GotoNode::halt()); break;
    }
  }
  return restrict_to_reachable(detail::resolve(nodes, 0).spec);
}

PgaInstruction pga_image(const Instruction& i, std::size_t n) {
  switch (i.op) {
    case Op::FwdBasic: return PgaInstruction::basic(i.action);
    case Op::FwdPosTest: return PgaInstruction::pos_test(i.action);
    case Op::FwdNegTest: return PgaInstruction::neg_test(i.action);
    case Op::FwdJump: return PgaInstruction::jump(i.counter);
    case Op::BwdJump:
      if (i.counter >= n) throw PreconditionError("backward jump reaches outside the program");
      return PgaInstruction::jump(n - i.counter);
    case Op::Halt: return PgaInstruction::halt();
    case Op::Abort: return PgaInstruction::jump(0);
    default: throw PreconditionError("no PGA image for backward basic or test instructions");
  }
}

PgaProgram p2pga(const CodeSeq& code) {
  if (!is_program(code)) throw PreconditionError("projection to PGA requires a C-program");
  CodeSeq forward = apply_h(code);
  std::vector<PgaInstruction> period;
  period.reserve(forward.size());
  for (const auto& i : forward) period.push_back(pga_image(i, forward.size()));
  return PgaProgram({}, std::move(period));
}

CodeSeq pga2c(const PgaProgram& p) {
  const Layout layout{p.prefix().size(), p.period().size()};
  std::vector<Instruction> out;
  out.reserve(layout.length() + 2);
  std::uint64_t reach = layout.length();  // furthest fall-through successor
  for (std::uint64_t i = 1; i <= layout.length(); ++i) {
    const PgaInstruction& u = i <= layout.prefix ? p.prefix()[i - 1] : p.period()[i - 1 - layout.prefix];
    switch (u.kind) {
      case PgaInstruction::Kind::Basic:
        out.push_back(Instruction::basic(u.action));
        reach = std::max(reach, i + 1);
        break;
      case PgaInstruction::Kind::PosTest:
        out.push_back(Instruction::pos_test(u.action));
        reach = std::max(reach, i + 2);
        break;
      case PgaInstruction::Kind::NegTest:
        out.push_back(Instruction::neg_test(u.action));
        reach = std::max(reach, i + 2);
        break;
      case PgaInstruction::Kind::Halt: out.push_back(Instruction::halt()); break;
      case PgaInstruction::Kind::Jump: {
        if (u.counter == 0) {
          out.push_back(Instruction::abort());
          break;
        }
        const std::uint64_t target = layout.period == 0 ? i + u.counter : layout.reduce(i + u.counter);
        if (target == i) {
          out.push_back(Instruction::abort());
        } else if (target > i) {
          out.push_back(Instruction::jump(target - i));
        } else {
          out.push_back(Instruction::jump(i - target, Orientation::Backward));
        }
        break;
      }
    }
  }
  // Fall-through successors past the period wrap around: position
  // length()+t continues at prefix+t.
  if (layout.period > 0) {
    for (std::uint64_t t = 1; layout.length() + t <= reach; ++t) {
      out.push_back(Instruction::jump(layout.period, Orientation::Backward));
    }
  }
  return CodeSeq(std::move(out));
}

}  // namespace instrseq
