#include "instrseq/code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "instrseq/error.hpp"

namespace instrseq {

Instruction Instruction::basic(Action a, Orientation o) {
  return {o == Orientation::Forward ? Op::FwdBasic : Op::BwdBasic, std::move(a), 0};
}

Instruction Instruction::pos_test(Action a, Orientation o) {
  return {o == Orientation::Forward ? Op::FwdPosTest : Op::BwdPosTest, std::move(a), 0};
}

Instruction Instruction::neg_test(Action a, Orientation o) {
  return {o == Orientation::Forward ? Op::FwdNegTest : Op::BwdNegTest, std::move(a), 0};
}

Instruction Instruction::jump(Counter k, Orientation o) {
  if (k == 0) throw PreconditionError("jump counter must be at least 1");
  return {o == Orientation::Forward ? Op::FwdJump : Op::BwdJump, {}, k};
}

bool Instruction::has_action() const noexcept {
  switch (op) {
    case Op::FwdBasic:
    case Op::FwdPosTest:
    case Op::FwdNegTest:
    case Op::BwdBasic:
    case Op::BwdPosTest:
    case Op::BwdNegTest:
      return true;
    default:
      return false;
  }
}

bool Instruction::is_test() const noexcept {
  return op == Op::FwdPosTest || op == Op::FwdNegTest || op == Op::BwdPosTest ||
         op == Op::BwdNegTest;
}

bool Instruction::is_forward() const noexcept {
  return op == Op::FwdBasic || op == Op::FwdPosTest || op == Op::FwdNegTest || op == Op::FwdJump;
}

bool Instruction::is_backward() const noexcept {
  return op == Op::BwdBasic || op == Op::BwdPosTest || op == Op::BwdNegTest || op == Op::BwdJump;
}

std::string to_string(const Instruction& i) {
  switch (i.op) {
    case Op::FwdBasic: return "/" + i.action.name();
    case Op::FwdPosTest: return "+/" + i.action.name();
    case Op::FwdNegTest: return "-/" + i.action.name();
    case Op::FwdJump: return "/#" + std::to_string(i.counter);
    case Op::BwdBasic: return "\\" + i.action.name();
    case Op::BwdPosTest: return "+\\" + i.action.name();
    case Op::BwdNegTest: return "-\\" + i.action.name();
    case Op::BwdJump: return "\\#" + std::to_string(i.counter);
    case Op::Halt: return "!";
    case Op::Abort: return "#";
  }
  return {};
}

OpSet OpSet::all() {
  OpSet s;
  for (std::size_t i = 0; i < kOpCount; ++i) s.insert(static_cast<Op>(i));
  return s;
}

OpSet OpSet::c_minus() { return {Op::FwdPosTest, Op::FwdJump, Op::BwdJump, Op::Halt}; }

OpSet OpSet::reduced() { return {Op::FwdPosTest, Op::FwdJump, Op::BwdJump, Op::Halt, Op::Abort}; }

CodeSeq::CodeSeq(std::vector<Instruction> instructions) : instrs_(std::move(instructions)) {
  if (instrs_.empty()) throw PreconditionError("a piece of code has at least one instruction");
}

const Instruction& CodeSeq::at(Position pos) const {
  if (pos < 1 || static_cast<std::size_t>(pos) > instrs_.size()) {
    throw PreconditionError("position " + std::to_string(pos) + " out of range");
  }
  return instrs_[static_cast<std::size_t>(pos - 1)];
}

std::set<Action> CodeSeq::actions() const {
  std::set<Action> out;
  for (const auto& i : instrs_) {
    if (i.has_action()) out.insert(i.action);
  }
  return out;
}

namespace {

class CodeParser {
 public:
  explicit CodeParser(std::string_view text) : text_(text) {}

  CodeSeq parse() {
    std::vector<Instruction> out;
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty input");
    while (true) {
      out.push_back(instruction());
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != ';') throw ParseError(pos_, "expected ';'");
      ++pos_;
      skip_space();
      if (at_end()) throw ParseError(pos_, "expected an instruction after ';'");
    }
    return CodeSeq(std::move(out));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Instruction instruction() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      return Instruction::halt();
    }
    if (c == '#') {
      ++pos_;
      return Instruction::abort();
    }
    int sign = 0;
    if (c == '+' || c == '-') {
      sign = c == '+' ? 1 : -1;
      ++pos_;
      c = peek();
    }
    if (c != '/' && c != '\\') throw ParseError(pos_, "expected an instruction");
    Orientation o = c == '/' ? Orientation::Forward : Orientation::Backward;
    ++pos_;
    if (peek() == '#') {
      if (sign != 0) throw ParseError(pos_, "jumps cannot carry a test sign");
      ++pos_;
      return Instruction::jump(counter(), o);
    }
    Action a = action();
    if (sign > 0) return Instruction::pos_test(std::move(a), o);
    if (sign < 0) return Instruction::neg_test(std::move(a), o);
    return Instruction::basic(std::move(a), o);
  }

  Counter counter() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected a jump counter");
    Counter k = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
    if (ec != std::errc{} || k > static_cast<Counter>(std::numeric_limits<Position>::max() / 4)) {
      throw ParseError(start, "jump counter too large");
    }
    if (k == 0) throw ParseError(start, "jump counter must be at least 1");
    return k;
  }

  Action action() {
    std::size_t len = scan_action(text_.substr(pos_));
    if (len == 0) throw ParseError(pos_, "expected an action name");
    Action a(std::string(text_.substr(pos_, len)));
    pos_ += len;
    return a;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CodeSeq parse_code(std::string_view text) { return CodeParser(text).parse(); }

std::string to_string(const CodeSeq& code) {
  std::string out;
  for (const auto& i : code) {
    if (!out.empty()) out += ';';
    out += to_string(i);
  }
  return out;
}

CodeSeq concat(const CodeSeq& x, const CodeSeq& y) {
  std::vector<Instruction> out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return CodeSeq(std::move(out));
}

CodeSeq concat(std::span<const CodeSeq> parts) {
  std::vector<Instruction> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return CodeSeq(std::move(out));
}

std::vector<Position> successors(const CodeSeq& code, Position pos) {
  const Instruction& i = code.at(pos);
  const auto k = static_cast<Position>(i.counter);
  switch (i.op) {
    case Op::FwdBasic: return {pos + 1};
    case Op::FwdPosTest:
    case Op::FwdNegTest: return {pos + 1, pos + 2};
    case Op::FwdJump: return {pos + k};
    case Op::BwdBasic: return {pos - 1};
    case Op::BwdPosTest:
    case Op::BwdNegTest: return {pos - 1, pos - 2};
    case Op::BwdJump: return {pos - k};
    case Op::Halt:
    case Op::Abort: return {};
  }
  return {};
}

bool is_program(const CodeSeq& code) {
  const auto n = static_cast<Position>(code.size());
  for (Position j = 1; j <= n; ++j) {
    for (Position s : successors(code, j)) {
      if (s < 1 || s > n) return false;
    }
  }
  return true;
}

Counter max_jump_counter(const CodeSeq& code) {
  Counter m = 0;
  for (const auto& i : code) {
    if (i.is_jump()) m = std::max(m, i.counter);
  }
  return m;
}

bool is_in_ck(const CodeSeq& code, Counter k) { return max_jump_counter(code) <= k; }

bool uses_only(const CodeSeq& code, const OpSet& allowed) {
  return std::all_of(code.begin(), code.end(), [&](const Instruction& i) { return allowed.contains(i.op); });
}

}  // namespace instrseq
