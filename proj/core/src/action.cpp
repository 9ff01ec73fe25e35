#include "instrseq/action.hpp"

#include <cctype>

#include "instrseq/error.hpp"

namespace instrseq {
namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_word(char c) { return is_alnum(c) || c == '_'; }

// [A-Za-z][A-Za-z0-9_]*
std::size_t scan_identifier(std::string_view text, std::size_t at) {
  if (at >= text.size() || !is_alpha(text[at])) return 0;
  std::size_t end = at + 1;
  while (end < text.size() && is_word(text[end])) ++end;
  return end - at;
}

}  // namespace

std::size_t scan_action(std::string_view text) noexcept {
  std::size_t len = scan_identifier(text, 0);
  if (len == 0) return 0;
  if (len < text.size() && text[len] == '.') {
    std::size_t method = scan_identifier(text, len + 1);
    if (method == 0) return len;
    len += 1 + method;
    if (len < text.size() && text[len] == ':') {
      std::size_t arg = len + 1;
      while (arg < text.size() && is_alnum(text[arg])) ++arg;
      if (arg > len + 1) len = arg;
    }
  }
  return len;
}

Action::Action(std::string name) : name_(std::move(name)) {
  if (name_.empty() || scan_action(name_) != name_.size()) {
    throw ParseError(0, "invalid action name '" + name_ + "'");
  }
}

std::string_view Action::focus() const noexcept {
  std::string_view v = name_;
  auto dot = v.find('.');
  return dot == std::string_view::npos ? std::string_view{} : v.substr(0, dot);
}

std::string_view Action::method() const noexcept {
  std::string_view v = name_;
  auto dot = v.find('.');
  return dot == std::string_view::npos ? std::string_view{} : v.substr(dot + 1);
}

}  // namespace instrseq
