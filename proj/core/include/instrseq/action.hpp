#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace instrseq {

/// An action name such as `a`, `b1.get` or `s.push:1`. The focus is the text
/// before the first '.', the method is the text after it.
class Action {
 public:
  Action() = default;
  /// Throws ParseError if `name` does not match the action grammar.
  explicit Action(std::string name);

  const std::string& name() const noexcept { return name_; }
  bool has_focus() const noexcept { return name_.find('.') != std::string::npos; }
  std::string_view focus() const noexcept;
  std::string_view method() const noexcept;
  bool empty() const noexcept { return name_.empty(); }

  friend auto operator<=>(const Action&, const Action&) = default;
  friend bool operator==(const Action&, const Action&) = default;

 private:
  std::string name_;
};

/// Length of the longest prefix of `text` that is a valid action name (0 if none).
std::size_t scan_action(std::string_view text) noexcept;

}  // namespace instrseq
