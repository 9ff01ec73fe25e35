#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace instrseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed code, PGA, spec or service text. `offset` is a 0-based character
/// offset into the input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& reason)
      : Error("at offset " + std::to_string(offset) + ": " + reason), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its contract (non-program input, action
/// outside a bijection's domain, enumeration cap exceeded, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised by the use operator when a service cannot represent a reachable
/// configuration (bounded stack overflow). `path` lists the actions taken
/// from the root of the thread to the offending request.
class ServiceError : public Error {
 public:
  ServiceError(const std::string& what, std::vector<std::string> path)
      : Error(what), path_(std::move(path)) {}

  const std::vector<std::string>& path() const noexcept { return path_; }

 private:
  std::vector<std::string> path_;
};

}  // namespace instrseq
