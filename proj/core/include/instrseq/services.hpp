#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "instrseq/action.hpp"
#include "instrseq/code.hpp"
#include "instrseq/thread.hpp"

namespace instrseq {

/// Encoded state of a finite-state service.
using ServiceState = std::vector<int>;

struct StepResult {
  enum class Status : std::uint8_t { Reply, UnknownMethod, CapacityExceeded };

  Status status = Status::UnknownMethod;
  bool reply = false;
  ServiceState next;

  static StepResult answer(bool reply, ServiceState next) {
    return {Status::Reply, reply, std::move(next)};
  }
  static StepResult unknown() { return {}; }
  static StepResult overflow() { return {Status::CapacityExceeded, false, {}}; }
};

/// A finite-state service reached through a focus. Instances are immutable.
class Service {
 public:
  explicit Service(std::string focus) : focus_(std::move(focus)) {}
  virtual ~Service() = default;

  const std::string& focus() const noexcept { return focus_; }
  virtual ServiceState initial() const = 0;
  virtual StepResult step(const ServiceState& state, std::string_view method) const = 0;
  /// Upper bound on the number of reachable states.
  virtual std::size_t state_bound() const = 0;
  virtual std::string describe() const = 0;

 private:
  std::string focus_;
};

/// Methods set:T, set:F (reply true) and get (reply = value). Initially F.
class BooleanRegister final : public Service {
 public:
  explicit BooleanRegister(std::string focus, bool initial = false)
      : Service(std::move(focus)), initial_(initial) {}

  ServiceState initial() const override { return {initial_ ? 1 : 0}; }
  StepResult step(const ServiceState& state, std::string_view method) const override;
  std::size_t state_bound() const override { return 2; }
  std::string describe() const override { return "reg:" + focus(); }

 private:
  bool initial_;
};

/// Stack over {1..alphabet} holding at most `capacity` items. Methods push:i,
/// topeq:i and pop. Pushing onto a full stack is a capacity error.
class BoundedStack final : public Service {
 public:
  BoundedStack(std::string focus, std::size_t capacity, int alphabet);

  ServiceState initial() const override { return {}; }
  StepResult step(const ServiceState& state, std::string_view method) const override;
  std::size_t state_bound() const override;
  std::string describe() const override;

  std::size_t capacity() const noexcept { return capacity_; }
  int alphabet() const noexcept { return alphabet_; }

 private:
  std::size_t capacity_;
  int alphabet_;
};

/// Generic finite-state service given by an explicit transition table. This is
/// the adapter for reply functions on co-action histories: state i stands for
/// the class of histories after which the service behaves the same.
class TableService final : public Service {
 public:
  struct Transition {
    bool reply;
    int next;
  };

  TableService(std::string focus, int state_count, int initial,
               std::map<std::pair<int, std::string>, Transition> table);

  ServiceState initial() const override { return {initial_}; }
  StepResult step(const ServiceState& state, std::string_view method) const override;
  std::size_t state_bound() const override { return static_cast<std::size_t>(state_count_); }
  std::string describe() const override { return "table:" + focus(); }

 private:
  int state_count_;
  int initial_;
  std::map<std::pair<int, std::string>, Transition> table_;
};

/// `reg:b1` or `stack:s:capacity=K:alphabet=N`. Throws ParseError.
std::unique_ptr<Service> parse_service(std::string_view text);

/// Thread-service composition P /_f s over the reachable (thread state,
/// service state) pairs. Requests to the service are hidden; an unknown
/// method yields D, and a cycle of hidden requests yields D. Throws
/// ServiceError on a capacity overflow.
LinearSpec use(const LinearSpec& thread, const Service& service);

/// +/a;/b1.set:T; ... +/a;/bn.set:T; +/b1.get;/c;/d; ... +/bn.get;/c;/d; !
CodeSeq zn_program(std::size_t n);

/// pi_n(P) = a^n o D, the 2^n residuals after n replies are pairwise
/// different, and none of them starts with action a.
bool has_a_n_property(const LinearSpec& spec, const Action& a, std::size_t n);

/// The residual states reached by all 2^n reply sequences, ordered by reply
/// sequence (all-true first). Empty if the first n steps are not all
/// postconditional.
std::vector<StateId> n_residuals(const LinearSpec& spec, std::size_t n);

/// Least position i with |X|_i having the a-n-property.
std::optional<Position> code_has_a_n_property(const CodeSeq& code, const Action& a, std::size_t n);

}  // namespace instrseq
