#pragma once

#include <map>
#include <set>
#include <vector>

#include "instrseq/action.hpp"
#include "instrseq/thread.hpp"

namespace instrseq {

/// A permutation of a finite action set A together with the A_false part of a
/// partition of A. Lifted to threads it relabels every action and swaps the
/// branches of postconditional compositions whose image lies in A_false.
class StructuralBijection {
 public:
  /// Identity on `domain`.
  explicit StructuralBijection(const std::set<Action>& domain);
  /// Throws PreconditionError unless `permutation` is a bijection on its key
  /// set and `false_set` is a subset of it.
  StructuralBijection(std::map<Action, Action> permutation, std::set<Action> false_set);

  static StructuralBijection swap(const std::set<Action>& domain, const Action& a, const Action& b);
  static StructuralBijection flip(const std::set<Action>& domain, const Action& c);

  std::set<Action> domain() const;
  const std::map<Action, Action>& permutation() const noexcept { return perm_; }
  const std::set<Action>& false_set() const noexcept { return false_set_; }

  /// Throws PreconditionError if `a` is outside the domain.
  const Action& operator()(const Action& a) const;
  bool is_false(const Action& image) const { return false_set_.contains(image); }

  friend bool operator==(const StructuralBijection&, const StructuralBijection&) = default;

 private:
  std::map<Action, Action> perm_;
  std::set<Action> false_set_;
};

/// Per state: S and D are kept; x_t <|a|> x_f becomes x_t <|phi(a)|> x_f, or
/// x_f <|phi(a)|> x_t when phi(a) is in A_false. State ids are preserved.
LinearSpec apply_structural_bijection(const StructuralBijection& phi, const LinearSpec& spec);

/// outer after inner. Throws PreconditionError on different domains.
StructuralBijection compose_bijections(const StructuralBijection& outer,
                                       const StructuralBijection& inner);
StructuralBijection inverse(const StructuralBijection& phi);

/// All 2^|A| * |A|! structural bijections on `domain`.
std::vector<StructuralBijection> enumerate_bijections(const std::set<Action>& domain);

}  // namespace instrseq
