#pragma once

#include <map>
#include <set>

#include "instrseq/bijection.hpp"
#include "instrseq/code.hpp"

namespace instrseq {

/// Homomorphism replacing every instruction by a 3-instruction block that only
/// uses forward basic and test instructions. |X|_{j+1} = |h(X)|_{3j+1}.
CodeSeq apply_h(const CodeSeq& code);
/// Variant of h whose image only uses {+/a, /#k, \#k, !, #}.
CodeSeq apply_h_pos(const CodeSeq& code);
/// Anti-homomorphism with left-to-right extraction of X equal to
/// right-to-left extraction of g(X); g = rev o h.
CodeSeq apply_g(const CodeSeq& code);

Instruction rev(const Instruction& i);
/// Exchanges forward and backward orientation and reverses the order.
CodeSeq rev(const CodeSeq& code);

CodeSeq swap(const CodeSeq& code, const Action& a, const Action& b);
CodeSeq flip(const CodeSeq& code, const Action& a);

/// A TEC-automorphism in normal form flip_{c1} o ... o flip_{cm} o sigma,
/// where sigma is an action permutation (a product of swaps). Actions that are
/// not mentioned are fixed points. Equal automorphisms have equal values.
class TecAutomorphism {
 public:
  TecAutomorphism() = default;

  static TecAutomorphism identity() { return {}; }
  static TecAutomorphism swap(const Action& a, const Action& b);
  static TecAutomorphism flip(const Action& c);

  /// Image of `a` under the permutation part.
  const Action& relabel(const Action& a) const;
  const std::map<Action, Action>& permutation() const noexcept { return perm_; }
  const std::set<Action>& flips() const noexcept { return flips_; }
  /// Actions moved by the permutation.
  std::set<Action> support() const;

  Instruction operator()(const Instruction& i) const;
  CodeSeq operator()(const CodeSeq& code) const;

  friend bool operator==(const TecAutomorphism&, const TecAutomorphism&) = default;

 private:
  friend TecAutomorphism compose_tec(const TecAutomorphism&, const TecAutomorphism&);
  friend TecAutomorphism inverse(const TecAutomorphism&);
  std::map<Action, Action> perm_;  // non-fixed points only
  std::set<Action> flips_;
};

CodeSeq apply_tec(const TecAutomorphism& alpha, const CodeSeq& code);
/// outer o inner, re-normalized.
TecAutomorphism compose_tec(const TecAutomorphism& outer, const TecAutomorphism& inner);
TecAutomorphism inverse(const TecAutomorphism& alpha);
bool is_involution(const TecAutomorphism& alpha);

/// The structural bijection that makes extraction commute with `alpha`: same
/// permutation, A_false = flips. Its domain is `alphabet` extended with the
/// actions `alpha` mentions.
StructuralBijection associated_bijection(const TecAutomorphism& alpha,
                                         const std::set<Action>& alphabet = {});

/// rev o alpha.
struct TecAntiAutomorphism {
  TecAutomorphism automorphism;

  friend bool operator==(const TecAntiAutomorphism&, const TecAntiAutomorphism&) = default;
};

CodeSeq apply_tec_anti(const TecAntiAutomorphism& beta, const CodeSeq& code);
/// Composition of two anti-automorphisms is an automorphism.
TecAutomorphism compose_tec_anti(const TecAntiAutomorphism& outer,
                                 const TecAntiAutomorphism& inner);

}  // namespace instrseq
