#include "instrseq/bijection.hpp"

#include <algorithm>

#include "instrseq/error.hpp"

namespace instrseq {

StructuralBijection::StructuralBijection(const std::set<Action>& domain) {
  for (const auto& a : domain) perm_.emplace(a, a);
}

StructuralBijection::StructuralBijection(std::map<Action, Action> permutation, std::set<Action> false_set)
    : perm_(std::move(permutation)), false_set_(std::move(false_set)) {
  std::set<Action> image;
  for (const auto& [from, to] : perm_) {
    if (!perm_.contains(to)) throw PreconditionError("permutation maps outside its domain");
    image.insert(to);
  }
  if (image.size() != perm_.size()) throw PreconditionError("permutation is not injective");
  for (const auto& c : false_set_) {
    if (!perm_.contains(c)) throw PreconditionError("false set is not a subset of the domain");
  }
}

StructuralBijection StructuralBijection::swap(const std::set<Action>& domain, const Action& a, const Action& b) {
  StructuralBijection phi(domain);
  if (!domain.contains(a) || !domain.contains(b)) throw PreconditionError("swap outside the domain");
  phi.perm_[a] = b;
  phi.perm_[b] = a;
  return phi;
}

StructuralBijection StructuralBijection::flip(const std::set<Action>& domain, const Action& c) {
  StructuralBijection phi(domain);
  if (!domain.contains(c)) throw PreconditionError("flip outside the domain");
  phi.false_set_.insert(c);
  return phi;
}

std::set<Action> StructuralBijection::domain() const {
  std::set<Action> out;
  for (const auto& [a, _] : perm_) out.insert(a);
  return out;
}

const Action& StructuralBijection::operator()(const Action& a) const {
  auto it = perm_.find(a);
  if (it == perm_.end()) throw PreconditionError("action '" + a.name() + "' is outside the bijection's domain");
  return it->second;
}

LinearSpec apply_structural_bijection(const StructuralBijection& phi, const LinearSpec& spec) {
  std::vector<Equation> out;
  out.reserve(spec.size());
  for (const auto& eq : spec.states()) {
    if (eq.kind != Equation::Kind::Post) {
      out.push_back(eq);
      continue;
    }
    const Action& image = phi(eq.action);
    out.push_back(phi.is_false(image) ? Equation::post(image, eq.on_false, eq.on_true)
                                      : Equation::post(image, eq.on_true, eq.on_false));
  }
  return LinearSpec(std::move(out), spec.root());
}

// Applying inner then outer to x <|a|> y swaps branches once for each
// stage whose image is in that stage's false set:
//   perm  = outer.perm o inner.perm
//   false = outer.perm(inner.false) xor outer.false
StructuralBijection compose_bijections(const StructuralBijection& outer, const StructuralBijection& inner) {
  if (outer.domain() != inner.domain()) throw PreconditionError("bijections over different action sets");
  std::map<Action, Action> perm;
  for (const auto& [a, b] : inner.permutation()) perm.emplace(a, outer(b));
  std::set<Action> false_set;
  for (const auto& c : inner.false_set()) false_set.insert(outer(c));
  for (const auto& c : outer.false_set()) {
    if (!false_set.erase(c)) false_set.insert(c);
  }
  return StructuralBijection(std::move(perm), std::move(false_set));
}

StructuralBijection inverse(const StructuralBijection& phi) {
  std::map<Action, Action> perm;
  for (const auto& [a, b] : phi.permutation()) perm.emplace(b, a);
  std::set<Action> false_set;
  for (const auto& c : phi.false_set()) false_set.insert(perm.at(c));
  return StructuralBijection(std::move(perm), std::move(false_set));
}

std::vector<StructuralBijection> enumerate_bijections(const std::set<Action>& domain) {
  std::vector<Action> actions(domain.begin(), domain.end());
  if (actions.size() > 16) throw PreconditionError("alphabet too large to enumerate");
  std::vector<StructuralBijection> out;
  std::vector<Action> images = actions;
  do {
    std::map<Action, Action> perm;
    for (std::size_t i = 0; i < actions.size(); ++i) perm.emplace(actions[i], images[i]);
    for (std::uint32_t mask = 0; mask < (1u << actions.size()); ++mask) {
      std::set<Action> false_set;
      for (std::size_t i = 0; i < actions.size(); ++i) {
        if (mask & (1u << i)) false_set.insert(actions[i]);
      }
      out.emplace_back(perm, std::move(false_set));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace instrseq
