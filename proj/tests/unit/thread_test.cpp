#include <gtest/gtest.h>

#include "instrseq/bijection.hpp"
#include "instrseq/error.hpp"
#include "instrseq/thread.hpp"

namespace instrseq {
namespace {

const Action a("a"), b("b"), c("c"), d("d");

FiniteThread S() { return FiniteThread::terminate(); }
FiniteThread D() { return FiniteThread::deadlock(); }

LinearSpec loop_a() { return LinearSpec({Equation::prefix(a, 0)}, 0); }

// P1=a*P2, P2=P3<|b|>P4, P3=c*P2, P4=P5<|d|>P1, P5=S
LinearSpec five_state() {
  return LinearSpec({Equation::prefix(a, 1), Equation::post(b, 2, 3), Equation::prefix(c, 1), Equation::post(d, 4, 0),
                     Equation::terminate()},
                    0);
}

TEST(LinearSpec, ValidatesTargets) {
  EXPECT_THROW(LinearSpec({Equation::prefix(a, 3)}, 0), PreconditionError);
  EXPECT_THROW(LinearSpec({Equation::terminate()}, 1), PreconditionError);
  EXPECT_THROW(LinearSpec({}, 0), PreconditionError);
}

TEST(Pi, ZeroIsDeadlock) {
  EXPECT_EQ(pi(0, five_state()), D());
  EXPECT_EQ(pi(0, LinearSpec::terminate()), D());
}

TEST(Pi, UnfoldsLoop) { EXPECT_EQ(pi(2, loop_a()), FiniteThread::prefix(a, FiniteThread::prefix(a, D()))); }

TEST(Pi, FiniteChainStops) {
  LinearSpec aad({Equation::prefix(a, 1), Equation::prefix(a, 2), Equation::deadlock()}, 0);
  EXPECT_EQ(pi(3, aad), FiniteThread::prefix_chain(a, 2, D()));
  EXPECT_EQ(pi(5, aad), FiniteThread::prefix_chain(a, 2, D()));
}

TEST(Pi, OfFiniteThreadTruncates) {
  FiniteThread t = FiniteThread::prefix_chain(a, 4, S());
  EXPECT_EQ(pi(2, t), FiniteThread::prefix_chain(a, 2, D()));
  EXPECT_EQ(pi(5, t), t);
  EXPECT_EQ(t.depth(), 5u);
  EXPECT_EQ(pi(1, FiniteThread::prefix(a, S())), FiniteThread::prefix(a, D()));
}

TEST(FiniteThread, PrintsTerms) {
  EXPECT_EQ(to_string(FiniteThread::post(a, FiniteThread::prefix(b, S()), D())), "(b*S <|a|> D)");
}

TEST(ResidualStates, Examples) {
  LinearSpec spec({Equation::prefix(a, 1), Equation::terminate(), Equation::deadlock()}, 0);
  EXPECT_EQ(residual_states(spec), (std::set<StateId>{0, 1}));
  EXPECT_EQ(residual_states(LinearSpec({Equation::post(a, 0, 0)}, 0)), (std::set<StateId>{0}));
  EXPECT_EQ(residual_states(five_state()).size(), 5u);
}

TEST(DecideEqual, Examples) {
  LinearSpec two({Equation::prefix(a, 1), Equation::prefix(a, 0)}, 0);
  EXPECT_TRUE(decide_equal(loop_a(), two));
  EXPECT_FALSE(decide_equal(LinearSpec::terminate(), LinearSpec::deadlock()));
  LinearSpec as({Equation::prefix(a, 1), Equation::terminate()}, 0);
  LinearSpec ad({Equation::prefix(a, 1), Equation::deadlock()}, 0);
  EXPECT_FALSE(decide_equal(as, ad));
}

TEST(DecideEqual, BranchOrderMatters) {
  LinearSpec p({Equation::post(a, 1, 2), Equation::terminate(), Equation::deadlock()}, 0);
  LinearSpec q({Equation::post(a, 2, 1), Equation::terminate(), Equation::deadlock()}, 0);
  EXPECT_FALSE(decide_equal(p, q));
}

TEST(Minimize, MergesEquivalentStates) {
  LinearSpec two({Equation::prefix(a, 1), Equation::prefix(a, 0)}, 0);
  LinearSpec m = minimize(two);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_TRUE(decide_equal(m, two));
}

TEST(RestrictToReachable, RenumbersFromRoot) {
  LinearSpec spec({Equation::deadlock(), Equation::terminate(), Equation::prefix(a, 1)}, 2);
  LinearSpec r = restrict_to_reachable(spec);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.root(), 0u);
  EXPECT_EQ(r.state(0).kind, Equation::Kind::Post);
}

TEST(SpecJson, RoundTrips) {
  LinearSpec spec = five_state();
  EXPECT_EQ(spec_from_json(to_json(spec)), spec);
  EXPECT_EQ(to_json(LinearSpec::deadlock()), R"({"root":0,"states":[{"id":0,"kind":"D"}]})");
}

TEST(SpecJson, AcceptsSparseIds) {
  LinearSpec spec = spec_from_json(
      R"({"root":7,"states":[{"id":7,"kind":"post","action":"a","true":9,"false":7},{"id":9,"kind":"S"}]})");
  EXPECT_EQ(spec.size(), 2u);
  EXPECT_EQ(spec.state(spec.root()).on_true, 1u);
}

TEST(SpecJson, RejectsBadInput) {
  EXPECT_THROW(spec_from_json("{"), ParseError);
  EXPECT_THROW(spec_from_json(R"({"root":0,"states":[]})"), ParseError);
  EXPECT_THROW(spec_from_json(R"({"root":0,"states":[{"id":0,"kind":"post","action":"a","true":1,"false":0}]})"),
               ParseError);
  EXPECT_THROW(spec_from_json(R"({"root":0,"states":[{"id":0,"kind":"X"}]})"), ParseError);
}

TEST(StructuralBijection, FlipExchangesBranches) {
  // P = P <|a|> Q, Q = D with phi(a) = b in A_false
  LinearSpec p({Equation::post(a, 0, 1), Equation::deadlock()}, 0);
  StructuralBijection phi({{a, b}, {b, a}}, {b});
  LinearSpec image = apply_structural_bijection(phi, p);
  LinearSpec expected({Equation::post(b, 1, 0), Equation::deadlock()}, 0);
  EXPECT_EQ(image, expected);
}

TEST(StructuralBijection, IdentityAndRelabel) {
  StructuralBijection id(std::set<Action>{a, b, c, d});
  EXPECT_EQ(apply_structural_bijection(id, five_state().with_root(0)), five_state());
  auto sw = StructuralBijection::swap({a, b}, a, b);
  EXPECT_EQ(apply_structural_bijection(sw, loop_a()), LinearSpec({Equation::prefix(b, 0)}, 0));
}

TEST(StructuralBijection, RejectsNonBijections) {
  EXPECT_THROW(StructuralBijection({{a, b}, {b, b}}, {}), PreconditionError);
  EXPECT_THROW(StructuralBijection({{a, a}}, {b}), PreconditionError);
  EXPECT_THROW(StructuralBijection(std::set<Action>{a})(b), PreconditionError);
}

TEST(StructuralBijection, Enumerate) {
  EXPECT_EQ(enumerate_bijections({a, b}).size(), 8u);
  EXPECT_EQ(enumerate_bijections({a, b, c}).size(), 48u);
  auto phi = StructuralBijection::flip({a, b}, a);
  EXPECT_EQ(compose_bijections(phi, StructuralBijection(std::set<Action>{a, b})), phi);
  EXPECT_THROW(compose_bijections(phi, StructuralBijection(std::set<Action>{a})), PreconditionError);
}

}  // namespace
}  // namespace instrseq
