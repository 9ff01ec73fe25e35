#include <gtest/gtest.h>

#include "generators.hpp"
#include "instrseq/codegen.hpp"
#include "instrseq/error.hpp"
#include "instrseq/extraction.hpp"
#include "instrseq/services.hpp"

namespace instrseq {
namespace {

using testing::Rng;

// Specs over a, b and register methods of focus r.
LinearSpec random_register_client(Rng& rng, std::size_t max_states) {
  static const std::vector<Action> alphabet{Action("a"), Action("b"), Action("r.set:T"), Action("r.set:F"),
                                            Action("r.get"), Action("r.bogus")};
  const std::size_t n = testing::uniform(rng, 1, max_states);
  std::vector<Equation> states;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t roll = testing::uniform(rng, 0, 9);
    if (roll == 0) {
      states.push_back(Equation::terminate());
    } else if (roll == 1) {
      states.push_back(Equation::deadlock());
    } else {
      states.push_back(Equation::post(alphabet[testing::uniform(rng, 0, alphabet.size() - 1)],
                                      testing::uniform(rng, 0, n - 1), testing::uniform(rng, 0, n - 1)));
    }
  }
  return LinearSpec(std::move(states), testing::uniform(rng, 0, n - 1));
}

TEST(ServicesProperties, HidesFocusAndStaysSmall) {
  Rng rng(51);
  BooleanRegister reg("r");
  for (int i = 0; i < 400; ++i) {
    LinearSpec p = random_register_client(rng, 7);
    LinearSpec q = use(p, reg);
    for (const Action& act : q.actions()) EXPECT_NE(act.focus(), "r");
    EXPECT_LE(q.size(), 2 + p.size() * reg.state_bound());
  }
}

TEST(ServicesProperties, UnrelatedFocusIsIdentity) {
  Rng rng(52);
  for (int i = 0; i < 200; ++i) {
    LinearSpec p = testing::random_spec(rng, 6);
    EXPECT_TRUE(decide_equal(use(p, BooleanRegister("zz")), p));
  }
}

TEST(ServicesProperties, StackWithinCapacityIsRegular) {
  Rng rng(53);
  const std::vector<Action> alphabet{Action("a"), Action("s.push:1"), Action("s.push:2"), Action("s.pop"),
                                     Action("s.topeq:1")};
  int completed = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = testing::uniform(rng, 1, 6);
    std::vector<Equation> states;
    for (std::size_t k = 0; k < n; ++k) {
      states.push_back(testing::coin(rng, 0.15) ? Equation::terminate()
                                                : Equation::post(alphabet[testing::uniform(rng, 0, 4)],
                                                                 testing::uniform(rng, 0, n - 1),
                                                                 testing::uniform(rng, 0, n - 1)));
    }
    LinearSpec p(std::move(states), 0);
    BoundedStack stack("s", 3, 2);
    try {
      LinearSpec q = use(p, stack);
      EXPECT_LE(q.size(), 2 + p.size() * stack.state_bound());
      for (const Action& act : q.actions()) EXPECT_NE(act.focus(), "s");
      ++completed;
    } catch (const ServiceError& e) {
      EXPECT_FALSE(e.path().empty());
    }
  }
  EXPECT_GT(completed, 50);
}

TEST(ServicesProperties, ZnHasTheProperty) {
  for (std::size_t n = 1; n <= 4; ++n) {
    LinearSpec spec = extract_ltr(zn_program(n));
    for (std::size_t i = 1; i <= n; ++i) spec = use(spec, BooleanRegister("b" + std::to_string(i)));
    EXPECT_TRUE(has_a_n_property(spec, Action("a"), n)) << n;
    EXPECT_FALSE(has_a_n_property(spec, Action("a"), n + 1)) << n;
    for (std::size_t m = 1; m < n; ++m) {
      EXPECT_TRUE(code_has_a_n_property(spec_to_code(spec).code, Action("a"), m).has_value()) << n << "/" << m;
    }
    // The composed thread is produced by register-free code.
    CodeSeq code = spec_to_code(spec).code;
    EXPECT_TRUE(is_program(code));
    for (const Action& act : code.actions()) EXPECT_FALSE(act.has_focus());
    EXPECT_TRUE(decide_equal(extract_ltr(code), spec));
  }
}

}  // namespace
}  // namespace instrseq
