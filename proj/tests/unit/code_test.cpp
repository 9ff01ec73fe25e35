#include <gtest/gtest.h>

#include "instrseq/code.hpp"
#include "instrseq/error.hpp"

namespace instrseq {
namespace {

TEST(Action, AcceptsNamesWithFocusAndMethod) {
  Action a("b1.set:T");
  EXPECT_TRUE(a.has_focus());
  EXPECT_EQ(a.focus(), "b1");
  EXPECT_EQ(a.method(), "set:T");
  EXPECT_FALSE(Action("c").has_focus());
  EXPECT_EQ(Action("c").focus(), "");
  EXPECT_EQ(Action("c").method(), "");
}

TEST(Action, RejectsMalformedNames) {
  EXPECT_THROW(Action(""), ParseError);
  EXPECT_THROW(Action("1a"), ParseError);
  EXPECT_THROW(Action("a."), ParseError);
  EXPECT_THROW(Action("a.b.c"), ParseError);
}

TEST(Parse, SixInstructionExample) {
  CodeSeq x = parse_code("/a;+/b;\\c;+/d;!;\\#5");
  ASSERT_EQ(x.size(), 6u);
  EXPECT_EQ(x.at(1).op, Op::FwdBasic);
  EXPECT_EQ(x.at(2).op, Op::FwdPosTest);
  EXPECT_EQ(x.at(3).op, Op::BwdBasic);
  EXPECT_EQ(x.at(5).op, Op::Halt);
  EXPECT_EQ(x.at(6).op, Op::BwdJump);
  EXPECT_EQ(x.at(6).counter, 5u);
}

TEST(Parse, SingleHalt) {
  CodeSeq x = parse_code("!");
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.at(1).op, Op::Halt);
}

TEST(Parse, ZeroCounterIsRejected) { EXPECT_THROW(parse_code("/#0;!"), ParseError); }

TEST(Parse, ErrorsCarryOffsets) {
  try {
    parse_code("/a;?");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW(parse_code(""), ParseError);
  EXPECT_THROW(parse_code("/a;;!"), ParseError);
  EXPECT_THROW(parse_code("+/#2"), ParseError);
  EXPECT_THROW(parse_code("/a !"), ParseError);
}

TEST(Print, RoundTrips) {
  EXPECT_EQ(to_string(parse_code("!;#")), "!;#");
  EXPECT_EQ(to_string(parse_code(" /a ; ! ")), "/a;!");
  EXPECT_EQ(to_string(parse_code("+\\a;\\#12")), "+\\a;\\#12");
  EXPECT_EQ(to_string(parse_code("-/b1.get;-\\c;/#3")), "-/b1.get;-\\c;/#3");
}

TEST(Concat, JoinsSequences) {
  EXPECT_EQ(concat(parse_code("/a"), parse_code("!")), parse_code("/a;!"));
  CodeSeq x = parse_code("/a;#"), y = parse_code("\\#1"), z = parse_code("!");
  EXPECT_EQ(concat(concat(x, y), z), concat(x, concat(y, z)));
  EXPECT_EQ(concat(x, y).size(), x.size() + y.size());
}

TEST(CodeSeq, EmptyIsNotAValue) { EXPECT_THROW(CodeSeq(std::vector<Instruction>{}), PreconditionError); }

TEST(CodeSeq, AtIsOneBased) {
  CodeSeq x = parse_code("/a;!");
  EXPECT_EQ(x.at(2).op, Op::Halt);
  EXPECT_THROW(x.at(0), PreconditionError);
  EXPECT_THROW(x.at(3), PreconditionError);
}

TEST(IsProgram, Examples) {
  EXPECT_TRUE(is_program(parse_code("#;+/a;\\#2;#")));
  EXPECT_FALSE(is_program(parse_code("+/a;\\#10;/b;+/c;/#8;!;!")));
  EXPECT_TRUE(is_program(parse_code("+/a;\\#1;!")));
  EXPECT_FALSE(is_program(parse_code("+/a;\\#2")));
  EXPECT_FALSE(is_program(parse_code("/a")));
}

TEST(IsInCk, Examples) {
  EXPECT_TRUE(is_in_ck(parse_code("/#2;/a;\\#2"), 2));
  EXPECT_FALSE(is_in_ck(parse_code("/#2;/a;\\#2"), 1));
  EXPECT_TRUE(is_in_ck(parse_code("!;#"), 1));
  EXPECT_EQ(max_jump_counter(parse_code("/#2;\\#7;!")), 7u);
}

TEST(UsesOnly, Examples) {
  EXPECT_TRUE(uses_only(parse_code("+/a;/#2;\\#1;!"), OpSet::c_minus()));
  EXPECT_FALSE(uses_only(parse_code("\\a;!"), OpSet::c_minus()));
  EXPECT_FALSE(uses_only(parse_code("+/a;#"), OpSet::c_minus()));
  EXPECT_TRUE(uses_only(parse_code("+/a;#"), OpSet::reduced()));
  EXPECT_TRUE(uses_only(parse_code("-\\a;\\b;/#1;#;!"), OpSet::all()));
}

TEST(Successors, FollowTable) {
  CodeSeq x = parse_code("+/a;\\#1;!");
  EXPECT_EQ(successors(x, 1), (std::vector<Position>{2, 3}));
  EXPECT_EQ(successors(x, 2), (std::vector<Position>{1}));
  EXPECT_TRUE(successors(x, 3).empty());
}

}  // namespace
}  // namespace instrseq
