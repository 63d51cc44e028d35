#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edit_script.hpp"
#include "error.hpp"
#include "token.hpp"

using namespace ses;

namespace {

EditScript sample_script() {
  // abac -> aabc
  return EditScript::from_sorted(
      {EditOp::substitution(1, 1, Token{"b"}, Token{"a"}),
       EditOp::substitution(2, 2, Token{"a"}, Token{"b"})},
      4, 4);
}

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an Error");
}

}  // namespace

TEST_CASE("op factories reject malformed tokens") {
  CHECK(code_of([] { EditOp::insertion(0, 0, Token{""}); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([] { EditOp::deletion(0, 0, Token{"\xff"}); }) ==
        ErrorCode::encoding);
  CHECK(code_of([] {
          EditOp::substitution(0, 0, Token{"same"}, Token{"same"});
        }) == ErrorCode::invalid_argument);
}

TEST_CASE("scripts validate ordering, conflicts and endpoint counts") {
  // Out of order.
  CHECK(code_of([] {
          EditScript::from_sorted({EditOp::deletion(2, 0, Token{"x"}),
                                   EditOp::deletion(0, 0, Token{"y"})},
                                  3, 1);
        }) == ErrorCode::invalid_argument);

  // canonicalize sorts the same ops happily.
  EditScript sorted = EditScript::canonicalize(
      {EditOp::deletion(2, 0, Token{"x"}), EditOp::deletion(0, 0, Token{"y"})},
      3, 1);
  CHECK(sorted.ops()[0].source_pos == 0);
  CHECK(sorted.ops()[1].source_pos == 2);

  // Two ops consuming source position 1.
  CHECK(code_of([] {
          EditScript::canonicalize(
              {EditOp::deletion(1, 0, Token{"x"}),
               EditOp::substitution(1, 0, Token{"x"}, Token{"y"})},
              2, 1);
        }) == ErrorCode::conflict);

  // Two ops producing target position 0.
  CHECK(code_of([] {
          EditScript::canonicalize(
              {EditOp::insertion(0, 0, Token{"x"}),
               EditOp::substitution(0, 0, Token{"a"}, Token{"y"})},
              1, 2);
        }) == ErrorCode::conflict);

  // Counts must connect the endpoints: no ops but different lengths.
  CHECK(code_of([] { EditScript::from_sorted({}, 2, 3); }) ==
        ErrorCode::invalid_argument);

  // Positions must lie within the endpoints.
  CHECK(code_of([] {
          EditScript::from_sorted({EditOp::deletion(2, 0, Token{"x"})}, 2, 1);
        }) == ErrorCode::invalid_argument);
  CHECK(code_of([] {
          EditScript::from_sorted({EditOp::insertion(3, 0, Token{"x"})}, 2,
                                  3);
        }) == ErrorCode::invalid_argument);
  // An insert at source position == length (append) is fine.
  CHECK_NOTHROW(
      EditScript::from_sorted({EditOp::insertion(2, 2, Token{"x"})}, 2, 3));
}

TEST_CASE("apply rewrites the source in one pass") {
  TokenSequence source = tokenize("abac", Granularity::character);
  TokenSequence result = apply(sample_script(), source);
  CHECK(detokenize(result) == "aabc");

  // Append via an insert at the source boundary.
  EditScript append = EditScript::from_sorted(
      {EditOp::insertion(4, 4, Token{"!"})}, 4, 5);
  CHECK(detokenize(apply(append, source)) == "abac!");

  EditScript drop_all = EditScript::from_sorted(
      {EditOp::deletion(0, 0, Token{"a"}), EditOp::deletion(1, 0, Token{"b"}),
       EditOp::deletion(2, 0, Token{"a"}), EditOp::deletion(3, 0, Token{"c"})},
      4, 0);
  CHECK(apply(drop_all, source).empty());
}

TEST_CASE("apply reports what it found where") {
  TokenSequence wrong = tokenize("abxc", Granularity::character);
  try {
    apply(sample_script(), wrong);
    FAIL("apply accepted a mismatched source");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::apply_mismatch);
    std::string message = e.what();
    CHECK(message.find("op #1") != std::string::npos);
    CHECK(message.find("position 2") != std::string::npos);
    CHECK(message.find("\"a\"") != std::string::npos);
    CHECK(message.find("\"x\"") != std::string::npos);
  }

  TokenSequence short_source = tokenize("ab", Granularity::character);
  CHECK(code_of([&] { apply(sample_script(), short_source); }) ==
        ErrorCode::apply_mismatch);
}

TEST_CASE("apply keeps word separators stable") {
  TokenSequence source = tokenize("one\ttwo three\n", Granularity::word);

  // Substitute the middle word: its separator survives.
  EditScript sub = EditScript::from_sorted(
      {EditOp::substitution(1, 1, Token{"two"}, Token{"2"})}, 3, 3);
  CHECK(detokenize(apply(sub, source)) == "one\t2 three\n");

  // Empty script reproduces the bytes exactly.
  EditScript nothing = EditScript::from_sorted({}, 3, 3);
  CHECK(detokenize(apply(nothing, source)) == "one\ttwo three\n");

  // Deleting the last word keeps the trailing whitespace.
  EditScript drop = EditScript::from_sorted(
      {EditOp::deletion(2, 2, Token{"three"})}, 3, 2);
  CHECK(detokenize(apply(drop, source)) == "one\ttwo\n");

  // Inserted words are set off with single spaces.
  EditScript add = EditScript::from_sorted(
      {EditOp::insertion(1, 1, Token{"and"})}, 3, 4);
  CHECK(detokenize(apply(add, source)) == "one\tand two three\n");
}

TEST_CASE("invert swaps direction and is an involution") {
  EditScript script = sample_script();
  EditScript back = invert(script);
  CHECK(back.source_len() == 4);
  CHECK(back.target_len() == 4);
  CHECK(back.ops()[0].old_token->text == "a");
  CHECK(back.ops()[0].new_token->text == "b");
  CHECK(invert(back) == script);

  TokenSequence source = tokenize("abac", Granularity::character);
  TokenSequence target = apply(script, source);
  CHECK(apply(back, target) == source);

  // Inserts become deletes with the position frames swapped.
  EditScript ins = EditScript::from_sorted(
      {EditOp::insertion(2, 1, Token{"z"})}, 3, 4);
  EditScript del = invert(ins);
  REQUIRE(del.size() == 1);
  CHECK(del.ops()[0].kind == EditOp::Kind::Delete);
  CHECK(del.ops()[0].source_pos == 1);
  CHECK(del.ops()[0].target_pos == 2);
  CHECK(invert(del) == ins);
}

TEST_CASE("compact serialization is the documented grammar") {
  CHECK(serialize(sample_script(), Format::compact) ==
        "@ 4 4\n~1,1:b>a\n~2,2:a>b\n");
  CHECK(serialize(EditScript{}, Format::compact) == "@ 0 0\n");

  EditScript mixed = EditScript::from_sorted(
      {EditOp::deletion(0, 0, Token{"x"}), EditOp::insertion(2, 1, Token{"y"})},
      2, 2);
  CHECK(serialize(mixed, Format::compact) == "@ 2 2\n-0,0:x\n+2,1:y\n");
}

TEST_CASE("compact round trip survives delimiter-heavy tokens") {
  EditScript script = EditScript::from_sorted(
      {EditOp::substitution(0, 0, Token{"a:b,c"}, Token{"100%"}),
       EditOp::insertion(1, 1, Token{"x>y"})},
      1, 2);
  std::string text = serialize(script, Format::compact);
  CHECK(text == "@ 1 2\n~0,0:a%3Ab%2Cc>100%25\n+1,1:x%3Ey\n");
  CHECK(parse(text, Format::compact) == script);

  // Newlines inside line tokens ride through the encoding.
  EditScript lines = EditScript::from_sorted(
      {EditOp::insertion(0, 0, Token{"first\n"})}, 0, 1);
  std::string encoded = serialize(lines, Format::compact);
  CHECK(encoded == "@ 0 1\n+0,0:first%0A\n");
  CHECK(parse(encoded, Format::compact) == lines);
}

TEST_CASE("compact parsing is strict about shape, lenient about case") {
  // Lowercase hex decodes too.
  CHECK(parse("@ 1 2\n+1,1:x%3ey\n", Format::compact)
            .ops()[0]
            .new_token->text == "x>y");
  // A missing final newline is tolerated.
  CHECK(parse("@ 4 4\n~1,1:b>a\n~2,2:a>b", Format::compact) ==
        sample_script());

  auto expect_parse_error = [](std::string_view text, const char* needle) {
    try {
      parse(text, Format::compact);
      FAIL("parsed malformed input");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::parse);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error("", "header");
  expect_parse_error("@ 1\n", "line 1");
  expect_parse_error("@ 1 1 extra\n", "line 1");
  expect_parse_error("@ 1 1\n?0,0:x\n", "line 2");
  expect_parse_error("@ 1 1\n~0,0:a\n", "line 2");       // missing '>'
  expect_parse_error("@ 1 2\n+0,0:x%G1\n", "escape");
  expect_parse_error("@ 1 2\n+0,0:x%2\n", "escape");
  expect_parse_error("@ 1 1\r\n+0,0:x\n", "carriage");

  // Structural errors outrank token errors: conflicting ops still fail.
  CHECK(code_of([] {
          parse("@ 1 1\n-0,0:x\n-0,1:y\n", Format::compact);
        }) == ErrorCode::conflict);
}

TEST_CASE("verbose output matches the spoken phrasing and cannot be parsed") {
  EditScript script = EditScript::from_sorted(
      {EditOp::insertion(0, 0, Token{"a"}),
       EditOp::substitution(2, 3, Token{"a"}, Token{"c"})},
      3, 4);
  CHECK(serialize(script, Format::verbose) ==
        "At position 0 add a\nAt position 2 substitute a with c\n");
  CHECK(serialize(EditScript{}, Format::verbose).empty());

  EditScript del = EditScript::from_sorted(
      {EditOp::deletion(1, 1, Token{"b"})}, 2, 1);
  CHECK(serialize(del, Format::verbose) == "At position 1 delete b\n");

  CHECK(code_of([] { parse("At position 0 add a\n", Format::verbose); }) ==
        ErrorCode::parse);
}

TEST_CASE("json carries the whole script and ignores strangers") {
  EditScript script = sample_script();
  std::string text = serialize(script, Format::json);
  CHECK(parse(text, Format::json) == script);
  CHECK(text.find("\"source_len\":4") != std::string::npos);
  CHECK(text.find("\"kind\":\"substitute\"") != std::string::npos);

  // Unknown keys are ignored; ops may arrive out of order.
  const char* custom = R"({
    "source_len": 2, "target_len": 2, "generator": "elsewhere",
    "ops": [
      {"kind": "insert", "source_pos": 2, "target_pos": 1, "new": "y", "note": 7},
      {"kind": "delete", "source_pos": 0, "target_pos": 0, "old": "x"}
    ]
  })";
  EditScript parsed = parse(custom, Format::json);
  CHECK(parsed.size() == 2);
  CHECK(parsed.ops()[0].kind == EditOp::Kind::Delete);

  auto expect_parse_error = [](const char* text) {
    CHECK(code_of([&] { parse(text, Format::json); }) == ErrorCode::parse);
  };
  expect_parse_error("[]");
  expect_parse_error("{\"source_len\": -1, \"target_len\": 0, \"ops\": []}");
  expect_parse_error("{\"source_len\": 0, \"target_len\": 0}");
  expect_parse_error(
      "{\"source_len\": 0, \"target_len\": 1, \"ops\": "
      "[{\"kind\": \"warp\", \"source_pos\": 0, \"target_pos\": 0}]}");
  expect_parse_error(
      "{\"source_len\": 0, \"target_len\": 1, \"ops\": "
      "[{\"kind\": \"insert\", \"source_pos\": 0, \"target_pos\": 0}]}");
  expect_parse_error("not json at all");
}
