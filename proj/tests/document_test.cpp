#include <doctest.h>

#include "skewbrace/document.hpp"
#include "skewbrace/fixtures.hpp"

using namespace skewbrace;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_brace_document(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("document was accepted");
  return {};
}

}  // namespace

TEST_CASE("table documents round trip") {
  const auto b = build_fixture("ex8").brace();
  const auto text = write_brace_document(b, "ex8", "order 8 example");
  const auto doc = parse_brace_document(text);
  CHECK(doc.name == "ex8");
  CHECK(doc.source == "order 8 example");
  CHECK(doc.order == 8);
  CHECK(to_brace(doc) == b);
  CHECK(write_brace_document(to_brace(doc), doc.name, doc.source) == text);
}

TEST_CASE("cocycle documents round trip") {
  for (const auto& name : fixture_names()) {
    const auto ex = build_fixture(name);
    const auto text = write_cocycle_document(ex.spec(), name);
    const auto doc = parse_brace_document(text);
    REQUIRE(doc.cocycle.has_value());
    CHECK(doc.cocycle->delta == ex.spec().delta);
    CHECK(to_brace(doc) == ex.brace());
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text =
      "# a comment\n\nformat_version 1\norder 2\n  # indented comment\nadd_table\n0 1\n1 0\nmul_table\n0 1\n1 0\n";
  CHECK(to_brace(parse_brace_document(text)).order() == 2);
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error("order 2\n").find("line 1, column 1") != std::string::npos);
  CHECK(parse_error("format_version 1\norder 2\nadd_table\n0 1\n1 x\n").find("line 5, column 3") != std::string::npos);
  CHECK(parse_error("format_version 1\norder 2\nadd_table\n0 1\n1 0 1\n").find("line 5") != std::string::npos);
  CHECK(parse_error("format_version 1\norder 2\nadd_table\n0 1\n1 2\n").find("outside") != std::string::npos);
  CHECK(parse_error("format_version 2\n").find("version") != std::string::npos);
  CHECK(parse_error("format_version 1\nfrobnicate\n").find("unknown keyword") != std::string::npos);
  CHECK(parse_error("format_version 1\norder 2\nadd_table\n0 1\n1 0\n").find("missing") != std::string::npos);
  CHECK(parse_error("format_version 1\norder 2\nadd_table\n0 1\n").find("end of document") != std::string::npos);
}

TEST_CASE("validation errors are distinct from parse errors") {
  const std::string text = "format_version 1\norder 2\nadd_table\n0 1\n1 0\nmul_table\n0 1\n1 1\n";
  const auto doc = parse_brace_document(text);
  CHECK_THROWS_AS(to_brace(doc), Error);
  try {
    to_brace(doc);
  } catch (const Error& e) {
    CHECK(e.code() != ErrorCode::ParseError);
  }
}

TEST_CASE("census documents round trip") {
  const auto c = census(6);
  const auto text = write_census_document(c);
  const auto doc = parse_census_document(text);
  CHECK(doc.order == 6);
  REQUIRE(doc.records.size() == c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(doc.records[i].additive_label == c.entries[i].additive_label);
    CHECK(doc.records[i].multiplicative_label == c.entries[i].multiplicative_label);
    CHECK(to_brace(doc.records[i].brace) == c.entries[i].brace);
  }
  CHECK_THROWS_AS(parse_census_document("format_version 1\ncensus 2\ncount 3\n"), Error);
}
