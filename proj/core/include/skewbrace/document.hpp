#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace {

inline constexpr int kFormatVersion = 1;

// Line-oriented text format. Blank lines and lines starting with '#' are
// ignored. A brace document is either
//
//   format_version 1
//   name <text>            (optional)
//   source <text>          (optional)
//   order <n>
//   add_table              followed by n rows of n integers
//   mul_table              followed by n rows of n integers
//
// or, in place of the two tables, a cocycle block:
//
//   cocycle
//   additive_table         n rows
//   multiplicative_table   n rows
//   lambda_tables          n rows; row c is lambda_c as a permutation
//   delta                  one row of n integers
struct CocycleTables {
  Table additive;
  Table multiplicative;
  std::vector<Permutation> lambda;
  std::vector<Elem> delta;
};

struct BraceDocument {
  int format_version = kFormatVersion;
  std::string name;
  std::string source;
  int order = 0;
  std::optional<Table> add_table;
  std::optional<Table> mul_table;
  std::optional<CocycleTables> cocycle;
};

// Census documents hold "begin brace" ... "end brace" records, each with
// additive_label / multiplicative_label lines and a table-form brace.
struct CensusRecord {
  std::string additive_label;
  std::string multiplicative_label;
  BraceDocument brace;
};

struct CensusDocument {
  int order = 0;
  std::vector<CensusRecord> records;
};

// Throw ParseError with "line L, column C: ..." diagnostics.
BraceDocument parse_brace_document(std::string_view text);
CensusDocument parse_census_document(std::string_view text);

// Builds and validates the brace (DistributivityViolation, GroupInvalid,
// cocycle errors, ...).
SkewBrace to_brace(const BraceDocument& doc);

std::string write_brace_document(const SkewBrace& b, const std::string& name = "", const std::string& source = "");
std::string write_cocycle_document(const CocycleSpec& spec, const std::string& name = "",
                                   const std::string& source = "");
std::string write_census_document(const BraceCensus& census);
std::string write_solution_document(const Solution& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace skewbrace
