#pragma once

#include <string>
#include <vector>

#include "skewbrace/classify.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace {

enum class ReportFormat { Text, Structured };

// Report sections, in output order.
std::vector<std::string> report_sections();  // groups, supersolubility, series, ideals, sylow, ybe

struct ReportOptions {
  ReportFormat format = ReportFormat::Text;
  std::string only;  // empty: every section; "ybe" also prints the solution tables
  std::string name;
};

// Throws InvalidArgument for an unknown section.
std::string render_report(const SkewBrace& b, const ReportOptions& options);

// Structured form is one "section.key = value" line per field; lists are
// written [1,2,3], element sets {0,4,8}, missing values as none.
std::string render_solution(const Solution& s, std::optional<int> level, ReportFormat format, bool tables);

}  // namespace skewbrace
