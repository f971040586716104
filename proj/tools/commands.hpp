#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/report.hpp"

namespace skewbrace::cli {

// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // a claim, invariant or solution check failed
  kExitParse = 2,        // unreadable file, malformed document or bad usage
  kExitValidation = 3,   // the document parsed but does not describe a brace
  kExitBound = 4,        // OrderBoundExceeded
};

struct AnalyzeOptions {
  ReportFormat format = ReportFormat::Text;
  std::string only;
};

struct VerifyOptions {
  std::optional<std::string> fixture;  // unset: every fixture; "" runs nothing
  std::optional<std::string> corrupt;  // fixture to verify with a broken delta table
};

struct EnumerateOptions {
  bool check = false;
  bool square_free = false;
  std::string export_path;  // empty: census document goes to stdout
};

int cmd_analyze(const std::string& path, const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_enumerate(int n, const EnumerateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_ybe(const std::string& path, bool retract, std::ostream& out, std::ostream& err);
int cmd_export_fixture(const std::string& name, const std::string& path, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Theorem checks run by `enumerate --check`; returns the names of the
// violated properties.
std::vector<std::string> invariant_failures(const SkewBrace& b);

}  // namespace skewbrace::cli
