#include "commands.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "skewbrace/classify.hpp"
#include "skewbrace/document.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/fixtures.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return kExitParse;
    case ErrorCode::OrderBoundExceeded:
      return kExitBound;
    default:
      return kExitValidation;
  }
}

// Runs body, turning library errors into diagnostics and exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

SkewBrace load_brace(const std::string& path) { return to_brace(parse_brace_document(read_file(path))); }

bool cyclic_sylows(const FiniteGroup& g) {
  const int n = g.order();
  for (int p : prime_divisors(n)) {
    int pk = 1;
    while (n % (pk * p) == 0) pk *= p;
    bool found = false;
    for (Elem x = 0; x < n && !found; ++x) found = g.element_order(x) == pk;
    if (!found) return false;
  }
  return true;
}

bool is_prime_power(int n) { return n > 1 && prime_divisors(n).size() == 1; }

}  // namespace

std::vector<std::string> invariant_failures(const SkewBrace& b) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const char* name) {
    if (!ok) bad.emplace_back(name);
  };
  const int n = b.order();

  try {
    const auto s = solution_from_brace(b);
    expect(s.checks.all(), "solution-checks");
    bool compatible = true;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) compatible = compatible && b.mul(s.first[x][y], s.second[x][y]) == b.mul(x, y);
    expect(compatible, "solution-product");
  } catch (const Error&) {
    bad.emplace_back("solution-checks");
  }

  expect(socle(b).is_ideal, "socle-is-ideal");
  expect(zeta(b).is_ideal, "zeta-is-ideal");
  expect(central_series_consistent(b), "lower-upper-consistency");
  const bool additive_nilpotent = is_nilpotent(b.additive());
  const bool central = is_centrally_nilpotent(b);
  if (additive_nilpotent) expect((is_left_nilpotent(b) && is_right_nilpotent(b)) == central, "left-right-central");

  const auto ss = supersoluble(b);
  const auto mp = multipermutation_level(b);
  if (ss.supersoluble) {
    bool prime_factors = ss.certificate.has_value();
    if (ss.certificate)
      for (const auto& f : ss.certificate->factors) prime_factors = prime_factors && f.is_prime_order;
    expect(prime_factors, "certificate-prime-factors");
    bool chief_prime = true;
    for (int k : chief_factor_orders(b)) chief_prime = chief_prime && is_prime(k);
    expect(chief_prime, "chief-factors-prime");
    bool maximal_prime = true;
    for (const auto& m : maximal_subbraces(b)) maximal_prime = maximal_prime && is_prime(index(b, m.elements));
    expect(maximal_prime, "maximal-subbraces-prime-index");
    bool index_two = true;
    for (const auto& s : all_subbraces(b))
      if (2 * static_cast<int>(s.size()) == n) index_two = index_two && s.is_ideal;
    expect(index_two, "index-2-subbraces-ideal");
    bool up = true;
    for (int p : prime_divisors(n)) {
      const auto u = u_p(b, p);
      up = up && u.equal && u.ideal;
    }
    expect(up, "u_p-ideal");
    expect(is_supersoluble(semidirect_group(b)), "semidirect-group-supersoluble");
    expect(additive_nilpotent == mp.has_value(), "nilpotent-type-iff-mp-level");
    expect(multipermutation_level(induced_brace(b, derived_ideal(b).elements).brace).has_value(),
           "derived-ideal-mp-level");
    expect(is_centrally_nilpotent(induced_brace(b, fitting(b).elements).brace), "fitting-centrally-nilpotent");
    expect(sylow_tower(b).has_value(), "sylow-tower");
  }
  if (is_prime_power(n)) expect(ss.supersoluble == central, "prime-power-supersoluble-iff-central");
  if (cyclic_sylows(b.additive()) && cyclic_sylows(b.multiplicative()))
    expect(ss.supersoluble, "cyclic-sylows-supersoluble");
  if (mp && is_supersoluble(b.multiplicative())) expect(ss.supersoluble, "mp-level-and-group-supersoluble");
  return bad;
}

int cmd_analyze(const std::string& path, const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = parse_brace_document(read_file(path));
    const auto b = to_brace(doc);
    out << render_report(b, {opt.format, opt.only, doc.name});
    return int{kExitOk};
  });
}

int cmd_verify_paper(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> names;
    if (!opt.fixture) {
      names = fixture_names();
    } else if (!opt.fixture->empty()) {
      fixture_data(*opt.fixture);  // rejects unknown names
      names = {*opt.fixture};
    }
    int failed = 0, total = 0;
    out << std::left << std::setw(7) << "fixture" << "  " << std::setw(34) << "claim" << "  " << std::setw(6)
        << "result" << "  statement\n";
    for (const auto& name : names) {
      auto data = fixture_data(name);
      if (opt.corrupt && *opt.corrupt == name) data = corrupt_fixture(std::move(data));
      for (const auto& r : verify_claims(data)) {
        ++total;
        if (!r.pass) ++failed;
        out << std::left << std::setw(7) << r.fixture << "  " << std::setw(34) << r.name << "  " << std::setw(6)
            << (r.pass ? "PASS" : "FAIL") << "  " << r.description;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << '\n';
      }
    }
    out << total - failed << " of " << total << " claims hold\n";
    if (failed) err << failed << " claim(s) failed\n";
    return failed ? int{kExitCheckFailed} : int{kExitOk};
  });
}

int cmd_enumerate(int n, const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.square_free && !is_square_free(n))
      throw Error(ErrorCode::InvalidArgument, "--square-free needs a square-free order, got " + std::to_string(n));
    const auto c = census(n);
    int failed = 0;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const auto& e = c.entries[i];
      std::vector<std::string> bad;
      if (opt.check) bad = invariant_failures(e.brace);
      if (opt.square_free && !is_supersoluble(e.brace)) bad.emplace_back("square-free-supersoluble");
      for (const auto& what : bad)
        err << "entry " << i << " (" << e.additive_label << ", " << e.multiplicative_label << "): " << what << '\n';
      if (!bad.empty()) ++failed;
    }
    const auto doc = write_census_document(c);
    if (opt.export_path.empty()) {
      out << doc;
    } else {
      write_file(opt.export_path, doc);
      out << "order " << n << ": " << c.entries.size() << " braces written to " << opt.export_path << '\n';
    }
    return failed ? int{kExitCheckFailed} : int{kExitOk};
  });
}

int cmd_ybe(const std::string& path, bool retract_flag, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto s = solution_from_brace(load_brace(path));
    out << render_solution(s, retraction_level(s), ReportFormat::Text, true);
    if (retract_flag) {
      Solution cur = s;
      for (int step = 1; cur.size > 1; ++step) {
        const auto r = retract(cur);
        out << "retraction " << step << ": size " << r.solution.size << ", classes";
        for (Elem c : r.classes) out << ' ' << c;
        out << '\n';
        if (r.solution.size == cur.size) break;
        cur = r.solution;
      }
    }
    return s.checks.all() ? int{kExitOk} : int{kExitCheckFailed};
  });
}

int cmd_export_fixture(const std::string& name, const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ex = build_fixture(name);
    const auto doc = write_cocycle_document(ex.spec(), name, ex.data().title);
    if (path.empty()) {
      out << doc;
    } else {
      write_file(path, doc);
    }
    return int{kExitOk};
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite skew brace analysis", "skewbrace"};
  app.require_subcommand(1);

  std::string path, format = "text", only;
  auto* analyze = app.add_subcommand("analyze", "Classify a brace document");
  analyze->add_option("file", path, "Brace document")->required();
  analyze->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  analyze->add_option("--only", only, "Print a single report section");

  std::string fixture_filter, corrupt;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Check the claims made about the worked examples");
  auto* fixture_opt = verify_cmd->add_option("--fixture", fixture_filter, "Restrict to one fixture (empty: none)");
  auto* corrupt_opt =
      verify_cmd->add_option("--corrupt", corrupt, "Verify this fixture with two delta entries swapped");

  int order = 0;
  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Census of braces of order n");
  enumerate_cmd->add_option("n", order, "Order")->required();
  enumerate_cmd->add_flag("--check", enumerate.check, "Run the invariant suite on every entry");
  enumerate_cmd->add_flag("--square-free", enumerate.square_free, "Require every entry to be supersoluble");
  enumerate_cmd->add_option("--export", enumerate.export_path, "Write the census document to a file");

  bool retract_flag = false;
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter solution of a brace document");
  ybe->add_option("file", path, "Brace document")->required();
  ybe->add_flag("--retract", retract_flag, "Print the retraction sequence");

  std::string fixture, output;
  auto* export_cmd = app.add_subcommand("export-fixture", "Write a worked example as a cocycle document");
  export_cmd->add_option("name", fixture, "ex8, ex32, ex24 or ex12")->required();
  export_cmd->add_option("-o,--output", output, "Output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitParse;
  }

  if (*analyze)
    return cmd_analyze(path, {format == "structured" ? ReportFormat::Structured : ReportFormat::Text, only}, out, err);
  if (*verify_cmd) {
    VerifyOptions verify;
    if (fixture_opt->count()) verify.fixture = fixture_filter;
    if (corrupt_opt->count()) verify.corrupt = corrupt;
    return cmd_verify_paper(verify, out, err);
  }
  if (*enumerate_cmd) return cmd_enumerate(order, enumerate, out, err);
  if (*ybe) return cmd_ybe(path, retract_flag, out, err);
  return cmd_export_fixture(fixture, output, out, err);
}

}  // namespace skewbrace::cli
