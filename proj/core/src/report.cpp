#include "skewbrace/report.hpp"

#include <algorithm>
#include <sstream>

#include "skewbrace/enumerate.hpp"

namespace skewbrace {

namespace {

struct Entry {
  std::string section;
  std::string key;
  std::string value;
};

std::string b2s(bool b) { return b ? "true" : "false"; }

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string label(const FiniteGroup& g) {
  const auto l = group_label(g);
  return l == "?" ? "order-" + std::to_string(g.order()) : l;
}

std::string orders(const std::map<int, int>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    s += (first ? "" : ",") + std::to_string(k) + ":" + std::to_string(v);
    first = false;
  }
  return s + "}";
}

void group_entries(std::vector<Entry>& out, const std::string& prefix, const FiniteGroup& g,
                   const GroupPredicates& p) {
  out.push_back({"groups", prefix + "_type", label(g)});
  out.push_back({"groups", prefix + "_abelian", b2s(p.abelian)});
  out.push_back({"groups", prefix + "_nilpotent", b2s(p.nilpotent)});
  out.push_back({"groups", prefix + "_supersoluble", b2s(p.supersoluble)});
  out.push_back({"groups", prefix + "_element_orders", orders(p.element_orders)});
  out.push_back({"groups", prefix + "_primes", set(p.pi)});
}

std::vector<Entry> classification_entries(const SkewBrace& b, const ClassificationReport& r) {
  std::vector<Entry> e;
  e.push_back({"groups", "order", std::to_string(r.order)});
  e.push_back({"groups", "trivial", b2s(r.trivial)});
  group_entries(e, "additive", b.additive(), r.additive);
  group_entries(e, "multiplicative", b.multiplicative(), r.multiplicative);

  e.push_back({"supersolubility", "supersoluble", b2s(r.supersoluble)});
  e.push_back({"supersolubility", "certificate", r.supersoluble ? list(r.certificate_orders) : "none"});
  e.push_back({"supersolubility", "witness", r.supersoluble ? "none" : set(r.witness)});
  e.push_back({"supersolubility", "chief_factors", list(r.chief_factors)});
  e.push_back({"supersolubility", "maximal_subbrace_indices", list(r.maximal_subbrace_indices)});
  e.push_back({"supersolubility", "soluble", b2s(r.soluble)});

  e.push_back({"series", "socle_series", list(r.socle_series_orders)});
  e.push_back({"series", "mp_level", opt(r.mp_level)});
  e.push_back({"series", "upper_central_series", list(r.upper_central_orders)});
  e.push_back({"series", "lower_central_series", list(r.lower_central_orders)});
  e.push_back({"series", "centrally_nilpotent", b2s(r.centrally_nilpotent)});
  e.push_back({"series", "left_nilpotent", b2s(r.left_nilpotent)});
  e.push_back({"series", "right_nilpotent", b2s(r.right_nilpotent)});

  e.push_back({"ideals", "ideal_count", std::to_string(r.ideal_count)});
  e.push_back({"ideals", "subbrace_count", std::to_string(r.subbrace_count)});
  e.push_back({"ideals", "socle_order", std::to_string(r.socle_order)});
  e.push_back({"ideals", "zeta_order", std::to_string(r.zeta_order)});
  e.push_back({"ideals", "derived_order", std::to_string(r.derived_order)});
  e.push_back({"ideals", "fitting_order", std::to_string(r.fitting_order)});
  e.push_back({"ideals", "fitting_centrally_nilpotent", b2s(r.fitting_centrally_nilpotent)});
  e.push_back({"ideals", "frattini_order", std::to_string(r.frattini_order)});
  e.push_back({"ideals", "frattini_is_ideal", b2s(r.frattini_is_ideal)});

  for (const auto& [p, n] : r.u_p_additive_orders) {
    const std::string k = "u_" + std::to_string(p);
    e.push_back({"sylow", k + "_order", std::to_string(n)});
    e.push_back({"sylow", k + "_equal", b2s(r.u_p_equal.at(p))});
    e.push_back({"sylow", k + "_ideal", b2s(r.u_p_ideal.at(p))});
  }
  e.push_back({"sylow", "tower", r.sylow_tower_factors ? list(*r.sylow_tower_factors) : "none"});
  return e;
}

std::vector<Entry> solution_entries(const Solution& s, std::optional<int> level, bool tables) {
  std::vector<Entry> e;
  e.push_back({"ybe", "size", std::to_string(s.size)});
  e.push_back({"ybe", "braid", b2s(s.checks.braid)});
  e.push_back({"ybe", "bijective", b2s(s.checks.bijective)});
  e.push_back({"ybe", "left_nondegenerate", b2s(s.checks.left_nondegenerate)});
  e.push_back({"ybe", "right_nondegenerate", b2s(s.checks.right_nondegenerate)});
  e.push_back({"ybe", "retraction_level", opt(level)});
  if (tables)
    for (int x = 0; x < s.size; ++x) {
      e.push_back({"ybe", "first_row_" + std::to_string(x), list(s.first[x])});
      e.push_back({"ybe", "second_row_" + std::to_string(x), list(s.second[x])});
    }
  return e;
}

std::string render(const std::vector<Entry>& entries, ReportFormat format, const std::string& header) {
  std::ostringstream os;
  if (format == ReportFormat::Structured) {
    for (const auto& e : entries) os << e.section << '.' << e.key << " = " << e.value << '\n';
    return os.str();
  }
  if (!header.empty()) os << header << '\n';
  std::string current;
  for (const auto& e : entries) {
    if (e.section != current) {
      if (!current.empty() || !header.empty()) os << '\n';
      os << e.section << '\n';
      current = e.section;
    }
    std::string key = e.key;
    std::replace(key.begin(), key.end(), '_', ' ');
    std::string value = e.value == "true" ? "yes" : e.value == "false" ? "no" : e.value;
    os << "  " << key << ": " << value << '\n';
  }
  return os.str();
}

}  // namespace

std::vector<std::string> report_sections() { return {"groups", "supersolubility", "series", "ideals", "sylow", "ybe"}; }

std::string render_report(const SkewBrace& b, const ReportOptions& options) {
  const auto sections = report_sections();
  if (!options.only.empty() && std::find(sections.begin(), sections.end(), options.only) == sections.end())
    throw Error(ErrorCode::InvalidArgument, "unknown report section '" + options.only + "'");
  std::vector<Entry> entries;
  if (options.only != "ybe") {
    for (auto& e : classification_entries(b, brace_report(b)))
      if (options.only.empty() || e.section == options.only) entries.push_back(std::move(e));
  }
  if (options.only.empty() || options.only == "ybe") {
    const auto s = solution_from_brace(b);
    for (auto& e : solution_entries(s, retraction_level(s), options.only == "ybe")) entries.push_back(std::move(e));
  }
  std::string header;
  if (options.format == ReportFormat::Text)
    header = "brace" + (options.name.empty() ? std::string() : " " + options.name) + " of order " +
             std::to_string(b.order());
  return render(entries, options.format, header);
}

std::string render_solution(const Solution& s, std::optional<int> level, ReportFormat format, bool tables) {
  return render(solution_entries(s, level, tables), format, format == ReportFormat::Text ? "solution" : "");
}

}  // namespace skewbrace
