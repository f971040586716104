#include "skewbrace/document.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace skewbrace {

namespace {

struct Token {
  std::string text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
  std::string rest;  // text after the first token, trimmed
};

[[noreturn]] void fail(int line, int column, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      if (raw[i] == '#' && line.tokens.empty()) break;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
      if (line.tokens.size() == 1) {
        std::size_t r = i;
        while (r < raw.size() && std::isspace(static_cast<unsigned char>(raw[r]))) ++r;
        std::size_t e = raw.size();
        while (e > r && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
        line.rest = std::string(raw.substr(r, e - r));
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return at_ >= lines_.size(); }
  const Line& peek() const { return lines_[at_]; }
  const Line& next() {
    if (done()) fail(last_line(), 1, "unexpected end of document");
    return lines_[at_++];
  }
  int last_line() const { return lines_.empty() ? 1 : lines_.back().number + 1; }

  static long long integer(const Line& l, const Token& t) {
    long long v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) fail(l.number, t.column, "expected an integer, found '" + t.text + "'");
    return v;
  }

  static int single_int(const Line& l) {
    if (l.tokens.size() != 2) fail(l.number, l.tokens[0].column, "'" + l.tokens[0].text + "' takes one integer");
    return static_cast<int>(integer(l, l.tokens[1]));
  }

  std::vector<Elem> row(int n, int bound) {
    const Line& l = next();
    if (static_cast<int>(l.tokens.size()) != n)
      fail(l.number, l.tokens[0].column,
           "expected " + std::to_string(n) + " entries, found " + std::to_string(l.tokens.size()));
    std::vector<Elem> r;
    for (const auto& t : l.tokens) {
      const long long v = integer(l, t);
      if (v < 0 || v >= bound)
        fail(l.number, t.column, "entry " + t.text + " outside 0.." + std::to_string(bound - 1));
      r.push_back(static_cast<Elem>(v));
    }
    return r;
  }

  Table table(int n) {
    Table t;
    for (int i = 0; i < n; ++i) t.push_back(row(n, n));
    return t;
  }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

void expect_keyword(const Line& l, const char* kw) {
  if (l.tokens[0].text != kw) fail(l.number, l.tokens[0].column, std::string("expected '") + kw + "'");
  if (l.tokens.size() != 1) fail(l.number, l.tokens[1].column, std::string("unexpected text after '") + kw + "'");
}

// Reads brace fields until end of input or an "end" line (left unread).
BraceDocument read_brace(Reader& in, bool nested) {
  BraceDocument doc;
  bool seen_version = nested;
  int order_line = 0;
  while (!in.done()) {
    const Line& peek = in.peek();
    const std::string& kw = peek.tokens[0].text;
    if (nested && kw == "end") break;
    const Line& l = in.next();
    if (kw == "format_version") {
      doc.format_version = Reader::single_int(l);
      if (doc.format_version != kFormatVersion)
        fail(l.number, l.tokens[1].column, "unsupported format version " + std::to_string(doc.format_version));
      seen_version = true;
    } else if (!seen_version) {
      fail(l.number, l.tokens[0].column, "document must start with 'format_version'");
    } else if (kw == "name") {
      doc.name = l.rest;
    } else if (kw == "source") {
      doc.source = l.rest;
    } else if (kw == "order") {
      doc.order = Reader::single_int(l);
      order_line = l.number;
      if (doc.order < 1 || doc.order > kMaxGroupOrder)
        fail(l.number, l.tokens[1].column, "order must lie in 1.." + std::to_string(kMaxGroupOrder));
    } else if (kw == "add_table" || kw == "mul_table" || kw == "cocycle") {
      if (!order_line) fail(l.number, l.tokens[0].column, "'order' must precede '" + kw + "'");
      expect_keyword(l, kw.c_str());
      if (kw == "add_table") {
        if (doc.add_table) fail(l.number, 1, "duplicate add_table");
        doc.add_table = in.table(doc.order);
      } else if (kw == "mul_table") {
        if (doc.mul_table) fail(l.number, 1, "duplicate mul_table");
        doc.mul_table = in.table(doc.order);
      } else {
        if (doc.cocycle) fail(l.number, 1, "duplicate cocycle block");
        CocycleTables c;
        expect_keyword(in.next(), "additive_table");
        c.additive = in.table(doc.order);
        expect_keyword(in.next(), "multiplicative_table");
        c.multiplicative = in.table(doc.order);
        expect_keyword(in.next(), "lambda_tables");
        for (int i = 0; i < doc.order; ++i) c.lambda.push_back(in.row(doc.order, doc.order));
        expect_keyword(in.next(), "delta");
        c.delta = in.row(doc.order, doc.order);
        doc.cocycle = std::move(c);
      }
    } else {
      fail(l.number, l.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  const int end_line = in.done() ? in.last_line() : in.peek().number;
  if (!seen_version) fail(end_line, 1, "missing 'format_version'");
  if (!order_line) fail(end_line, 1, "missing 'order'");
  if (doc.cocycle && (doc.add_table || doc.mul_table))
    fail(end_line, 1, "a document holds either tables or a cocycle, not both");
  if (!doc.cocycle && (!doc.add_table || !doc.mul_table))
    fail(end_line, 1, "missing 'add_table' or 'mul_table'");
  return doc;
}

void write_table(std::ostringstream& os, const Table& t) {
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
}

void write_row(std::ostringstream& os, std::span<const Elem> row) {
  for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
  os << '\n';
}

void write_header(std::ostringstream& os, int order, const std::string& name, const std::string& source) {
  os << "format_version " << kFormatVersion << '\n';
  if (!name.empty()) os << "name " << name << '\n';
  if (!source.empty()) os << "source " << source << '\n';
  os << "order " << order << '\n';
}

}  // namespace

BraceDocument parse_brace_document(std::string_view text) {
  Reader in(tokenize(text));
  return read_brace(in, false);
}

CensusDocument parse_census_document(std::string_view text) {
  Reader in(tokenize(text));
  CensusDocument doc;
  const Line& v = in.next();
  if (v.tokens[0].text != "format_version") fail(v.number, 1, "document must start with 'format_version'");
  if (Reader::single_int(v) != kFormatVersion) fail(v.number, v.tokens[1].column, "unsupported format version");
  const Line& c = in.next();
  if (c.tokens[0].text != "census") fail(c.number, 1, "expected 'census'");
  doc.order = Reader::single_int(c);
  int count = -1;
  while (!in.done()) {
    const Line& l = in.next();
    const std::string& kw = l.tokens[0].text;
    if (kw == "count") {
      count = Reader::single_int(l);
      continue;
    }
    if (kw != "begin" || l.tokens.size() != 2 || l.tokens[1].text != "brace")
      fail(l.number, l.tokens[0].column, "expected 'begin brace'");
    CensusRecord r;
    while (!in.done() && (in.peek().tokens[0].text == "additive_label" ||
                          in.peek().tokens[0].text == "multiplicative_label")) {
      const Line& lab = in.next();
      (lab.tokens[0].text == "additive_label" ? r.additive_label : r.multiplicative_label) = lab.rest;
    }
    r.brace = read_brace(in, true);
    const Line& e = in.next();
    if (e.tokens.size() != 2 || e.tokens[1].text != "brace") fail(e.number, e.tokens[0].column, "expected 'end brace'");
    if (r.brace.order != doc.order) fail(e.number, 1, "record order differs from census order");
    doc.records.push_back(std::move(r));
  }
  if (count >= 0 && count != static_cast<int>(doc.records.size()))
    fail(in.last_line(), 1, "count " + std::to_string(count) + " does not match " +
                                std::to_string(doc.records.size()) + " records");
  return doc;
}

SkewBrace to_brace(const BraceDocument& doc) {
  if (doc.cocycle) {
    CocycleSpec spec{FiniteGroup::from_table(doc.cocycle->additive),
                     FiniteGroup::from_table(doc.cocycle->multiplicative), doc.cocycle->lambda, doc.cocycle->delta};
    // from_table may relabel a misplaced identity, which would silently
    // change the meaning of lambda and delta.
    if (spec.additive.table() != doc.cocycle->additive || spec.multiplicative.table() != doc.cocycle->multiplicative)
      throw Error(ErrorCode::GroupInvalid, "cocycle group tables must have identity 0");
    return brace_from_cocycle(spec);
  }
  return make_brace(*doc.add_table, *doc.mul_table);
}

std::string write_brace_document(const SkewBrace& b, const std::string& name, const std::string& source) {
  std::ostringstream os;
  write_header(os, b.order(), name, source);
  os << "add_table\n";
  write_table(os, b.additive().table());
  os << "mul_table\n";
  write_table(os, b.multiplicative().table());
  return os.str();
}

std::string write_cocycle_document(const CocycleSpec& spec, const std::string& name, const std::string& source) {
  std::ostringstream os;
  write_header(os, spec.additive.order(), name, source);
  os << "cocycle\nadditive_table\n";
  write_table(os, spec.additive.table());
  os << "multiplicative_table\n";
  write_table(os, spec.multiplicative.table());
  os << "lambda_tables\n";
  for (const auto& l : spec.lambda) write_row(os, l);
  os << "delta\n";
  write_row(os, spec.delta);
  return os.str();
}

std::string write_census_document(const BraceCensus& census) {
  std::ostringstream os;
  os << "format_version " << kFormatVersion << '\n' << "census " << census.order << '\n'
     << "count " << census.entries.size() << '\n';
  int k = 0;
  for (const auto& e : census.entries) {
    os << "begin brace\n"
       << "additive_label " << e.additive_label << '\n'
       << "multiplicative_label " << e.multiplicative_label << '\n'
       << "name census-" << census.order << "-" << ++k << '\n'
       << "order " << e.brace.order() << '\n'
       << "add_table\n";
    write_table(os, e.brace.additive().table());
    os << "mul_table\n";
    write_table(os, e.brace.multiplicative().table());
    os << "end brace\n";
  }
  return os.str();
}

std::string write_solution_document(const Solution& s) {
  std::ostringstream os;
  os << "format_version " << kFormatVersion << '\n' << "solution\nsize " << s.size << '\n' << "first_table\n";
  write_table(os, s.first);
  os << "second_table\n";
  write_table(os, s.second);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

}  // namespace skewbrace
