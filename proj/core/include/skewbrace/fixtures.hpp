#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// Raw transcription of a worked example: both groups with named generators,
// lambda on generators, and the full delta table as (word, expression) pairs.
struct FixtureData {
  std::string name;
  std::string title;
  FiniteGroup additive;
  std::vector<std::pair<std::string, Elem>> additive_generators;        // e.g. {"a", 2}
  FiniteGroup multiplicative;
  std::vector<std::pair<std::string, Elem>> multiplicative_generators;  // e.g. {"x", 2}
  // lambda_g(additive generator i) for each multiplicative generator g.
  std::vector<std::pair<std::string, std::vector<std::string>>> lambda_images;
  std::vector<std::pair<std::string, std::string>> delta;  // word -> additive expression
  std::vector<std::string> notes;
};

class PaperExample {
 public:
  const std::string& name() const { return data_.name; }
  const FixtureData& data() const { return data_; }
  const CocycleSpec& spec() const { return spec_; }
  const SkewBrace& brace() const { return brace_; }

  // "3a+b", "a+c+d", "0"
  Elem element(const std::string& expr) const;
  // Element of C for a word such as "x^2y^3z" or "1".
  Elem word(const std::string& w) const;
  Elem delta(const std::string& w) const { return spec_.delta[word(w)]; }
  // Additive subgroup generated by the given expressions.
  ElementSet span(const std::vector<std::string>& exprs) const;
  // Subgroup of C generated by the given words.
  ElementSet word_span(const std::vector<std::string>& words) const;

 private:
  friend PaperExample build_fixture(const FixtureData& data);
  FixtureData data_;
  CocycleSpec spec_;
  SkewBrace brace_;
};

std::vector<std::string> fixture_names();  // ex8, ex32, ex24, ex12
FixtureData fixture_data(const std::string& name);
// Throws TranscriptionInvalid if a table breaks bijectivity, the action or
// the cocycle identity.
PaperExample build_fixture(const FixtureData& data);
PaperExample build_fixture(const std::string& name);

// Swaps the delta values of two entries: a deliberately broken transcription.
FixtureData corrupt_fixture(FixtureData data);

struct Claim {
  std::string name;
  std::string description;
  std::function<bool(const PaperExample&, std::string& detail)> check;
};

struct ClaimResult {
  std::string fixture;
  std::string name;
  std::string description;
  bool pass = false;
  std::string detail;
};

std::vector<Claim> fixture_claims(const std::string& name);
// Builds the example (the build itself is the first claim) and evaluates
// every registered claim; exceptions count as failures.
std::vector<ClaimResult> verify_claims(const FixtureData& data);
std::vector<ClaimResult> verify_claims(const std::string& name);

// Parses an additive expression over named generators: sum of terms
// [k]name or 0, with k a non-negative integer.
Elem evaluate_sum(const FiniteGroup& g, const std::vector<std::pair<std::string, Elem>>& gens,
                  const std::string& expr);
// Parses a product of name[^k] factors, or "1".
Elem evaluate_word(const FiniteGroup& g, const std::vector<std::pair<std::string, Elem>>& gens,
                   const std::string& word);

}  // namespace skewbrace
