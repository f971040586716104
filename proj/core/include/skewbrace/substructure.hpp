#pragma once

#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// An element subset of a brace with its classification. The flags are
// monotone: ideal => strong left ideal => left ideal => subbrace.
struct SubStructure {
  ElementSet elements;
  bool is_subbrace = false;
  bool is_left_ideal = false;
  bool is_strong_left_ideal = false;
  bool is_ideal = false;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem e) const { return elements.contains(e); }
};

// Throws MissingZero when 0 is not in s.
SubStructure classify_subset(const SkewBrace& b, const ElementSet& s);
bool is_subbrace(const SkewBrace& b, const ElementSet& s);
bool is_left_ideal(const SkewBrace& b, const ElementSet& s);
bool is_ideal(const SkewBrace& b, const ElementSet& s);

// Subgroup of (B,+) generated by s.
ElementSet additive_closure(const SkewBrace& b, const ElementSet& s);
SubStructure ideal_generated(const SkewBrace& b, const ElementSet& gens);
SubStructure subbrace_generated(const SkewBrace& b, const ElementSet& gens);

// Sorted by size, then lexicographically. Throws OrderBoundExceeded above bound.
std::vector<SubStructure> all_ideals(const SkewBrace& b, int bound = kBraceOrderBound);
std::vector<SubStructure> all_subbraces(const SkewBrace& b, int bound = kBraceOrderBound);
std::vector<SubStructure> maximal_subbraces(const SkewBrace& b);
// Intersection of all maximal subbraces (B itself for the zero brace),
// classified rather than assumed to be an ideal.
SubStructure frattini(const SkewBrace& b);
// Largest ideal of B contained in c.
SubStructure core(const SkewBrace& b, const ElementSet& c);
// Largest ideal of B contained in c, as a raw set (helper for series code).
ElementSet largest_ideal_in(const SkewBrace& b, const ElementSet& c);
// |B : C| for a subbrace C; throws InvalidArgument otherwise.
int index(const SkewBrace& b, const ElementSet& c);

}  // namespace skewbrace
