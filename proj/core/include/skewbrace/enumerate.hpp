#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

inline constexpr int kCensusBound = 12;
inline constexpr int kExtendedCensusBound = 16;
inline constexpr int kOracleBound = 8;
inline constexpr int kBraceIsomorphismBound = 32;

struct CatalogGroup {
  std::string label;
  FiniteGroup group;
};

// Every group of order n up to isomorphism, for 1 <= n <= 12.
std::vector<CatalogGroup> group_catalog(int n);
// Label of the catalog group isomorphic to g (order <= 12), or "?".
std::string group_label(const FiniteGroup& g);

FiniteGroup quaternion_group();
FiniteGroup dihedral_group(int n);       // order n, n even
FiniteGroup alternating_group_4();
FiniteGroup dicyclic_group_12();

// One representative per isomorphism class of braces with additive group a.
// Classes are found as regular subgroups {(x, phi_x)} of Hol(a) and reduced
// modulo Aut(a); each representative has the lexicographically least product
// table in its Aut(a)-orbit.
std::vector<SkewBrace> braces_with_additive_group(const FiniteGroup& a, int bound = kCensusBound);
// Number of regular subgroups of Hol(a) (before reduction).
long long count_regular_subgroups(const FiniteGroup& a, int bound = kCensusBound);

struct CensusEntry {
  SkewBrace brace;
  std::string additive_label;
  std::string multiplicative_label;
};

struct BraceCensus {
  int order = 1;
  std::vector<CensusEntry> entries;  // sorted by labels, then product table
};

BraceCensus census(int n, int bound = kCensusBound);

// A bijection fixing 0 that is an isomorphism of both groups.
std::optional<std::vector<Elem>> brace_isomorphic(const SkewBrace& b1, const SkewBrace& b2);

// Independent count of braces of order n: all pairs (lambda, delta) of a
// homomorphism C -> Aut(B) and a bijective 1-cocycle, over catalog pairs
// (B, C), collected as product tables and counted up to Aut(B) by Burnside.
long long census_oracle(int n);

bool is_square_free(int n);

}  // namespace skewbrace
