#pragma once

#include <optional>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

struct SolutionChecks {
  bool braid = false;
  bool bijective = false;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;

  bool nondegenerate() const { return left_nondegenerate && right_nondegenerate; }
  bool all() const { return braid && bijective && nondegenerate(); }
  friend bool operator==(const SolutionChecks&, const SolutionChecks&) = default;
};

// r(x, y) = (first[x][y], second[x][y]) on 0..n-1.
struct Solution {
  int size = 0;
  Table first;
  Table second;
  SolutionChecks checks;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.size == b.size && a.first == b.first && a.second == b.second;
  }
};

// Exhaustive: braid relation on all n^3 triples, bijectivity on n^2 pairs,
// rows of `first` and columns of `second` are permutations.
SolutionChecks verify_solution(const Solution& s);

// A braid failure (x, y, z), when any.
std::optional<std::vector<Elem>> braid_violation(const Solution& s);

// r(x, y) = (lambda_x(y), lambda_x(y)^-1 x y). Throws SolutionInvalid with
// the failing triple if the result is not a non-degenerate solution.
Solution solution_from_brace(const SkewBrace& b);

Solution flip_solution(int n);

struct Retraction {
  Solution solution;
  std::vector<Elem> classes;  // element -> class index, classes ordered by minimum
};

// Identifies x and y when first[x][.] = first[y][.] and second[.][x] = second[.][y].
// Throws RetractNotWellDefined if the induced tables are inconsistent.
Retraction retract(const Solution& s);
// Number of retractions needed to reach one point; absent when the size
// stabilizes above 1. A one-point solution has level 0.
std::optional<int> retraction_level(const Solution& s);

}  // namespace skewbrace
