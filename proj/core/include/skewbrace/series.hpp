#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewbrace/substructure.hpp"

namespace skewbrace {

struct FactorInfo {
  int order = 1;
  bool is_prime_order = false;
  bool in_socle_of_quotient = false;   // K/J lies in Soc(B/J)
  bool central_in_quotient = false;    // K/J lies in zeta(B/J)

  friend bool operator==(const FactorInfo&, const FactorInfo&) = default;
};

// Strictly increasing chain of ideals starting at {0}; factors[i] describes
// terms[i+1]/terms[i].
struct IdealChain {
  std::vector<ElementSet> terms;
  std::vector<FactorInfo> factors;

  std::size_t length() const { return factors.size(); }
  const ElementSet& top() const { return terms.back(); }
  std::vector<int> term_orders() const;    // orders of terms[1..]
  std::vector<int> factor_orders() const;
};

// Validates that the terms are strictly increasing ideals beginning with {0}
// and computes the factor descriptors. Throws NotAnIdeal / InvalidArgument.
IdealChain make_chain(const SkewBrace& b, std::vector<ElementSet> terms);
FactorInfo describe_factor(const SkewBrace& b, const ElementSet& lower, const ElementSet& upper);

// Preimages of Soc(B/J) and zeta(B/J) for an ideal J, computed without
// forming the quotient.
ElementSet socle_over(const SkewBrace& b, const ElementSet& j);
ElementSet zeta_over(const SkewBrace& b, const ElementSet& j);

SubStructure socle(const SkewBrace& b);
IdealChain socle_series(const SkewBrace& b);
// Smallest n with Soc_n(B) = B; absent when the series stops below B.
std::optional<int> multipermutation_level(const SkewBrace& b);

SubStructure zeta(const SkewBrace& b);
IdealChain upper_central_series(const SkewBrace& b);
bool is_centrally_nilpotent(const SkewBrace& b);

// Gamma_1 = B, Gamma_{k+1} = <Gamma_k * B, B * Gamma_k, [Gamma_k, B]_+>_+,
// listed until the first repetition.
std::vector<ElementSet> lower_central_series(const SkewBrace& b);
// Gamma_{m+1} = {0} exactly when zeta_m(B) = B, with the same minimal m.
bool central_series_consistent(const SkewBrace& b);

// Additive subgroup generated by all x * y, x in X, y in Y.
ElementSet star_subgroup(const SkewBrace& b, const ElementSet& x, const ElementSet& y);

struct LeftRightSeries {
  std::vector<ElementSet> left;   // L_0 = B, L_{k+1} = B * L_k
  std::vector<ElementSet> right;  // R_0 = B, R_{k+1} = R_k * B
};
// Each list ends at {0} or at the first repeated (stable) term.
LeftRightSeries left_right_series(const SkewBrace& b);
bool is_left_nilpotent(const SkewBrace& b);
bool is_right_nilpotent(const SkewBrace& b);

// <B * B, [B, B]_+>_+
SubStructure derived_ideal(const SkewBrace& b);

// zeta_{k+1}(I)_B / zeta_k(I)_B is the largest ideal of B/zeta_k(I)_B inside
// zeta(I/zeta_k(I)_B). Throws NotAnIdeal.
IdealChain b_central_series(const SkewBrace& b, const ElementSet& ideal);
bool is_b_centrally_nilpotent(const SkewBrace& b, const ElementSet& ideal);

// Sum of all B-centrally nilpotent ideals.
SubStructure fitting(const SkewBrace& b);

// Refines {0} < B through minimal ideals of the successive quotients
// (smallest ideal first, then lexicographic).
IdealChain chief_series(const SkewBrace& b);
std::vector<int> chief_factor_orders(const SkewBrace& b);

// True when some ideal chain has abelian factors (trivial with abelian
// additive group); the chain is returned as witness.
std::pair<bool, std::optional<IdealChain>> soluble_chain(const SkewBrace& b);
bool is_soluble(const SkewBrace& b);

}  // namespace skewbrace
