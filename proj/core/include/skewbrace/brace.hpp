#pragma once

#include <memory>
#include <span>
#include <vector>

#include "skewbrace/element_set.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

inline constexpr int kBraceOrderBound = 64;

namespace detail {
struct BraceCache;
}

// A finite skew (left) brace: two groups on the carrier 0..n-1 sharing the
// identity 0 and linked by a(b + c) = ab - a + ac. The lambda and star tables
// are materialized at construction; every constructor validates all axioms
// exhaustively.
class SkewBrace {
 public:
  // The zero brace of order 1.
  SkewBrace();

  // Validates both groups, distributivity on all triples, that a -> lambda_a
  // is a homomorphism into Aut(B,+) and the star-product identities.
  static SkewBrace from_groups(FiniteGroup add, FiniteGroup mul);

  int order() const { return add_.order(); }
  const FiniteGroup& additive() const { return add_; }
  const FiniteGroup& multiplicative() const { return mul_; }

  Elem add(Elem a, Elem b) const { return add_.op(a, b); }
  Elem neg(Elem a) const { return add_.inv(a); }
  Elem sub(Elem a, Elem b) const { return add_.op(a, add_.inv(b)); }
  Elem mul(Elem a, Elem b) const { return mul_.op(a, b); }
  Elem inv(Elem a) const { return mul_.inv(a); }

  // lambda_a(b) = -a + ab
  Elem lambda(Elem a, Elem b) const { return lambda_[idx(a, b)]; }
  // a * b = lambda_a(b) - b
  Elem star(Elem a, Elem b) const { return star_[idx(a, b)]; }
  std::span<const Elem> lambda_map(Elem a) const {
    return {lambda_.data() + idx(a, 0), static_cast<std::size_t>(order())};
  }

  // Additive multiple k.b and multiplicative power b^k; negative k allowed.
  Elem times(long long k, Elem b) const { return add_.pow(b, k); }
  Elem power(Elem b, long long k) const { return mul_.pow(b, k); }

  bool is_trivial() const;        // star is identically zero
  bool is_abelian_type() const { return add_.is_abelian(); }
  bool is_abelian() const { return is_trivial() && is_abelian_type(); }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.add_ == b.add_ && a.mul_ == b.mul_;
  }

  // Memoized lattices; filled once, shared between copies.
  const std::vector<ElementSet>& additive_subgroups() const;
  const std::vector<ElementSet>& cached_ideals() const;

 private:
  SkewBrace(FiniteGroup add, FiniteGroup mul);
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * order() + b; }

  FiniteGroup add_;
  FiniteGroup mul_;
  std::vector<Elem> lambda_;
  std::vector<Elem> star_;
  std::shared_ptr<detail::BraceCache> cache_;
};

// Both tables must describe groups of the same order with a common identity;
// if that identity is not 0 it is relabeled to 0 in both tables.
SkewBrace make_brace(const Table& add_table, const Table& mul_table);
SkewBrace trivial_brace(const FiniteGroup& g);

// Data of a bijective 1-cocycle delta: C -> B with respect to lambda: C -> Aut(B).
struct CocycleSpec {
  FiniteGroup additive;
  FiniteGroup multiplicative;
  std::vector<Permutation> lambda;  // lambda[c] is an automorphism of `additive`
  std::vector<Elem> delta;          // delta[c] in `additive`
};

// Throws ActionNotHomomorphism, DeltaNotBijective or CocycleIdentityViolation.
void validate_cocycle(const CocycleSpec& spec);
// Product a.b = a + lambda_{delta^-1(a)}(b).
SkewBrace brace_from_cocycle(const CocycleSpec& spec);
// The cocycle carried by a brace itself: C = (B,.), lambda, delta = id.
CocycleSpec cocycle_of(const SkewBrace& b);

struct BraceQuotient {
  SkewBrace brace;
  std::vector<Elem> projection;  // element -> coset index, cosets ordered by minimum
};
BraceQuotient quotient(const SkewBrace& b, const ElementSet& ideal);

struct InducedBrace {
  SkewBrace brace;
  std::vector<Elem> embedding;  // local index -> parent element (increasing)
};
// Restricts both operations to a subbrace.
InducedBrace induced_brace(const SkewBrace& b, const ElementSet& subbrace);

// (B,+) x|_lambda (B,.) on pairs (a, m) with index a*n + m.
FiniteGroup semidirect_group(const SkewBrace& b);

// Carrier pairs (x, y) with index x*|B2| + y; componentwise operations.
SkewBrace direct_product_braces(const SkewBrace& b1, const SkewBrace& b2);

// Transport of structure along perm (old label -> new label, perm[0] == 0).
SkewBrace relabel(const SkewBrace& b, std::span<const Elem> perm);

}  // namespace skewbrace
