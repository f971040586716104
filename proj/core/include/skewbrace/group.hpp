#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "skewbrace/element_set.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {

using Table = std::vector<std::vector<Elem>>;
using Permutation = std::vector<Elem>;

// Associativity is checked on all n^3 triples up to this order; above it the
// check is Light's test over a generating set, which is exact but O(n^2 |gens|).
inline constexpr int kExhaustiveAssociativityBound = 64;
inline constexpr int kMaxGroupOrder = 4096;
inline constexpr int kSubgroupLatticeBound = 64;
inline constexpr int kHolomorphBound = 12;
inline constexpr int kAutomorphismBound = 64;
inline constexpr int kIsomorphismSearchBound = 64;

// A finite group given by its Cayley table. The identity is always element 0.
// Instances are immutable once constructed and always validated.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates `table` as a group and relabels the identity to 0 (swapping it
  // with whatever element carried label 0).
  static FiniteGroup from_table(const Table& table);

  int order() const { return n_; }
  Elem op(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long k) const;
  int element_order(Elem a) const { return orders_[a]; }
  std::span<const Elem> row(Elem a) const {
    return {table_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const Elem> inverses() const { return inverse_; }

  // g x g^-1
  Elem conj(Elem g, Elem x) const { return op(op(g, x), inverse_[g]); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return op(op(inverse_[a], inverse_[b]), op(a, b)); }

  bool is_abelian() const;
  Table table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(int n, std::vector<Elem> flat);

  int n_ = 1;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
};

inline FiniteGroup make_group(const Table& table) { return FiniteGroup::from_table(table); }

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// N x| H with (n1,h1)(n2,h2) = (n1 action[h1](n2), h1 h2); element (n,h) has
// index n*|H| + h. action[h] must be an automorphism of N and h -> action[h]
// a homomorphism, otherwise ActionNotHomomorphism is thrown.
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               std::span<const Permutation> action);

// Homomorphism images, plus whether they form a permutation.
struct GroupMap {
  std::vector<Elem> images;
  bool bijective = false;

  friend bool operator==(const GroupMap&, const GroupMap&) = default;
};

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, std::span<const Elem> images);
bool is_automorphism(const FiniteGroup& g, std::span<const Elem> images);
bool is_permutation(std::span<const Elem> images);
Permutation compose(std::span<const Elem> outer, std::span<const Elem> inner);
Permutation invert(std::span<const Elem> perm);

// Extends images assigned to `gens` along right multiplication by the
// generators. Returns nullopt as soon as two paths disagree. Elements outside
// <gens> are reported through `domain`.
template <class T, class Compose>
std::optional<std::vector<T>> extend_on_generators(const FiniteGroup& src, std::span<const Elem> gens,
                                                   std::span<const T> images, const T& identity,
                                                   Compose&& compose_fn, ElementSet* domain = nullptr) {
  const int n = src.order();
  std::vector<T> value(static_cast<std::size_t>(n));
  ElementSet known(static_cast<std::size_t>(n));
  value[0] = identity;
  known.insert(0);
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = src.op(x, gens[i]);
      T v = compose_fn(value[x], images[i]);
      if (known.insert(y)) {
        value[y] = std::move(v);
        queue.push_back(y);
      } else if (!(value[y] == v)) {
        return std::nullopt;
      }
    }
  }
  if (domain) *domain = known;
  return value;
}

// Group homomorphism src -> dst from generator images; nullopt if the images
// do not extend or the generators do not generate src.
std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images);

ElementSet generate_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
ElementSet generate_subgroup(const FiniteGroup& g, const ElementSet& gens);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);
ElementSet normal_closure(const FiniteGroup& g, const ElementSet& s);
ElementSet center(const FiniteGroup& g);
ElementSet derived_subgroup(const FiniteGroup& g);
// Greedy generating set: repeatedly adds the element of largest order not yet
// covered (smallest index on ties).
std::vector<Elem> generating_set(const FiniteGroup& g);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Elem> projection;  // element of g -> coset index
};
// Cosets are numbered by increasing minimum element, so the subgroup itself is 0.
QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& normal);

struct InducedGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;  // local index -> element of the parent (increasing)
};
InducedGroup induced_subgroup(const FiniteGroup& g, const ElementSet& s);

// Complete subgroup list by cyclic extension, sorted by size_lex_less.
std::vector<ElementSet> subgroups(const FiniteGroup& g, int bound = kSubgroupLatticeBound);
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, int bound = kSubgroupLatticeBound);

struct GroupPredicates {
  bool abelian = false;
  bool nilpotent = false;
  bool supersoluble = false;
  std::map<int, int> element_orders;  // order -> number of elements
  std::vector<int> pi;                 // primes dividing some element order
};

bool is_nilpotent(const FiniteGroup& g);
// A nontrivial supersoluble group has a normal subgroup N of prime order, and
// G is supersoluble iff G/N is; the decision peels such subgroups off.
bool is_supersoluble(const FiniteGroup& g);
GroupPredicates group_predicates(const FiniteGroup& g);

std::vector<GroupMap> automorphisms(const FiniteGroup& g, int bound = kAutomorphismBound);

struct AutomorphismGroup {
  FiniteGroup group;             // element i composes as maps[i] o maps[j]
  std::vector<Permutation> maps;  // maps[0] is the identity
};
AutomorphismGroup automorphism_group(const FiniteGroup& g, int bound = kAutomorphismBound);

struct Holomorph {
  FiniteGroup group;                   // G x| Aut(G)
  std::vector<Permutation> automorphisms;
  std::vector<Elem> translations;      // g -> index of (g, id)
};
Holomorph holomorph(const FiniteGroup& g, int bound = kHolomorphBound);

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
inline bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

std::vector<int> prime_divisors(int n);
bool is_prime(int n);

}  // namespace skewbrace
