#pragma once

#include <map>
#include <optional>
#include <vector>

#include "skewbrace/series.hpp"

namespace skewbrace {

struct SupersolubleResult {
  bool supersoluble = false;
  std::optional<IdealChain> certificate;  // prime-order factors, when supersoluble
  // When not supersoluble: a chain of ideals J_0 < ... < J_k that could be
  // extended by prime-order factors, and a minimal ideal of B/J_k (as its
  // preimage in B) of composite order.
  std::vector<ElementSet> stuck_chain;
  std::optional<ElementSet> witness;
};

// Greedy: an ideal I of prime order can always be peeled off, since B is
// supersoluble iff B/I is. Search order: ascending size, then lexicographic.
SupersolubleResult supersoluble(const SkewBrace& b);
inline bool is_supersoluble(const SkewBrace& b) { return supersoluble(b).supersoluble; }

struct UpSets {
  ElementSet additive;        // elements whose additive order has only prime factors > p
  ElementSet multiplicative;  // same for the multiplicative order
  bool equal = false;
  bool ideal = false;
};
UpSets u_p(const SkewBrace& b, int p);

// For supersoluble B: an ideal chain whose prime-order factors appear in
// decreasing order of the primes (the 2-section last). Absent otherwise.
std::optional<IdealChain> sylow_tower(const SkewBrace& b);

struct ClassificationReport {
  int order = 1;
  GroupPredicates additive;
  GroupPredicates multiplicative;
  bool trivial = false;
  bool supersoluble = false;
  std::vector<int> certificate_orders;  // term orders of the certificate
  std::vector<int> witness;             // refutation witness elements
  bool centrally_nilpotent = false;
  bool left_nilpotent = false;
  bool right_nilpotent = false;
  bool soluble = false;
  std::optional<int> mp_level;
  std::vector<int> socle_series_orders;
  std::vector<int> upper_central_orders;
  std::vector<int> lower_central_orders;
  int socle_order = 1;
  int zeta_order = 1;
  int derived_order = 1;
  int fitting_order = 1;
  bool fitting_centrally_nilpotent = true;
  std::map<int, int> u_p_additive_orders;  // prime -> |U_p^+|
  std::map<int, bool> u_p_equal;
  std::map<int, bool> u_p_ideal;
  std::optional<std::vector<int>> sylow_tower_factors;
  std::vector<int> chief_factors;
  std::vector<int> maximal_subbrace_indices;
  int ideal_count = 1;
  int subbrace_count = 1;
  int frattini_order = 1;
  bool frattini_is_ideal = true;
};

ClassificationReport brace_report(const SkewBrace& b);

}  // namespace skewbrace
