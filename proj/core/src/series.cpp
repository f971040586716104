#include "skewbrace/series.hpp"

#include <stdexcept>
#include <string>

namespace skewbrace {

namespace {

ElementSet zero_set(const SkewBrace& b) { return ElementSet::zero(static_cast<std::size_t>(b.order())); }
ElementSet full_set(const SkewBrace& b) { return ElementSet::full(static_cast<std::size_t>(b.order())); }

// Elements x (of `domain`) with x * y, [x, y]_+ and optionally [x, y]_. in j
// for every y of `against`.
ElementSet centralizer_mod(const SkewBrace& b, const ElementSet& domain, const ElementSet& against,
                           const ElementSet& j, bool multiplicative) {
  ElementSet out(static_cast<std::size_t>(b.order()));
  const auto ys = against.elements();
  domain.for_each([&](Elem x) {
    for (Elem y : ys) {
      if (!j.contains(b.star(x, y)) || !j.contains(b.additive().commutator(x, y))) return;
      if (multiplicative && !j.contains(b.multiplicative().commutator(x, y))) return;
    }
    out.insert(x);
  });
  return out;
}

IdealChain ascending(const SkewBrace& b, bool multiplicative) {
  std::vector<ElementSet> terms{zero_set(b)};
  const ElementSet all = full_set(b);
  for (int step = 0; step < b.order(); ++step) {
    ElementSet next = centralizer_mod(b, all, all, terms.back(), multiplicative);
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return make_chain(b, std::move(terms));
}

void require_ideal(const SkewBrace& b, const ElementSet& s, const char* what) {
  if (!is_ideal(b, s)) throw std::logic_error(std::string(what) + " is not an ideal");
}

bool abelian_factor(const SkewBrace& b, const ElementSet& lower, const ElementSet& upper) {
  const auto xs = upper.elements();
  for (Elem x : xs)
    for (Elem y : xs)
      if (!lower.contains(b.star(x, y)) || !lower.contains(b.additive().commutator(x, y))) return false;
  return true;
}

}  // namespace

std::vector<int> IdealChain::term_orders() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < terms.size(); ++i) out.push_back(static_cast<int>(terms[i].size()));
  return out;
}

std::vector<int> IdealChain::factor_orders() const {
  std::vector<int> out;
  for (const auto& f : factors) out.push_back(f.order);
  return out;
}

FactorInfo describe_factor(const SkewBrace& b, const ElementSet& lower, const ElementSet& upper) {
  FactorInfo f;
  f.order = static_cast<int>(upper.size() / lower.size());
  f.is_prime_order = is_prime(f.order);
  const ElementSet all = full_set(b);
  f.in_socle_of_quotient = upper.is_subset_of(centralizer_mod(b, upper, all, lower, false));
  f.central_in_quotient = f.in_socle_of_quotient && upper.is_subset_of(centralizer_mod(b, upper, all, lower, true));
  return f;
}

IdealChain make_chain(const SkewBrace& b, std::vector<ElementSet> terms) {
  if (terms.empty() || terms.front() != zero_set(b))
    throw Error(ErrorCode::InvalidArgument, "ideal chain must start at {0}");
  IdealChain c;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!is_ideal(b, terms[i]))
      throw Error(ErrorCode::NotAnIdeal, "chain term " + std::to_string(i) + " is not an ideal");
    if (i > 0) {
      if (!terms[i - 1].is_subset_of(terms[i]) || terms[i - 1] == terms[i])
        throw Error(ErrorCode::InvalidArgument, "chain is not strictly increasing at term " + std::to_string(i));
      c.factors.push_back(describe_factor(b, terms[i - 1], terms[i]));
    }
  }
  c.terms = std::move(terms);
  return c;
}

ElementSet socle_over(const SkewBrace& b, const ElementSet& j) {
  const ElementSet all = full_set(b);
  return centralizer_mod(b, all, all, j, false);
}

ElementSet zeta_over(const SkewBrace& b, const ElementSet& j) {
  const ElementSet all = full_set(b);
  return centralizer_mod(b, all, all, j, true);
}

SubStructure socle(const SkewBrace& b) {
  auto s = classify_subset(b, socle_over(b, zero_set(b)));
  if (!s.is_ideal) throw std::logic_error("socle is not an ideal");
  return s;
}

IdealChain socle_series(const SkewBrace& b) { return ascending(b, false); }

std::optional<int> multipermutation_level(const SkewBrace& b) {
  const auto chain = socle_series(b);
  if (static_cast<int>(chain.top().size()) != b.order()) return std::nullopt;
  return static_cast<int>(chain.length());
}

SubStructure zeta(const SkewBrace& b) {
  auto s = classify_subset(b, zeta_over(b, zero_set(b)));
  if (!s.is_ideal) throw std::logic_error("zeta is not an ideal");
  return s;
}

IdealChain upper_central_series(const SkewBrace& b) { return ascending(b, true); }

bool is_centrally_nilpotent(const SkewBrace& b) {
  return static_cast<int>(upper_central_series(b).top().size()) == b.order();
}

ElementSet star_subgroup(const SkewBrace& b, const ElementSet& x, const ElementSet& y) {
  ElementSet gens(static_cast<std::size_t>(b.order()));
  gens.insert(0);
  const auto ys = y.elements();
  x.for_each([&](Elem u) {
    for (Elem v : ys) gens.insert(b.star(u, v));
  });
  return generate_subgroup(b.additive(), gens);
}

std::vector<ElementSet> lower_central_series(const SkewBrace& b) {
  std::vector<ElementSet> terms{full_set(b)};
  for (int step = 0; step < b.order(); ++step) {
    const ElementSet& cur = terms.back();
    if (cur.size() == 1) break;
    ElementSet gens(static_cast<std::size_t>(b.order()));
    gens.insert(0);
    cur.for_each([&](Elem g) {
      for (Elem x = 0; x < b.order(); ++x) {
        gens.insert(b.star(g, x));
        gens.insert(b.star(x, g));
        gens.insert(b.additive().commutator(g, x));
      }
    });
    ElementSet next = generate_subgroup(b.additive(), gens);
    require_ideal(b, next, "lower central term");
    if (next == cur) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

bool central_series_consistent(const SkewBrace& b) {
  const auto upper = upper_central_series(b);
  const bool reaches = static_cast<int>(upper.top().size()) == b.order();
  const auto lower = lower_central_series(b);
  const bool vanishes = lower.back().size() == 1;
  if (reaches != vanishes) return false;
  if (!reaches) return true;
  // zeta_m = B with m = upper.length(); Gamma_{m+1} is lower[m].
  return lower.size() == upper.length() + 1;
}

LeftRightSeries left_right_series(const SkewBrace& b) {
  LeftRightSeries s;
  const ElementSet all = full_set(b);
  s.left.push_back(all);
  s.right.push_back(all);
  for (int step = 0; step < b.order() && s.left.back().size() > 1; ++step) {
    ElementSet next = star_subgroup(b, all, s.left.back());
    if (!is_left_ideal(b, next)) throw std::logic_error("left series term is not a left ideal");
    if (next == s.left.back()) break;
    s.left.push_back(std::move(next));
  }
  for (int step = 0; step < b.order() && s.right.back().size() > 1; ++step) {
    ElementSet next = star_subgroup(b, s.right.back(), all);
    require_ideal(b, next, "right series term");
    if (next == s.right.back()) break;
    s.right.push_back(std::move(next));
  }
  return s;
}

bool is_left_nilpotent(const SkewBrace& b) { return left_right_series(b).left.back().size() == 1; }
bool is_right_nilpotent(const SkewBrace& b) { return left_right_series(b).right.back().size() == 1; }

SubStructure derived_ideal(const SkewBrace& b) {
  ElementSet gens(static_cast<std::size_t>(b.order()));
  gens.insert(0);
  for (Elem x = 0; x < b.order(); ++x)
    for (Elem y = 0; y < b.order(); ++y) {
      gens.insert(b.star(x, y));
      gens.insert(b.additive().commutator(x, y));
    }
  auto s = classify_subset(b, generate_subgroup(b.additive(), gens));
  if (!s.is_ideal) throw std::logic_error("derived ideal is not an ideal");
  return s;
}

IdealChain b_central_series(const SkewBrace& b, const ElementSet& ideal) {
  if (!ideal.contains(0) || !is_ideal(b, ideal)) throw Error(ErrorCode::NotAnIdeal, "B-central series of a non-ideal");
  std::vector<ElementSet> terms{zero_set(b)};
  for (int step = 0; step < b.order(); ++step) {
    const ElementSet z = centralizer_mod(b, ideal, ideal, terms.back(), true);
    ElementSet next = largest_ideal_in(b, z);
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return make_chain(b, std::move(terms));
}

bool is_b_centrally_nilpotent(const SkewBrace& b, const ElementSet& ideal) {
  return b_central_series(b, ideal).top() == ideal;
}

SubStructure fitting(const SkewBrace& b) {
  ElementSet sum = zero_set(b);
  for (const auto& i : all_ideals(b))
    if (is_b_centrally_nilpotent(b, i.elements)) sum = sum | i.elements;
  auto s = classify_subset(b, generate_subgroup(b.additive(), sum));
  if (!s.is_ideal) throw std::logic_error("sum of ideals is not an ideal");
  return s;
}

IdealChain chief_series(const SkewBrace& b) {
  const auto ideals = all_ideals(b);
  std::vector<ElementSet> terms{zero_set(b)};
  while (static_cast<int>(terms.back().size()) != b.order()) {
    const ElementSet& j = terms.back();
    for (const auto& k : ideals)
      if (k.size() > j.size() && j.is_subset_of(k.elements)) {
        terms.push_back(k.elements);
        break;
      }
  }
  return make_chain(b, std::move(terms));
}

std::vector<int> chief_factor_orders(const SkewBrace& b) { return chief_series(b).factor_orders(); }

std::pair<bool, std::optional<IdealChain>> soluble_chain(const SkewBrace& b) {
  const auto ideals = all_ideals(b);
  const std::size_t m = ideals.size();
  std::vector<char> dead(m, 0);
  std::vector<std::size_t> path{0};
  // Depth-first over the lattice; a dead node has no abelian-factor chain to B.
  auto dfs = [&](auto&& self, std::size_t at) -> bool {
    if (ideals[at].size() == static_cast<std::size_t>(b.order())) return true;
    for (std::size_t k = at + 1; k < m; ++k) {
      if (dead[k] || ideals[k].size() == ideals[at].size()) continue;
      if (!ideals[at].elements.is_subset_of(ideals[k].elements)) continue;
      if (!abelian_factor(b, ideals[at].elements, ideals[k].elements)) continue;
      path.push_back(k);
      if (self(self, k)) return true;
      path.pop_back();
    }
    dead[at] = 1;
    return false;
  };
  if (!dfs(dfs, 0)) return {false, std::nullopt};
  std::vector<ElementSet> terms;
  for (auto i : path) terms.push_back(ideals[i].elements);
  return {true, make_chain(b, std::move(terms))};
}

bool is_soluble(const SkewBrace& b) { return soluble_chain(b).first; }

}  // namespace skewbrace
