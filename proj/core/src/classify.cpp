#include "skewbrace/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skewbrace {

namespace {

ElementSet preimage_of_zero(const std::vector<Elem>& proj) {
  ElementSet s(proj.size());
  for (std::size_t x = 0; x < proj.size(); ++x)
    if (proj[x] == 0) s.insert(static_cast<Elem>(x));
  return s;
}

ElementSet preimage(const std::vector<Elem>& proj, const ElementSet& target) {
  ElementSet s(proj.size());
  for (std::size_t x = 0; x < proj.size(); ++x)
    if (target.contains(proj[x])) s.insert(static_cast<Elem>(x));
  return s;
}

bool all_primes_above(int order, int p) {
  for (int q : prime_divisors(order))
    if (q <= p) return false;
  return true;
}

std::vector<int> to_ints(const ElementSet& s) { return s.elements(); }

}  // namespace

SupersolubleResult supersoluble(const SkewBrace& b) {
  SupersolubleResult r;
  SkewBrace cur = b;
  std::vector<Elem> proj(static_cast<std::size_t>(b.order()));
  std::iota(proj.begin(), proj.end(), 0);
  std::vector<ElementSet> terms{ElementSet::zero(static_cast<std::size_t>(b.order()))};
  while (cur.order() > 1) {
    const auto ideals = all_ideals(cur);
    const SubStructure* pick = nullptr;
    for (const auto& i : ideals)
      if (is_prime(static_cast<int>(i.size()))) {
        pick = &i;
        break;
      }
    if (!pick) {
      r.stuck_chain = std::move(terms);
      r.witness = preimage(proj, ideals.at(1).elements);
      return r;
    }
    auto q = quotient(cur, pick->elements);
    for (auto& x : proj) x = q.projection[x];
    cur = std::move(q.brace);
    terms.push_back(preimage_of_zero(proj));
  }
  r.supersoluble = true;
  r.certificate = make_chain(b, std::move(terms));
  return r;
}

UpSets u_p(const SkewBrace& b, int p) {
  UpSets u{ElementSet(static_cast<std::size_t>(b.order())), ElementSet(static_cast<std::size_t>(b.order()))};
  for (Elem x = 0; x < b.order(); ++x) {
    if (all_primes_above(b.additive().element_order(x), p)) u.additive.insert(x);
    if (all_primes_above(b.multiplicative().element_order(x), p)) u.multiplicative.insert(x);
  }
  u.equal = u.additive == u.multiplicative;
  u.ideal = is_ideal(b, u.additive);
  return u;
}

std::optional<IdealChain> sylow_tower(const SkewBrace& b) {
  if (!is_supersoluble(b)) return std::nullopt;
  auto primes = prime_divisors(b.order());
  std::sort(primes.rbegin(), primes.rend());
  const auto& ideals = b.cached_ideals();
  std::vector<ElementSet> terms{ElementSet::zero(static_cast<std::size_t>(b.order()))};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    // Elements whose orders only involve primes >= primes[i].
    const ElementSet section_top = i + 1 < primes.size() ? u_p(b, primes[i + 1]).additive
                                                         : ElementSet::full(static_cast<std::size_t>(b.order()));
    if (!is_ideal(b, section_top)) throw std::logic_error("U_p of a supersoluble brace is not an ideal");
    while (terms.back() != section_top) {
      const ElementSet& j = terms.back();
      const ElementSet* next = nullptr;
      for (const auto& k : ideals)
        if (k.size() > j.size() && j.is_subset_of(k) && k.is_subset_of(section_top) &&
            is_prime(static_cast<int>(k.size() / j.size()))) {
          next = &k;
          break;
        }
      if (!next) throw std::logic_error("no prime-order refinement inside a Sylow section");
      terms.push_back(*next);
    }
  }
  return make_chain(b, std::move(terms));
}

ClassificationReport brace_report(const SkewBrace& b) {
  ClassificationReport r;
  r.order = b.order();
  r.additive = group_predicates(b.additive());
  r.multiplicative = group_predicates(b.multiplicative());
  r.trivial = b.is_trivial();

  const auto ss = supersoluble(b);
  r.supersoluble = ss.supersoluble;
  if (ss.certificate) r.certificate_orders = ss.certificate->term_orders();
  if (ss.witness) r.witness = to_ints(*ss.witness);

  const auto upper = upper_central_series(b);
  r.upper_central_orders = upper.term_orders();
  r.centrally_nilpotent = static_cast<int>(upper.top().size()) == b.order();
  for (const auto& g : lower_central_series(b)) r.lower_central_orders.push_back(static_cast<int>(g.size()));
  const auto lr = left_right_series(b);
  r.left_nilpotent = lr.left.back().size() == 1;
  r.right_nilpotent = lr.right.back().size() == 1;
  r.soluble = is_soluble(b);

  const auto soc = socle_series(b);
  r.socle_series_orders = soc.term_orders();
  if (static_cast<int>(soc.top().size()) == b.order()) r.mp_level = static_cast<int>(soc.length());
  r.socle_order = static_cast<int>(socle(b).size());
  r.zeta_order = static_cast<int>(zeta(b).size());
  r.derived_order = static_cast<int>(derived_ideal(b).size());

  const auto fit = fitting(b);
  r.fitting_order = static_cast<int>(fit.size());
  r.fitting_centrally_nilpotent = is_centrally_nilpotent(induced_brace(b, fit.elements).brace);

  for (int p : prime_divisors(b.order())) {
    const auto u = u_p(b, p);
    r.u_p_additive_orders[p] = static_cast<int>(u.additive.size());
    r.u_p_equal[p] = u.equal;
    r.u_p_ideal[p] = u.ideal;
  }
  if (const auto tower = sylow_tower(b)) r.sylow_tower_factors = tower->factor_orders();
  r.chief_factors = chief_factor_orders(b);

  for (const auto& m : maximal_subbraces(b)) r.maximal_subbrace_indices.push_back(index(b, m.elements));
  std::sort(r.maximal_subbrace_indices.begin(), r.maximal_subbrace_indices.end());
  r.ideal_count = static_cast<int>(all_ideals(b).size());
  r.subbrace_count = static_cast<int>(all_subbraces(b).size());
  const auto frat = frattini(b);
  r.frattini_order = static_cast<int>(frat.size());
  r.frattini_is_ideal = frat.is_ideal;
  return r;
}

}  // namespace skewbrace
