#include "skewbrace/substructure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skewbrace {

namespace {

bool subbrace_closed(const SkewBrace& b, const std::vector<Elem>& s, const ElementSet& set) {
  for (Elem x : s) {
    if (!set.contains(b.neg(x)) || !set.contains(b.inv(x))) return false;
    for (Elem y : s)
      if (!set.contains(b.add(x, y)) || !set.contains(b.mul(x, y))) return false;
  }
  return true;
}

bool lambda_invariant(const SkewBrace& b, const std::vector<Elem>& s, const ElementSet& set) {
  for (Elem g = 0; g < b.order(); ++g)
    for (Elem x : s)
      if (!set.contains(b.lambda(g, x))) return false;
  return true;
}

bool additively_normal(const SkewBrace& b, const std::vector<Elem>& s, const ElementSet& set) {
  const auto& add = b.additive();
  for (Elem g = 0; g < b.order(); ++g)
    for (Elem x : s)
      if (!set.contains(add.conj(g, x))) return false;
  return true;
}

bool multiplicatively_normal(const SkewBrace& b, const std::vector<Elem>& s, const ElementSet& set) {
  const auto& mul = b.multiplicative();
  for (Elem g = 0; g < b.order(); ++g)
    for (Elem x : s)
      if (!set.contains(mul.conj(g, x))) return false;
  return true;
}

void check_bound(const SkewBrace& b, int bound) {
  if (b.order() > bound)
    throw Error(ErrorCode::OrderBoundExceeded,
                "brace of order " + std::to_string(b.order()) + " exceeds bound " + std::to_string(bound));
}

SubStructure all_true(ElementSet s) { return {std::move(s), true, true, true, true}; }

}  // namespace

SubStructure classify_subset(const SkewBrace& b, const ElementSet& s) {
  if (!s.contains(0)) throw Error(ErrorCode::MissingZero, "subset does not contain 0");
  SubStructure r{s};
  const auto elems = s.elements();
  r.is_subbrace = subbrace_closed(b, elems, s);
  r.is_left_ideal = r.is_subbrace && lambda_invariant(b, elems, s);
  r.is_strong_left_ideal = r.is_left_ideal && additively_normal(b, elems, s);
  r.is_ideal = r.is_strong_left_ideal && multiplicatively_normal(b, elems, s);
  return r;
}

bool is_subbrace(const SkewBrace& b, const ElementSet& s) {
  return s.contains(0) && subbrace_closed(b, s.elements(), s);
}

bool is_left_ideal(const SkewBrace& b, const ElementSet& s) {
  const auto e = s.elements();
  return s.contains(0) && subbrace_closed(b, e, s) && lambda_invariant(b, e, s);
}

bool is_ideal(const SkewBrace& b, const ElementSet& s) {
  const auto e = s.elements();
  return s.contains(0) && subbrace_closed(b, e, s) && lambda_invariant(b, e, s) &&
         additively_normal(b, e, s) && multiplicatively_normal(b, e, s);
}

ElementSet additive_closure(const SkewBrace& b, const ElementSet& s) {
  ElementSet gens = s;
  gens.insert(0);
  return generate_subgroup(b.additive(), gens);
}

SubStructure ideal_generated(const SkewBrace& b, const ElementSet& gens) {
  ElementSet cur(static_cast<std::size_t>(b.order()));
  cur.insert(0);
  gens.for_each([&](Elem e) { cur.insert(e); });
  const auto& add = b.additive();
  const auto& mul = b.multiplicative();
  // An additive subgroup that is lambda-invariant and normal in both groups is
  // closed under the product as well, since xy = x + lambda_x(y).
  while (true) {
    cur = generate_subgroup(add, cur);
    ElementSet next = cur;
    cur.for_each([&](Elem x) {
      for (Elem g = 0; g < b.order(); ++g) {
        next.insert(b.lambda(g, x));
        next.insert(add.conj(g, x));
        next.insert(mul.conj(g, x));
      }
    });
    if (next == cur) break;
    cur = std::move(next);
  }
  return all_true(std::move(cur));
}

SubStructure subbrace_generated(const SkewBrace& b, const ElementSet& gens) {
  ElementSet cur(static_cast<std::size_t>(b.order()));
  cur.insert(0);
  std::vector<Elem> members{0};
  std::vector<Elem> queue;
  gens.for_each([&](Elem e) {
    if (cur.insert(e)) queue.push_back(e);
  });
  while (!queue.empty()) {
    const Elem x = queue.back();
    queue.pop_back();
    members.push_back(x);
    for (Elem y : members)
      for (Elem z : {b.add(x, y), b.add(y, x), b.mul(x, y), b.mul(y, x)})
        if (cur.insert(z)) queue.push_back(z);
  }
  return classify_subset(b, cur);
}

std::vector<SubStructure> all_ideals(const SkewBrace& b, int bound) {
  check_bound(b, bound);
  std::vector<SubStructure> out;
  for (const auto& s : b.cached_ideals()) {
    if (!is_subgroup(b.multiplicative(), s))
      throw std::logic_error("ideal is not a multiplicative subgroup");
    out.push_back(all_true(s));
  }
  return out;
}

std::vector<SubStructure> all_subbraces(const SkewBrace& b, int bound) {
  check_bound(b, bound);
  std::vector<SubStructure> out;
  for (const auto& s : b.additive_subgroups()) {
    if (!is_subgroup(b.multiplicative(), s)) continue;
    out.push_back(classify_subset(b, s));
  }
  return out;
}

std::vector<SubStructure> maximal_subbraces(const SkewBrace& b) {
  auto subs = all_subbraces(b);
  std::vector<SubStructure> out;
  const std::size_t n = static_cast<std::size_t>(b.order());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].size() == n) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j)
      if (j != i && subs[j].size() != n && subs[j].size() > subs[i].size() &&
          subs[i].elements.is_subset_of(subs[j].elements))
        maximal = false;
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

SubStructure frattini(const SkewBrace& b) {
  ElementSet r = ElementSet::full(static_cast<std::size_t>(b.order()));
  for (const auto& m : maximal_subbraces(b)) r = r & m.elements;
  return classify_subset(b, r);
}

ElementSet largest_ideal_in(const SkewBrace& b, const ElementSet& c) {
  ElementSet best = ElementSet::zero(static_cast<std::size_t>(b.order()));
  for (const auto& s : b.cached_ideals())
    if (s.is_subset_of(c) && s.size() > best.size()) best = s;
  return best;
}

SubStructure core(const SkewBrace& b, const ElementSet& c) {
  check_bound(b, kBraceOrderBound);
  return all_true(largest_ideal_in(b, c));
}

int index(const SkewBrace& b, const ElementSet& c) {
  if (!is_subbrace(b, c)) throw Error(ErrorCode::InvalidArgument, "index of a non-subbrace");
  const int k = static_cast<int>(c.size());
  if (!is_subgroup(b.additive(), c) || !is_subgroup(b.multiplicative(), c) || b.order() % k != 0)
    throw std::logic_error("subbrace is not a subgroup of both groups");
  return b.order() / k;
}

}  // namespace skewbrace
