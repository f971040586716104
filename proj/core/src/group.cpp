#include "skewbrace/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace skewbrace {

namespace {

std::string str(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ", ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

// Generating set of a magma (closure under the binary operation only), used
// by Light's associativity test. Does not assume associativity.
std::vector<Elem> magma_generators(int n, const std::vector<Elem>& t) {
  ElementSet closed(static_cast<std::size_t>(n));
  std::vector<Elem> members;
  std::vector<Elem> gens;
  auto add = [&](Elem start) {
    std::vector<Elem> queue;
    if (closed.insert(start)) queue.push_back(start);
    while (!queue.empty()) {
      const Elem s = queue.back();
      queue.pop_back();
      members.push_back(s);
      for (Elem m : members) {
        for (Elem prod : {t[static_cast<std::size_t>(s) * n + m], t[static_cast<std::size_t>(m) * n + s]}) {
          if (closed.insert(prod)) queue.push_back(prod);
        }
      }
    }
  };
  for (Elem x = 0; x < n; ++x) {
    if (!closed.contains(x)) {
      gens.push_back(x);
      add(x);
    }
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup() : n_(1), table_{0}, inverse_{0}, orders_{1} {}

FiniteGroup::FiniteGroup(int n, std::vector<Elem> flat) : n_(n), table_(std::move(flat)) {
  inverse_.assign(static_cast<std::size_t>(n_), 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (op(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  orders_.assign(static_cast<std::size_t>(n_), 1);
  for (Elem a = 1; a < n_; ++a) {
    int k = 1;
    for (Elem x = a; x != 0; x = op(x, a)) ++k;
    orders_[a] = k;
  }
}

FiniteGroup FiniteGroup::from_table(const Table& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::GroupInvalid, "empty table");
  if (n > kMaxGroupOrder)
    throw Error(ErrorCode::OrderBoundExceeded, "group order " + std::to_string(n) + " exceeds " +
                                                   std::to_string(kMaxGroupOrder));
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorCode::NotClosed, "row " + std::to_string(a) + " has length " +
                                            std::to_string(table[a].size()) + ", expected " +
                                            std::to_string(n));
    for (int b = 0; b < n; ++b) {
      const Elem v = table[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorCode::NotClosed, "product outside 0.." + std::to_string(n - 1) + " at " +
                                              str({{"a", a}, {"b", b}, {"value", v}}));
      t[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  auto at = [&](Elem a, Elem b) { return t[static_cast<std::size_t>(a) * n + b]; };

  Elem e = -1;
  for (Elem c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorCode::NoIdentity, "no element acts as a two-sided identity");

  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
    if (!found) throw Error(ErrorCode::MissingInverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }

  if (n <= kExhaustiveAssociativityBound) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw Error(ErrorCode::NonAssociative, "(a*b)*c != a*(b*c) for " + str({{"a", a}, {"b", b}, {"c", c}}));
  } else {
    for (Elem g : magma_generators(n, t))
      for (Elem a = 0; a < n; ++a)
        for (Elem c = 0; c < n; ++c)
          if (at(at(a, g), c) != at(a, at(g, c)))
            throw Error(ErrorCode::NonAssociative, "(a*b)*c != a*(b*c) for " + str({{"a", a}, {"b", g}, {"c", c}}));
  }

  if (e != 0) {
    auto relabel = [&](Elem x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Elem> r(t.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) r[static_cast<std::size_t>(relabel(a)) * n + relabel(b)] = relabel(at(a, b));
    t = std::move(r);
  }
  return FiniteGroup(n, std::move(t));
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  const long long m = orders_[a];
  k %= m;
  if (k < 0) k += m;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = op(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

Table FiniteGroup::table() const {
  Table out(static_cast<std::size_t>(n_));
  for (Elem a = 0; a < n_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

namespace {

FiniteGroup from_flat(int n, const std::vector<Elem>& flat) {
  Table t(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) t[a].assign(flat.begin() + static_cast<std::ptrdiff_t>(a) * n,
                                          flat.begin() + static_cast<std::ptrdiff_t>(a + 1) * n);
  return FiniteGroup::from_table(t);
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  std::vector<Elem> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return from_flat(n, flat);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Elem> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] = g.op(a / nh, b / nh) * nh + h.op(a % nh, b % nh);
  return from_flat(n, flat);
}

bool is_permutation(std::span<const Elem> images) {
  std::vector<char> seen(images.size(), 0);
  for (Elem v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation compose(std::span<const Elem> outer, std::span<const Elem> inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Permutation invert(std::span<const Elem> perm) {
  Permutation r(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) r[perm[i]] = static_cast<Elem>(i);
  return r;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, std::span<const Elem> images) {
  if (static_cast<int>(images.size()) != src.order()) return false;
  for (Elem v : images)
    if (v < 0 || v >= dst.order()) return false;
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (images[src.op(a, b)] != dst.op(images[a], images[b])) return false;
  return true;
}

bool is_automorphism(const FiniteGroup& g, std::span<const Elem> images) {
  return is_permutation(images) && is_homomorphism(g, g, images);
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               std::span<const Permutation> action) {
  const int nn = normal.order(), nh = acting.order();
  if (static_cast<int>(action.size()) != nh)
    throw Error(ErrorCode::ActionNotHomomorphism, "action has " + std::to_string(action.size()) +
                                                      " entries, acting group has order " + std::to_string(nh));
  for (Elem h = 0; h < nh; ++h)
    if (static_cast<int>(action[h].size()) != nn || !is_automorphism(normal, action[h]))
      throw Error(ErrorCode::ActionNotHomomorphism, "image of h=" + std::to_string(h) + " is not an automorphism");
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem h2 = 0; h2 < nh; ++h2)
      if (action[acting.op(h1, h2)] != compose(action[h1], action[h2]))
        throw Error(ErrorCode::ActionNotHomomorphism,
                    "action(h1*h2) != action(h1) o action(h2) for h1=" + std::to_string(h1) +
                        ", h2=" + std::to_string(h2));
  const int n = nn * nh;
  std::vector<Elem> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const Elem n1 = a / nh, h1 = a % nh;
    for (int b = 0; b < n; ++b) {
      const Elem n2 = b / nh, h2 = b % nh;
      flat[static_cast<std::size_t>(a) * n + b] = normal.op(n1, action[h1][n2]) * nh + acting.op(h1, h2);
    }
  }
  return from_flat(n, flat);
}

std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images) {
  ElementSet domain;
  auto r = extend_on_generators<Elem>(src, gens, images, Elem{0},
                                      [&](Elem x, Elem y) { return dst.op(x, y); }, &domain);
  if (!r || static_cast<int>(domain.size()) != src.order()) return std::nullopt;
  return r;
}

ElementSet generate_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  ElementSet s(static_cast<std::size_t>(g.order()));
  s.insert(0);
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (Elem x : gens) {
      const Elem y = g.op(queue[qi], x);
      if (s.insert(y)) queue.push_back(y);
    }
  return s;
}

ElementSet generate_subgroup(const FiniteGroup& g, const ElementSet& gens) {
  const auto v = gens.elements();
  return generate_subgroup(g, std::span<const Elem>(v));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    if (!ok) return;
    if (!s.contains(g.inv(a))) ok = false;
    s.for_each([&](Elem b) {
      if (ok && !s.contains(g.op(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  const auto gens = generating_set(g);
  bool ok = true;
  s.for_each([&](Elem x) {
    for (Elem h : gens)
      if (ok && !s.contains(g.conj(h, x))) ok = false;
  });
  return ok;
}

ElementSet normal_closure(const FiniteGroup& g, const ElementSet& s) {
  const auto gens = generating_set(g);
  ElementSet cur = generate_subgroup(g, s);
  while (true) {
    ElementSet next = cur;
    cur.for_each([&](Elem x) {
      for (Elem h : gens) next.insert(g.conj(h, x));
    });
    next = generate_subgroup(g, next);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

ElementSet center(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  ElementSet z(static_cast<std::size_t>(g.order()));
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem h : gens) central = central && g.op(x, h) == g.op(h, x);
    if (central) z.insert(x);
  }
  return z;
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  ElementSet comms(static_cast<std::size_t>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) comms.insert(g.commutator(a, b));
  return generate_subgroup(g, comms);
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> by_order(static_cast<std::size_t>(g.order()));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  ElementSet covered = ElementSet::zero(static_cast<std::size_t>(g.order()));
  for (Elem x : by_order) {
    if (static_cast<int>(covered.size()) == g.order()) break;
    if (covered.contains(x)) continue;
    gens.push_back(x);
    covered = generate_subgroup(g, std::span<const Elem>(gens));
  }
  return gens;
}

QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& normal) {
  if (!is_normal_subgroup(g, normal)) throw Error(ErrorCode::GroupInvalid, "quotient by a non-normal subset");
  const int n = g.order();
  std::vector<Elem> proj(static_cast<std::size_t>(n), -1);
  std::vector<Elem> reps;
  const auto members = normal.elements();
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    const Elem k = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : members) proj[g.op(x, m)] = k;
  }
  const int q = static_cast<int>(reps.size());
  Table t(static_cast<std::size_t>(q), std::vector<Elem>(static_cast<std::size_t>(q)));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[i][j] = proj[g.op(reps[i], reps[j])];
  return {FiniteGroup::from_table(t), std::move(proj)};
}

InducedGroup induced_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorCode::GroupInvalid, "subset is not a subgroup");
  auto emb = s.elements();
  std::vector<Elem> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) local[emb[i]] = static_cast<Elem>(i);
  Table t(emb.size(), std::vector<Elem>(emb.size()));
  for (std::size_t i = 0; i < emb.size(); ++i)
    for (std::size_t j = 0; j < emb.size(); ++j) t[i][j] = local[g.op(emb[i], emb[j])];
  return {FiniteGroup::from_table(t), std::move(emb)};
}

std::vector<ElementSet> subgroups(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    throw Error(ErrorCode::OrderBoundExceeded, "subgroup lattice of order " + std::to_string(g.order()) +
                                                   " exceeds bound " + std::to_string(bound));
  // Every subgroup is the join of its cyclic subgroups, so joining known
  // subgroups with cyclic ones until closure reaches the whole lattice.
  std::unordered_map<ElementSet, std::vector<Elem>, ElementSetHash> found;
  std::vector<std::pair<ElementSet, Elem>> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem gen[] = {x};
    ElementSet c = generate_subgroup(g, std::span<const Elem>(gen));
    if (found.emplace(c, std::vector<Elem>{x}).second) cyclic.emplace_back(c, x);
  }
  std::vector<ElementSet> work;
  for (const auto& [c, x] : cyclic) work.push_back(c);
  while (!work.empty()) {
    const ElementSet h = work.back();
    work.pop_back();
    const std::vector<Elem> hgens = found.at(h);
    for (const auto& [c, x] : cyclic) {
      if (c.is_subset_of(h)) continue;
      auto kgens = hgens;
      kgens.push_back(x);
      ElementSet k = generate_subgroup(g, std::span<const Elem>(kgens));
      if (found.emplace(k, kgens).second) work.push_back(std::move(k));
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& [s, gens] : found) out.push_back(s);
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, int bound) {
  auto all = subgroups(g, bound);
  std::vector<ElementSet> out;
  for (auto& s : all)
    if (is_normal_subgroup(g, s)) out.push_back(std::move(s));
  return out;
}

bool is_nilpotent(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  ElementSet z = ElementSet::zero(static_cast<std::size_t>(g.order()));
  while (true) {
    ElementSet next(static_cast<std::size_t>(g.order()));
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Elem h : gens) ok = ok && z.contains(g.commutator(x, h));
      if (ok) next.insert(x);
    }
    if (static_cast<int>(next.size()) == g.order()) return true;
    if (next == z) return false;
    z = std::move(next);
  }
}

bool is_supersoluble(const FiniteGroup& g) {
  FiniteGroup cur = g;
  while (cur.order() > 1) {
    bool peeled = false;
    for (Elem x = 1; x < cur.order() && !peeled; ++x) {
      if (!is_prime(cur.element_order(x))) continue;
      const Elem gen[] = {x};
      const ElementSet c = generate_subgroup(cur, std::span<const Elem>(gen));
      if (is_normal_subgroup(cur, c)) {
        cur = quotient_group(cur, c).group;
        peeled = true;
      }
    }
    if (!peeled) return false;
  }
  return true;
}

GroupPredicates group_predicates(const FiniteGroup& g) {
  GroupPredicates p;
  p.abelian = g.is_abelian();
  p.nilpotent = is_nilpotent(g);
  p.supersoluble = is_supersoluble(g);
  std::vector<int> primes;
  for (Elem x = 0; x < g.order(); ++x) {
    ++p.element_orders[g.element_order(x)];
    for (int q : prime_divisors(g.element_order(x))) primes.push_back(q);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  p.pi = std::move(primes);
  return p;
}

namespace {

// Backtracking over generator images into `dst` with equal element orders;
// prunes as soon as the partial map is inconsistent or non-injective.
template <class Visit>
void search_injective_homs(const FiniteGroup& src, const FiniteGroup& dst, Visit&& visit) {
  const auto gens = generating_set(src);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < dst.order(); ++y)
      if (dst.element_order(y) == src.element_order(gens[i])) candidates[i].push_back(y);
  std::vector<Elem> images;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    ElementSet domain;
    const std::span<const Elem> gspan(gens.data(), depth);
    auto partial = extend_on_generators<Elem>(src, gspan, std::span<const Elem>(images), Elem{0},
                                              [&](Elem x, Elem y) { return dst.op(x, y); }, &domain);
    if (!partial) return;
    ElementSet hit(static_cast<std::size_t>(dst.order()));
    bool injective = true;
    domain.for_each([&](Elem x) {
      if (!hit.insert((*partial)[x])) injective = false;
    });
    if (!injective) return;
    if (depth == gens.size()) {
      if (!visit(*partial)) stop = true;
      return;
    }
    for (Elem y : candidates[depth]) {
      images.push_back(y);
      self(self, depth + 1);
      images.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<GroupMap> automorphisms(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    throw Error(ErrorCode::OrderBoundExceeded, "automorphism search for order " + std::to_string(g.order()) +
                                                   " exceeds bound " + std::to_string(bound));
  std::vector<GroupMap> out;
  search_injective_homs(g, g, [&](const std::vector<Elem>& images) {
    out.push_back({images, true});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) { return a.images < b.images; });
  return out;
}

AutomorphismGroup automorphism_group(const FiniteGroup& g, int bound) {
  AutomorphismGroup out;
  for (auto& m : automorphisms(g, bound)) out.maps.push_back(std::move(m.images));
  std::map<Permutation, Elem> index;
  for (std::size_t i = 0; i < out.maps.size(); ++i) index.emplace(out.maps[i], static_cast<Elem>(i));
  Table t(out.maps.size(), std::vector<Elem>(out.maps.size()));
  for (std::size_t i = 0; i < out.maps.size(); ++i)
    for (std::size_t j = 0; j < out.maps.size(); ++j) t[i][j] = index.at(compose(out.maps[i], out.maps[j]));
  out.group = FiniteGroup::from_table(t);
  return out;
}

Holomorph holomorph(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    throw Error(ErrorCode::OrderBoundExceeded, "holomorph of order-" + std::to_string(g.order()) +
                                                   " group exceeds bound " + std::to_string(bound));
  auto aut = automorphism_group(g, bound);
  Holomorph h{semidirect_product(g, aut.group, aut.maps), std::move(aut.maps), {}};
  const int na = static_cast<int>(h.automorphisms.size());
  for (Elem x = 0; x < g.order(); ++x) h.translations.push_back(x * na);
  return h;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > kIsomorphismSearchBound)
    throw Error(ErrorCode::OrderBoundExceeded, "isomorphism search beyond order " +
                                                   std::to_string(kIsomorphismSearchBound));
  auto orders = [](const FiniteGroup& x) {
    std::vector<int> o;
    for (Elem e = 0; e < x.order(); ++e) o.push_back(x.element_order(e));
    std::sort(o.begin(), o.end());
    return o;
  };
  if (orders(g) != orders(h)) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (center(g).size() != center(h).size()) return std::nullopt;
  if (derived_subgroup(g).size() != derived_subgroup(h).size()) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  search_injective_homs(g, h, [&](const std::vector<Elem>& images) {
    found = images;
    return false;
  });
  return found;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace skewbrace
