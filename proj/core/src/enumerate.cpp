#include "skewbrace/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace skewbrace {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = v.size();
    for (Elem x : v) h = h * 1000003U ^ static_cast<std::size_t>(x);
    return h;
  }
};

std::vector<Permutation> inversion_action(const FiniteGroup& n, int acting_order, int inverting_step) {
  Permutation id(static_cast<std::size_t>(n.order())), inv(id.size());
  for (Elem x = 0; x < n.order(); ++x) {
    id[x] = x;
    inv[x] = n.inv(x);
  }
  std::vector<Permutation> act;
  for (int h = 0; h < acting_order; ++h) act.push_back((h / inverting_step) % 2 ? inv : id);
  return act;
}

// Automorphisms of a group indexed, with composition either tabulated or
// looked up through a hash of the composed permutation.
class AutIndex {
 public:
  explicit AutIndex(const FiniteGroup& a) {
    for (auto& m : automorphisms(a, kExtendedCensusBound)) maps_.push_back(std::move(m.images));
    for (std::size_t i = 0; i < maps_.size(); ++i) lookup_.emplace(maps_[i], static_cast<int>(i));
    const std::size_t k = maps_.size();
    if (k * k <= 4'000'000) {
      table_.resize(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) table_[i * k + j] = lookup_.at(compose(maps_[i], maps_[j]));
    }
  }
  int size() const { return static_cast<int>(maps_.size()); }
  const Permutation& map(int i) const { return maps_[i]; }
  int compose_index(int i, int j) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i) * maps_.size() + j];
    return lookup_.at(compose(maps_[i], maps_[j]));
  }

 private:
  std::vector<Permutation> maps_;
  std::unordered_map<std::vector<Elem>, int, VectorHash> lookup_;
  std::vector<int> table_;
};

// Backtracking over x -> phi_x with phi_0 = id and the set {(x, phi_x)}
// closed under the holomorph product (x, f)(y, g) = (x + f(y), f g).
class RegularSubgroupSearch {
 public:
  RegularSubgroupSearch(const FiniteGroup& a, const AutIndex& auts) : a_(a), auts_(auts), n_(a.order()) {
    admissible_.assign(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(auts.size()), 0));
    admissible_[0][0] = 1;
    for (Elem x = 1; x < n_; ++x)
      for (int k = 0; k < auts.size(); ++k) {
        bool free = true;
        for (Elem y = 0; y < n_ && free; ++y) free = a.op(x, auts.map(k)[y]) != y;
        admissible_[x][k] = free;
      }
    phi_.assign(static_cast<std::size_t>(n_), -1);
  }

  template <class Visit>
  void run(Visit&& visit) {
    std::vector<Elem> trail;
    if (assign(0, 0, trail)) search(visit);
  }

 private:
  bool assign(Elem x, int k, std::vector<Elem>& trail) {
    std::vector<Elem> work;
    auto put = [&](Elem t, int kk) {
      if (phi_[t] >= 0) return phi_[t] == kk;
      if (!admissible_[t][kk]) return false;
      phi_[t] = kk;
      trail.push_back(t);
      work.push_back(t);
      members_.push_back(t);
      return true;
    };
    if (!put(x, k)) return false;
    while (!work.empty()) {
      const Elem u = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < members_.size(); ++i) {
        const Elem v = members_[i];
        const int fu = phi_[u], fv = phi_[v];
        if (!put(a_.op(u, auts_.map(fu)[v]), auts_.compose_index(fu, fv))) return false;
        if (!put(a_.op(v, auts_.map(fv)[u]), auts_.compose_index(fv, fu))) return false;
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem t : trail) phi_[t] = -1;
    members_.resize(members_.size() - trail.size());
    trail.clear();
  }

  template <class Visit>
  void search(Visit& visit) {
    Elem next = -1;
    for (Elem x = 0; x < n_ && next < 0; ++x)
      if (phi_[x] < 0) next = x;
    if (next < 0) {
      visit(phi_);
      return;
    }
    for (int k = 0; k < auts_.size(); ++k) {
      if (!admissible_[next][k]) continue;
      std::vector<Elem> trail;
      if (assign(next, k, trail)) search(visit);
      undo(trail);
    }
  }

  const FiniteGroup& a_;
  const AutIndex& auts_;
  int n_;
  std::vector<std::vector<char>> admissible_;
  std::vector<int> phi_;
  std::vector<Elem> members_;
};

void check_census_bound(int n, int bound) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  if (n > bound || bound > kExtendedCensusBound)
    throw Error(ErrorCode::OrderBoundExceeded,
                "order " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
}

std::vector<Elem> flat_product(const FiniteGroup& a, const AutIndex& auts, const std::vector<int>& phi) {
  const int n = a.order();
  std::vector<Elem> m(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) m[static_cast<std::size_t>(x) * n + y] = a.op(x, auts.map(phi[x])[y]);
  return m;
}

// Least relabeling of a product table under the automorphisms of the
// additive group.
std::vector<Elem> canonical_table(const std::vector<Elem>& m, int n, const AutIndex& auts) {
  std::vector<Elem> best = m, cur(m.size());
  for (int k = 1; k < auts.size(); ++k) {
    const auto& f = auts.map(k);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        cur[static_cast<std::size_t>(f[x]) * n + f[y]] = f[m[static_cast<std::size_t>(x) * n + y]];
    if (cur < best) best = cur;
  }
  return best;
}

Table unflatten(const std::vector<Elem>& flat, int n) {
  Table t(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    t[x].assign(flat.begin() + static_cast<std::ptrdiff_t>(x) * n, flat.begin() + static_cast<std::ptrdiff_t>(x + 1) * n);
  return t;
}

}  // namespace

FiniteGroup quaternion_group() {
  // Units 1, i, j, k with sign; element (u, s) has index 2u + s.
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int u = a / 2, v = b / 2;
      t[a][b] = 2 * unit[u][v] + ((a % 2) ^ (b % 2) ^ sign[u][v]);
    }
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group(int n) {
  if (n < 2 || n % 2) throw Error(ErrorCode::InvalidArgument, "dihedral group order must be even");
  const auto r = cyclic_group(n / 2);
  return semidirect_product(r, cyclic_group(2), inversion_action(r, 2, 1));
}

FiniteGroup alternating_group_4() {
  const auto v = direct_product(cyclic_group(2), cyclic_group(2));
  const std::vector<Permutation> act{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return semidirect_product(v, cyclic_group(3), act);
}

FiniteGroup dicyclic_group_12() {
  const auto c3 = cyclic_group(3);
  return semidirect_product(c3, cyclic_group(4), inversion_action(c3, 4, 1));
}

std::vector<CatalogGroup> group_catalog(int n) {
  if (n < 1 || n > kCensusBound)
    throw Error(ErrorCode::OrderBoundExceeded, "group catalog covers orders 1 to " + std::to_string(kCensusBound));
  const auto c = [](int k) { return cyclic_group(k); };
  std::vector<CatalogGroup> out{{"C" + std::to_string(n), c(n)}};
  switch (n) {
    case 4:
      out.push_back({"C2xC2", direct_product(c(2), c(2))});
      break;
    case 6:
      out.push_back({"S3", dihedral_group(6)});
      break;
    case 8:
      out.push_back({"C4xC2", direct_product(c(4), c(2))});
      out.push_back({"C2xC2xC2", direct_product(direct_product(c(2), c(2)), c(2))});
      out.push_back({"D8", dihedral_group(8)});
      out.push_back({"Q8", quaternion_group()});
      break;
    case 9:
      out.push_back({"C3xC3", direct_product(c(3), c(3))});
      break;
    case 10:
      out.push_back({"D10", dihedral_group(10)});
      break;
    case 12:
      out.push_back({"C6xC2", direct_product(c(6), c(2))});
      out.push_back({"A4", alternating_group_4()});
      out.push_back({"D12", dihedral_group(12)});
      out.push_back({"Dic3", dicyclic_group_12()});
      break;
    default:
      break;
  }
  return out;
}

std::string group_label(const FiniteGroup& g) {
  if (g.order() > kCensusBound) return "?";
  for (const auto& c : group_catalog(g.order()))
    if (is_isomorphic(c.group, g)) return c.label;
  return "?";
}

std::vector<SkewBrace> braces_with_additive_group(const FiniteGroup& a, int bound) {
  check_census_bound(a.order(), bound);
  const AutIndex auts(a);
  std::set<std::vector<Elem>> reps;
  RegularSubgroupSearch(a, auts).run([&](const std::vector<int>& phi) {
    reps.insert(canonical_table(flat_product(a, auts, phi), a.order(), auts));
  });
  std::vector<SkewBrace> out;
  for (const auto& m : reps)
    out.push_back(SkewBrace::from_groups(a, FiniteGroup::from_table(unflatten(m, a.order()))));
  return out;
}

long long count_regular_subgroups(const FiniteGroup& a, int bound) {
  check_census_bound(a.order(), bound);
  const AutIndex auts(a);
  long long count = 0;
  RegularSubgroupSearch(a, auts).run([&](const std::vector<int>&) { ++count; });
  return count;
}

BraceCensus census(int n, int bound) {
  check_census_bound(n, std::min(bound, kCensusBound));
  BraceCensus c{n, {}};
  const auto catalog = group_catalog(n);
  for (const auto& add : catalog)
    for (auto& b : braces_with_additive_group(add.group, bound)) {
      std::string mul_label = "?";
      for (const auto& m : catalog)
        if (is_isomorphic(m.group, b.multiplicative())) {
          mul_label = m.label;
          break;
        }
      c.entries.push_back({std::move(b), add.label, mul_label});
    }
  std::stable_sort(c.entries.begin(), c.entries.end(), [](const CensusEntry& x, const CensusEntry& y) {
    if (x.additive_label != y.additive_label) return x.additive_label < y.additive_label;
    if (x.multiplicative_label != y.multiplicative_label) return x.multiplicative_label < y.multiplicative_label;
    return x.brace.multiplicative().table() < y.brace.multiplicative().table();
  });
  return c;
}

std::optional<std::vector<Elem>> brace_isomorphic(const SkewBrace& b1, const SkewBrace& b2) {
  const int n = b1.order();
  if (n != b2.order()) return std::nullopt;
  if (n > kBraceIsomorphismBound)
    throw Error(ErrorCode::OrderBoundExceeded, "brace isomorphism search is limited to order " +
                                                   std::to_string(kBraceIsomorphismBound));
  auto profile = [](const SkewBrace& b) {
    std::vector<std::pair<int, int>> p;
    for (Elem x = 0; x < b.order(); ++x)
      p.emplace_back(b.additive().element_order(x), b.multiplicative().element_order(x));
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(b1) != profile(b2) || b1.is_trivial() != b2.is_trivial()) return std::nullopt;

  const auto gens = generating_set(b1.additive());
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < n; ++y)
      if (b2.additive().element_order(y) == b1.additive().element_order(gens[i]) &&
          b2.multiplicative().element_order(y) == b1.multiplicative().element_order(gens[i]))
        candidates[i].push_back(y);

  std::vector<Elem> images;
  std::optional<std::vector<Elem>> found;
  auto consistent = [&](std::size_t depth, std::vector<Elem>& f) {
    ElementSet domain;
    auto ext = extend_on_generators<Elem>(b1.additive(), std::span<const Elem>(gens.data(), depth), images, Elem{0},
                                          [&](Elem x, Elem y) { return b2.add(x, y); }, &domain);
    if (!ext) return false;
    f = std::move(*ext);
    const auto dom = domain.elements();
    ElementSet used(static_cast<std::size_t>(n));
    for (Elem x : dom)
      if (!used.insert(f[x])) return false;
    for (Elem x : dom)
      for (Elem y : dom) {
        const Elem xy = b1.mul(x, y);
        if (domain.contains(xy) && f[xy] != b2.mul(f[x], f[y])) return false;
      }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == gens.size()) {
      std::vector<Elem> f;
      if (consistent(depth, f) && is_permutation(f) && is_homomorphism(b1.multiplicative(), b2.multiplicative(), f))
        found = std::move(f);
      return;
    }
    for (Elem y : candidates[depth]) {
      images.push_back(y);
      std::vector<Elem> f;
      if (consistent(depth + 1, f)) self(self, depth + 1);
      images.pop_back();
      if (found) return;
    }
  };
  search(search, 0);
  return found;
}

long long census_oracle(int n) {
  if (n < 1 || n > kOracleBound)
    throw Error(ErrorCode::OrderBoundExceeded, "census oracle is limited to order " + std::to_string(kOracleBound));
  const auto catalog = group_catalog(n);
  long long total = 0;
  for (const auto& bgrp : catalog) {
    const FiniteGroup& add = bgrp.group;
    std::vector<Permutation> auts;
    for (auto& m : automorphisms(add)) auts.push_back(std::move(m.images));
    std::set<std::vector<Elem>> tables;

    for (const auto& cgrp : catalog) {
      const FiniteGroup& mul = cgrp.group;
      const auto cg = generating_set(mul);
      std::vector<Permutation> chosen;
      auto perm_order = [&](const Permutation& p) {
        Permutation q = p;
        int k = 1;
        while (!std::equal(q.begin(), q.end(), auts[0].begin())) {
          q = compose(p, q);
          ++k;
        }
        return k;
      };
      // Homomorphisms C -> Aut(B) from generator images.
      auto on_hom = [&](const std::vector<Permutation>& lambda) {
        std::vector<Elem> dg;
        auto cocycles = [&](auto&& self, std::size_t depth) -> void {
          if (depth == cg.size()) {
            std::vector<Elem> delta(static_cast<std::size_t>(n), -1);
            delta[0] = 0;
            std::vector<Elem> queue{0};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
              const Elem x = queue[qi];
              for (std::size_t i = 0; i < cg.size(); ++i) {
                const Elem y = mul.op(x, cg[i]);
                const Elem v = add.op(delta[x], lambda[x][dg[i]]);
                if (delta[y] < 0) {
                  delta[y] = v;
                  queue.push_back(y);
                } else if (delta[y] != v) {
                  return;
                }
              }
            }
            if (!is_permutation(delta)) return;
            for (Elem c1 = 0; c1 < n; ++c1)
              for (Elem c2 = 0; c2 < n; ++c2)
                if (delta[mul.op(c1, c2)] != add.op(delta[c1], lambda[c1][delta[c2]])) return;
            const Permutation pre = invert(delta);
            std::vector<Elem> t(static_cast<std::size_t>(n) * n);
            for (Elem a = 0; a < n; ++a)
              for (Elem b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = add.op(a, lambda[pre[a]][b]);
            tables.insert(std::move(t));
            return;
          }
          for (Elem v = 1; v < n; ++v) {
            dg.push_back(v);
            self(self, depth + 1);
            dg.pop_back();
          }
        };
        cocycles(cocycles, 0);
      };
      auto homs = [&](auto&& self, std::size_t depth) -> void {
        if (depth == cg.size()) {
          auto lambda = extend_on_generators<Permutation>(
              mul, cg, std::span<const Permutation>(chosen), auts[0],
              [](const Permutation& x, const Permutation& y) { return compose(x, y); });
          if (lambda) on_hom(*lambda);
          return;
        }
        for (const auto& p : auts) {
          if (mul.element_order(cg[depth]) % perm_order(p) != 0) continue;
          chosen.push_back(p);
          self(self, depth + 1);
          chosen.pop_back();
        }
      };
      homs(homs, 0);
    }

    // Burnside: orbits of Aut(B) on the collected tables.
    long long fixed = 0;
    for (const auto& t : tables)
      for (const auto& f : auts) {
        bool fix = true;
        for (Elem x = 0; x < n && fix; ++x)
          for (Elem y = 0; y < n && fix; ++y)
            fix = f[t[static_cast<std::size_t>(x) * n + y]] == t[static_cast<std::size_t>(f[x]) * n + f[y]];
        fixed += fix;
      }
    if (fixed % static_cast<long long>(auts.size()) != 0) throw std::logic_error("Burnside count is not integral");
    total += fixed / static_cast<long long>(auts.size());
  }
  return total;
}

bool is_square_free(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return n >= 1;
}

}  // namespace skewbrace
