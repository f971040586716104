#include <doctest.h>

#include "skewbrace/enumerate.hpp"
#include "skewbrace/group.hpp"
#include "support/oracles.hpp"

using namespace skewbrace;
using namespace skewbrace::testing;

namespace {

Table cyclic_table(int n) {
  Table t(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

ErrorCode code_of(const Table& t) {
  try {
    make_group(t);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("table was accepted");
  return ErrorCode::InvalidArgument;
}

FiniteGroup dihedral_by_inversion() {
  const auto c4 = cyclic_group(4);
  std::vector<Permutation> action{{0, 1, 2, 3}, {0, 3, 2, 1}};
  return semidirect_product(c4, cyclic_group(2), action);
}

}  // namespace

TEST_CASE("make_group validates tables") {
  CHECK(make_group({{0}}).order() == 1);
  const auto c4 = make_group(cyclic_table(4));
  CHECK(std::vector<Elem>(c4.inverses().begin(), c4.inverses().end()) == std::vector<Elem>{0, 3, 2, 1});
  CHECK(code_of({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}) != ErrorCode::InvalidArgument);
  CHECK(code_of({{0, 1}, {1, 2}}) == ErrorCode::NotClosed);
  CHECK(code_of({{1, 0}, {0, 0}}) == ErrorCode::NoIdentity);
}

TEST_CASE("make_group moves the identity to label 0") {
  // Z/3 with identity carried by label 2
  const Table t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  const auto g = make_group(t);
  for (Elem x = 0; x < 3; ++x) CHECK(g.op(0, x) == x);
  CHECK(is_isomorphic(g, cyclic_group(3)));
}

TEST_CASE("semidirect and direct products") {
  const auto d8 = dihedral_by_inversion();
  CHECK(d8.order() == 8);
  CHECK(count_elements_of_order(d8, 2) == 5);
  CHECK_FALSE(d8.is_abelian());

  const auto c4c2 = direct_product(cyclic_group(4), cyclic_group(2));
  CHECK(c4c2.is_abelian());
  int exponent = 1;
  for (Elem x = 0; x < 8; ++x) exponent = std::max(exponent, c4c2.element_order(x));
  CHECK(exponent == 4);

  std::vector<Permutation> bad{{0, 1, 2, 3}, {0, 2, 1, 3}};
  CHECK_THROWS_AS(semidirect_product(cyclic_group(4), cyclic_group(2), bad), Error);
}

TEST_CASE("order-32 group with the involution x -> x^3y^2, y -> x^2y") {
  const auto n = direct_product(cyclic_group(4), cyclic_group(4));  // (i,j) -> 4i+j, x = 4, y = 1
  Permutation z(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z[4 * i + j] = 4 * ((3 * i + 2 * j) % 4) + (2 * i + j) % 4;
  std::vector<Permutation> action{Permutation{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}, z};
  const auto g = semidirect_product(n, cyclic_group(2), action);
  const Elem x = 8, y = 2, zz = 1;
  CHECK(g.order() == 32);
  CHECK(g.element_order(x) == 4);
  CHECK(g.element_order(y) == 4);
  CHECK(g.element_order(zz) == 2);
  CHECK(g.op(x, y) == g.op(y, x));
  CHECK(g.op(g.op(zz, x), zz) == g.op(g.pow(x, 3), g.pow(y, 2)));
  CHECK(g.op(g.op(zz, y), zz) == g.op(g.pow(x, 2), y));
  const Elem gens[] = {x, y, zz};
  CHECK(generate_subgroup(g, std::span<const Elem>(gens)).size() == 32);
}

TEST_CASE("subgroup lattice matches subset enumeration") {
  CHECK(subgroups(cyclic_group(2)).size() == 2);
  CHECK(subgroups(direct_product(cyclic_group(4), cyclic_group(2))).size() == 8);
  CHECK(subgroups(dihedral_by_inversion()).size() == 10);
  for (int n = 1; n <= 12; ++n)
    for (const auto& c : group_catalog(n)) {
      INFO(c.label);
      CHECK(subgroups(c.group) == brute_subgroups(c.group));
    }
}

TEST_CASE("group predicates") {
  const auto c12 = group_predicates(cyclic_group(12));
  CHECK(c12.nilpotent);
  CHECK(c12.supersoluble);
  CHECK(c12.pi == std::vector<int>{2, 3});

  const auto c3 = cyclic_group(3);
  std::vector<Permutation> inv{{0, 1, 2}, {0, 2, 1}};
  const auto s3 = semidirect_product(c3, cyclic_group(2), inv);
  CHECK_FALSE(is_nilpotent(s3));
  CHECK(is_supersoluble(s3));

  const auto a4 = alternating_group_4();
  CHECK(a4.order() == 12);
  CHECK_FALSE(is_supersoluble(a4));
  CHECK_FALSE(chain_supersoluble_group(a4, brute_subgroups(a4)));
}

TEST_CASE("greedy group supersolubility agrees with chain search") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& c : group_catalog(n)) {
      INFO(c.label);
      const bool s = is_supersoluble(c.group);
      CHECK(s == chain_supersoluble_group(c.group, brute_subgroups(c.group)));
      if (is_nilpotent(c.group)) CHECK(s);
    }
  // a few larger groups: nilpotent implies supersoluble
  const auto c2 = cyclic_group(2);
  for (const auto& g : {direct_product(quaternion_group(), c2), direct_product(dihedral_group(8), cyclic_group(4)),
                        direct_product(alternating_group_4(), c2)}) {
    CHECK(is_supersoluble(g) == chain_supersoluble_group(g, subgroups(g)));
    if (is_nilpotent(g)) CHECK(is_supersoluble(g));
  }
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(cyclic_group(2)).size() == 1);
  CHECK(automorphisms(direct_product(cyclic_group(4), cyclic_group(2))).size() == 8);
  for (int n = 1; n <= 8; ++n)
    for (const auto& c : group_catalog(n)) {
      INFO(c.label);
      CHECK(static_cast<int>(automorphisms(c.group).size()) == brute_automorphism_count(c.group));
    }
}

TEST_CASE("holomorph contains the regular translation copy") {
  CHECK(holomorph(cyclic_group(6)).group.order() == 12);
  for (int n : {3, 4, 6, 8})
    for (const auto& c : group_catalog(n)) {
      const auto h = holomorph(c.group);
      CHECK(h.group.order() == n * static_cast<int>(h.automorphisms.size()));
      ElementSet t(static_cast<std::size_t>(h.group.order()));
      for (Elem e : h.translations) t.insert(e);
      CHECK(is_subgroup(h.group, t));
      CHECK(static_cast<int>(t.size()) == n);
      // the translations multiply like the group itself
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) CHECK(h.group.op(h.translations[a], h.translations[b]) == h.translations[c.group.op(a, b)]);
    }
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(is_isomorphic(dihedral_group(8), quaternion_group()));
  CHECK(is_isomorphic(dihedral_group(8), dihedral_by_inversion()));
  Rng rng(kDefaultSeed);
  for (int n = 2; n <= 12; ++n)
    for (const auto& c : group_catalog(n)) {
      const auto p = rng.permutation_fixing_zero(n);
      Table t(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t[p[a]][p[b]] = p[c.group.op(a, b)];
      const auto relabeled = make_group(t);
      INFO(c.label);
      CHECK(group_label(relabeled) == c.label);
    }
}
