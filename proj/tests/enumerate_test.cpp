#include <doctest.h>

#include "skewbrace/classify.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/fixtures.hpp"
#include "support/oracles.hpp"

using namespace skewbrace;
using namespace skewbrace::testing;

namespace {

// Regular subgroups of Hol(A) counted straight from the subgroup lattice of
// the holomorph: order |A| and trivial stabilizer of 0.
long long regular_subgroups_by_lattice(const FiniteGroup& a) {
  const auto h = holomorph(a);
  const int n = a.order();
  long long count = 0;
  for (const auto& s : subgroups(h.group)) {
    if (static_cast<int>(s.size()) != n) continue;
    ElementSet orbit(static_cast<std::size_t>(n));
    s.for_each([&](Elem g) {
      // g = (t, phi) with index t * |Aut| + phi; it sends 0 to t
      orbit.insert(g / static_cast<int>(h.automorphisms.size()));
    });
    if (static_cast<int>(orbit.size()) == n) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("group catalog") {
  const std::vector<int> counts{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (int n = 1; n <= 12; ++n) {
    const auto cat = group_catalog(n);
    CHECK(static_cast<int>(cat.size()) == counts[n - 1]);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(cat[i].group.order() == n);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(is_isomorphic(cat[i].group, cat[j].group));
    }
  }
  CHECK_THROWS_AS(group_catalog(13), Error);
}

TEST_CASE("braces with a given additive group") {
  CHECK(braces_with_additive_group(FiniteGroup()).size() == 1);
  for (int p : {2, 3, 5, 7, 11}) {
    const auto b = braces_with_additive_group(cyclic_group(p));
    REQUIRE(b.size() == 1);
    CHECK(b[0].is_trivial());
  }
  for (int n = 2; n <= 6; ++n)
    for (const auto& c : group_catalog(n)) {
      INFO(c.label);
      CHECK(count_regular_subgroups(c.group) == regular_subgroups_by_lattice(c.group));
    }
}

TEST_CASE("census agrees with the cocycle count") {
  for (int n = 1; n <= 8; ++n) {
    INFO(n);
    CHECK(static_cast<long long>(census(n).entries.size()) == census_oracle(n));
  }
  CHECK(census(2).entries.size() == 1);
  CHECK(census_oracle(3) == 1);
  CHECK_THROWS_AS(census(13), Error);
  CHECK_THROWS_AS(census_oracle(9), Error);
}

TEST_CASE("census entries are valid and pairwise non-isomorphic") {
  for (int n = 2; n <= 12; ++n) {
    const auto c = census(n);
    INFO(n);
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const auto& e = c.entries[i];
      CHECK(naive_brace_identities(e.brace));
      CHECK(group_label(e.brace.additive()) == e.additive_label);
      CHECK(group_label(e.brace.multiplicative()) == e.multiplicative_label);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(brace_isomorphic(e.brace, c.entries[j].brace).has_value());
    }
  }
}

TEST_CASE("census theorems") {
  for (int n : {6, 10})
    for (const auto& e : census(n).entries) CHECK(is_supersoluble(e.brace));
  for (int n : {4, 8})
    for (const auto& e : census(n).entries) CHECK(is_supersoluble(e.brace) == is_centrally_nilpotent(e.brace));
  CHECK(is_square_free(6));
  CHECK(is_square_free(10));
  CHECK_FALSE(is_square_free(12));
  CHECK_FALSE(is_square_free(8));
}

TEST_CASE("brace isomorphism") {
  const auto ex = build_fixture("ex8");
  const auto& b = ex.brace();
  const auto self = brace_isomorphic(b, b);
  REQUIRE(self.has_value());
  CHECK_FALSE(brace_isomorphic(trivial_brace(cyclic_group(4)),
                               trivial_brace(direct_product(cyclic_group(2), cyclic_group(2))))
                  .has_value());
  // relabel along the additive automorphism a -> 3a, b -> b
  std::vector<Elem> perm(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) perm[b.add(b.times(i, ex.element("a")), b.times(j, ex.element("b")))] =
        b.add(b.times(3 * i, ex.element("a")), b.times(j, ex.element("b")));
  const auto r = relabel(b, perm);
  const auto iso = brace_isomorphic(b, r);
  REQUIRE(iso.has_value());
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      CHECK((*iso)[b.add(x, y)] == r.add((*iso)[x], (*iso)[y]));
      CHECK((*iso)[b.mul(x, y)] == r.mul((*iso)[x], (*iso)[y]));
    }
}
