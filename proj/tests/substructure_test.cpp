#include <doctest.h>

#include "skewbrace/fixtures.hpp"
#include "skewbrace/substructure.hpp"
#include "support/oracles.hpp"

using namespace skewbrace;
using namespace skewbrace::testing;

namespace {

ElementSet set_of(int n, std::initializer_list<Elem> e) { return ElementSet(static_cast<std::size_t>(n), e); }

bool all_flags(const SubStructure& s) {
  return s.is_subbrace && s.is_left_ideal && s.is_strong_left_ideal && s.is_ideal;
}

}  // namespace

TEST_CASE("classify_subset on the extremes") {
  for (const auto& b : census_pool(6)) {
    const int n = b.order();
    CHECK(all_flags(classify_subset(b, ElementSet::zero(static_cast<std::size_t>(n)))));
    CHECK(all_flags(classify_subset(b, ElementSet::full(static_cast<std::size_t>(n)))));
  }
  const auto b = build_fixture("ex8").brace();
  CHECK_THROWS_AS(classify_subset(b, set_of(8, {1, 2})), Error);
}

TEST_CASE("order-2 subbraces of the order-8 example") {
  const auto ex = build_fixture("ex8");
  const auto& b = ex.brace();
  const auto maximal = ex.span({"b", "2a"});
  int inside = 0;
  for (Elem x = 1; x < 8; ++x) {
    if (b.times(2, x) != 0) continue;
    const auto s = classify_subset(b, set_of(8, {0, x}));
    CHECK(s.is_subbrace == maximal.contains(x));
    CHECK_FALSE(s.is_ideal);
    if (s.is_subbrace) ++inside;
  }
  CHECK(inside == 3);
  // {0, 2a} is lambda-invariant (2a is the only nonzero double) but y is not
  // normal in D8, so it is a left ideal and not an ideal.
  const auto two_a = classify_subset(b, set_of(8, {0, ex.element("2a")}));
  CHECK(two_a.is_left_ideal);
  CHECK(two_a.is_strong_left_ideal);
  CHECK_FALSE(two_a.is_ideal);
  CHECK_FALSE(classify_subset(b, set_of(8, {0, ex.element("b")})).is_left_ideal);
  CHECK_FALSE(classify_subset(b, set_of(8, {0, ex.element("2a+b")})).is_left_ideal);
}

TEST_CASE("classification agrees with the naive definitions on random subsets") {
  Rng rng(kDefaultSeed);
  for (const auto& b : theorem_pool()) {
    const int n = b.order();
    for (int trial = 0; trial < 20; ++trial) {
      ElementSet s(static_cast<std::size_t>(n), {0});
      const int picks = rng.below(n);
      for (int i = 0; i < picks; ++i) s.insert(rng.below(n));
      // half of the trials use an additive subgroup, which is far likelier to pass
      if (trial % 2) s = additive_closure(b, s);
      const auto c = classify_subset(b, s);
      CHECK(c.is_subbrace == naive_is_subbrace(b, s));
      CHECK(c.is_left_ideal == naive_is_left_ideal(b, s));
      CHECK(c.is_ideal == naive_is_ideal(b, s));
      CHECK((!c.is_ideal || c.is_strong_left_ideal));
      CHECK((!c.is_strong_left_ideal || c.is_left_ideal));
      CHECK((!c.is_left_ideal || c.is_subbrace));
    }
  }
}

TEST_CASE("ideal_generated") {
  const auto b8 = build_fixture("ex8").brace();
  CHECK(ideal_generated(b8, ElementSet(8)).elements == ElementSet::zero(8));

  const auto ex24 = build_fixture("ex24");
  const auto soc = ideal_generated(ex24.brace(), set_of(24, {ex24.element("4a")}));
  CHECK(soc.elements == ex24.span({"4a"}));
  CHECK(soc.size() == 3);
  CHECK(all_flags(soc));

  // a brace of prime order has no proper nonzero ideal
  const auto c5 = trivial_brace(cyclic_group(5));
  CHECK(ideal_generated(c5, set_of(5, {3})).size() == 5);

  Rng rng(kDefaultSeed + 1);
  auto pool = theorem_pool();
  pool.push_back(build_fixture("ex32").brace());
  for (const auto& b : pool) {
    const int n = b.order();
    for (int trial = 0; trial < 6; ++trial) {
      ElementSet gens(static_cast<std::size_t>(n));
      for (int i = 0; i <= trial % 3; ++i) gens.insert(rng.below(n));
      CHECK(ideal_generated(b, gens).elements == ideal_generated_oracle(b, gens));
    }
  }
}

TEST_CASE("subbrace_generated") {
  const auto ex8 = build_fixture("ex8");
  CHECK(subbrace_generated(ex8.brace(), set_of(8, {0})).size() == 1);
  CHECK(subbrace_generated(ex8.brace(), set_of(8, {ex8.element("b")})).elements ==
        set_of(8, {0, ex8.element("b")}));
  const auto ex12 = build_fixture("ex12");
  CHECK(subbrace_generated(ex12.brace(), set_of(12, {ex12.element("a")})).size() == 12);
}

TEST_CASE("ideal lattices") {
  CHECK(all_ideals(SkewBrace()).size() == 1);
  CHECK(all_ideals(trivial_brace(cyclic_group(6))).size() == 4);

  const auto ex32 = build_fixture("ex32");
  const auto ideals = all_ideals(ex32.brace());
  REQUIRE(ideals.size() == 6);
  CHECK(ideals[1].elements == ex32.span({"a", "b+d", "b+c+e"}));
  std::vector<ElementSet> sixteen;
  for (const auto& i : ideals)
    if (i.size() == 16) sixteen.push_back(i.elements);
  std::vector<ElementSet> expected{ex32.span({"a", "c", "b+d", "b+e"}), ex32.span({"a", "b", "d", "c+e"}),
                                   ex32.span({"a", "b+c", "b+d", "e"})};
  std::sort(expected.begin(), expected.end(), size_lex_less);
  CHECK(sixteen == expected);

  for (const auto& b : theorem_pool()) {
    std::vector<ElementSet> got;
    for (const auto& i : all_ideals(b)) got.push_back(i.elements);
    CHECK(got == naive_ideals(b));
    int subbraces = 0;
    for (const auto& s : subgroups(b.additive())) subbraces += naive_is_subbrace(b, s);
    CHECK(static_cast<int>(all_subbraces(b).size()) == subbraces);
  }
}

TEST_CASE("maximal subbraces, Frattini and core") {
  const auto ex8 = build_fixture("ex8");
  const auto& b = ex8.brace();
  const auto maxes = maximal_subbraces(b);
  REQUIRE(maxes.size() == 1);
  const auto m = maxes[0].elements;
  CHECK(m == ElementSet(8, {0, ex8.element("b"), ex8.element("2a"), ex8.element("2a+b")}));
  CHECK(m == ex8.span({"b", "2a"}));
  CHECK(index(b, m) == 2);

  // core(B, M) is the largest ideal inside M, checked against the lattice
  ElementSet expected = ElementSet::zero(8);
  for (const auto& i : naive_ideals(b))
    if (i.is_subset_of(m) && i.size() > expected.size()) expected = i;
  CHECK(core(b, m).elements == expected);
  CHECK((core(b, m).elements == m) == is_ideal(b, m));

  CHECK(frattini(trivial_brace(cyclic_group(7))).elements == ElementSet::zero(7));
  CHECK(frattini(trivial_brace(cyclic_group(4))).size() == 2);
}

TEST_CASE("index") {
  const auto ex24 = build_fixture("ex24");
  const auto& b = ex24.brace();
  CHECK(index(b, ElementSet::full(24)) == 1);
  CHECK(index(b, ex24.span({"2a", "b"})) == 2);
  CHECK_THROWS_AS(index(b, ElementSet(24, {0, 1, 2})), Error);
}
