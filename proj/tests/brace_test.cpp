#include <doctest.h>

#include <numeric>

#include "skewbrace/classify.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/fixtures.hpp"
#include "support/oracles.hpp"

using namespace skewbrace;
using namespace skewbrace::testing;

namespace {

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

Table relabeled_table(const FiniteGroup& g, const std::vector<Elem>& p) {
  const int n = g.order();
  Table t(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[p[a]][p[b]] = p[g.op(a, b)];
  return t;
}

std::vector<Elem> identity_perm(int n) {
  std::vector<Elem> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

FiniteGroup sym3() {
  std::vector<Permutation> inv{{0, 1, 2}, {0, 2, 1}};
  return semidirect_product(cyclic_group(3), cyclic_group(2), inv);
}

}  // namespace

TEST_CASE("make_brace on small tables") {
  const auto c2 = cyclic_group(2).table();
  const auto b = make_brace(c2, c2);
  CHECK(b.order() == 2);
  CHECK(b.is_trivial());
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) CHECK(b.star(x, y) == 0);

  const auto ex8 = build_fixture("ex8").brace();
  CHECK(make_brace(ex8.additive().table(), ex8.multiplicative().table()) == ex8);
}

TEST_CASE("make_brace accepts exactly the distributive C6 / S3 relabelings") {
  // Every relabeling of S3 on the carrier of C6, checked against the
  // naive distributivity oracle. (On order 4 every such relabeling is a brace.)
  const auto add = cyclic_group(6).table();
  const auto s3 = sym3();
  auto p = identity_perm(6);
  int accepted = 0, rejected = 0;
  do {
    const auto mul = relabeled_table(s3, p);
    if (naive_distributive(add, mul)) {
      CHECK_NOTHROW(make_brace(add, mul));
      ++accepted;
    } else {
      CHECK(error_of([&] { make_brace(add, mul); }) == ErrorCode::DistributivityViolation);
      ++rejected;
    }
  } while (std::next_permutation(p.begin() + 1, p.end()));
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("make_brace error codes") {
  const auto c2 = cyclic_group(2).table();
  CHECK(error_of([&] { make_brace(cyclic_group(3).table(), c2); }) == ErrorCode::GroupInvalid);
  const Table shifted{{1, 0}, {0, 1}};  // identity carried by label 1
  CHECK(error_of([&] { make_brace(c2, shifted); }) == ErrorCode::IdentityMismatch);
  CHECK(make_brace(shifted, shifted).is_trivial());
  CHECK(error_of([&] { make_brace(c2, {{0, 1}, {1, 1}}); }) == ErrorCode::GroupInvalid);
}

TEST_CASE("trivial braces") {
  CHECK(trivial_brace(FiniteGroup()).order() == 1);
  const auto s3 = trivial_brace(sym3());
  CHECK(s3.is_trivial());
  CHECK_FALSE(s3.is_abelian());
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) CHECK(s3.lambda(a, b) == b);
  CHECK(trivial_brace(cyclic_group(6)).is_abelian());
}

TEST_CASE("brace_from_cocycle") {
  SUBCASE("identity cocycle gives the trivial brace") {
    const auto g = sym3();
    const auto b = brace_from_cocycle({g, g, std::vector<Permutation>(6, identity_perm(6)), identity_perm(6)});
    CHECK(b == trivial_brace(g));
  }
  SUBCASE("order-8 table") {
    const auto ex = build_fixture("ex8");
    const auto& s = ex.spec();
    CHECK(s.lambda[ex.word("x")][ex.element("a")] == ex.element("3a+b"));
    CHECK(s.lambda[ex.word("x")][ex.element("b")] == ex.element("2a+b"));
    CHECK(s.lambda[ex.word("y")][ex.element("a")] == ex.element("3a+b"));
    CHECK(s.lambda[ex.word("y")][ex.element("b")] == ex.element("b"));
    CHECK(ex.brace().order() == 8);
  }
  SUBCASE("order-12 table") {
    const auto ex = build_fixture("ex12");
    CHECK(ex.spec().lambda[ex.word("s")][ex.element("a")] == ex.element("7a"));
    CHECK(ex.spec().lambda[ex.word("t")][ex.element("a")] == ex.element("5a"));
  }
  SUBCASE("round trip of delta") {
    for (const auto& name : fixture_names()) {
      const auto ex = build_fixture(name);
      const auto& b = ex.brace();
      const auto& s = ex.spec();
      // a . b = delta(delta^-1(a) delta^-1(b))
      const auto inv = invert(s.delta);
      for (Elem x = 0; x < b.order(); ++x)
        for (Elem y = 0; y < b.order(); ++y) REQUIRE(b.mul(x, y) == s.delta[s.multiplicative.op(inv[x], inv[y])]);
      const auto back = cocycle_of(b);
      CHECK(back.delta == identity_perm(b.order()));
    }
  }
  SUBCASE("validation errors") {
    const auto c4 = cyclic_group(4);
    const auto id4 = identity_perm(4);
    CocycleSpec s{c4, c4, std::vector<Permutation>(4, id4), {0, 1, 1, 3}};
    CHECK(error_of([&] { brace_from_cocycle(s); }) == ErrorCode::DeltaNotBijective);
    s.delta = {0, 2, 1, 3};
    CHECK(error_of([&] { brace_from_cocycle(s); }) == ErrorCode::CocycleIdentityViolation);
    s.delta = id4;
    s.lambda[1] = {0, 3, 2, 1};
    CHECK(error_of([&] { brace_from_cocycle(s); }) == ErrorCode::ActionNotHomomorphism);
  }
}

TEST_CASE("quotients") {
  const auto ex12 = build_fixture("ex12");
  const auto& b12 = ex12.brace();
  const auto full = ElementSet::full(12);
  CHECK(quotient(b12, full).brace.order() == 1);
  const auto soc = span(b12, {ex12.element("4a")});
  CHECK(quotient(b12, soc).brace.order() == 4);

  const auto ex24 = build_fixture("ex24");
  const auto q = quotient(ex24.brace(), span(ex24.brace(), {ex24.element("2a"), ex24.element("b")}));
  CHECK(q.brace.order() == 2);
  CHECK(q.brace.is_trivial());

  for (const auto& b : census_pool(6)) {
    const auto z = quotient(b, ElementSet::zero(static_cast<std::size_t>(b.order())));
    CHECK(z.projection == identity_perm(b.order()));
    CHECK(z.brace == b);
  }
  const auto ex8 = build_fixture("ex8");
  CHECK(error_of([&] { quotient(ex8.brace(), span(ex8.brace(), {ex8.element("2a")})); }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("semidirect group") {
  const auto g = semidirect_group(trivial_brace(cyclic_group(2)));
  CHECK(is_isomorphic(g, direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(semidirect_group(build_fixture("ex8").brace()).order() == 64);
  CHECK(is_supersoluble(semidirect_group(build_fixture("ex12").brace())));
}

TEST_CASE("direct products of braces") {
  const auto ex8 = build_fixture("ex8").brace();
  CHECK(brace_isomorphic(direct_product_braces(ex8, SkewBrace()), ex8).has_value());
  const auto c6 = direct_product_braces(trivial_brace(cyclic_group(2)), trivial_brace(cyclic_group(3)));
  CHECK(brace_isomorphic(c6, trivial_brace(cyclic_group(6))).has_value());
  const auto b24 = direct_product_braces(ex8, trivial_brace(cyclic_group(3)));
  CHECK(b24.order() == 24);
  CHECK(u_p(b24, 2).additive.size() == 3);
  CHECK(naive_brace_identities(b24));
}

TEST_CASE("relabel transports structure") {
  Rng rng(kDefaultSeed);
  for (const auto& b : census_pool(6)) {
    const auto p = rng.permutation_fixing_zero(b.order());
    const auto r = relabel(b, p);
    for (Elem x = 0; x < b.order(); ++x)
      for (Elem y = 0; y < b.order(); ++y) {
        CHECK(r.add(p[x], p[y]) == p[b.add(x, y)]);
        CHECK(r.mul(p[x], p[y]) == p[b.mul(x, y)]);
      }
    CHECK(brace_isomorphic(b, r).has_value());
  }
}

TEST_CASE("every constructed brace satisfies the identities") {
  auto pool = theorem_pool();
  pool.push_back(build_fixture("ex32").brace());
  for (const auto& b : pool) {
    CHECK(naive_brace_identities(b));
    for (Elem x = 0; x < b.order(); ++x) {
      CHECK(b.lambda(0, x) == x);
      CHECK(b.star(0, x) == 0);
      CHECK(b.star(x, 0) == 0);
    }
  }
}

TEST_CASE("additive and multiplicative powers") {
  const auto ex = build_fixture("ex12");
  const auto& b = ex.brace();
  CHECK(b.times(3, ex.element("a")) == ex.element("3a"));
  CHECK(b.times(-1, ex.element("a")) == ex.element("11a"));
  const Elem s = ex.delta("s");
  CHECK(b.power(s, 6) == 0);
  CHECK(b.power(s, 2) == ex.delta("s^2"));
}
