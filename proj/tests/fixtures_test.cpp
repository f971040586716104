#include <doctest.h>

#include "skewbrace/enumerate.hpp"
#include "skewbrace/fixtures.hpp"
#include "support/oracles.hpp"

using namespace skewbrace;
using namespace skewbrace::testing;

TEST_CASE("fixtures build with the stated orders") {
  const std::vector<std::pair<std::string, int>> orders{{"ex8", 8}, {"ex32", 32}, {"ex24", 24}, {"ex12", 12}};
  CHECK(fixture_names() == std::vector<std::string>{"ex8", "ex32", "ex24", "ex12"});
  for (const auto& [name, n] : orders) {
    const auto ex = build_fixture(name);
    CHECK(ex.brace().order() == n);
    CHECK(ex.brace() == brace_from_cocycle(ex.spec()));
    CHECK_NOTHROW(validate_cocycle(ex.spec()));
    CHECK(naive_brace_identities(ex.brace()));
  }
  CHECK_THROWS_AS(fixture_data("ex9"), Error);
}

TEST_CASE("transcribed delta values") {
  const auto ex8 = build_fixture("ex8");
  CHECK(ex8.delta("x") == ex8.element("a"));
  CHECK(ex8.delta("y") == ex8.element("2a"));
  const auto ex24 = build_fixture("ex24");
  CHECK(ex24.delta("t") == ex24.element("3a"));
  CHECK(ex24.delta("zt") == ex24.element("9a+b"));
  CHECK(ex24.delta("x^2yz") == ex24.element("10a+b"));
  const auto ex12 = build_fixture("ex12");
  CHECK(ex12.delta("s") == ex12.element("5a"));
  CHECK(ex12.delta("t") == ex12.element("6a"));
}

TEST_CASE("lambda on generators agrees with the lambda forced by the delta table") {
  // lambda_c(delta(c')) = delta(c c') - delta(c)
  for (const auto& name : fixture_names()) {
    const auto data = fixture_data(name);
    const auto ex = build_fixture(name);
    const auto& add = data.additive;
    const auto& mul = data.multiplicative;
    const auto& delta = ex.spec().delta;
    const auto inv = invert(delta);
    for (const auto& [g, images] : data.lambda_images) {
      const Elem c = evaluate_word(mul, data.multiplicative_generators, g);
      for (std::size_t i = 0; i < images.size(); ++i) {
        const Elem v = data.additive_generators[i].second;
        const Elem forced = add.op(delta[mul.op(c, inv[v])], add.inv(delta[c]));
        INFO(name, " lambda_", g, "(", data.additive_generators[i].first, ")");
        CHECK(forced == evaluate_sum(add, data.additive_generators, images[i]));
      }
    }
  }
}

TEST_CASE("corrections are recorded in the fixture notes") {
  CHECK_FALSE(fixture_data("ex24").notes.empty());
  CHECK_FALSE(fixture_data("ex32").notes.empty());
}

TEST_CASE("multiplicative group types") {
  CHECK(group_label(build_fixture("ex8").brace().multiplicative()) == "D8");
  CHECK(group_label(build_fixture("ex8").brace().additive()) == "C4xC2");
  const auto ex24 = build_fixture("ex24");
  const auto xyz = ex24.word_span({"x", "y", "z"});
  CHECK(group_label(induced_subgroup(ex24.spec().multiplicative, xyz).group) == "D12");
  const auto ex12 = build_fixture("ex12");
  const auto st = ex12.word_span({"s^2", "t"});
  CHECK(group_label(induced_subgroup(ex12.spec().multiplicative, st).group) == "S3");
  CHECK(group_label(ex12.brace().multiplicative()) == "D12");
}

TEST_CASE("claims hold") {
  for (const auto& name : fixture_names()) {
    const auto results = verify_claims(name);
    CHECK(results.size() == fixture_claims(name).size() + 1);
    CHECK(results.front().name == "reconstruction");
    for (const auto& r : results) {
      INFO(r.fixture, " ", r.name, ": ", r.detail);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("a corrupted delta table is caught") {
  for (const auto& name : fixture_names()) {
    const auto results = verify_claims(corrupt_fixture(fixture_data(name)));
    REQUIRE_FALSE(results.empty());
    CHECK(results.front().name == "reconstruction");
    CHECK_FALSE(results.front().pass);
    CHECK_THROWS_AS(build_fixture(corrupt_fixture(fixture_data(name))), Error);
  }
}

TEST_CASE("expression parsers") {
  const auto g = direct_product(cyclic_group(12), cyclic_group(2));
  const std::vector<std::pair<std::string, Elem>> gens{{"a", 2}, {"b", 1}};
  CHECK(evaluate_sum(g, gens, "0") == 0);
  CHECK(evaluate_sum(g, gens, "a") == 2);
  CHECK(evaluate_sum(g, gens, "10a+b") == 21);
  CHECK(evaluate_sum(g, gens, "12a") == 0);
  CHECK_THROWS_AS(evaluate_sum(g, gens, "3c"), Error);
  const auto d8 = dihedral_group(8);
  const std::vector<std::pair<std::string, Elem>> words{{"x", 2}, {"y", 1}};
  CHECK(evaluate_word(d8, words, "1") == 0);
  CHECK(evaluate_word(d8, words, "x^4") == 0);
  CHECK(evaluate_word(d8, words, "xy") == d8.op(2, 1));
  CHECK(evaluate_word(d8, words, "x^2y") == d8.op(d8.op(2, 2), 1));
}
