#include "skewbrace/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "skewbrace/classify.hpp"
#include "skewbrace/enumerate.hpp"

namespace skewbrace {

namespace {

Elem lookup(const std::vector<std::pair<std::string, Elem>>& gens, char c, const std::string& ctx) {
  for (const auto& [n, e] : gens)
    if (n.size() == 1 && n[0] == c) return e;
  throw Error(ErrorCode::TranscriptionInvalid, "unknown generator '" + std::string(1, c) + "' in '" + ctx + "'");
}

long long read_int(const std::string& s, std::size_t& i) {
  long long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
  return v;
}

FiniteGroup c2_power(int k) {
  FiniteGroup g = cyclic_group(2);
  for (int i = 1; i < k; ++i) g = direct_product(g, cyclic_group(2));
  return g;
}

std::string describe(const ElementSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::string orders(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

SkewBrace as_brace(const SkewBrace& b, const ElementSet& s) { return induced_brace(b, s).brace; }

// Maps a subset of B to the local labels of the induced brace on `within`.
ElementSet to_local(const ElementSet& within, const ElementSet& s) {
  const auto emb = within.elements();
  ElementSet out(emb.size());
  for (std::size_t i = 0; i < emb.size(); ++i)
    if (s.contains(emb[i])) out.insert(static_cast<Elem>(i));
  return out;
}

ElementSet from_local(const ElementSet& within, const ElementSet& local) {
  const auto emb = within.elements();
  ElementSet out(within.universe());
  local.for_each([&](Elem i) { out.insert(emb[i]); });
  return out;
}

ElementSet delta_image(const PaperExample& ex, const ElementSet& c_subset) {
  ElementSet out(static_cast<std::size_t>(ex.brace().order()));
  c_subset.for_each([&](Elem c) { out.insert(ex.spec().delta[c]); });
  return out;
}

bool expect(bool ok, std::string& detail, const std::string& what) {
  detail = what;
  return ok;
}

using Check = std::function<bool(const PaperExample&, std::string&)>;

std::vector<Claim> ex8_claims() {
  return {
      {"delta-values", "delta(x) = a and delta(y) = 2a",
       [](const PaperExample& ex, std::string& d) {
         return expect(ex.delta("x") == ex.element("a") && ex.delta("y") == ex.element("2a"), d,
                       "delta(x)=" + std::to_string(ex.delta("x")) + " delta(y)=" + std::to_string(ex.delta("y")));
       }},
      {"additive-type", "(B,+) is isomorphic to C4 x C2",
       [](const PaperExample& ex, std::string& d) {
         return expect(is_isomorphic(ex.brace().additive(), direct_product(cyclic_group(4), cyclic_group(2))), d,
                       group_label(ex.brace().additive()));
       }},
      {"multiplicative-type", "(B,.) is isomorphic to the dihedral group of order 8",
       [](const PaperExample& ex, std::string& d) {
         return expect(is_isomorphic(ex.brace().multiplicative(), dihedral_group(8)), d,
                       group_label(ex.brace().multiplicative()));
       }},
      {"unique-maximal-subbrace", "the only maximal subbrace is delta({1, x^2, y, x^2y}) = {0, b, 2a, 2a+b}",
       [](const PaperExample& ex, std::string& d) {
         const auto maxes = maximal_subbraces(ex.brace());
         const ElementSet s = delta_image(ex, ex.word_span({"x^2", "y"}));
         const ElementSet expected = ex.span({"b", "2a"});
         d = std::to_string(maxes.size()) + " maximal subbrace(s)";
         return maxes.size() == 1 && maxes[0].elements == s && s == expected && s.size() == 4;
       }},
      {"maximal-subbrace-index", "the maximal subbrace has index 2",
       [](const PaperExample& ex, std::string& d) {
         const auto maxes = maximal_subbraces(ex.brace());
         if (maxes.size() != 1) return expect(false, d, "no unique maximal subbrace");
         const int k = index(ex.brace(), maxes[0].elements);
         return expect(k == 2, d, "index " + std::to_string(k));
       }},
      {"order-2-subbraces-in-maximal", "every subbrace of order 2 lies in the maximal subbrace",
       [](const PaperExample& ex, std::string& d) {
         const ElementSet m = ex.span({"b", "2a"});
         int count = 0;
         for (const auto& s : all_subbraces(ex.brace()))
           if (s.size() == 2) {
             ++count;
             if (!s.elements.is_subset_of(m)) return expect(false, d, describe(s.elements));
           }
         return expect(count > 0, d, std::to_string(count) + " subbraces of order 2");
       }},
      {"no-ideal-of-order-2", "no subbrace of order 2 is an ideal",
       [](const PaperExample& ex, std::string& d) {
         for (const auto& s : all_subbraces(ex.brace()))
           if (s.size() == 2 && s.is_ideal) return expect(false, d, describe(s.elements));
         return expect(true, d, "none");
       }},
      {"not-supersoluble", "B is not supersoluble",
       [](const PaperExample& ex, std::string& d) {
         const auto r = supersoluble(ex.brace());
         return expect(!r.supersoluble, d, r.witness ? "witness " + describe(*r.witness) : "certificate found");
       }},
  };
}

std::vector<Claim> ex32_claims() {
  static const std::vector<std::string> I{"a", "c", "b+d", "b+e"}, J{"a", "b", "d", "c+e"},
      K{"a", "b+c", "b+d", "e"}, L{"a", "b+d", "b+c+e"}, L2{"a+b+d", "b+c+e"}, L3{"b+c+e"};
  return {
      {"ideals-of-order-16", "I, J and K are ideals of order 16",
       [](const PaperExample& ex, std::string& d) {
         bool ok = true;
         for (const auto* g : {&I, &J, &K}) {
           const auto s = ex.span(*g);
           ok = ok && s.size() == 16 && is_ideal(ex.brace(), s);
         }
         return expect(ok, d, "checked I, J, K");
       }},
      {"proper-ideals", "the proper nonzero ideals are exactly I, J, K and L (order 8)",
       [](const PaperExample& ex, std::string& d) {
         std::vector<ElementSet> found;
         for (const auto& s : all_ideals(ex.brace()))
           if (s.size() > 1 && static_cast<int>(s.size()) < ex.brace().order()) found.push_back(s.elements);
         std::vector<ElementSet> expected{ex.span(L), ex.span(I), ex.span(J), ex.span(K)};
         std::sort(found.begin(), found.end(), size_lex_less);
         std::sort(expected.begin(), expected.end(), size_lex_less);
         return expect(found == expected && ex.span(L).size() == 8, d, std::to_string(found.size()) + " proper ideals");
       }},
      {"ideal-lattice-size", "B has 6 ideals in total",
       [](const PaperExample& ex, std::string& d) {
         const auto n = all_ideals(ex.brace()).size();
         return expect(n == 6, d, std::to_string(n) + " ideals");
       }},
      {"star-product", "B * B = L",
       [](const PaperExample& ex, std::string& d) {
         const auto all = ElementSet::full(static_cast<std::size_t>(ex.brace().order()));
         const auto s = star_subgroup(ex.brace(), all, all);
         return expect(s == ex.span(L), d, describe(s));
       }},
      {"derived-ideal", "the derived ideal equals L",
       [](const PaperExample& ex, std::string& d) {
         const auto s = derived_ideal(ex.brace());
         return expect(s.elements == ex.span(L), d, describe(s.elements));
       }},
      {"subideals-of-I", "L, L2 and L3 are ideals of I",
       [](const PaperExample& ex, std::string& d) {
         const auto within = ex.span(I);
         const auto sub = as_brace(ex.brace(), within);
         for (const auto* inner : {&L, &L2, &L3})
           if (!is_ideal(sub, to_local(within, ex.span(*inner)))) return expect(false, d, "not an ideal");
         return expect(ex.span(L2).size() == 4 && ex.span(L3).size() == 2, d, "checked");
       }},
      {"L-ideal-of-J", "L is an ideal of J",
       [](const PaperExample& ex, std::string& d) {
         const auto within = ex.span(J);
         return expect(is_ideal(as_brace(ex.brace(), within), to_local(within, ex.span(L))), d, "order 8 in 16");
       }},
      {"I-supersoluble", "I is a supersoluble brace",
       [](const PaperExample& ex, std::string& d) {
         return expect(is_supersoluble(as_brace(ex.brace(), ex.span(I))), d, "order 16");
       }},
      {"J-supersoluble", "J is a supersoluble brace",
       [](const PaperExample& ex, std::string& d) {
         return expect(is_supersoluble(as_brace(ex.brace(), ex.span(J))), d, "order 16");
       }},
      {"not-supersoluble", "B is not supersoluble",
       [](const PaperExample& ex, std::string& d) {
         const auto r = supersoluble(ex.brace());
         return expect(!r.supersoluble, d, r.witness ? "witness of order " + std::to_string(r.witness->size()) : "");
       }},
      {"L-centrally-nilpotent", "L is centrally nilpotent as a brace",
       [](const PaperExample& ex, std::string& d) {
         const auto sub = as_brace(ex.brace(), ex.span(L));
         return expect(is_centrally_nilpotent(sub), d, "upper central orders " +
                                                          orders(upper_central_series(sub).term_orders()));
       }},
      {"sum-of-I-and-J", "the additive closure of I and J is B",
       [](const PaperExample& ex, std::string& d) {
         const auto s = additive_closure(ex.brace(), ex.span(I) | ex.span(J));
         return expect(static_cast<int>(s.size()) == ex.brace().order(), d, std::to_string(s.size()));
       }},
      {"multiplicative-presentation", "(B,.) is generated by x, y, z of orders 4, 4, 2 with x and y commuting",
       [](const PaperExample& ex, std::string& d) {
         const auto& c = ex.spec().multiplicative;
         const Elem x = ex.word("x"), y = ex.word("y"), z = ex.word("z");
         const bool ok = c.element_order(x) == 4 && c.element_order(y) == 4 && c.element_order(z) == 2 &&
                         c.op(x, y) == c.op(y, x) && c.op(c.op(z, x), z) == ex.word("x^3y^2") &&
                         c.op(c.op(z, y), z) == ex.word("x^2y") &&
                         is_isomorphic(c, ex.brace().multiplicative());
         return expect(ok, d, "relations checked");
       }},
  };
}

std::vector<Claim> ex24_claims() {
  static const std::vector<std::string> I{"2a", "b"}, FitI{"4a", "b"};
  return {
      {"delta-values", "delta(t) = 3a and delta(zt) = 9a+b",
       [](const PaperExample& ex, std::string& d) {
         return expect(ex.delta("t") == ex.element("3a") && ex.delta("zt") == ex.element("9a+b"), d, "checked");
       }},
      {"socle", "Soc(B) = <4a>",
       [](const PaperExample& ex, std::string& d) {
         const auto s = socle(ex.brace());
         return expect(s.elements == ex.span({"4a"}), d, describe(s.elements));
       }},
      {"socle-series", "the socle series has orders 3, 6, 24, with Soc_2(B) = <2a>",
       [](const PaperExample& ex, std::string& d) {
         const auto c = socle_series(ex.brace());
         return expect(c.term_orders() == std::vector<int>{3, 6, 24} && c.terms[2] == ex.span({"2a"}), d,
                       orders(c.term_orders()));
       }},
      {"multipermutation-level", "B has multipermutation level 3",
       [](const PaperExample& ex, std::string& d) {
         const auto l = multipermutation_level(ex.brace());
         return expect(l == 3, d, l ? std::to_string(*l) : "absent");
       }},
      {"I-ideal", "I = <2a, b> is an ideal of order 12",
       [](const PaperExample& ex, std::string& d) {
         const auto s = ex.span(I);
         return expect(s.size() == 12 && is_ideal(ex.brace(), s), d, std::to_string(s.size()));
       }},
      {"I-multiplicative-group", "delta^-1(I) = <x, y, z>, a dihedral group of order 12",
       [](const PaperExample& ex, std::string& d) {
         const auto pre = ex.word_span({"x", "y", "z"});
         const bool ok = delta_image(ex, pre) == ex.span(I) &&
                         is_isomorphic(induced_subgroup(ex.spec().multiplicative, pre).group, dihedral_group(12));
         return expect(ok, d, "checked");
       }},
      {"I-not-centrally-nilpotent", "I is not centrally nilpotent",
       [](const PaperExample& ex, std::string& d) {
         const auto sub = as_brace(ex.brace(), ex.span(I));
         return expect(!is_centrally_nilpotent(sub), d, "upper central orders " +
                                                           orders(upper_central_series(sub).term_orders()));
       }},
      {"trivial-ideal-of-I", "<4a, b> is an ideal of I and a trivial brace of order 6",
       [](const PaperExample& ex, std::string& d) {
         const auto within = ex.span(I);
         const auto sub = as_brace(ex.brace(), within);
         const auto local = to_local(within, ex.span(FitI));
         const bool ok = local.size() == 6 && is_ideal(sub, local) && as_brace(sub, local).is_trivial();
         return expect(ok, d, "checked");
       }},
      {"fitting-of-I", "Fit(I) = <4a, b>, of order 6",
       [](const PaperExample& ex, std::string& d) {
         const auto within = ex.span(I);
         const auto f = from_local(within, fitting(as_brace(ex.brace(), within)).elements);
         return expect(f == ex.span(FitI) && f.size() == 6, d, describe(f));
       }},
      {"fitting-of-I-not-left-ideal", "Fit(I) is not lambda-invariant in B, hence not an ideal of B",
       [](const PaperExample& ex, std::string& d) {
         const auto c = classify_subset(ex.brace(), ex.span(FitI));
         return expect(!c.is_left_ideal && !c.is_ideal, d, c.is_subbrace ? "subbrace" : "not a subbrace");
       }},
      {"supersoluble", "B is supersoluble",
       [](const PaperExample& ex, std::string& d) {
         const auto r = supersoluble(ex.brace());
         return expect(r.supersoluble, d, r.certificate ? orders(r.certificate->factor_orders()) : "");
       }},
  };
}

std::vector<Claim> ex12_claims() {
  return {
      {"delta-values", "delta(s) = 5a and delta(t) = 6a",
       [](const PaperExample& ex, std::string& d) {
         return expect(ex.delta("s") == ex.element("5a") && ex.delta("t") == ex.element("6a"), d, "checked");
       }},
      {"kernel-of-lambda", "the kernel of lambda on C is <s^2>",
       [](const PaperExample& ex, std::string& d) {
         const auto& spec = ex.spec();
         ElementSet ker(static_cast<std::size_t>(spec.multiplicative.order()));
         for (Elem c = 0; c < spec.multiplicative.order(); ++c)
           if (spec.lambda[c] == spec.lambda[0]) ker.insert(c);
         return expect(ker == ex.word_span({"s^2"}), d, describe(ker));
       }},
      {"socle", "Soc(B) = <4a> and B/Soc(B) has order 4",
       [](const PaperExample& ex, std::string& d) {
         const auto s = socle(ex.brace());
         const auto q = quotient(ex.brace(), s.elements);
         return expect(s.elements == ex.span({"4a"}) && q.brace.order() == 4, d, describe(s.elements));
       }},
      {"socle-series", "the socle series has orders 3, 6, 12, with Soc_2(B) = <2a>",
       [](const PaperExample& ex, std::string& d) {
         const auto c = socle_series(ex.brace());
         return expect(c.term_orders() == std::vector<int>{3, 6, 12} && c.terms[2] == ex.span({"2a"}), d,
                       orders(c.term_orders()));
       }},
      {"multipermutation-level", "B has multipermutation level 3",
       [](const PaperExample& ex, std::string& d) {
         const auto l = multipermutation_level(ex.brace());
         return expect(l == 3, d, l ? std::to_string(*l) : "absent");
       }},
      {"star-product", "B * B = <2a> and equals the derived ideal",
       [](const PaperExample& ex, std::string& d) {
         const auto all = ElementSet::full(static_cast<std::size_t>(ex.brace().order()));
         const auto s = star_subgroup(ex.brace(), all, all);
         return expect(s == ex.span({"2a"}) && derived_ideal(ex.brace()).elements == s, d, describe(s));
       }},
      {"star-product-multiplicative-group",
       "delta^-1(<2a>) = <s^2, t> is isomorphic to Sym(3), which is not nilpotent",
       [](const PaperExample& ex, std::string& d) {
         const auto pre = ex.word_span({"s^2", "t"});
         const auto g = induced_subgroup(ex.brace().multiplicative(), ex.span({"2a"})).group;
         const bool ok = delta_image(ex, pre) == ex.span({"2a"}) && is_isomorphic(g, dihedral_group(6)) &&
                         !is_nilpotent(g);
         return expect(ok, d, group_label(g));
       }},
      {"derived-not-centrally-nilpotent", "the derived ideal is not centrally nilpotent",
       [](const PaperExample& ex, std::string& d) {
         return expect(!is_centrally_nilpotent(as_brace(ex.brace(), ex.span({"2a"}))), d, "checked");
       }},
      {"supersoluble", "B is supersoluble with a certificate of three prime-order steps",
       [](const PaperExample& ex, std::string& d) {
         const auto r = supersoluble(ex.brace());
         const bool ok = r.supersoluble && r.certificate->length() == 3;
         return expect(ok, d, r.certificate ? orders(r.certificate->factor_orders()) : "no certificate");
       }},
  };
}

}  // namespace

Elem evaluate_sum(const FiniteGroup& g, const std::vector<std::pair<std::string, Elem>>& gens,
                  const std::string& expr) {
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::TranscriptionInvalid, "empty additive expression");
  Elem acc = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    const bool has_digits = std::isdigit(static_cast<unsigned char>(s[i]));
    const long long k = has_digits ? read_int(s, i) : 1;
    Elem term = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      term = g.pow(lookup(gens, s[i], expr), k);
      ++i;
    } else if (!has_digits || k != 0) {
      throw Error(ErrorCode::TranscriptionInvalid, "malformed additive expression '" + expr + "'");
    }
    acc = g.op(acc, term);
    if (i < s.size()) {
      if (s[i] != '+') throw Error(ErrorCode::TranscriptionInvalid, "malformed additive expression '" + expr + "'");
      if (++i == s.size()) throw Error(ErrorCode::TranscriptionInvalid, "dangling '+' in '" + expr + "'");
    }
  }
  return acc;
}

Elem evaluate_word(const FiniteGroup& g, const std::vector<std::pair<std::string, Elem>>& gens,
                   const std::string& word) {
  if (word == "1") return 0;
  if (word.empty()) throw Error(ErrorCode::TranscriptionInvalid, "empty word");
  Elem acc = 0;
  std::size_t i = 0;
  while (i < word.size()) {
    if (!std::isalpha(static_cast<unsigned char>(word[i])))
      throw Error(ErrorCode::TranscriptionInvalid, "malformed word '" + word + "'");
    const Elem gen = lookup(gens, word[i], word);
    ++i;
    long long k = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      if (i == word.size() || !std::isdigit(static_cast<unsigned char>(word[i])))
        throw Error(ErrorCode::TranscriptionInvalid, "missing exponent in '" + word + "'");
      k = read_int(word, i);
    }
    acc = g.op(acc, g.pow(gen, k));
  }
  return acc;
}

Elem PaperExample::element(const std::string& expr) const {
  return evaluate_sum(data_.additive, data_.additive_generators, expr);
}

Elem PaperExample::word(const std::string& w) const {
  return evaluate_word(data_.multiplicative, data_.multiplicative_generators, w);
}

ElementSet PaperExample::span(const std::vector<std::string>& exprs) const {
  ElementSet s(static_cast<std::size_t>(brace_.order()));
  s.insert(0);
  for (const auto& e : exprs) s.insert(element(e));
  return generate_subgroup(brace_.additive(), s);
}

ElementSet PaperExample::word_span(const std::vector<std::string>& words) const {
  ElementSet s(static_cast<std::size_t>(brace_.order()));
  s.insert(0);
  for (const auto& w : words) s.insert(word(w));
  return generate_subgroup(spec_.multiplicative, s);
}

std::vector<std::string> fixture_names() { return {"ex8", "ex32", "ex24", "ex12"}; }

FixtureData fixture_data(const std::string& name) {
  const auto c = [](int k) { return cyclic_group(k); };
  FixtureData f;
  f.name = name;
  if (name == "ex8") {
    f.title = "order 8: non-supersoluble, unique maximal subbrace of prime index";
    f.additive = direct_product(c(4), c(2));
    f.additive_generators = {{"a", 2}, {"b", 1}};
    f.multiplicative = dihedral_group(8);
    f.multiplicative_generators = {{"x", 2}, {"y", 1}};
    f.lambda_images = {{"x", {"3a+b", "2a+b"}}, {"y", {"3a+b", "b"}}};
    f.delta = {{"1", "0"},    {"x", "a"},      {"x^2", "b"},      {"x^3", "3a+b"},
               {"y", "2a"},   {"xy", "3a"},    {"x^2y", "2a+b"},  {"x^3y", "a+b"}};
  } else if (name == "ex32") {
    f.title = "order 32: sum of two supersoluble ideals that is not supersoluble";
    f.additive = c2_power(5);
    f.additive_generators = {{"a", 16}, {"b", 8}, {"c", 4}, {"d", 2}, {"e", 1}};
    const auto n = direct_product(c(4), c(4));  // x = (1,0) = 4, y = (0,1) = 1
    const Elem nx = 4, ny = 1;
    const auto z = extend_homomorphism(n, n, std::vector<Elem>{nx, ny},
                                       std::vector<Elem>{n.op(n.pow(nx, 3), n.pow(ny, 2)), n.op(n.pow(nx, 2), ny)});
    Permutation id(16);
    for (Elem i = 0; i < 16; ++i) id[i] = i;
    f.multiplicative = semidirect_product(n, c(2), std::vector<Permutation>{id, *z});
    f.multiplicative_generators = {{"x", 8}, {"y", 2}, {"z", 1}};
    f.lambda_images = {{"x", {"c+d+e", "c+e", "a+c", "a+b", "a+b+c"}},
                       {"y", {"a", "a+c+e", "a+b+c+d", "b", "a+e"}},
                       {"z", {"a", "b+c+d+e", "a+b+c+d", "c+e", "a+b+c"}}};
    f.delta = {
        {"1", "0"},           {"x", "a+c"},            {"x^2", "c+d+e"},        {"x^3", "c"},
        {"y", "a+c+e"},       {"xy", "a+b+d+e"},       {"x^2y", "a+d"},         {"x^3y", "b+d+e"},
        {"y^2", "b+d"},       {"xy^2", "b+e"},         {"x^2y^2", "b+c+e"},     {"x^3y^2", "a+b+e"},
        {"y^3", "b"},         {"xy^3", "a+e"},         {"x^2y^3", "b+c+d+e"},   {"x^3y^3", "e"},
        {"z", "a"},           {"xz", "a+d+e"},         {"x^2z", "a+c+d+e"},     {"x^3z", "d+e"},
        {"yz", "c+e"},        {"xyz", "a+b+c"},        {"x^2yz", "d"},          {"x^3yz", "b+c"},
        {"y^2z", "a+b+d"},    {"xy^2z", "b+c+d"},      {"x^2y^2z", "a+b+c+e"},  {"x^3y^2z", "a+b+c+d"},
        {"y^3z", "a+b"},      {"xy^3z", "a+c+d"},      {"x^2y^3z", "a+b+c+d+e"}, {"x^3y^3z", "c+d"}};
    f.notes = {"the printed image of e under lambda_z reads a+b+e; the delta table forces a+b+c, "
               "and only a+b+c makes lambda_z an involution",
               "with that table L2 and L3 are ideals of I but not of J; J is supersoluble through "
               "<c+d+e> < <a, c+d+e> < L instead"};
  } else if (name == "ex24") {
    f.title = "order 24: supersoluble, an ideal whose Fitting ideal is not an ideal of B";
    f.additive = direct_product(c(12), c(2));
    f.additive_generators = {{"a", 2}, {"b", 1}};
    f.multiplicative = direct_product(direct_product(dihedral_group(6), c(2)), c(2));
    f.multiplicative_generators = {{"x", 8}, {"y", 4}, {"z", 2}, {"t", 1}};
    f.lambda_images = {{"x", {"a", "b"}}, {"y", {"5a", "b"}}, {"z", {"7a", "b"}}, {"t", {"7a", "6a+b"}}};
    f.delta = {{"1", "0"},       {"x", "8a"},       {"x^2", "4a"},      {"y", "6a"},
               {"xy", "2a"},     {"x^2y", "10a"},   {"z", "b"},         {"xz", "8a+b"},
               {"x^2z", "4a+b"}, {"yz", "6a+b"},    {"xyz", "2a+b"},    {"x^2yz", "10a+b"},
               {"t", "3a"},      {"xt", "11a"},     {"x^2t", "7a"},     {"yt", "9a"},
               {"xyt", "5a"},    {"x^2yt", "a"},    {"zt", "9a+b"},     {"xzt", "5a+b"},
               {"x^2zt", "a+b"}, {"yzt", "3a+b"},   {"xyzt", "11a+b"},  {"x^2yzt", "7a+b"}};
    f.notes = {"the printed entry for x^2yz reads 10+b; 10a+b is the only value completing a bijection"};
  } else if (name == "ex12") {
    f.title = "order 12: supersoluble, derived ideal with non-nilpotent multiplicative group";
    f.additive = c(12);
    f.additive_generators = {{"a", 1}};
    f.multiplicative = dihedral_group(12);
    f.multiplicative_generators = {{"s", 2}, {"t", 1}};
    f.lambda_images = {{"s", {"7a"}}, {"t", {"5a"}}};
    f.delta = {{"1", "0"},    {"s", "5a"},     {"s^2", "4a"},    {"s^3", "9a"},
               {"s^4", "8a"},  {"s^5", "a"},    {"t", "6a"},      {"st", "11a"},
               {"s^2t", "10a"}, {"s^3t", "3a"}, {"s^4t", "2a"},  {"s^5t", "7a"}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
  }
  return f;
}

PaperExample build_fixture(const FixtureData& data) {
  PaperExample ex;
  ex.data_ = data;
  const auto& add = data.additive;
  const auto& mul = data.multiplicative;
  if (add.order() != mul.order())
    throw Error(ErrorCode::TranscriptionInvalid, "groups of different orders");
  std::vector<Elem> agens;
  for (const auto& [n, e] : data.additive_generators) agens.push_back(e);

  std::vector<Elem> cgens;
  std::vector<Permutation> images;
  for (const auto& [g, imgs] : data.lambda_images) {
    if (imgs.size() != agens.size())
      throw Error(ErrorCode::TranscriptionInvalid, "lambda_" + g + " lists the wrong number of images");
    std::vector<Elem> targets;
    for (const auto& e : imgs) targets.push_back(evaluate_sum(add, data.additive_generators, e));
    auto m = extend_homomorphism(add, add, agens, targets);
    if (!m || !is_permutation(*m))
      throw Error(ErrorCode::TranscriptionInvalid, "lambda_" + g + " does not define an automorphism");
    cgens.push_back(evaluate_word(mul, data.multiplicative_generators, g));
    images.push_back(std::move(*m));
  }
  Permutation id(static_cast<std::size_t>(add.order()));
  for (Elem i = 0; i < add.order(); ++i) id[i] = i;
  ElementSet domain;
  auto lambda = extend_on_generators<Permutation>(
      mul, cgens, std::span<const Permutation>(images), id,
      [](const Permutation& x, const Permutation& y) { return compose(x, y); }, &domain);
  if (!lambda || static_cast<int>(domain.size()) != mul.order())
    throw Error(ErrorCode::TranscriptionInvalid, "lambda on generators does not extend to a homomorphism");

  std::vector<Elem> delta(static_cast<std::size_t>(mul.order()), -1);
  for (const auto& [w, e] : data.delta) {
    const Elem c = evaluate_word(mul, data.multiplicative_generators, w);
    if (delta[c] >= 0) throw Error(ErrorCode::TranscriptionInvalid, "delta row '" + w + "' repeats an element");
    delta[c] = evaluate_sum(add, data.additive_generators, e);
  }
  if (std::find(delta.begin(), delta.end(), -1) != delta.end())
    throw Error(ErrorCode::TranscriptionInvalid, "delta table does not cover C");

  ex.spec_ = CocycleSpec{add, mul, std::move(*lambda), std::move(delta)};
  try {
    ex.brace_ = brace_from_cocycle(ex.spec_);
  } catch (const Error& e) {
    throw Error(ErrorCode::TranscriptionInvalid, data.name + ": " + e.what());
  }
  return ex;
}

PaperExample build_fixture(const std::string& name) { return build_fixture(fixture_data(name)); }

FixtureData corrupt_fixture(FixtureData data) {
  if (data.delta.size() >= 3) std::swap(data.delta[1].second, data.delta[2].second);
  return data;
}

std::vector<Claim> fixture_claims(const std::string& name) {
  if (name == "ex8") return ex8_claims();
  if (name == "ex32") return ex32_claims();
  if (name == "ex24") return ex24_claims();
  if (name == "ex12") return ex12_claims();
  throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

std::vector<ClaimResult> verify_claims(const FixtureData& data) {
  std::vector<ClaimResult> out;
  ClaimResult build{data.name, "reconstruction",
                    "the delta table is a bijective 1-cocycle and yields a valid brace", false, ""};
  std::optional<PaperExample> ex;
  try {
    ex = build_fixture(data);
    build.pass = true;
    build.detail = "order " + std::to_string(ex->brace().order());
  } catch (const Error& e) {
    build.detail = e.what();
  }
  out.push_back(build);
  for (const auto& claim : fixture_claims(data.name)) {
    ClaimResult r{data.name, claim.name, claim.description, false, ""};
    if (!ex) {
      r.detail = "not evaluated: reconstruction failed";
    } else {
      try {
        r.pass = claim.check(*ex, r.detail);
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClaimResult> verify_claims(const std::string& name) { return verify_claims(fixture_data(name)); }

}  // namespace skewbrace
