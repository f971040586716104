#include "skewbrace/brace.hpp"

#include <mutex>
#include <optional>
#include <string>

#include "skewbrace/substructure.hpp"

namespace skewbrace {

namespace detail {
struct BraceCache {
  std::once_flag subgroups_once;
  std::vector<ElementSet> subgroups;
  std::once_flag ideals_once;
  std::vector<ElementSet> ideals;
};
}  // namespace detail

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "a=" + std::to_string(a) + ", b=" + std::to_string(b) + ", c=" + std::to_string(c);
}

std::optional<Elem> find_identity(const Table& t) {
  const std::size_t n = t.size();
  for (const auto& row : t)
    if (row.size() != n) return std::nullopt;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = t[e][x] == static_cast<Elem>(x) && t[x][e] == static_cast<Elem>(x);
    if (ok) return static_cast<Elem>(e);
  }
  return std::nullopt;
}

Table swap_labels(const Table& t, Elem e) {
  auto sw = [e](Elem x) { return x == e ? 0 : (x == 0 ? e : x); };
  const std::size_t n = t.size();
  Table r(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r[sw(static_cast<Elem>(x))][sw(static_cast<Elem>(y))] = sw(t[x][y]);
  return r;
}

FiniteGroup validated_group(const Table& t, const char* which) {
  try {
    return FiniteGroup::from_table(t);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OrderBoundExceeded) throw;
    throw Error(ErrorCode::GroupInvalid, std::string(which) + " table: " + e.what());
  }
}

}  // namespace

SkewBrace::SkewBrace() : SkewBrace(FiniteGroup(), FiniteGroup()) {}

SkewBrace::SkewBrace(FiniteGroup add, FiniteGroup mul)
    : add_(std::move(add)), mul_(std::move(mul)), cache_(std::make_shared<detail::BraceCache>()) {
  const int n = add_.order();
  lambda_.resize(static_cast<std::size_t>(n) * n);
  star_.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem l = add_.op(add_.inv(a), mul_.op(a, b));
      lambda_[idx(a, b)] = l;
      star_[idx(a, b)] = add_.op(l, add_.inv(b));
    }
}

SkewBrace SkewBrace::from_groups(FiniteGroup add, FiniteGroup mul) {
  if (add.order() != mul.order())
    throw Error(ErrorCode::GroupInvalid, "additive order " + std::to_string(add.order()) +
                                             " differs from multiplicative order " + std::to_string(mul.order()));
  SkewBrace b(std::move(add), std::move(mul));
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (b.mul(x, b.add(y, z)) != b.add(b.sub(b.mul(x, y), x), b.mul(x, z)))
          throw Error(ErrorCode::DistributivityViolation, "a(b + c) != ab - a + ac at " + triple(x, y, z));

  // Consequences of distributivity; checked independently so that a defect in
  // table handling cannot slip through.
  for (Elem x = 0; x < n; ++x)
    if (!is_automorphism(b.add_, b.lambda_map(x)))
      throw Error(ErrorCode::DistributivityViolation,
                  "lambda_a is not an automorphism of (B,+) for a=" + std::to_string(x));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = b.mul(x, y);
      for (Elem z = 0; z < n; ++z)
        if (b.lambda(xy, z) != b.lambda(x, b.lambda(y, z)))
          throw Error(ErrorCode::DistributivityViolation, "lambda_ab != lambda_a lambda_b at " + triple(x, y, z));
      if (xy != b.add(b.add(x, b.star(x, y)), y))
        throw Error(ErrorCode::DistributivityViolation,
                    "ab != a + a*b + b at a=" + std::to_string(x) + ", b=" + std::to_string(y));
      for (Elem z = 0; z < n; ++z) {
        if (b.star(xy, z) != b.add(b.add(b.star(x, b.star(y, z)), b.star(y, z)), b.star(x, z)))
          throw Error(ErrorCode::DistributivityViolation,
                      "(ab)*c != a*(b*c) + b*c + a*c at " + triple(x, y, z));
        if (b.star(x, b.add(y, z)) != b.sub(b.add(b.add(b.star(x, y), y), b.star(x, z)), y))
          throw Error(ErrorCode::DistributivityViolation,
                      "a*(b+c) != a*b + b + a*c - b at " + triple(x, y, z));
      }
    }
  return b;
}

bool SkewBrace::is_trivial() const {
  for (Elem s : star_)
    if (s != 0) return false;
  return true;
}

const std::vector<ElementSet>& SkewBrace::additive_subgroups() const {
  std::call_once(cache_->subgroups_once, [&] { cache_->subgroups = subgroups(add_, kBraceOrderBound); });
  return cache_->subgroups;
}

const std::vector<ElementSet>& SkewBrace::cached_ideals() const {
  const auto& subs = additive_subgroups();
  std::call_once(cache_->ideals_once, [&] {
    for (const auto& s : subs)
      if (is_ideal(*this, s)) cache_->ideals.push_back(s);
  });
  return cache_->ideals;
}

SkewBrace make_brace(const Table& add_table, const Table& mul_table) {
  if (add_table.size() != mul_table.size())
    throw Error(ErrorCode::GroupInvalid, "tables have different orders " + std::to_string(add_table.size()) +
                                             " and " + std::to_string(mul_table.size()));
  const auto ea = find_identity(add_table);
  const auto em = find_identity(mul_table);
  if (ea && em && *ea != *em)
    throw Error(ErrorCode::IdentityMismatch, "additive identity " + std::to_string(*ea) +
                                                 " differs from multiplicative identity " + std::to_string(*em));
  if (ea && em && *ea != 0)
    return SkewBrace::from_groups(validated_group(swap_labels(add_table, *ea), "additive"),
                                  validated_group(swap_labels(mul_table, *ea), "multiplicative"));
  return SkewBrace::from_groups(validated_group(add_table, "additive"),
                                validated_group(mul_table, "multiplicative"));
}

SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace::from_groups(g, g); }

void validate_cocycle(const CocycleSpec& spec) {
  const auto& add = spec.additive;
  const auto& mul = spec.multiplicative;
  const int n = add.order();
  if (mul.order() != n)
    throw Error(ErrorCode::DeltaNotBijective, "|C| = " + std::to_string(mul.order()) +
                                                  " but |B| = " + std::to_string(n));
  if (static_cast<int>(spec.lambda.size()) != n)
    throw Error(ErrorCode::ActionNotHomomorphism, "lambda has " + std::to_string(spec.lambda.size()) +
                                                      " entries for a group of order " + std::to_string(n));
  for (Elem c = 0; c < n; ++c)
    if (static_cast<int>(spec.lambda[c].size()) != n || !is_automorphism(add, spec.lambda[c]))
      throw Error(ErrorCode::ActionNotHomomorphism,
                  "lambda_c is not an automorphism of B for c=" + std::to_string(c));
  for (Elem c1 = 0; c1 < n; ++c1)
    for (Elem c2 = 0; c2 < n; ++c2)
      if (spec.lambda[mul.op(c1, c2)] != compose(spec.lambda[c1], spec.lambda[c2]))
        throw Error(ErrorCode::ActionNotHomomorphism, "lambda_{c1 c2} != lambda_c1 lambda_c2 for c1=" +
                                                          std::to_string(c1) + ", c2=" + std::to_string(c2));
  if (static_cast<int>(spec.delta.size()) != n || !is_permutation(spec.delta))
    throw Error(ErrorCode::DeltaNotBijective, "delta is not a bijection C -> B");
  if (spec.delta[0] != 0)
    throw Error(ErrorCode::CocycleIdentityViolation, "delta(1) = " + std::to_string(spec.delta[0]) + " != 0");
  for (Elem c1 = 0; c1 < n; ++c1)
    for (Elem c2 = 0; c2 < n; ++c2)
      if (spec.delta[mul.op(c1, c2)] != add.op(spec.delta[c1], spec.lambda[c1][spec.delta[c2]]))
        throw Error(ErrorCode::CocycleIdentityViolation,
                    "delta(c1 c2) != delta(c1) + lambda_c1(delta(c2)) for c1=" + std::to_string(c1) +
                        ", c2=" + std::to_string(c2));
}

SkewBrace brace_from_cocycle(const CocycleSpec& spec) {
  validate_cocycle(spec);
  const int n = spec.additive.order();
  const Permutation preimage = invert(spec.delta);
  Table mul(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (Elem a = 0; a < n; ++a) {
    const auto& l = spec.lambda[preimage[a]];
    for (Elem b = 0; b < n; ++b) mul[a][b] = spec.additive.op(a, l[b]);
  }
  return SkewBrace::from_groups(spec.additive, validated_group(mul, "multiplicative"));
}

CocycleSpec cocycle_of(const SkewBrace& b) {
  CocycleSpec spec{b.additive(), b.multiplicative(), {}, {}};
  const int n = b.order();
  for (Elem a = 0; a < n; ++a) {
    const auto l = b.lambda_map(a);
    spec.lambda.emplace_back(l.begin(), l.end());
    spec.delta.push_back(a);
  }
  return spec;
}

BraceQuotient quotient(const SkewBrace& b, const ElementSet& ideal) {
  if (!ideal.contains(0) || !is_ideal(b, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient by a non-ideal subset");
  const int n = b.order();
  const auto members = ideal.elements();
  std::vector<Elem> proj(static_cast<std::size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    const Elem k = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : members) proj[b.add(x, m)] = k;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem m : members)
      if (proj[b.mul(x, m)] != proj[x])
        throw Error(ErrorCode::NotAnIdeal, "bI != b + I for b=" + std::to_string(x) + ", i=" + std::to_string(m));
  const std::size_t q = reps.size();
  Table add(q, std::vector<Elem>(q)), mul(q, std::vector<Elem>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i][j] = proj[b.add(reps[i], reps[j])];
      mul[i][j] = proj[b.mul(reps[i], reps[j])];
    }
  return {make_brace(add, mul), std::move(proj)};
}

InducedBrace induced_brace(const SkewBrace& b, const ElementSet& subbrace) {
  if (!subbrace.contains(0) || !is_subbrace(b, subbrace))
    throw Error(ErrorCode::InvalidArgument, "subset is not a subbrace");
  auto emb = subbrace.elements();
  std::vector<Elem> local(static_cast<std::size_t>(b.order()), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) local[emb[i]] = static_cast<Elem>(i);
  const std::size_t m = emb.size();
  Table add(m, std::vector<Elem>(m)), mul(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = local[b.add(emb[i], emb[j])];
      mul[i][j] = local[b.mul(emb[i], emb[j])];
    }
  return {make_brace(add, mul), std::move(emb)};
}

FiniteGroup semidirect_group(const SkewBrace& b) {
  std::vector<Permutation> action;
  for (Elem a = 0; a < b.order(); ++a) {
    const auto l = b.lambda_map(a);
    action.emplace_back(l.begin(), l.end());
  }
  return semidirect_product(b.additive(), b.multiplicative(), action);
}

SkewBrace direct_product_braces(const SkewBrace& b1, const SkewBrace& b2) {
  return SkewBrace::from_groups(direct_product(b1.additive(), b2.additive()),
                                direct_product(b1.multiplicative(), b2.multiplicative()));
}

SkewBrace relabel(const SkewBrace& b, std::span<const Elem> perm) {
  const int n = b.order();
  if (static_cast<int>(perm.size()) != n || !is_permutation(perm) || perm[0] != 0)
    throw Error(ErrorCode::InvalidArgument, "relabeling must be a permutation fixing 0");
  Table add(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  Table mul = add;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      add[perm[x]][perm[y]] = perm[b.add(x, y)];
      mul[perm[x]][perm[y]] = perm[b.mul(x, y)];
    }
  return make_brace(add, mul);
}

}  // namespace skewbrace
