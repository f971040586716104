#include "skewbrace/ybe.hpp"

#include <map>
#include <string>

namespace skewbrace {

namespace {

bool shaped(const Table& t, int n) {
  if (static_cast<int>(t.size()) != n) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (Elem v : row)
      if (v < 0 || v >= n) return false;
  }
  return true;
}

std::string where(const std::vector<Elem>& t) {
  std::string s = "x=" + std::to_string(t[0]) + ", y=" + std::to_string(t[1]);
  if (t.size() > 2) s += ", z=" + std::to_string(t[2]);
  return s;
}

}  // namespace

std::optional<std::vector<Elem>> braid_violation(const Solution& s) {
  const int n = s.size;
  const auto& r1 = s.first;
  const auto& r2 = s.second;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem a = r1[x][y], b = r2[x][y];
      for (Elem z = 0; z < n; ++z) {
        const Elem c = r1[b][z], d = r2[b][z];
        const Elem e = r1[a][c], f = r2[a][c];

        const Elem b2 = r1[y][z], c2 = r2[y][z];
        const Elem a2 = r1[x][b2], d2 = r2[x][b2];
        const Elem e2 = r1[d2][c2], f2 = r2[d2][c2];
        if (e != a2 || f != e2 || d != f2) return std::vector<Elem>{x, y, z};
      }
    }
  return std::nullopt;
}

SolutionChecks verify_solution(const Solution& s) {
  SolutionChecks c;
  const int n = s.size;
  if (n < 0 || !shaped(s.first, n) || !shaped(s.second, n)) return c;
  c.braid = !braid_violation(s).has_value();

  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  c.bijective = true;
  for (Elem x = 0; x < n && c.bijective; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto& slot = seen[static_cast<std::size_t>(s.first[x][y]) * n + s.second[x][y]];
      if (slot) {
        c.bijective = false;
        break;
      }
      slot = 1;
    }

  c.left_nondegenerate = true;
  for (Elem x = 0; x < n && c.left_nondegenerate; ++x)
    c.left_nondegenerate = is_permutation(s.first[x]);
  c.right_nondegenerate = true;
  for (Elem y = 0; y < n && c.right_nondegenerate; ++y) {
    std::vector<Elem> col(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) col[x] = s.second[x][y];
    c.right_nondegenerate = is_permutation(col);
  }
  return c;
}

Solution solution_from_brace(const SkewBrace& b) {
  const int n = b.order();
  Solution s{n, Table(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n))), {}, {}};
  s.second = s.first;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem u = b.lambda(x, y);
      s.first[x][y] = u;
      s.second[x][y] = b.mul(b.inv(u), b.mul(x, y));
    }
  s.checks = verify_solution(s);
  if (!s.checks.braid)
    throw Error(ErrorCode::SolutionInvalid, "braid relation fails at " + where(*braid_violation(s)));
  if (!s.checks.all()) throw Error(ErrorCode::SolutionInvalid, "solution is degenerate or not bijective");
  return s;
}

Solution flip_solution(int n) {
  Solution s{n, Table(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n))), {}, {}};
  s.second = s.first;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      s.first[x][y] = y;
      s.second[x][y] = x;
    }
  s.checks = verify_solution(s);
  return s;
}

Retraction retract(const Solution& s) {
  const int n = s.size;
  // Signature of x: row x of `first` followed by column x of `second`.
  std::map<std::vector<Elem>, Elem> ids;
  std::vector<Elem> cls(static_cast<std::size_t>(n));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> sig(s.first[x].begin(), s.first[x].end());
    for (Elem z = 0; z < n; ++z) sig.push_back(s.second[z][x]);
    auto [it, inserted] = ids.emplace(std::move(sig), static_cast<Elem>(reps.size()));
    if (inserted) reps.push_back(x);
    cls[x] = it->second;
  }
  const int m = static_cast<int>(reps.size());
  Solution r{m, Table(static_cast<std::size_t>(m), std::vector<Elem>(static_cast<std::size_t>(m), -1)), {}, {}};
  r.second = r.first;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem i = cls[x], j = cls[y];
      const Elem u = cls[s.first[x][y]], v = cls[s.second[x][y]];
      if (r.first[i][j] < 0) {
        r.first[i][j] = u;
        r.second[i][j] = v;
      } else if (r.first[i][j] != u || r.second[i][j] != v) {
        throw Error(ErrorCode::RetractNotWellDefined,
                    "induced map differs on x=" + std::to_string(x) + ", y=" + std::to_string(y));
      }
    }
  r.checks = verify_solution(r);
  return {std::move(r), std::move(cls)};
}

std::optional<int> retraction_level(const Solution& s) {
  Solution cur = s;
  int level = 0;
  while (cur.size > 1) {
    Retraction next = retract(cur);
    if (next.solution.size == cur.size) return std::nullopt;
    cur = std::move(next.solution);
    ++level;
  }
  return level;
}

}  // namespace skewbrace
