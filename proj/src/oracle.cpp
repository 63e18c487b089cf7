#include "unitsum/oracle.hpp"

#include <algorithm>

namespace unitsum::oracle {

CandidatePool make_pool(int q, int max_b) {
  if (q < 3 || q % 2 == 0 || !is_prime(Int(q))) {
    throw std::domain_error("make_pool: q must be an odd prime");
  }
  if (max_b < 0) throw std::domain_error("make_pool: negative exponent cap");
  CandidatePool pool;
  pool.q = q;
  pool.max_b = max_b;
  for (int a = 0; a <= pool.max_a; ++a) {
    for (int b = 0; b <= max_b; ++b) {
      if (a == 0 && b == 0) continue;  // the value 1 is excluded
      pool.values.push_back(pow_int(Int(2), static_cast<unsigned>(a)) *
                            pow_int(Int(q), static_cast<unsigned>(b)));
    }
  }
  std::sort(pool.values.begin(), pool.values.end());
  return pool;
}

int default_exponent_cap(int n, int q) {
  switch (q) {
    case 3: return (n - 2) + 1;
    case 5: return (n - 3) + 1;
    case 7: return (n - 3) / 2 + 1;
    default: return n;
  }
}

namespace {

struct RestrictedSearch {
  const CandidatePool& pool;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> chosen;
  std::vector<SolutionSet>* out;

  void record() {
    SolutionSet s;
    s.prime = pool.q;
    s.distinct = true;
    for (std::size_t i : chosen) s.values.push_back(pool.values[i]);
    out->push_back(std::move(s));
  }

  void dfs(std::size_t start, int slots, const Rational& sum) {
    if (slots == 0) {
      if (sum == 1) record();
      return;
    }
    if (sum >= 1) return;  // remaining terms are strictly positive
    for (std::size_t i = start; i + static_cast<std::size_t>(slots) <= pool.values.size(); ++i) {
      if (++nodes > budget) {
        throw BudgetExceeded("restricted_brute_force: node budget exceeded", nodes);
      }
      // Ascending pool: the next candidate carries the largest remaining
      // reciprocal, so slots/pool[i] bounds everything still reachable.
      if (sum + Rational(slots, pool.values[i]) < 1) break;
      Rational next = sum + Rational(1, pool.values[i]);
      if (next > 1) continue;
      chosen.push_back(i);
      dfs(i + 1, slots - 1, next);
      chosen.pop_back();
    }
  }
};

struct GeneralSearch {
  int n;
  bool distinct;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Int> chosen;
  std::vector<SolutionSet>* out;

  void dfs(const Int& lo, int slots, const Rational& remainder) {
    if (slots == 0) {
      if (remainder == 0) {
        SolutionSet s;
        s.distinct = distinct;
        s.values = chosen;
        out->push_back(std::move(s));
      }
      return;
    }
    if (remainder <= 0) return;
    const Int num = numerator(remainder);
    const Int den = denominator(remainder);
    Int x = (den + num - 1) / num;  // smallest x with 1/x <= remainder
    if (x < lo) x = lo;
    const Int x_max = (Int(slots) * den) / num;  // slots * (1/x) >= remainder
    for (; x <= x_max; ++x) {
      if (++nodes > budget) {
        throw BudgetExceeded("general_enumerate: node budget exceeded", nodes);
      }
      chosen.push_back(x);
      dfs(distinct ? Int(x + 1) : x, slots - 1, remainder - Rational(1, x));
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<SolutionSet> restricted_brute_force(int n, int q, int max_b,
                                                std::uint64_t budget) {
  if (n < 3) throw std::domain_error("restricted_brute_force: n must be >= 3");
  if (max_b < 1) throw std::domain_error("restricted_brute_force: cap must be >= 1");
  CandidatePool pool = make_pool(q, max_b);
  if (pool.values.size() < static_cast<std::size_t>(n)) return {};
  std::vector<SolutionSet> out;
  RestrictedSearch search{pool, n, budget, 0, {}, &out};
  search.dfs(0, n, Rational(0));
  return out;
}

std::vector<SolutionSet> general_enumerate(int n, bool distinct,
                                           std::uint64_t budget) {
  if (n < 1) throw std::domain_error("general_enumerate: n must be >= 1");
  if (n > 7) {
    throw std::domain_error("general_enumerate: n > 7 exceeds the search guard");
  }
  std::vector<SolutionSet> out;
  GeneralSearch search{n, distinct, budget, 0, {}, &out};
  search.dfs(Int(1), n, Rational(1));
  return out;
}

}  // namespace unitsum::oracle
