#pragma once

#include "unitsum/core.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace unitsum::oracle {

// Sorted candidate denominators {2^a * q^b >= 2 : a <= max_a, b <= max_b}.
struct CandidatePool {
  int q = 3;
  int max_a = 2;
  int max_b = 0;
  std::vector<Int> values;  // ascending, never contains 1
};

CandidatePool make_pool(int q, int max_b);

// Default exponent cap per prime: the maximum realized by the constructed
// solutions (n-2 for q=3, n-3 for q=5, (n-3)/2 for q=7) plus one, so the
// cap itself is a tested hypothesis rather than an assumption.
int default_exponent_cap(int n, int q);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, std::uint64_t n)
      : std::runtime_error(std::move(what)), nodes(n) {}
  std::uint64_t nodes;
};

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

// All n-subsets of the pool (pairwise distinct) with reciprocal sum
// exactly 1, by DFS over the ascending pool with exact rational pruning:
// a branch dies when the partial sum exceeds 1 or when even (remaining
// slots) copies of the next candidate's reciprocal cannot reach 1.
std::vector<SolutionSet> restricted_brute_force(
    int n, int q, int max_b, std::uint64_t budget = kDefaultBudget);

// All solutions of 1/x_1 + ... + 1/x_n = 1 with x_1 <= ... <= x_n
// (strictly increasing when `distinct`), n <= 7.
std::vector<SolutionSet> general_enumerate(
    int n, bool distinct, std::uint64_t budget = kDefaultBudget);

}  // namespace unitsum::oracle
