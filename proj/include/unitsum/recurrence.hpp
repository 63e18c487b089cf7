#pragma once

#include "unitsum/core.hpp"

#include <cstdint>
#include <vector>

namespace unitsum::recurrence {

// Per-order solution counts at n unknowns: the order applied with n
// unknowns on the left, indexed (tri, sq, ast, dia, St1, St2, St, t, p).
struct CountVector {
  std::uint64_t tri = 0;
  std::uint64_t sq = 0;
  std::uint64_t ast = 0;
  std::uint64_t dia = 0;
  std::uint64_t st1 = 0;
  std::uint64_t st2 = 0;
  std::uint64_t st = 0;
  std::uint64_t t = 0;
  std::uint64_t p = 0;

  friend bool operator==(const CountVector&, const CountVector&) = default;
};

// Unique solution of the nine-equation recurrence system at n (n >= 3),
// computed bottom-up from the n=3 initial conditions.
CountVector count_vector(int n);

// tri + sq + ast + dia + St1 + St2 + St at n: the number of q=3 solutions
// in distinct integers of the form 2^a*3^b with a <= 2 (n >= 9).
std::uint64_t recurrence_total(int n);

// Total over all odd primes q: the q=3 count plus two when n is odd
// (U_n and V_n) or one when n is even (U_n only).
std::uint64_t theorem2_total(int n);

// Number of nodes N_i(d) at depth d of decision tree i (1 or 2), from the
// a_2/a_5/a_heart edge recurrences.
Int node_count(int tree, int depth);

struct DepthBounds {
  int d1_min = 0;
  int d2_min = 0;
  int d_max = 0;  // n - 3 in both trees, as stated
  Int lower;      // N_1(d1_min) + N_2(d2_min)
  Int upper;      // N_1(d_max) + N_2(d_max)
};

// Minimal/maximal leaf depths per residue of n mod 5 and the derived
// solution-count bounds (n >= 9).
DepthBounds depth_bounds(int n);

// Diagnostic record for one n: the bounds against the actual q=3 count.
// The statement's d_max = n-3 and the proof text's d = n-4 are both
// evaluated; violations are reported, never asserted.
struct BoundsDiagnostic {
  int n = 0;
  DepthBounds bounds;
  std::uint64_t actual = 0;
  bool lower_holds = false;
  bool upper_holds = false;
  Int alt_upper;              // with d_max = n - 4
  bool alt_upper_holds = false;
};

BoundsDiagnostic bounds_diagnostic(int n);
std::vector<BoundsDiagnostic> bounds_report(int first_n, int last_n);

}  // namespace unitsum::recurrence
