#pragma once

#include "unitsum/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unitsum::analysis {

struct FormConstraint {
  int q = 3;      // odd prime base
  int max_a = 2;  // cap on the exponent of 2
};

// Per-criterion outcome of checking a candidate solution. Failures are
// report entries, never exceptions.
struct ValidationReport {
  int n = 0;
  bool sum_ok = false;
  Rational sum;
  std::optional<bool> distinct_ok;  // set when distinctness was requested
  std::optional<bool> form_ok;      // set when a form constraint was given

  bool pass() const {
    return sum_ok && distinct_ok.value_or(true) && form_ok.value_or(true);
  }
  std::string to_json() const;
};

ValidationReport validate_solution(const SolutionSet& s, bool check_distinct,
                                   std::optional<FormConstraint> form = {});

// Highest p-adic valuation among the x_i, its occurrences, and the
// cofactors x_i = p^alpha * x'_i at those occurrences.
struct PadicProfile {
  Int p;
  std::uint32_t alpha = 0;
  std::uint32_t s = 0;
  std::vector<std::size_t> occurrences;
  std::vector<Int> cofactors;
};

struct PadicCheckResult {
  PadicProfile profile;
  bool divides_any = false;
  // Highest power occurs at least twice whenever p divides some x_i.
  bool cor2 = false;
  // p^(alpha - M) divides sigma_{s-1} of the cofactors, where M is the
  // top valuation over the non-occurrence indices.
  bool cor3 = false;
  // Checked only when that maximum is unique and positive: the divisibility
  // holds with exact valuation alpha - M.
  std::optional<bool> cor3_equality;
  // Every (s-1)-subset of the cofactors has sigma_{s-2} coprime to p.
  bool cor4 = false;
  // p = 2, n = 9, distinct integers, some x_i even: s is even.
  std::optional<bool> lemma2;

  bool all_pass() const {
    return cor2 && cor3 && cor4 && cor3_equality.value_or(true) &&
           lemma2.value_or(true);
  }
};

PadicCheckResult padic_check(const SolutionSet& s, const Int& p);

// An arithmetical structure on the complete graph: d_i * r_i equals the
// sum of the other r_j, r positive with gcd 1.
struct ArithmeticalStructure {
  std::vector<Int> d;
  std::vector<Int> r;
};

// r_i = lcm(x)/x_i normalized by gcd; the defining identity is verified
// before returning (a violation signals a bug, not bad input).
ArithmeticalStructure to_structure(const SolutionSet& s);

// Greedy unit-fraction expansion of r in (0, 1]: strictly increasing
// denominators whose reciprocals sum exactly to r.
std::vector<Int> greedy_expand(const Rational& r);

enum class Identity {
  FourTerm,  // 1/a = 1/(5a/4) + 1/(10a) + 1/(15a) + 1/(30a), needs 4 | a
  TwoTerm,   // 1/a = 1/(3a/2) + 1/(3a), needs 2 | a
};

std::vector<Int> identity_expand(const Int& x, Identity id);

// Replaces values[idx] by its identity expansion, growing the solution by
// 3 (four-term) or 1 (two-term) elements.
std::vector<Int> expand_element(const std::vector<Int>& values, std::size_t idx,
                                Identity id);

}  // namespace unitsum::analysis
