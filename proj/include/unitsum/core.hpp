#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace unitsum {

// All value-bearing arithmetic is exact. cpp_int/cpp_rational keep the
// library header-only; rationals are stored canonical (reduced, positive
// denominator).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int pow_int(const Int& base, unsigned exp);

bool is_prime(const Int& p);

// p-adic valuation carrier with the convention v_p(0) = +infinity kept as
// an explicit variant rather than a large sentinel number.
class Valuation {
 public:
  constexpr explicit Valuation(std::uint32_t v) : finite_(v) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !finite_.has_value(); }
  std::uint32_t value() const {
    if (!finite_) throw std::domain_error("valuation is infinite");
    return *finite_;
  }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr bool operator<(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.finite_ < *b.finite_;
  }

 private:
  constexpr Valuation() = default;
  std::optional<std::uint32_t> finite_;
};

// Largest e with p^e | x; v_p(0) = +infinity.
Valuation valuation(const Int& x, const Int& p);

// Exact reduced sum of 1/v over the list; empty list sums to 0/1.
Rational reciprocal_sum(const std::vector<Int>& values);

// sigma_k(values), the k-th elementary symmetric function.
Int elementary_symmetric(std::size_t k, const std::vector<Int>& values);

// A candidate denominator 2^a * q^b with q an odd prime. The value 1
// (a = b = 0) is excluded from every candidate set.
struct FactoredValue {
  int a = 0;
  int b = 0;
  int q = 3;

  Int value() const;
};

// Sums reciprocals of factored values over the common denominator
// 2^max_a * q^max_b instead of running pairwise gcd reductions.
Rational reciprocal_sum(const std::vector<FactoredValue>& values);

// An ordered candidate solution of 1/x_1 + ... + 1/x_n = 1.
struct SolutionSet {
  std::vector<Int> values;
  std::optional<int> prime;  // q when the set is in restricted 2^a*q^b form
  bool distinct = false;

  int size() const { return static_cast<int>(values.size()); }
};

}  // namespace unitsum
