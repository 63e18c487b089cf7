#include "unitsum/core.hpp"

#include <boost/integer/common_factor.hpp>

namespace unitsum {

Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Valuation valuation(const Int& x, const Int& p) {
  if (x < 0) throw std::domain_error("valuation: negative argument");
  if (!is_prime(p)) throw std::domain_error("valuation: p is not prime");
  if (x == 0) return Valuation::infinity();
  std::uint32_t e = 0;
  Int r = x;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  return Valuation(e);
}

Rational reciprocal_sum(const std::vector<Int>& values) {
  Rational sum = 0;
  for (const Int& v : values) {
    if (v < 1) throw std::domain_error("reciprocal_sum: values must be >= 1");
    sum += Rational(1, v);
  }
  return sum;
}

Int elementary_symmetric(std::size_t k, const std::vector<Int>& values) {
  if (k > values.size()) {
    throw std::domain_error("elementary_symmetric: degree exceeds list length");
  }
  // Coefficient of t^k in prod(1 + v*t).
  std::vector<Int> coef(k + 1);
  coef[0] = 1;
  for (const Int& v : values) {
    for (std::size_t j = std::min(k, coef.size() - 1); j >= 1; --j) {
      coef[j] += v * coef[j - 1];
    }
  }
  return coef[k];
}

Int FactoredValue::value() const {
  if (a < 0 || b < 0) throw std::domain_error("FactoredValue: negative exponent");
  if (q < 3 || q % 2 == 0 || !is_prime(Int(q))) {
    throw std::domain_error("FactoredValue: q must be an odd prime");
  }
  Int v = pow_int(Int(2), static_cast<unsigned>(a)) *
          pow_int(Int(q), static_cast<unsigned>(b));
  if (v < 2) throw std::domain_error("FactoredValue: the value 1 is excluded");
  return v;
}

Rational reciprocal_sum(const std::vector<FactoredValue>& values) {
  if (values.empty()) return Rational(0);
  int max_a = 0;
  int max_b = 0;
  const int q = values.front().q;
  for (const FactoredValue& fv : values) {
    if (fv.q != q) {
      // Mixed primes fall back to the generic path.
      std::vector<Int> ints;
      ints.reserve(values.size());
      for (const FactoredValue& g : values) ints.push_back(g.value());
      return reciprocal_sum(ints);
    }
    max_a = std::max(max_a, fv.a);
    max_b = std::max(max_b, fv.b);
  }
  // Common denominator 2^max_a * q^max_b.
  Int num = 0;
  for (const FactoredValue& fv : values) {
    num += pow_int(Int(2), static_cast<unsigned>(max_a - fv.a)) *
           pow_int(Int(q), static_cast<unsigned>(max_b - fv.b));
  }
  Int den = pow_int(Int(2), static_cast<unsigned>(max_a)) *
            pow_int(Int(q), static_cast<unsigned>(max_b));
  return Rational(num, den);
}

}  // namespace unitsum
