#include "unitsum/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace unitsum::analysis {

std::string ValidationReport::to_json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["sum_ok"] = sum_ok;
  doc["sum"] = numerator(sum).str() + "/" + denominator(sum).str();
  if (distinct_ok) doc["distinct_ok"] = *distinct_ok;
  if (form_ok) doc["form_ok"] = *form_ok;
  doc["pass"] = pass();
  return doc.dump();
}

ValidationReport validate_solution(const SolutionSet& s, bool check_distinct,
                                   std::optional<FormConstraint> form) {
  ValidationReport report;
  report.n = s.size();
  report.sum = reciprocal_sum(s.values);
  report.sum_ok = report.sum == 1;
  if (check_distinct) {
    std::set<Int> seen(s.values.begin(), s.values.end());
    report.distinct_ok = seen.size() == s.values.size();
  }
  if (form) {
    bool ok = true;
    for (const Int& v : s.values) {
      Int r = v;
      int a = 0;
      while (r % 2 == 0) {
        r /= 2;
        ++a;
      }
      while (r % form->q == 0) r /= form->q;
      if (r != 1 || a > form->max_a) {
        ok = false;
        break;
      }
    }
    report.form_ok = ok;
  }
  return report;
}

PadicCheckResult padic_check(const SolutionSet& s, const Int& p) {
  if (!is_prime(p)) throw std::domain_error("padic_check: p is not prime");
  PadicCheckResult result;
  result.profile.p = p;

  std::vector<std::uint32_t> vals;
  vals.reserve(s.values.size());
  std::uint32_t alpha = 0;
  for (const Int& v : s.values) {
    std::uint32_t e = valuation(v, p).value();
    vals.push_back(e);
    alpha = std::max(alpha, e);
  }
  result.profile.alpha = alpha;
  result.divides_any = alpha > 0;

  Int p_alpha = 1;
  for (std::uint32_t i = 0; i < alpha; ++i) p_alpha *= p;
  std::uint32_t max_other = 0;
  bool max_other_unique = false;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (vals[i] == alpha) {
      result.profile.occurrences.push_back(i);
      result.profile.cofactors.push_back(s.values[i] / p_alpha);
    } else if (vals[i] > max_other) {
      max_other = vals[i];
      max_other_unique = true;
    } else if (vals[i] == max_other && max_other > 0) {
      max_other_unique = false;
    }
  }
  result.profile.s = static_cast<std::uint32_t>(result.profile.occurrences.size());

  const std::uint32_t occ = result.profile.s;
  result.cor2 = !result.divides_any || occ >= 2;

  if (result.divides_any && occ >= 2) {
    // sigma_{s-1} of the cofactors is divisible by p^(alpha - M).
    Int sigma = elementary_symmetric(occ - 1, result.profile.cofactors);
    std::uint32_t v_sigma = valuation(sigma, p).value();
    result.cor3 = v_sigma >= alpha - max_other;
    if (max_other_unique && max_other > 0) {
      result.cor3_equality = v_sigma == alpha - max_other;
    }
    // Every leave-one-out subset has sigma_{s-2} coprime to p.
    bool cor4 = true;
    for (std::size_t skip = 0; skip < result.profile.cofactors.size(); ++skip) {
      std::vector<Int> subset;
      for (std::size_t i = 0; i < result.profile.cofactors.size(); ++i) {
        if (i != skip) subset.push_back(result.profile.cofactors[i]);
      }
      if (elementary_symmetric(occ - 2, subset) % p == 0) {
        cor4 = false;
        break;
      }
    }
    result.cor4 = cor4;
  } else {
    result.cor3 = true;
    result.cor4 = true;
  }

  if (p == 2 && s.size() == 9 && s.distinct && result.divides_any) {
    result.lemma2 = occ % 2 == 0;
  }
  return result;
}

ArithmeticalStructure to_structure(const SolutionSet& s) {
  ValidationReport check = validate_solution(s, false);
  if (!check.sum_ok) {
    throw std::domain_error("to_structure: reciprocal sum is not 1");
  }
  Int l = 1;
  for (const Int& v : s.values) l = boost::multiprecision::lcm(l, v);
  ArithmeticalStructure st;
  st.r.reserve(s.values.size());
  Int g = 0;
  for (const Int& v : s.values) {
    st.r.push_back(l / v);
    g = boost::multiprecision::gcd(g, st.r.back());
  }
  for (Int& r : st.r) r /= g;
  Int total = 0;
  for (const Int& r : st.r) total += r;
  st.d.reserve(st.r.size());
  for (const Int& r : st.r) {
    Int num = total - r;
    if (num % r != 0) {
      throw std::logic_error("to_structure: divisor identity violated");
    }
    st.d.push_back(num / r);
  }
  // (diag(d) - A) r = 0 on K_n, entrywise.
  for (std::size_t i = 0; i < st.r.size(); ++i) {
    if (st.d[i] * st.r[i] != total - st.r[i]) {
      throw std::logic_error("to_structure: matrix identity violated");
    }
  }
  return st;
}

std::vector<Int> greedy_expand(const Rational& r) {
  if (r <= 0 || r > 1) throw std::domain_error("greedy_expand: need 0 < r <= 1");
  std::vector<Int> out;
  Rational rest = r;
  while (rest != 0) {
    Int num = numerator(rest);
    Int den = denominator(rest);
    Int c = (den + num - 1) / num;  // ceil(den/num)
    out.push_back(c);
    rest -= Rational(1, c);
  }
  return out;
}

std::vector<Int> identity_expand(const Int& x, Identity id) {
  if (x < 1) throw std::domain_error("identity_expand: x must be positive");
  switch (id) {
    case Identity::FourTerm:
      if (x % 4 != 0) {
        throw std::domain_error("identity_expand: four-term identity needs 4 | x");
      }
      return {5 * x / 4, 10 * x, 15 * x, 30 * x};
    case Identity::TwoTerm:
      if (x % 2 != 0) {
        throw std::domain_error("identity_expand: two-term identity needs 2 | x");
      }
      return {3 * x / 2, 3 * x};
  }
  throw std::logic_error("identity_expand: unknown identity");
}

std::vector<Int> expand_element(const std::vector<Int>& values, std::size_t idx,
                                Identity id) {
  if (idx >= values.size()) {
    throw std::domain_error("expand_element: index out of range");
  }
  std::vector<Int> out;
  out.reserve(values.size() + 3);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != idx) out.push_back(values[i]);
  }
  for (const Int& v : identity_expand(values[idx], id)) out.push_back(v);
  return out;
}

}  // namespace unitsum::analysis
