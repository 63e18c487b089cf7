#include "unitsum/recurrence.hpp"

#include "unitsum/automaton.hpp"

#include <stdexcept>

namespace unitsum::recurrence {

namespace {

// Table of CountVectors for 3..n; indices below 3 read as all-zero.
std::vector<CountVector> table_up_to(int n) {
  std::vector<CountVector> table(static_cast<std::size_t>(n) + 1);
  auto at = [&table](int k) -> CountVector {
    if (k < 3) return {};
    return table[static_cast<std::size_t>(k)];
  };
  for (int m = 3; m <= n; ++m) {
    CountVector v;
    v.ast = at(m - 1).ast + at(m - 1).dia + (m == 4 ? 1 : 0);
    v.tri = at(m - 1).tri + at(m - 1).sq + at(m - 1).st1 + at(m - 1).st2 +
            at(m - 1).st + (m == 3 ? 1 : 0);
    v.sq = at(m - 1).ast + at(m - 1).dia;
    v.dia = at(m - 2).tri + at(m - 2).sq + at(m - 2).st1 + at(m - 2).st2 +
            at(m - 2).st;
    v.st1 = at(m - 3).ast + at(m - 3).dia + (m == 6 ? 1 : 0);
    v.st2 = at(m - 5).ast + at(m - 5).dia + at(m - 5).t + at(m - 5).p +
            (m == 8 ? 1 : 0);
    v.st = at(m - 5).tri + at(m - 5).sq + at(m - 5).st1 + at(m - 5).st2 +
           at(m - 5).st;
    v.t = at(m - 2).ast + at(m - 2).dia + at(m - 2).t + at(m - 2).p +
          (m == 5 ? 1 : 0);
    v.p = at(m - 2).tri + at(m - 2).sq + at(m - 2).st1 + at(m - 2).st2 +
          at(m - 2).st;
    table[static_cast<std::size_t>(m)] = v;
  }
  return table;
}

struct NodeState {
  Int a2, a5, heart;
};

NodeState node_state(int tree, int depth) {
  if (tree != 1 && tree != 2) throw std::domain_error("node_count: tree must be 1 or 2");
  if (depth < 1) throw std::domain_error("node_count: depth must be >= 1");
  NodeState s{tree == 1 ? 1 : 0, tree == 2 ? 1 : 0, 0};
  for (int d = 2; d <= depth; ++d) {
    NodeState next;
    next.a2 = s.a2 + 3 * s.a5 + s.heart;
    next.a5 = s.a2 + 2 * s.a5 + s.heart;
    next.heart = s.a5 + s.heart;
    s = next;
  }
  return s;
}

}  // namespace

CountVector count_vector(int n) {
  if (n < 3) throw std::domain_error("count_vector: n must be >= 3");
  return table_up_to(n)[static_cast<std::size_t>(n)];
}

std::uint64_t recurrence_total(int n) {
  if (n < 9) throw std::domain_error("recurrence_total: n must be >= 9");
  CountVector v = count_vector(n);
  return v.tri + v.sq + v.ast + v.dia + v.st1 + v.st2 + v.st;
}

std::uint64_t theorem2_total(int n) {
  return recurrence_total(n) + (n % 2 == 1 ? 2 : 1);
}

Int node_count(int tree, int depth) {
  NodeState s = node_state(tree, depth);
  return 2 * s.a2 + 5 * s.a5 + 2 * s.heart;
}

DepthBounds depth_bounds(int n) {
  if (n < 9) throw std::domain_error("depth_bounds: n must be >= 9");
  DepthBounds b;
  switch (n % 5) {
    case 0: b.d1_min = n / 5;       b.d2_min = n / 5;       break;
    case 1: b.d1_min = (n + 4) / 5; b.d2_min = (n - 1) / 5; break;
    case 2: b.d1_min = (n + 3) / 5; b.d2_min = (n + 3) / 5; break;
    case 3: b.d1_min = (n + 2) / 5; b.d2_min = (n - 3) / 5; break;
    case 4: b.d1_min = (n + 6) / 5; b.d2_min = (n + 1) / 5; break;
  }
  b.d_max = n - 3;
  b.lower = node_count(1, b.d1_min) + node_count(2, b.d2_min);
  b.upper = node_count(1, b.d_max) + node_count(2, b.d_max);
  return b;
}

BoundsDiagnostic bounds_diagnostic(int n) {
  BoundsDiagnostic d;
  d.n = n;
  d.bounds = depth_bounds(n);
  d.actual = automaton::count_total(n);
  Int actual = d.actual;
  d.lower_holds = d.bounds.lower <= actual;
  d.upper_holds = actual <= d.bounds.upper;
  d.alt_upper = node_count(1, n - 4) + node_count(2, n - 4);
  d.alt_upper_holds = actual <= d.alt_upper;
  return d;
}

std::vector<BoundsDiagnostic> bounds_report(int first_n, int last_n) {
  std::vector<BoundsDiagnostic> out;
  for (int n = first_n; n <= last_n; ++n) out.push_back(bounds_diagnostic(n));
  return out;
}

}  // namespace unitsum::recurrence
