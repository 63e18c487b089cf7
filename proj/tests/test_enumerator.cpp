#include <doctest.h>

#include "unitsum/analysis.hpp"
#include "unitsum/automaton.hpp"
#include "unitsum/enumerator.hpp"
#include "unitsum/families.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace unitsum;
using namespace unitsum::enumerator;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("emission table is aligned with the transition table") {
  const auto& trules = automaton::transition_table();
  const auto& erules = emission_table();
  REQUIRE(trules.size() == erules.size());
  for (std::size_t i = 0; i < trules.size(); ++i) {
    if (trules[i].leaf) {
      CHECK(erules[i].leaf_offset >= 0);
      CHECK(erules[i].child_counter_delta.empty());
    } else {
      CHECK(erules[i].leaf_offset == -1);
      CHECK(erules[i].child_counter_delta.size() == trules[i].children.size());
    }
  }
}

TEST_CASE("resolve_leaf materializes deferred entries") {
  // A single seed pair resolved at top exponent 1 gives {3, 6}.
  PartialSolution seed;
  seed.counter = 1;
  seed.entries = {{Entry::Kind::Deferred, Int(0), 1, 0},
                  {Entry::Kind::Deferred, Int(0), 2, 0}};
  EmissionRule bare{{}, {}, 0};
  SolutionSet s = resolve_leaf(seed, bare);
  CHECK(s.values == ints({3, 6}));

  EmissionRule broken{{}, {}, -1};
  CHECK_THROWS_AS(resolve_leaf(seed, broken), std::logic_error);
}

TEST_CASE("first and last emitted solutions at n=9") {
  auto sols = enumerate_solutions(9);
  REQUIRE(sols.size() == 52);
  CHECK(sols.front().values == ints({2, 3, 9, 27, 81, 243, 729, 2187, 4374}));
  CHECK(sols.back().values == ints({2, 4, 9, 18, 36, 27, 108, 162, 324}));
}

TEST_CASE("enumeration matches the published lists line by line") {
  const std::size_t expected[] = {52, 100, 190, 362, 690};
  for (int n = 9; n <= 13; ++n) {
    auto sols = enumerate_solutions(n);
    auto golden = testutil::read_brace_lines(
        testutil::golden_dir() / ("solutions_q3_n" + std::to_string(n) + ".txt"));
    REQUIRE(sols.size() == expected[n - 9]);
    REQUIRE(golden.size() == sols.size());
    for (std::size_t i = 0; i < sols.size(); ++i) {
      CHECK(testutil::as_multiset(sols[i].values) ==
            testutil::as_multiset(golden[i]));
    }
  }
}

TEST_CASE("enumeration size equals the leaf count up to n=17") {
  for (int n = 9; n <= 17; ++n) {
    CHECK(enumerate_solutions(n).size() == automaton::count_total(n));
  }
}

TEST_CASE("every emitted set is a valid restricted solution") {
  for (int n : {9, 12}) {
    for (const SolutionSet& s : enumerate_solutions(n)) {
      auto report = analysis::validate_solution(
          s, true, analysis::FormConstraint{3, 2});
      CHECK(report.pass());
      CHECK(s.size() == n);
    }
  }
}

TEST_CASE("the all-Triangle path emits Z_1 first, the only top valuation 1") {
  for (int n = 9; n <= 13; ++n) {
    auto sols = enumerate_solutions(n);
    CHECK(sols.front().values == families::family_z1(n).values);
    int alpha2_one = 0;
    for (const SolutionSet& s : sols) {
      std::uint32_t alpha2 = 0;
      for (const Int& v : s.values) {
        alpha2 = std::max(alpha2, valuation(v, Int(2)).value());
      }
      if (alpha2 == 1) ++alpha2_one;
    }
    CHECK(alpha2_one == 1);
  }
}

TEST_CASE("the top 3-exponent over all solutions at n is n-2") {
  for (int n = 9; n <= 13; ++n) {
    std::uint32_t top = 0;
    for (const SolutionSet& s : enumerate_solutions(n)) {
      for (const Int& v : s.values) {
        top = std::max(top, valuation(v, Int(3)).value());
      }
    }
    CHECK(top == static_cast<std::uint32_t>(n - 2));
  }
}

TEST_CASE("enumerate rejects out-of-range sizes") {
  CHECK_THROWS_AS(enumerate_solutions(8), std::domain_error);
  CHECK_THROWS_AS(enumerate_solutions(18), std::domain_error);
  CHECK_NOTHROW(enumerate_solutions(18, 20));
}

TEST_CASE("text emitter is line-compatible with the published output") {
  std::ostringstream os;
  std::size_t count = emit(9, Format::Text, os);
  CHECK(count == 52);
  std::istringstream in(os.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 53);
  CHECK(lines.front() == "{2,3,9,27,81,243,729,2187,4374}");
  CHECK(lines.back() == "There are 52 solutions");
}

TEST_CASE("json and csv emitters") {
  std::ostringstream js;
  emit(9, Format::Json, js);
  const std::string doc = js.str();
  CHECK(doc.find("\"n\": 9") != std::string::npos);
  CHECK(doc.find("\"prime\": 3") != std::string::npos);
  CHECK(doc.find("\"count\": 52") != std::string::npos);

  std::ostringstream cs;
  emit(9, Format::Csv, cs);
  std::istringstream in(cs.str());
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 52);
}
