#include <doctest.h>

#include "unitsum/automaton.hpp"
#include "unitsum/recurrence.hpp"
#include "test_util.hpp"

#include <fstream>
#include <map>
#include <string>

using namespace unitsum::automaton;

namespace {

std::vector<Transition> children_of(State s, int n, Order o) {
  Step step = transitions(s, n, o);
  REQUIRE(std::holds_alternative<std::vector<Transition>>(step));
  return std::get<std::vector<Transition>>(step);
}

bool is_leaf(State s, int n, Order o) {
  return std::holds_alternative<Leaf>(transitions(s, n, o));
}

// Memoization-free reference walker over the public transition relation.
std::uint64_t count_plain(State s, int n, Order o) {
  Step step = transitions(s, n, o);
  if (std::holds_alternative<Leaf>(step)) return 1;
  std::uint64_t total = 0;
  for (const auto& t : std::get<std::vector<Transition>>(step)) {
    total += count_plain(t.state, t.n, t.order);
  }
  return total;
}

std::map<int, std::uint64_t> read_count_table() {
  std::ifstream in(testutil::golden_dir() / "leaf_counts.txt");
  REQUIRE(in.good());
  std::map<int, std::uint64_t> table;
  std::string line;
  while (std::getline(in, line)) {
    auto comma = line.find(',');
    table[std::stoi(line.substr(1, comma - 1))] =
        std::stoull(line.substr(comma + 1, line.size() - comma - 2));
  }
  return table;
}

}  // namespace

TEST_CASE("transition examples") {
  CHECK(is_leaf(State::One, 4, Order::Triangle));
  CHECK(is_leaf(State::Two, 5, Order::Diamond));
  CHECK(children_of(State::One, 9, Order::Triangle) ==
        std::vector<Transition>{{State::One, 8, Order::Triangle},
                                {State::One, 8, Order::Square},
                                {State::One, 8, Order::StarOne},
                                {State::One, 8, Order::StarTwo},
                                {State::One, 8, Order::StarThree}});
  CHECK(children_of(State::One, 5, Order::Square) ==
        std::vector<Transition>{{State::Two, 4, Order::Asterisk}});
}

TEST_CASE("overlapping Triangle guards resolve by first match") {
  // n=8 hits the "n=7 or n=8" case (three children), not "n>7" (five).
  CHECK(children_of(State::One, 8, Order::Triangle).size() == 3);
  CHECK(children_of(State::One, 9, Order::Triangle).size() == 5);
}

TEST_CASE("incompatible or unreachable cases fail like the source") {
  CHECK_THROWS_AS(transitions(State::One, 9, Order::Asterisk), std::domain_error);
  CHECK_THROWS_AS(transitions(State::Two, 9, Order::Triangle), std::domain_error);
  CHECK_THROWS_AS(transitions(State::One, 3, Order::Triangle), std::domain_error);
  CHECK_THROWS_AS(transitions(State::One, 5, Order::StarOne), std::domain_error);
}

TEST_CASE("every child strictly decreases n") {
  for (const TransitionRule& rule : transition_table()) {
    for (const Child& c : rule.children) CHECK(c.dn < 0);
  }
}

TEST_CASE("leaf counting") {
  LeafCounter counter;
  CHECK(counter.count(State::One, 4, Order::Triangle) == 1);
  CHECK(count_total(9) == 52);
  CHECK(count_total(22) == 228102);
  CHECK_THROWS_AS(count_total(8), std::domain_error);
  CHECK_THROWS_AS(count_total(41), std::domain_error);
  // A raised cap extends the range; the recurrence is the cross-check.
  CHECK(count_total(41, 1, 45) == unitsum::recurrence::recurrence_total(41));
}

TEST_CASE("counts match the published table for n=9..35") {
  auto table = read_count_table();
  REQUIRE(table.size() == 27);
  for (const auto& [n, expected] : table) {
    CHECK(count_total(n) == expected);
  }
}

TEST_CASE("memoized and plain counting agree") {
  LeafCounter counter;
  for (int n = 9; n <= 14; ++n) {
    for (Order o : kTopLevel) {
      State s = home_state(o);
      CHECK(counter.count(s, n, o) == count_plain(s, n, o));
    }
  }
}

TEST_CASE("per-order counts sum to the total and match the recurrence") {
  for (int n = 9; n <= 25; ++n) {
    auto counts = per_order_counts(n);
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    CHECK(sum == count_total(n));

    auto v = unitsum::recurrence::count_vector(n);
    // kTopLevel order: Triangle, Square, Starone, Startwo, Starthree,
    // Asterisk, Diamond.
    CHECK(counts[0] == v.tri);
    CHECK(counts[1] == v.sq);
    CHECK(counts[2] == v.st1);
    CHECK(counts[3] == v.st2);
    CHECK(counts[4] == v.st);
    CHECK(counts[5] == v.ast);
    CHECK(counts[6] == v.dia);
  }
}

TEST_CASE("parallel counting agrees with sequential") {
  CHECK(count_total(20, 7) == count_total(20));
  CHECK(count_total(9, 4) == 52);
}
