#include "unitsum/automaton.hpp"

#include <future>
#include <stdexcept>
#include <string>

namespace unitsum::automaton {

namespace {

constexpr NCond eq(int a) { return {NCond::Kind::Exact, a, 0}; }
constexpr NCond one_of(int a, int b) { return {NCond::Kind::OneOf, a, b}; }
constexpr NCond gt(int a) { return {NCond::Kind::Greater, a, 0}; }

using enum Order;
constexpr State S1 = State::One;
constexpr State S2 = State::Two;

std::vector<TransitionRule> build_table() {
  std::vector<TransitionRule> t;
  auto leaf = [&](State s, std::optional<Order> o, NCond c) {
    t.push_back({s, o, c, true, {}});
  };
  auto rule = [&](State s, Order o, NCond c, std::vector<Child> ch) {
    t.push_back({s, o, c, false, std::move(ch)});
  };

  leaf(S1, std::nullopt, eq(4));
  leaf(S2, std::nullopt, eq(4));
  rule(S1, Triangle, eq(5), {{S1, -1, Triangle}});
  rule(S1, Square, eq(5), {{S2, -1, Asterisk}});
  rule(S2, Asterisk, eq(5), {{S2, -1, Asterisk}});
  leaf(S2, Diamond, eq(5));
  leaf(S2, RedStarTwo, eq(5));
  leaf(S2, RedStarThree, eq(5));
  rule(S2, Diamond, eq(6), {{S1, -2, Triangle}});
  leaf(S1, StarOne, eq(6));
  leaf(S2, RedStarTwo, eq(6));
  rule(S2, RedStarThree, eq(6), {{S1, -2, Triangle}});
  rule(S1, Triangle, eq(6), {{S1, -1, Triangle}, {S1, -1, Square}});
  rule(S2, Diamond, eq(7), {{S1, -2, Triangle}, {S1, -2, Square}});
  leaf(S1, StarOne, eq(7));
  rule(S2, RedStarThree, eq(7), {{S1, -2, Triangle}, {S1, -2, Square}});
  rule(S1, Triangle, one_of(7, 8),
       {{S1, -1, Triangle}, {S1, -1, Square}, {S1, -1, StarOne}});
  leaf(S1, StarTwo, eq(8));
  leaf(S1, StarThree, eq(8));
  rule(S2, Diamond, one_of(8, 9),
       {{S1, -2, Triangle}, {S1, -2, Square}, {S1, -2, StarOne}});
  rule(S2, RedStarThree, one_of(8, 9),
       {{S1, -2, Triangle}, {S1, -2, Square}, {S1, -2, StarOne}});
  leaf(S1, StarTwo, eq(9));
  leaf(S1, StarThree, eq(9));
  rule(S1, StarThree, eq(10), {{S1, -5, Triangle}, {S1, -5, Square}});
  rule(S1, StarThree, one_of(11, 12),
       {{S1, -5, Triangle}, {S1, -5, Square}, {S1, -5, StarOne}});
  rule(S1, Triangle, gt(7),
       {{S1, -1, Triangle},
        {S1, -1, Square},
        {S1, -1, StarOne},
        {S1, -1, StarTwo},
        {S1, -1, StarThree}});
  rule(S2, Asterisk, gt(5), {{S2, -1, Asterisk}, {S2, -1, Diamond}});
  rule(S2, Diamond, gt(9),
       {{S1, -2, Triangle},
        {S1, -2, Square},
        {S1, -2, StarOne},
        {S1, -2, StarTwo},
        {S1, -2, StarThree}});
  rule(S1, Square, gt(5), {{S2, -1, Asterisk}, {S2, -1, Diamond}});
  rule(S1, StarOne, gt(7), {{S2, -3, Asterisk}, {S2, -3, Diamond}});
  rule(S1, StarTwo, gt(9),
       {{S2, -5, Asterisk},
        {S2, -5, Diamond},
        {S2, -5, RedStarTwo},
        {S2, -5, RedStarThree}});
  rule(S1, StarThree, gt(12),
       {{S1, -5, Triangle},
        {S1, -5, Square},
        {S1, -5, StarOne},
        {S1, -5, StarTwo},
        {S1, -5, StarThree}});
  rule(S2, RedStarTwo, gt(6),
       {{S2, -2, Asterisk},
        {S2, -2, Diamond},
        {S2, -2, RedStarTwo},
        {S2, -2, RedStarThree}});
  rule(S2, RedStarThree, gt(9),
       {{S1, -2, Triangle},
        {S1, -2, Square},
        {S1, -2, StarOne},
        {S1, -2, StarTwo},
        {S1, -2, StarThree}});
  return t;
}

}  // namespace

std::string_view to_string(Order o) {
  switch (o) {
    case Triangle: return "Triangle";
    case Square: return "Square";
    case Asterisk: return "Asterisk";
    case Diamond: return "Diamond";
    case StarOne: return "Starone";
    case StarTwo: return "Startwo";
    case StarThree: return "Starthree";
    case RedStarTwo: return "RedStartwo";
    case RedStarThree: return "RedStarthree";
  }
  return "?";
}

std::optional<Order> order_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    Order o = static_cast<Order>(i);
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

State home_state(Order o) {
  switch (o) {
    case Triangle:
    case Square:
    case StarOne:
    case StarTwo:
    case StarThree:
      return State::One;
    default:
      return State::Two;
  }
}

bool compatible(State s, Order o) { return home_state(o) == s; }

const std::vector<TransitionRule>& transition_table() {
  static const std::vector<TransitionRule> table = build_table();
  return table;
}

int match_rule(State s, int n, Order o) {
  const auto& table = transition_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const TransitionRule& r = table[i];
    if (r.state != s) continue;
    if (r.order && *r.order != o) continue;
    if (!r.cond.matches(n)) continue;
    return static_cast<int>(i);
  }
  return -1;
}

Step transitions(State s, int n, Order o) {
  int idx = match_rule(s, n, o);
  if (idx < 0) {
    throw std::domain_error("transitions: no rule for (" +
                            std::to_string(static_cast<int>(s)) + "," +
                            std::to_string(n) + "," +
                            std::string(to_string(o)) + ")");
  }
  const TransitionRule& r = transition_table()[static_cast<std::size_t>(idx)];
  if (r.leaf) return Leaf{};
  std::vector<Transition> out;
  out.reserve(r.children.size());
  for (const Child& c : r.children) out.push_back({c.state, n + c.dn, c.order});
  return out;
}

LeafCounter::LeafCounter(int max_n) : max_n_(max_n) {
  if (max_n < 4) throw std::domain_error("LeafCounter: max_n < 4");
  memo_.assign(2 * kOrderCount * static_cast<std::size_t>(max_n + 1), 0);
}

std::uint64_t& LeafCounter::slot(State s, Order o, int n) {
  std::size_t si = (s == State::One) ? 0 : 1;
  std::size_t oi = static_cast<std::size_t>(o);
  return memo_[(si * kOrderCount + oi) * static_cast<std::size_t>(max_n_ + 1) +
               static_cast<std::size_t>(n)];
}

std::uint64_t LeafCounter::count(State s, int n, Order o) {
  if (n < 4 || n > max_n_) {
    throw std::domain_error("LeafCounter: n out of range");
  }
  std::uint64_t& cached = slot(s, o, n);
  if (cached != 0) return cached;
  Step step = transitions(s, n, o);
  std::uint64_t total = 0;
  if (std::holds_alternative<Leaf>(step)) {
    total = 1;
  } else {
    for (const Transition& t : std::get<std::vector<Transition>>(step)) {
      total += count(t.state, t.n, t.order);
    }
  }
  cached = total;
  return total;
}

std::array<std::uint64_t, 7> per_order_counts(int n, int max_n) {
  if (n < 9) throw std::domain_error("per_order_counts: n must be >= 9");
  LeafCounter counter(max_n);
  std::array<std::uint64_t, 7> out{};
  for (std::size_t i = 0; i < kTopLevel.size(); ++i) {
    Order o = kTopLevel[i];
    out[i] = counter.count(home_state(o), n, o);
  }
  return out;
}

std::uint64_t count_total(int n, int threads, int max_n) {
  if (n < 9) throw std::domain_error("count_total: n must be >= 9");
  if (n > max_n) throw std::domain_error("count_total: n exceeds the configured limit");
  if (threads <= 1) {
    auto counts = per_order_counts(n, max_n);
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
  }
  std::vector<std::future<std::uint64_t>> futures;
  futures.reserve(kTopLevel.size());
  for (Order o : kTopLevel) {
    futures.push_back(std::async(std::launch::async, [o, n, max_n] {
      LeafCounter counter(max_n);
      return counter.count(home_state(o), n, o);
    }));
  }
  std::uint64_t total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

}  // namespace unitsum::automaton
