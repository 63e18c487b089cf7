#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace unitsum::automaton {

// State One: the solution suffix ends {3^a, 2*3^a}; state Two: it ends
// {2*3^a, 2^2*3^a}.
enum class State : std::uint8_t { One = 1, Two = 2 };

enum class Order : std::uint8_t {
  Triangle,
  Square,
  Asterisk,
  Diamond,
  StarOne,
  StarTwo,
  StarThree,
  RedStarTwo,
  RedStarThree,
};
inline constexpr std::size_t kOrderCount = 9;

std::string_view to_string(Order o);
std::optional<Order> order_from_string(std::string_view name);

// Triangle/Square/Star* fire from state One, the rest from state Two.
State home_state(Order o);
bool compatible(State s, Order o);

// The seven top-level invocations, in the output order of the search.
inline constexpr std::array<Order, 7> kTopLevel = {
    Order::Triangle, Order::Square,  Order::StarOne, Order::StarTwo,
    Order::StarThree, Order::Asterisk, Order::Diamond,
};

struct NCond {
  enum class Kind : std::uint8_t { Exact, OneOf, Greater };
  Kind kind;
  int a = 0;
  int b = 0;  // second alternative for OneOf

  bool matches(int n) const {
    switch (kind) {
      case Kind::Exact: return n == a;
      case Kind::OneOf: return n == a || n == b;
      case Kind::Greater: return n > a;
    }
    return false;
  }
};

struct Child {
  State state;
  int dn;  // n' = n + dn, always negative
  Order order;
};

// One guarded case of the transition function. Guards are evaluated in
// table order; the first match wins (Triangle at n=8 hits the "n=7 or
// n=8" case, not "n>7").
struct TransitionRule {
  State state;
  std::optional<Order> order;  // nullopt matches any order in `state`
  NCond cond;
  bool leaf = false;
  std::vector<Child> children;
};

const std::vector<TransitionRule>& transition_table();

// Index of the first matching rule, or -1 when no guard matches.
int match_rule(State s, int n, Order o);

struct Transition {
  State state;
  int n;
  Order order;

  friend bool operator==(const Transition&, const Transition&) = default;
};
struct Leaf {};
using Step = std::variant<Leaf, std::vector<Transition>>;

// First-match step of the transition relation; throws std::domain_error
// on an incompatible or unreachable (state, n, order).
Step transitions(State s, int n, Order o);

inline constexpr int kDefaultMaxN = 40;

// Memoized leaf counting. Subtree shape depends only on (state, n, order),
// so counts may be cached; enumeration must not be, because emissions
// differ along paths.
class LeafCounter {
 public:
  explicit LeafCounter(int max_n = kDefaultMaxN);

  std::uint64_t count(State s, int n, Order o);
  int max_n() const { return max_n_; }

 private:
  std::uint64_t& slot(State s, Order o, int n);

  int max_n_;
  std::vector<std::uint64_t> memo_;  // 0 = not yet computed
};

// Leaf counts of the seven top-level invocations at n, in kTopLevel order.
std::array<std::uint64_t, 7> per_order_counts(int n, int max_n = kDefaultMaxN);

// Total number of q=3 solutions at n (n >= 9). threads > 1 evaluates the
// seven top-level subtrees concurrently.
std::uint64_t count_total(int n, int threads = 1, int max_n = kDefaultMaxN);

}  // namespace unitsum::automaton
