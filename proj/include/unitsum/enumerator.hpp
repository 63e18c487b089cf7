#pragma once

#include "unitsum/automaton.hpp"
#include "unitsum/core.hpp"

#include <iosfwd>
#include <vector>

namespace unitsum::enumerator {

using automaton::Order;
using automaton::State;

// One element of a solution under construction: a settled integer, or a
// coefficient times a power of three whose exponent stays open until the
// leaf fixes the top 3-valuation A. A Deferred(coef, tag) resolves to
// coef * 3^(A - tag).
struct Entry {
  enum class Kind : std::uint8_t { Literal, Deferred };
  Kind kind;
  Int literal;
  int coef = 0;
  int tag = 0;
};

// The list under construction plus the running exponent bookkeeper.
// Entries are kept in final output order: the most recent rule's
// emissions first, the root seed pair last.
struct PartialSolution {
  std::vector<Entry> entries;
  int counter = 1;
};

struct Emission {
  enum class Kind : std::uint8_t { Literal, Deferred };
  Kind kind;
  int literal = 0;
  int coef = 0;
  int tag_delta = 0;  // tag = counter + tag_delta at firing time
};

// One emission rule per transition-table guard (aligned by index).
// Internal rules carry one counter increment per child; leaf rules carry
// the resolution offset so that A = counter + leaf_offset.
struct EmissionRule {
  std::vector<Emission> emissions;
  std::vector<int> child_counter_delta;
  int leaf_offset = -1;
};

const std::vector<EmissionRule>& emission_table();

// Materializes a partial at a leaf rule: prepends the rule's emissions
// (tagged with the current counter), fixes A = counter + offset, and
// expands every deferred entry. Throws std::logic_error if any exponent
// would be negative (a transcription bug in the tables, not user error).
SolutionSet resolve_leaf(const PartialSolution& partial, const EmissionRule& rule);

inline constexpr int kDefaultMaxEnumN = 17;

// All q=3 solutions at n, depth-first, top-level orders in the fixed
// sequence Triangle, Square, Starone, Startwo, Starthree, Asterisk,
// Diamond.
std::vector<SolutionSet> enumerate_solutions(int n, int max_n = kDefaultMaxEnumN);

enum class Format { Text, Json, Csv };

// Writes the enumeration to `os`; returns the number of solutions.
// Text format matches the search program's output: one "{v1,...,vn}"
// line per solution, then "There are N solutions".
std::size_t emit(int n, Format format, std::ostream& os,
                 int max_n = kDefaultMaxEnumN);

}  // namespace unitsum::enumerator
