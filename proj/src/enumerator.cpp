#include "unitsum/enumerator.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <variant>

namespace unitsum::enumerator {

namespace {

Emission lit(int v) { return {Emission::Kind::Literal, v, 0, 0}; }
Emission def(int coef, int tag_delta = 0) {
  return {Emission::Kind::Deferred, 0, coef, tag_delta};
}

std::vector<EmissionRule> build_table() {
  std::vector<EmissionRule> t;
  auto leaf = [&](std::vector<Emission> e, int offset) {
    t.push_back({std::move(e), {}, offset});
  };
  auto rule = [&](std::vector<Emission> e, std::vector<int> deltas) {
    t.push_back({std::move(e), std::move(deltas), -1});
  };

  // Aligned index-for-index with automaton::transition_table().
  leaf({lit(2), lit(3)}, 1);                      // (1,_,n=4)
  leaf({lit(2), lit(4)}, 0);                      // (2,_,n=4)
  rule({def(1)}, {1});                            // (1,Triangle,n=5)
  rule({def(4)}, {1});                            // (1,Square,n=5)
  rule({def(2)}, {1});                            // (2,Asterisk,n=5)
  leaf({lit(2), def(1), def(4)}, 1);              // (2,Diamond,n=5)
  leaf({lit(4), def(1), def(2)}, 1);              // (2,RedStartwo,n=5)
  // (2,RedStarthree,n=5): emits the 2*p,4*p suffix pair like every other
  // RedStarthree case. The source program's 1*p,2*p pair here yields sets
  // with reciprocal sum 5/4.
  leaf({lit(2), def(2), def(4)}, 1);
  rule({def(1), def(4)}, {1});                    // (2,Diamond,n=6)
  leaf({lit(4), def(1), def(2), def(4)}, 1);      // (1,Starone,n=6)
  rule({def(1)}, {1, 1});                         // (1,Triangle,n=6)
  leaf({lit(2), lit(4), def(1), def(2)}, 2);      // (2,RedStartwo,n=6)
  rule({def(2), def(4)}, {1});                    // (2,RedStarthree,n=6)
  rule({def(1), def(4)}, {1, 1});                 // (2,Diamond,n=7)
  leaf({lit(2), lit(4), def(1), def(2), def(4)}, 2);  // (1,Starone,n=7)
  rule({def(2), def(4)}, {1, 1});                 // (2,RedStarthree,n=7)
  rule({def(1)}, {1, 1, 1});                      // (1,Triangle,n=7|8)
  leaf({lit(4), def(1, 1), def(2, 1), def(1), def(2), def(4)}, 2);  // (1,Startwo,n=8)
  leaf({lit(2), def(2, 1), def(4, 1), def(1), def(2), def(4)}, 2);  // (1,Starthree,n=8)
  rule({def(1), def(4)}, {1, 1, 1});              // (2,Diamond,n=8|9)
  rule({def(2), def(4)}, {1, 1, 1});              // (2,RedStarthree,n=8|9)
  leaf({lit(2), lit(4), def(1, 1), def(2, 1), def(1), def(2), def(4)}, 3);  // (1,Startwo,n=9)
  leaf({lit(2), lit(3), def(2, 1), def(4, 1), def(1), def(2), def(4)}, 3);  // (1,Starthree,n=9)
  rule({def(2, 1), def(4, 1), def(1), def(2), def(4)}, {2, 2});       // (1,Starthree,n=10)
  rule({def(2, 1), def(4, 1), def(1), def(2), def(4)}, {2, 2, 2});    // (1,Starthree,n=11|12)
  rule({def(1)}, {1, 1, 1, 1, 1});                // (1,Triangle,n>7)
  rule({def(2)}, {1, 1});                         // (2,Asterisk,n>5)
  rule({def(1), def(4)}, {1, 1, 1, 1, 1});        // (2,Diamond,n>9)
  rule({def(4)}, {1, 1});                         // (1,Square,n>5)
  rule({def(1), def(2), def(4)}, {2, 2});         // (1,Starone,n>7)
  rule({def(1, 1), def(2, 1), def(1), def(2), def(4)}, {3, 3, 2, 2});  // (1,Startwo,n>9)
  rule({def(2, 1), def(4, 1), def(1), def(2), def(4)}, {2, 2, 2, 2, 2});  // (1,Starthree,n>12)
  rule({def(1), def(2)}, {2, 2, 1, 1});           // (2,RedStartwo,n>6)
  rule({def(2), def(4)}, {1, 1, 1, 1, 1});        // (2,RedStarthree,n>9)
  return t;
}

Entry materialize_entry(const Emission& e, int counter) {
  if (e.kind == Emission::Kind::Literal) {
    return {Entry::Kind::Literal, Int(e.literal), 0, 0};
  }
  return {Entry::Kind::Deferred, Int(0), e.coef, counter + e.tag_delta};
}

Int entry_value(const Entry& entry, int top_exponent) {
  if (entry.kind == Entry::Kind::Literal) return entry.literal;
  int exp = top_exponent - entry.tag;
  if (exp < 0) {
    throw std::logic_error("resolve_leaf: negative exponent (emission table bug)");
  }
  return Int(entry.coef) * pow_int(Int(3), static_cast<unsigned>(exp));
}

struct Dfs {
  int target_n;
  std::vector<SolutionSet>* out;

  void run(State s, int n, Order o, PartialSolution partial) const {
    int idx = automaton::match_rule(s, n, o);
    if (idx < 0) {
      throw std::domain_error("enumerate: unreachable automaton case");
    }
    const auto& trule = automaton::transition_table()[static_cast<std::size_t>(idx)];
    const auto& erule = emission_table()[static_cast<std::size_t>(idx)];
    if (trule.leaf) {
      out->push_back(resolve_leaf(partial, erule));
      return;
    }
    PartialSolution next;
    next.entries.reserve(partial.entries.size() + erule.emissions.size());
    for (const Emission& e : erule.emissions) {
      next.entries.push_back(materialize_entry(e, partial.counter));
    }
    next.entries.insert(next.entries.end(), partial.entries.begin(),
                        partial.entries.end());
    for (std::size_t i = 0; i < trule.children.size(); ++i) {
      const auto& c = trule.children[i];
      next.counter = partial.counter + erule.child_counter_delta[i];
      run(c.state, n + c.dn, c.order, next);
    }
  }
};

}  // namespace

const std::vector<EmissionRule>& emission_table() {
  static const std::vector<EmissionRule> table = build_table();
  return table;
}

SolutionSet resolve_leaf(const PartialSolution& partial, const EmissionRule& rule) {
  if (rule.leaf_offset < 0) {
    throw std::logic_error("resolve_leaf: rule is not a leaf");
  }
  int top = partial.counter + rule.leaf_offset;
  SolutionSet s;
  s.prime = 3;
  s.distinct = true;
  s.values.reserve(rule.emissions.size() + partial.entries.size());
  for (const Emission& e : rule.emissions) {
    s.values.push_back(entry_value(materialize_entry(e, partial.counter), top));
  }
  for (const Entry& entry : partial.entries) {
    s.values.push_back(entry_value(entry, top));
  }
  return s;
}

std::vector<SolutionSet> enumerate_solutions(int n, int max_n) {
  if (n < 9 || n > max_n) {
    throw std::domain_error("enumerate: n out of range");
  }
  std::vector<SolutionSet> out;
  Dfs dfs{n, &out};
  for (Order o : automaton::kTopLevel) {
    State s = automaton::home_state(o);
    PartialSolution seed;
    seed.counter = 1;
    if (s == State::One) {
      seed.entries = {{Entry::Kind::Deferred, Int(0), 1, 0},
                      {Entry::Kind::Deferred, Int(0), 2, 0}};
    } else {
      seed.entries = {{Entry::Kind::Deferred, Int(0), 2, 0},
                      {Entry::Kind::Deferred, Int(0), 4, 0}};
    }
    dfs.run(s, n, o, std::move(seed));
  }
  return out;
}

std::size_t emit(int n, Format format, std::ostream& os, int max_n) {
  std::vector<SolutionSet> solutions = enumerate_solutions(n, max_n);
  switch (format) {
    case Format::Text:
      for (const SolutionSet& s : solutions) {
        os << '{';
        for (int i = 0; i < s.size(); ++i) {
          if (i) os << ',';
          os << s.values[static_cast<std::size_t>(i)];
        }
        os << "}\n";
      }
      os << "There are " << solutions.size() << " solutions\n";
      break;
    case Format::Json: {
      nlohmann::json doc;
      doc["n"] = n;
      doc["prime"] = 3;
      doc["count"] = solutions.size();
      auto& arr = doc["solutions"] = nlohmann::json::array();
      for (const SolutionSet& s : solutions) {
        nlohmann::json row = nlohmann::json::array();
        for (const Int& v : s.values) {
          row.push_back(static_cast<std::uint64_t>(v));
        }
        arr.push_back(std::move(row));
      }
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      for (const SolutionSet& s : solutions) {
        for (int i = 0; i < s.size(); ++i) {
          if (i) os << ',';
          os << s.values[static_cast<std::size_t>(i)];
        }
        os << '\n';
      }
      break;
  }
  return solutions.size();
}

}  // namespace unitsum::enumerator
