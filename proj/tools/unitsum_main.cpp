// Command-line frontend: counting, enumeration, verification, oracle runs,
// families, depth bounds, and unit-fraction expansion utilities.

#include <CLI11.hpp>
#include <json.hpp>

#include "unitsum/analysis.hpp"
#include "unitsum/automaton.hpp"
#include "unitsum/core.hpp"
#include "unitsum/enumerator.hpp"
#include "unitsum/families.hpp"
#include "unitsum/oracle.hpp"
#include "unitsum/recurrence.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using unitsum::Int;
using unitsum::Rational;
using unitsum::SolutionSet;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Range {
  int first = 0;
  int last = 0;
};

Range parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    throw CLI::ValidationError("--range expects the form A..B");
  }
  Range r;
  r.first = std::stoi(text.substr(0, pos));
  r.last = std::stoi(text.substr(pos + 2));
  if (r.last < r.first) throw CLI::ValidationError("--range: B < A");
  return r;
}

std::vector<Int> parse_values(const std::string& text) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.emplace_back(tok);
  }
  return out;
}

std::string brace_line(const std::vector<Int>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << '}';
  return os.str();
}

std::set<std::multiset<Int>> as_family(const std::vector<SolutionSet>& sols) {
  std::set<std::multiset<Int>> out;
  for (const SolutionSet& s : sols) {
    out.insert(std::multiset<Int>(s.values.begin(), s.values.end()));
  }
  return out;
}

// Output sink: stdout by default, --out FILE otherwise.
struct Sink {
  std::string path;
  std::ofstream file;

  std::ostream& open() {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
  }
};

int run_count(int n, const std::string& range_text, int threads, int limit,
              Sink& sink) {
  std::ostream& os = sink.open();
  Range range = range_text.empty() ? Range{n, n} : parse_range(range_text);
  for (int m = range.first; m <= range.last; ++m) {
    os << '(' << m << ',' << unitsum::automaton::count_total(m, threads, limit)
       << ")\n";
  }
  return 0;
}

int run_enumerate(int n, const std::string& format, int limit, Sink& sink) {
  using unitsum::enumerator::Format;
  Format f = Format::Text;
  if (format == "json") {
    f = Format::Json;
  } else if (format == "csv") {
    f = Format::Csv;
  } else if (format != "text") {
    throw CLI::ValidationError("--format must be text, json or csv");
  }
  unitsum::enumerator::emit(n, f, sink.open(), limit);
  return 0;
}

int run_verify(const std::string& file, const std::string& values_text,
               bool distinct, int form_prime, int max_two_exp, Sink& sink) {
  std::ostream& os = sink.open();
  std::vector<SolutionSet> sets;
  if (!values_text.empty()) {
    SolutionSet s;
    s.values = parse_values(values_text);
    s.distinct = distinct;
    sets.push_back(std::move(s));
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "verify: cannot open " << file << "\n";
      return kExitFailure;
    }
    nlohmann::json doc = nlohmann::json::parse(in);
    if (form_prime == 0) form_prime = doc.value("prime", 0);
    for (const auto& row : doc.at("solutions")) {
      SolutionSet s;
      for (const auto& v : row) {
        // Accepts integers or decimal strings (for values past 2^53).
        if (v.is_string()) {
          s.values.emplace_back(v.get<std::string>());
        } else {
          s.values.emplace_back(v.get<std::int64_t>());
        }
      }
      s.distinct = distinct;
      sets.push_back(std::move(s));
    }
  }
  std::optional<unitsum::analysis::FormConstraint> form;
  if (form_prime != 0) form = {form_prime, max_two_exp};
  std::size_t failed = 0;
  for (const SolutionSet& s : sets) {
    auto report = unitsum::analysis::validate_solution(s, distinct, form);
    if (!report.pass()) ++failed;
    os << report.to_json() << '\n';
  }
  os << sets.size() << " solutions checked, " << failed << " failed\n";
  return failed == 0 ? 0 : kExitFailure;
}

int run_oracle(int n, int prime, int max_exp, std::uint64_t budget, Sink& sink) {
  std::ostream& os = sink.open();
  if (max_exp == 0) max_exp = unitsum::oracle::default_exponent_cap(n, prime);
  auto found = unitsum::oracle::restricted_brute_force(n, prime, max_exp, budget);
  for (const SolutionSet& s : found) os << brace_line(s.values) << '\n';
  os << "There are " << found.size() << " solutions\n";

  std::vector<SolutionSet> expected;
  std::string reference;
  if (prime == 3) {
    expected = unitsum::enumerator::enumerate_solutions(n);
    reference = "the search program";
  } else if (prime == 5) {
    expected = {unitsum::families::family_u(n)};
    reference = "the U family";
  } else if (prime == 7) {
    if (n % 2 == 1) expected = {unitsum::families::family_v(n)};
    reference = "the V family";
  } else {
    os << "no reference available for q=" << prime << '\n';
    return 0;
  }
  bool match = as_family(found) == as_family(expected);
  os << "comparison against " << reference << ": "
     << (match ? "match" : "MISMATCH") << '\n';
  return match ? 0 : kExitFailure;
}

int run_families(int n, bool full_catalog, Sink& sink) {
  std::ostream& os = sink.open();
  if (full_catalog) {
    const auto& catalog = unitsum::families::catalog_theorem1();
    for (const auto& entry : catalog.theorem1()) {
      os << entry.label << " = " << brace_line(entry.solution().values) << '\n';
    }
    for (const auto& entry : catalog.odd_distinct()) {
      os << entry.label << " = " << brace_line(entry.solution().values) << '\n';
    }
    return 0;
  }
  os << "U_" << n << " = " << brace_line(unitsum::families::family_u(n).values)
     << '\n';
  if (n % 2 == 1) {
    os << "V_" << n << " = "
       << brace_line(unitsum::families::family_v(n).values) << '\n';
  } else {
    os << "V_" << n << " : no solution (n even)\n";
  }
  os << "Z_1(" << n << ") = "
     << brace_line(unitsum::families::family_z1(n).values) << '\n';
  os << "total " << unitsum::recurrence::theorem2_total(n) << '\n';
  return 0;
}

int run_bounds(int n, const std::string& range_text, Sink& sink) {
  std::ostream& os = sink.open();
  Range range = range_text.empty() ? Range{n, n} : parse_range(range_text);
  for (int m = range.first; m <= range.last; ++m) {
    auto d = unitsum::recurrence::bounds_diagnostic(m);
    os << "n=" << m << " d_min=(" << d.bounds.d1_min << ',' << d.bounds.d2_min
       << ") d_max=" << d.bounds.d_max << " bounds=[" << d.bounds.lower << ", "
       << d.bounds.upper << "] actual=" << d.actual;
    if (d.lower_holds && d.upper_holds) {
      os << " verdict=holds";
    } else {
      os << " verdict=erratum(";
      if (!d.lower_holds) os << "lower";
      if (!d.upper_holds) os << (d.lower_holds ? "upper" : ",upper");
      os << ")";
    }
    os << " alt_upper(d=n-4)=" << d.alt_upper
       << (d.alt_upper_holds ? " holds" : " violated") << '\n';
  }
  return 0;
}

int run_expand(const std::string& greedy, const std::string& identity, Int x,
               Sink& sink) {
  std::ostream& os = sink.open();
  if (!greedy.empty()) {
    auto pos = greedy.find('/');
    Rational r = pos == std::string::npos
                     ? Rational(Int(greedy))
                     : Rational(Int(greedy.substr(0, pos)),
                                Int(greedy.substr(pos + 1)));
    os << brace_line(unitsum::analysis::greedy_expand(r)) << '\n';
    return 0;
  }
  using unitsum::analysis::Identity;
  Identity id;
  if (identity == "four") {
    id = Identity::FourTerm;
  } else if (identity == "two") {
    id = Identity::TwoTerm;
  } else {
    throw CLI::ValidationError("--identity must be four or two");
  }
  os << brace_line(unitsum::analysis::identity_expand(x, id)) << '\n';
  return 0;
}

int run_structure(const std::string& values_text, const std::string& label,
                  Sink& sink) {
  std::ostream& os = sink.open();
  SolutionSet s;
  if (!label.empty()) {
    const auto* entry = unitsum::families::catalog_theorem1().find(label);
    if (!entry) {
      std::cerr << "structure: unknown label " << label << '\n';
      return kExitFailure;
    }
    s = entry->solution();
  } else {
    s.values = parse_values(values_text);
  }
  auto st = unitsum::analysis::to_structure(s);
  os << "x = " << brace_line(s.values) << '\n';
  os << "r = " << brace_line(st.r) << '\n';
  os << "d = " << brace_line(st.d) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of 1 as a sum of n distinct unit fractions "
               "with denominators 2^a*q^b (q odd prime, a <= 2), and the "
               "matching arithmetical structures on the complete graph"};
  app.require_subcommand(1);

  Sink sink;
  app.add_option("--out", sink.path, "write output to a file instead of stdout");

  int n = 9;
  std::string range_text;
  int threads = 1;
  int count_limit = unitsum::automaton::kDefaultMaxN;
  auto* count = app.add_subcommand("count", "count the q=3 solutions per n");
  count->add_option("--n", n, "single size");
  count->add_option("--range", range_text, "range of sizes, A..B");
  count->add_option("--threads", threads, "parallel top-level subtrees");
  count->add_option("--limit", count_limit, "memoization size cap");

  int enum_n = 9;
  std::string format = "text";
  int enum_limit = unitsum::enumerator::kDefaultMaxEnumN;
  auto* enumerate = app.add_subcommand("enumerate", "list the q=3 solutions");
  enumerate->add_option("--n", enum_n, "number of unit fractions")->required();
  enumerate->add_option("--format", format, "text | json | csv");
  enumerate->add_option("--limit", enum_limit, "size cap");

  std::string verify_file;
  std::string verify_values;
  bool verify_distinct = false;
  int verify_prime = 0;
  int verify_max_a = 2;
  auto* verify = app.add_subcommand("verify", "validate candidate solutions");
  verify->add_option("--file", verify_file, "JSON file with a solutions array");
  verify->add_option("--values", verify_values, "comma-separated denominators");
  verify->add_flag("--distinct", verify_distinct, "require pairwise distinct");
  verify->add_option("--prime", verify_prime,
                     "require the 2^a*q^b form with this q");
  verify->add_option("--max-two-exp", verify_max_a, "cap on the exponent of 2");

  int oracle_n = 9;
  int oracle_prime = 3;
  int oracle_max_exp = 0;
  std::uint64_t oracle_budget = unitsum::oracle::kDefaultBudget;
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force search over a candidate pool and compare");
  oracle->add_option("--n", oracle_n, "number of unit fractions")->required();
  oracle->add_option("--prime", oracle_prime, "odd prime q");
  oracle->add_option("--max-exp", oracle_max_exp,
                     "exponent cap (default: family maximum plus one)");
  oracle->add_option("--budget", oracle_budget, "search node budget");

  int fam_n = 9;
  bool fam_catalog = false;
  auto* families = app.add_subcommand("families", "closed-form families");
  families->add_option("--n", fam_n, "number of unit fractions");
  families->add_flag("--catalog", fam_catalog, "print the full n=9 catalog");

  int bounds_n = 9;
  std::string bounds_range;
  auto* bounds = app.add_subcommand("bounds", "depth-bound diagnostics");
  bounds->add_option("--n", bounds_n, "single size");
  bounds->add_option("--range", bounds_range, "range of sizes, A..B");

  std::string greedy;
  std::string identity;
  std::string expand_x = "4";
  auto* expand = app.add_subcommand("expand", "unit-fraction expansions");
  expand->add_option("--greedy", greedy, "rational to expand, N/D");
  expand->add_option("--identity", identity, "four | two");
  expand->add_option("--x", expand_x, "denominator to expand");

  std::string st_values;
  std::string st_label;
  auto* structure = app.add_subcommand(
      "structure", "arithmetical structure of a solution");
  structure->add_option("--values", st_values, "comma-separated denominators");
  structure->add_option("--label", st_label, "catalog label, e.g. Y_1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count) return run_count(n, range_text, threads, count_limit, sink);
    if (*enumerate) return run_enumerate(enum_n, format, enum_limit, sink);
    if (*verify) {
      return run_verify(verify_file, verify_values, verify_distinct,
                        verify_prime, verify_max_a, sink);
    }
    if (*oracle) {
      return run_oracle(oracle_n, oracle_prime, oracle_max_exp, oracle_budget,
                        sink);
    }
    if (*families) return run_families(fam_n, fam_catalog, sink);
    if (*bounds) return run_bounds(bounds_n, bounds_range, sink);
    if (*expand) return run_expand(greedy, identity, Int(expand_x), sink);
    if (*structure) return run_structure(st_values, st_label, sink);
  } catch (const unitsum::oracle::BudgetExceeded& e) {
    std::cerr << e.what() << " (" << e.nodes << " nodes)\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
