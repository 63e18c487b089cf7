#pragma once

#include "unitsum/core.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace unitsum::families {

// U_n = {2, 2^2, 5, 5^2, ..., 5^(n-3), 2^2*5^(n-3)}, the unique q=5
// solution for every n >= 9.
SolutionSet family_u(int n);

// V_n = {2, 2^2, 7, 2*7, ..., 7^((n-3)/2), 2*7^((n-3)/2), 2^2*7^((n-3)/2)},
// the unique q=7 solution for odd n >= 9; even n has none and is rejected.
SolutionSet family_v(int n);

// Z_1 generalized: {2, 3, 3^2, ..., 3^(n-2), 2*3^(n-2)} — the only
// solution with 2-adic top valuation 1.
SolutionSet family_z1(int n);

// A named fixture solution: either in 2^a*q^b exponent form or as plain
// integers (the distinct-odd solutions).
struct CatalogEntry {
  std::string label;
  int prime = 0;  // 0 for plain-integer entries
  std::vector<FactoredValue> factors;
  std::vector<Int> plain;

  SolutionSet solution() const;
};

class FixtureCatalog {
 public:
  static FixtureCatalog load(const std::filesystem::path& data_dir);

  // The 54 labeled solutions at n = 9 with denominators 2^a*q^b, a <= 2.
  const std::vector<CatalogEntry>& theorem1() const { return theorem1_; }
  // B_1..B_5, the solutions in distinct odd integers.
  const std::vector<CatalogEntry>& odd_distinct() const { return odd_; }

  const CatalogEntry* find(std::string_view label) const;

 private:
  std::vector<CatalogEntry> theorem1_;
  std::vector<CatalogEntry> odd_;
};

// Data directory resolution: $UNITSUM_DATA_DIR if set, else the path baked
// in at configure time.
std::filesystem::path default_data_dir();

// The Theorem-1 catalog loaded from the default data directory.
const FixtureCatalog& catalog_theorem1();

}  // namespace unitsum::families
