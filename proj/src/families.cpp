#include "unitsum/families.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace unitsum::families {

SolutionSet family_u(int n) {
  if (n < 9) throw std::domain_error("family_u: n must be >= 9");
  SolutionSet s;
  s.prime = 5;
  s.distinct = true;
  s.values.push_back(2);
  s.values.push_back(4);
  for (int k = 1; k <= n - 3; ++k) {
    s.values.push_back(pow_int(Int(5), static_cast<unsigned>(k)));
  }
  s.values.push_back(4 * pow_int(Int(5), static_cast<unsigned>(n - 3)));
  return s;
}

SolutionSet family_v(int n) {
  if (n < 9) throw std::domain_error("family_v: n must be >= 9");
  if (n % 2 == 0) {
    throw std::domain_error("family_v: no q=7 solution exists for even n");
  }
  SolutionSet s;
  s.prime = 7;
  s.distinct = true;
  s.values.push_back(2);
  s.values.push_back(4);
  for (int k = 1; k <= (n - 3) / 2; ++k) {
    Int p = pow_int(Int(7), static_cast<unsigned>(k));
    s.values.push_back(p);
    s.values.push_back(2 * p);
  }
  s.values.push_back(4 * pow_int(Int(7), static_cast<unsigned>((n - 3) / 2)));
  return s;
}

SolutionSet family_z1(int n) {
  if (n < 9) throw std::domain_error("family_z1: n must be >= 9");
  SolutionSet s;
  s.prime = 3;
  s.distinct = true;
  s.values.push_back(2);
  for (int k = 1; k <= n - 2; ++k) {
    s.values.push_back(pow_int(Int(3), static_cast<unsigned>(k)));
  }
  s.values.push_back(2 * pow_int(Int(3), static_cast<unsigned>(n - 2)));
  return s;
}

SolutionSet CatalogEntry::solution() const {
  SolutionSet s;
  s.distinct = true;
  if (prime != 0) {
    s.prime = prime;
    for (const FactoredValue& fv : factors) s.values.push_back(fv.value());
  } else {
    s.values = plain;
  }
  return s;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

void parse_file(const std::filesystem::path& path, bool exponent_form,
                std::vector<CatalogEntry>& out) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open fixture file " + path.string());
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tok = tokens(line);
    if (tok.size() < 2) throw std::runtime_error("bad fixture line: " + line);
    CatalogEntry entry;
    entry.label = tok[0];
    if (exponent_form) {
      entry.prime = std::stoi(tok[1]);
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const std::string& p = tok[i];
        if (p.size() < 5 || p.front() != '(' || p.back() != ')') {
          throw std::runtime_error("bad exponent pair: " + p);
        }
        auto comma = p.find(',');
        FactoredValue fv;
        fv.a = std::stoi(p.substr(1, comma - 1));
        fv.b = std::stoi(p.substr(comma + 1, p.size() - comma - 2));
        fv.q = entry.prime;
        entry.factors.push_back(fv);
      }
    } else {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        entry.plain.push_back(Int(tok[i]));
      }
    }
    out.push_back(std::move(entry));
  }
}

}  // namespace

FixtureCatalog FixtureCatalog::load(const std::filesystem::path& data_dir) {
  FixtureCatalog c;
  parse_file(data_dir / "catalog_n9.txt", true, c.theorem1_);
  parse_file(data_dir / "odd_n9.txt", false, c.odd_);
  return c;
}

const CatalogEntry* FixtureCatalog::find(std::string_view label) const {
  for (const auto& e : theorem1_) {
    if (e.label == label) return &e;
  }
  for (const auto& e : odd_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("UNITSUM_DATA_DIR")) {
    return env;
  }
#ifdef UNITSUM_DATA_DIR
  return UNITSUM_DATA_DIR;
#else
  return "data";
#endif
}

const FixtureCatalog& catalog_theorem1() {
  static const FixtureCatalog catalog = FixtureCatalog::load(default_data_dir());
  return catalog;
}

}  // namespace unitsum::families
