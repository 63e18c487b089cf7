#pragma once

#include "unitsum/core.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

namespace testutil {

inline std::filesystem::path golden_dir() { return UNITSUM_GOLDEN_DIR; }
inline std::filesystem::path data_dir() { return UNITSUM_DATA_DIR; }

// Reads "{v1,v2,...}" lines.
inline std::vector<std::vector<unitsum::Int>> read_brace_lines(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<unitsum::Int>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<unitsum::Int> row;
    std::string tok;
    for (char c : line.substr(1, line.size() - 2)) {
      if (c == ',') {
        row.emplace_back(tok);
        tok.clear();
      } else {
        tok.push_back(c);
      }
    }
    if (!tok.empty()) row.emplace_back(tok);
    out.push_back(std::move(row));
  }
  return out;
}

inline std::multiset<unitsum::Int> as_multiset(
    const std::vector<unitsum::Int>& values) {
  return {values.begin(), values.end()};
}

}  // namespace testutil
