#pragma once

// Readers for the golden files under tests/data.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebconv/exact.hpp"

namespace golden {

inline std::string data_path(const std::string& name) { return std::string(CHEBCONV_TEST_DATA_DIR) + "/" + name; }

inline std::vector<std::vector<chebconv::Int>> triangle_rows() {
  std::ifstream in(data_path("triangle_9_rows.txt"));
  if (!in) throw std::runtime_error("missing golden file triangle_9_rows.txt");
  std::vector<std::vector<chebconv::Int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<chebconv::Int> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// name -> expected leading terms
inline std::map<std::string, std::vector<chebconv::Int>> sequences() {
  std::ifstream in(data_path("sequences.txt"));
  if (!in) throw std::runtime_error("missing golden file sequences.txt");
  std::map<std::string, std::vector<chebconv::Int>> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name, tok;
    if (!(ls >> name)) continue;
    auto& terms = out[name];
    while (ls >> tok) terms.emplace_back(tok);
  }
  return out;
}

}  // namespace golden
