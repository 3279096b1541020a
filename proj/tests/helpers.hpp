// Shared shorthand for the test suites.
#pragma once

#include <fstream>
#include <sstream>

#include "lpaf/lpaf.hpp"

namespace t {

using namespace lpaf;

// Atomic rule (the common case in these suites).
inline Rule R(int id, const Symbol& head, const SymbolSet& neg = {}) {
  return Rule(id, head, {}, neg);
}

// General rule.
inline Rule Rp(int id, const Symbol& head, const SymbolSet& pos,
               const SymbolSet& neg) {
  return Rule(id, head, pos, neg);
}

inline Program P(std::vector<Rule> rules) { return Program(std::move(rules)); }

inline std::string data_file(const std::string& name) {
  return std::string(LPAF_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Program load_lp(const std::string& name) {
  return parse_lp(slurp(data_file(name)));
}

inline ArgFramework load_af(const std::string& name) {
  return parse_af(slurp(data_file(name)));
}

inline ClaimFramework load_caf(const std::string& name) {
  return parse_caf(slurp(data_file(name)));
}

}  // namespace t
