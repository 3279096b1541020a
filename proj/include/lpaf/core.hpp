// Shared vocabulary: symbols, edges, interpretation families, errors.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpaf {

// Atoms, arguments and claims are all drawn from the same countable
// universe of names: a lowercase letter followed by letters, digits or
// underscores.
using Symbol = std::string;
using SymbolSet = std::set<Symbol>;

// Directed (source, target) pairs; attacks in frameworks and
// claim-attacks in claim frameworks.
using Edge = std::pair<Symbol, Symbol>;
using EdgeSet = std::set<Edge>;

// A family of interpretations (answer sets, extensions, claim sets).
// std::set keeps each member sorted and the family lexicographically
// ordered, which is the canonical order used everywhere.
using InterpretationSet = std::set<SymbolSet>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A program or framework violates a class precondition (atomic,
// h-unique, strict, well-formed, non-empty, ...).
class ClassError : public Error {
 public:
  using Error::Error;
};

// An enumeration request is too large to run exhaustively.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(decorate(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string decorate(const std::string& msg, int line, int column) {
    std::ostringstream out;
    out << "line " << line << ", column " << column << ": " << msg;
    return out.str();
  }

  int line_;
  int column_;
};

inline bool is_valid_symbol(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

inline void require_symbol(const Symbol& s, const char* what) {
  if (!is_valid_symbol(s)) {
    throw Error(std::string(what) + " '" + s +
                "' is not a valid name (want [a-z][A-Za-z0-9_]*)");
  }
}

// Deterministic supply of names not present in `used`: single letters
// a..z first, then a1..z1, a2..z2, ...
inline std::vector<Symbol> fresh_symbols(const SymbolSet& used,
                                         std::size_t count) {
  std::vector<Symbol> out;
  for (int round = 0; out.size() < count; ++round) {
    for (char c = 'a'; c <= 'z' && out.size() < count; ++c) {
      Symbol candidate(1, c);
      if (round > 0) candidate += std::to_string(round);
      if (!used.count(candidate)) out.push_back(candidate);
    }
  }
  return out;
}

inline std::string join(const SymbolSet& items, const char* sep = ", ") {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

// "{a, b}" -- the canonical one-line rendering of a set of names.
inline std::string show_set(const SymbolSet& items) {
  return "{" + join(items) + "}";
}

inline std::string show_edge(const Edge& e) {
  return "(" + e.first + "," + e.second + ")";
}

}  // namespace lpaf
