// Text formats: parsing with line/column errors, canonical rendering.
//
// Programs:          [id ":"] head [":-" lit ("," lit)*] "."
// Frameworks:        arg(a).  att(a,b).
// Claim frameworks:  carg(x1,a).  catt(a,x1).
//
// '%' starts a comment; whitespace is free. Rendering is canonical:
// parse(render(v)) == v, byte for byte on re-render.
#pragma once

#include <map>
#include <string_view>

#include "lpaf/af.hpp"
#include "lpaf/caf.hpp"
#include "lpaf/core.hpp"
#include "lpaf/lp.hpp"
#include "lpaf/verdict.hpp"

namespace lpaf {

enum class ValueKind { lp, af, caf };
using Value = std::variant<Program, ArgFramework, ClaimFramework>;

namespace detail {

struct Token {
  enum Kind { Int, Ident, Colon, If, Comma, Dot, LParen, RParen, End } kind;
  std::string text;
  long value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token peek() {
    if (!ahead_) ahead_ = lex();
    return *ahead_;
  }

  Token next() {
    Token t = peek();
    ahead_.reset();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw ParseError(msg, at.line, at.column);
  }

 private:
  Token lex() {
    skip();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = text_[pos_];
    if (c >= '0' && c <= '9') {
      t.kind = Token::Int;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        t.text += take();
        if (t.text.size() > 9) {
          throw ParseError("rule id too large", t.line, t.column);
        }
      }
      t.value = std::stol(t.text);
      return t;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      t.kind = Token::Ident;
      while (pos_ < text_.size() && (isalnum_(text_[pos_]) || text_[pos_] == '_')) {
        t.text += take();
      }
      return t;
    }
    switch (c) {
      case ':':
        take();
        if (pos_ < text_.size() && text_[pos_] == '-') {
          take();
          t.kind = Token::If;
        } else {
          t.kind = Token::Colon;
        }
        return t;
      case ',': take(); t.kind = Token::Comma; return t;
      case '.': take(); t.kind = Token::Dot; return t;
      case '(': take(); t.kind = Token::LParen; return t;
      case ')': take(); t.kind = Token::RParen; return t;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, column_);
    }
  }

  static bool isalnum_(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
  }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::optional<Token> ahead_;
};

inline Token expect(Lexer& lex, Token::Kind kind, const char* what) {
  Token t = lex.next();
  if (t.kind != kind) lex.fail(t, std::string("expected ") + what);
  return t;
}

inline Symbol expect_name(Lexer& lex, const char* what) {
  Token t = expect(lex, Token::Ident, what);
  if (!is_valid_symbol(t.text)) {
    lex.fail(t, std::string(what) + " '" + t.text +
                    "' must match [a-z][A-Za-z0-9_]*");
  }
  return t.text;
}

}  // namespace detail

// Parse a program. Either every rule carries an explicit id (duplicate
// ids are an error) or none does; in the latter case heads must be
// pairwise distinct and ids are assigned by lexicographic head rank.
inline Program parse_lp(std::string_view text) {
  detail::Lexer lex(text);
  struct Raw {
    std::optional<long> id;
    Symbol head;
    SymbolSet pos, neg;
    detail::Token at;
  };
  std::vector<Raw> raw;

  for (;;) {
    detail::Token t = lex.peek();
    if (t.kind == detail::Token::End) break;
    Raw r;
    r.at = t;
    if (t.kind == detail::Token::If) {
      lex.fail(t, "constraints (rules without a head) are not supported");
    }
    if (t.kind == detail::Token::Int) {
      lex.next();
      if (t.value < 1) lex.fail(t, "rule id must be positive");
      r.id = t.value;
      detail::expect(lex, detail::Token::Colon, "':' after rule id");
      detail::Token h = lex.peek();
      if (h.kind == detail::Token::If) {
        lex.fail(h, "constraints (rules without a head) are not supported");
      }
    }
    r.head = detail::expect_name(lex, "head atom");
    if (r.head == "not") lex.fail(t, "'not' is reserved");
    detail::Token sep = lex.next();
    if (sep.kind == detail::Token::If) {
      for (;;) {
        detail::Token lt = lex.peek();
        Symbol name = detail::expect_name(lex, "body atom");
        if (name == "not") {
          Symbol atom = detail::expect_name(lex, "atom after 'not'");
          if (atom == "not") lex.fail(lt, "'not' is reserved");
          r.neg.insert(atom);
        } else {
          r.pos.insert(name);
        }
        detail::Token nxt = lex.next();
        if (nxt.kind == detail::Token::Dot) break;
        if (nxt.kind != detail::Token::Comma) {
          lex.fail(nxt, "expected ',' or '.' in rule body");
        }
      }
    } else if (sep.kind != detail::Token::Dot) {
      lex.fail(sep, "expected ':-' or '.' after rule head");
    }
    raw.push_back(std::move(r));
  }

  bool any_id = std::any_of(raw.begin(), raw.end(),
                            [](const Raw& r) { return r.id.has_value(); });
  std::vector<Rule> rules;
  if (any_id) {
    std::map<long, int> seen;  // id -> line
    for (const auto& r : raw) {
      if (!r.id) {
        throw ParseError("rule without id in a program with explicit ids",
                         r.at.line, r.at.column);
      }
      auto [it, inserted] = seen.emplace(*r.id, r.at.line);
      if (!inserted) {
        throw ParseError("duplicate rule id " + std::to_string(*r.id) +
                             " (first used on line " +
                             std::to_string(it->second) + ")",
                         r.at.line, r.at.column);
      }
      rules.emplace_back(int(*r.id), r.head, r.pos, r.neg);
    }
  } else {
    std::map<Symbol, int> rank;
    for (const auto& r : raw) {
      auto [it, inserted] = rank.emplace(r.head, 0);
      if (!inserted) {
        throw ParseError("rules without ids must have distinct heads; '" +
                             r.head + "' repeats",
                         r.at.line, r.at.column);
      }
    }
    int next = 1;
    for (auto& [head, id] : rank) id = next++;
    for (const auto& r : raw) {
      rules.emplace_back(rank.at(r.head), r.head, r.pos, r.neg);
    }
  }
  return Program(std::move(rules));
}

inline ArgFramework parse_af(std::string_view text) {
  detail::Lexer lex(text);
  SymbolSet args;
  std::vector<std::pair<Edge, detail::Token>> attacks;
  for (;;) {
    detail::Token t = lex.peek();
    if (t.kind == detail::Token::End) break;
    Symbol kw = detail::expect_name(lex, "'arg' or 'att'");
    detail::expect(lex, detail::Token::LParen, "'('");
    if (kw == "arg") {
      args.insert(detail::expect_name(lex, "argument"));
    } else if (kw == "att") {
      Symbol src = detail::expect_name(lex, "attack source");
      detail::expect(lex, detail::Token::Comma, "','");
      Symbol tgt = detail::expect_name(lex, "attack target");
      attacks.push_back({{src, tgt}, t});
    } else {
      lex.fail(t, "expected 'arg' or 'att', got '" + kw + "'");
    }
    detail::expect(lex, detail::Token::RParen, "')'");
    detail::expect(lex, detail::Token::Dot, "'.'");
  }
  EdgeSet edges;
  for (const auto& [edge, at] : attacks) {
    if (!args.count(edge.second)) {
      throw ParseError("attack target '" + edge.second +
                           "' is not a declared argument",
                       at.line, at.column);
    }
    edges.insert(edge);
  }
  if (args.empty()) {
    throw ParseError("a framework needs at least one arg(...) declaration", 1,
                     1);
  }
  return ArgFramework(std::move(args), std::move(edges));
}

inline ClaimFramework parse_caf(std::string_view text) {
  detail::Lexer lex(text);
  SymbolSet args;
  std::map<Symbol, std::pair<Symbol, int>> gamma;  // arg -> (claim, line)
  std::vector<std::pair<Edge, detail::Token>> attacks;
  for (;;) {
    detail::Token t = lex.peek();
    if (t.kind == detail::Token::End) break;
    Symbol kw = detail::expect_name(lex, "'carg' or 'catt'");
    detail::expect(lex, detail::Token::LParen, "'('");
    if (kw == "carg") {
      Symbol arg = detail::expect_name(lex, "argument");
      detail::expect(lex, detail::Token::Comma, "','");
      Symbol claim = detail::expect_name(lex, "claim");
      auto [it, inserted] = gamma.emplace(arg, std::make_pair(claim, t.line));
      if (!inserted && it->second.first != claim) {
        throw ParseError("argument '" + arg + "' already claims '" +
                             it->second.first + "' (line " +
                             std::to_string(it->second.second) + ")",
                         t.line, t.column);
      }
      args.insert(arg);
    } else if (kw == "catt") {
      Symbol claim = detail::expect_name(lex, "claim");
      detail::expect(lex, detail::Token::Comma, "','");
      Symbol tgt = detail::expect_name(lex, "attacked argument");
      attacks.push_back({{claim, tgt}, t});
    } else {
      lex.fail(t, "expected 'carg' or 'catt', got '" + kw + "'");
    }
    detail::expect(lex, detail::Token::RParen, "')'");
    detail::expect(lex, detail::Token::Dot, "'.'");
  }
  EdgeSet edges;
  for (const auto& [edge, at] : attacks) {
    if (!args.count(edge.second)) {
      throw ParseError("claim-attack target '" + edge.second +
                           "' is not a declared argument",
                       at.line, at.column);
    }
    edges.insert(edge);
  }
  std::map<Symbol, Symbol> claim_of;
  for (const auto& [arg, entry] : gamma) claim_of[arg] = entry.first;
  return ClaimFramework(std::move(args), std::move(edges),
                        std::move(claim_of));
}

// Guess the format from the first statement: arg/att introduce a
// framework, carg/catt a claim framework, anything else a program.
inline ValueKind detect_kind(std::string_view text) {
  detail::Lexer lex(text);
  detail::Token first = lex.peek();
  if (first.kind != detail::Token::Ident) return ValueKind::lp;
  lex.next();
  if (lex.peek().kind != detail::Token::LParen) return ValueKind::lp;
  if (first.text == "arg" || first.text == "att") return ValueKind::af;
  if (first.text == "carg" || first.text == "catt") return ValueKind::caf;
  return ValueKind::lp;
}

inline Value parse_value(std::string_view text) {
  switch (detect_kind(text)) {
    case ValueKind::af: return parse_af(text);
    case ValueKind::caf: return parse_caf(text);
    default: return parse_lp(text);
  }
}

inline std::string render(const Rule& r) {
  std::string out = std::to_string(r.id()) + ": " + r.head();
  if (!r.pos().empty() || !r.neg().empty()) {
    out += " :- ";
    bool first = true;
    for (const auto& a : r.pos()) {
      if (!first) out += ", ";
      out += a;
      first = false;
    }
    for (const auto& a : r.neg()) {
      if (!first) out += ", ";
      out += "not " + a;
      first = false;
    }
  }
  return out + ".";
}

inline std::string render(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) out += render(r) + "\n";
  return out;
}

inline std::string render(const ArgFramework& f) {
  std::string out;
  for (const auto& a : f.args()) out += "arg(" + a + ").\n";
  for (const auto& [src, tgt] : f.attacks()) {
    out += "att(" + src + "," + tgt + ").\n";
  }
  return out;
}

inline std::string render(const ClaimFramework& cf) {
  std::string out;
  for (const auto& [arg, claim] : cf.gamma()) {
    out += "carg(" + arg + "," + claim + ").\n";
  }
  for (const auto& [claim, tgt] : cf.claim_attacks()) {
    out += "catt(" + claim + "," + tgt + ").\n";
  }
  return out;
}

inline std::string render(const Value& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

// One set per line; an empty family renders as no lines at all.
inline std::string render(const InterpretationSet& sets) {
  std::string out;
  for (const auto& s : sets) out += show_set(s) + "\n";
  return out;
}

namespace detail {

inline void describe_lines(const AfKernelDiff& d, std::string& out) {
  for (const auto& a : d.args_only_first) {
    out += "argument only in first: " + a + "\n";
  }
  for (const auto& a : d.args_only_second) {
    out += "argument only in second: " + a + "\n";
  }
  for (const auto& e : d.attacks_only_first) {
    out += "kernel attack only in first: " + show_edge(e) + "\n";
  }
  for (const auto& e : d.attacks_only_second) {
    out += "kernel attack only in second: " + show_edge(e) + "\n";
  }
}

inline void describe_lines(const RuleDiff& d, std::string& out) {
  for (const auto& r : d.only_first) {
    out += "rule only in first: " + render(r) + "\n";
  }
  for (const auto& r : d.only_second) {
    out += "rule only in second: " + render(r) + "\n";
  }
}

inline void describe_lines(const SeModelDiff& d, std::string& out) {
  out += "se-model only in " + std::string(d.in_first ? "first" : "second") +
         ": (" + show_set(d.x) + ", " + show_set(d.y) + ")\n";
}

inline void describe_lines(const UpdateWitness& d, std::string& out) {
  out += "distinguishing update:\n";
  out += d.delta.empty() ? "(empty update)\n" : render(d.delta);
  out += "answer sets of first after update:\n" + render(d.first_sets);
  out += "answer sets of second after update:\n" + render(d.second_sets);
}

inline void describe_lines(const ClaimDiff& d, std::string& out) {
  if (d.clause == 2) {
    out += "argument " + *d.argument + " claims " + *d.first_claim +
           " in first but " + *d.second_claim +
           " in second, and the claims do not both attack it\n";
    return;
  }
  for (const auto& a : d.args_only_first) {
    out += "argument only in first: " + a + "\n";
  }
  for (const auto& a : d.args_only_second) {
    out += "argument only in second: " + a + "\n";
  }
  for (const auto& e : d.claim_attacks_only_first) {
    out += "claim-attack only in first: " + show_edge(e) + "\n";
  }
  for (const auto& e : d.claim_attacks_only_second) {
    out += "claim-attack only in second: " + show_edge(e) + "\n";
  }
}

}  // namespace detail

inline std::string describe(const SEVerdict& v) {
  if (v.equivalent) {
    return v.bounded ? "equivalent (within search budget)\n" : "equivalent\n";
  }
  std::string out = "not equivalent\n";
  if (v.witness) {
    std::visit([&](const auto& w) { detail::describe_lines(w, out); },
               *v.witness);
  }
  return out;
}

}  // namespace lpaf
