// Translations between programs, frameworks and claim frameworks.
#pragma once

#include <map>

#include "lpaf/af.hpp"
#include "lpaf/caf.hpp"
#include "lpaf/core.hpp"
#include "lpaf/lp.hpp"

namespace lpaf {

// One rule per argument: the argument becomes the head, its attackers
// (including ungrounded sources) the negative body. Rule ids follow the
// lexicographic rank of the argument names. The result is an atomic
// h-unique program.
inline Program af_to_lp(const ArgFramework& f) {
  std::map<Symbol, SymbolSet> attackers;
  for (const auto& a : f.args()) attackers[a];
  for (const auto& [src, tgt] : f.attacks()) attackers[tgt].insert(src);
  std::vector<Rule> rules;
  int id = 1;
  for (auto& [arg, neg] : attackers) {
    rules.emplace_back(id++, arg, SymbolSet{}, std::move(neg));
  }
  return Program(std::move(rules));
}

// Arguments are the head atoms, attacks run from each negated atom to
// the head of its rule. Negated atoms that head no rule become
// ungrounded attack sources.
inline ArgFramework lp_to_af(const Program& p) {
  require_atomic(p, "lp_to_af");
  require_h_unique(p, "lp_to_af");
  if (p.empty()) {
    throw ClassError("lp_to_af: the empty program has no argument to offer");
  }
  SymbolSet args = heads(p);
  EdgeSet attacks;
  for (const auto& r : p.rules()) {
    for (const auto& b : r.neg()) attacks.insert({b, r.head()});
  }
  return ArgFramework(std::move(args), std::move(attacks));
}

inline Symbol rule_argument_name(int id) { return "x" + std::to_string(id); }

// One argument x<i> per rule i, claiming the rule head; every negated
// atom claim-attacks the rule's argument. Duplicate heads are fine, so
// this covers all atomic programs.
inline ClaimFramework lp_to_caf(const Program& p) {
  require_atomic(p, "lp_to_caf");
  SymbolSet args;
  EdgeSet claim_attacks;
  std::map<Symbol, Symbol> gamma;
  for (const auto& r : p.rules()) {
    Symbol x = rule_argument_name(r.id());
    args.insert(x);
    gamma[x] = r.head();
    for (const auto& b : r.neg()) claim_attacks.insert({b, x});
  }
  return ClaimFramework(std::move(args), std::move(claim_attacks),
                        std::move(gamma));
}

inline int parse_rule_argument_name(const Symbol& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return 0;
  int value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return 0;
    value = value * 10 + (name[i] - '0');
    if (value > 1000000000) return 0;
  }
  return value;
}

// Inverse of lp_to_caf: argument x<i> becomes rule i with its claim as
// head and its claim-attackers as negative body. Arguments must be
// named x<positive int>.
inline Program caf_to_lp(const ClaimFramework& cf) {
  std::map<Symbol, SymbolSet> attacked_by;
  for (const auto& [claim, tgt] : cf.claim_attacks()) {
    attacked_by[tgt].insert(claim);
  }
  std::vector<Rule> rules;
  for (const auto& arg : cf.args()) {
    int id = parse_rule_argument_name(arg);
    if (id == 0) {
      throw ClassError("caf_to_lp: argument '" + arg +
                       "' is not of the form x<positive integer>");
    }
    rules.emplace_back(id, cf.claim_of(arg), SymbolSet{},
                       attacked_by.count(arg) ? attacked_by[arg]
                                              : SymbolSet{});
  }
  return Program(std::move(rules));
}

}  // namespace lpaf
