// Claim-augmented argumentation frameworks in claim-attack form.
#pragma once

#include <map>

#include "lpaf/af.hpp"
#include "lpaf/core.hpp"
#include "lpaf/verdict.hpp"

namespace lpaf {

// (args, claim_attacks, gamma): gamma assigns every argument a claim,
// and each claim-attack (c, x) targets an argument x. Arguments with
// the same claim automatically attack alike, which keeps the framework
// well-formed by construction. The argument set may be empty.
class ClaimFramework {
 public:
  ClaimFramework() = default;

  ClaimFramework(SymbolSet args, EdgeSet claim_attacks,
                 std::map<Symbol, Symbol> gamma)
      : args_(std::move(args)), claim_attacks_(std::move(claim_attacks)),
        gamma_(std::move(gamma)) {
    for (const auto& a : args_) require_symbol(a, "argument");
    for (const auto& [arg, claim] : gamma_) {
      require_symbol(claim, "claim");
      if (!args_.count(arg)) {
        throw ClassError("claim assigned to unknown argument '" + arg + "'");
      }
    }
    for (const auto& a : args_) {
      if (!gamma_.count(a)) {
        throw ClassError("argument '" + a + "' has no claim");
      }
    }
    for (const auto& [claim, tgt] : claim_attacks_) {
      require_symbol(claim, "claim");
      if (!args_.count(tgt)) {
        throw ClassError("claim-attack target '" + tgt +
                         "' is not an argument");
      }
    }
  }

  const SymbolSet& args() const { return args_; }
  const EdgeSet& claim_attacks() const { return claim_attacks_; }
  const std::map<Symbol, Symbol>& gamma() const { return gamma_; }

  const Symbol& claim_of(const Symbol& arg) const {
    auto it = gamma_.find(arg);
    if (it == gamma_.end()) {
      throw Error("no claim for argument '" + arg + "'");
    }
    return it->second;
  }

  // Claims in use: the image of gamma plus claims that attack.
  SymbolSet claims() const {
    SymbolSet out;
    for (const auto& [arg, claim] : gamma_) out.insert(claim);
    for (const auto& [claim, tgt] : claim_attacks_) out.insert(claim);
    return out;
  }

  friend bool operator==(const ClaimFramework& a, const ClaimFramework& b) {
    return a.args_ == b.args_ && a.claim_attacks_ == b.claim_attacks_ &&
           a.gamma_ == b.gamma_;
  }
  friend bool operator!=(const ClaimFramework& a, const ClaimFramework& b) {
    return !(a == b);
  }

 private:
  SymbolSet args_;
  EdgeSet claim_attacks_;
  std::map<Symbol, Symbol> gamma_;
};

// Expand claim-attacks through gamma: (c, x) becomes (y, x) for every
// argument y with claim c. Claims labelling no argument contribute
// nothing, so the result is a strict framework over the same arguments.
inline ArgFramework induced_af(const ClaimFramework& cf) {
  std::map<Symbol, SymbolSet> by_claim;
  for (const auto& [arg, claim] : cf.gamma()) by_claim[claim].insert(arg);
  EdgeSet attacks;
  for (const auto& [claim, tgt] : cf.claim_attacks()) {
    auto it = by_claim.find(claim);
    if (it == by_claim.end()) continue;
    for (const auto& src : it->second) attacks.insert({src, tgt});
  }
  return ArgFramework(cf.args(), std::move(attacks));
}

// Claim sets of the stable extensions of the induced framework,
// de-duplicated. The empty framework has the single empty extension.
inline InterpretationSet stable_claim_extensions(const ClaimFramework& cf) {
  if (cf.args().empty()) return {SymbolSet{}};
  InterpretationSet out;
  for (const auto& ext : stable_extensions(induced_af(cf))) {
    SymbolSet claims;
    for (const auto& arg : ext) claims.insert(cf.claim_of(arg));
    out.insert(std::move(claims));
  }
  return out;
}

// Component-wise union. On shared arguments the left operand's claim
// wins; the right operand's claim-attacks still carry over.
inline ClaimFramework caf_union(const ClaimFramework& f,
                                const ClaimFramework& g) {
  SymbolSet args = f.args();
  args.insert(g.args().begin(), g.args().end());
  EdgeSet attacks = f.claim_attacks();
  attacks.insert(g.claim_attacks().begin(), g.claim_attacks().end());
  std::map<Symbol, Symbol> gamma = g.gamma();
  for (const auto& [arg, claim] : f.gamma()) gamma[arg] = claim;
  return ClaimFramework(std::move(args), std::move(attacks),
                        std::move(gamma));
}

// Strong equivalence under stable semantics: the argument and
// claim-attack components must match, and each argument must either
// carry the same claim on both sides or be claim-attacked by its own
// claim on both sides (then the differing claims can never matter).
inline SEVerdict caf_strongly_equivalent(const ClaimFramework& f,
                                         const ClaimFramework& g) {
  if (f.args() != g.args() || f.claim_attacks() != g.claim_attacks()) {
    ClaimDiff diff;
    diff.clause = 1;
    std::set_difference(f.args().begin(), f.args().end(), g.args().begin(),
                        g.args().end(),
                        std::inserter(diff.args_only_first,
                                      diff.args_only_first.end()));
    std::set_difference(g.args().begin(), g.args().end(), f.args().begin(),
                        f.args().end(),
                        std::inserter(diff.args_only_second,
                                      diff.args_only_second.end()));
    std::set_difference(f.claim_attacks().begin(), f.claim_attacks().end(),
                        g.claim_attacks().begin(), g.claim_attacks().end(),
                        std::inserter(diff.claim_attacks_only_first,
                                      diff.claim_attacks_only_first.end()));
    std::set_difference(g.claim_attacks().begin(), g.claim_attacks().end(),
                        f.claim_attacks().begin(), f.claim_attacks().end(),
                        std::inserter(diff.claim_attacks_only_second,
                                      diff.claim_attacks_only_second.end()));
    return SEVerdict::no(std::move(diff));
  }
  for (const auto& arg : f.args()) {
    const Symbol& cf = f.claim_of(arg);
    const Symbol& cg = g.claim_of(arg);
    if (cf == cg) continue;
    bool both_self_attacked = f.claim_attacks().count({cf, arg}) &&
                              f.claim_attacks().count({cg, arg});
    if (both_self_attacked) continue;
    ClaimDiff diff;
    diff.clause = 2;
    diff.argument = arg;
    diff.first_claim = cf;
    diff.second_claim = cg;
    return SEVerdict::no(std::move(diff));
  }
  return SEVerdict::yes();
}

}  // namespace lpaf
