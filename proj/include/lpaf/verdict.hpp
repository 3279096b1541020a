// Equivalence verdicts and their structured counterexamples.
#pragma once

#include <optional>
#include <variant>

#include "lpaf/core.hpp"
#include "lpaf/lp.hpp"

namespace lpaf {

// Framework kernels differ: the listed arguments / attacks occur in
// exactly one side's kernel.
struct AfKernelDiff {
  SymbolSet args_only_first;
  SymbolSet args_only_second;
  EdgeSet attacks_only_first;
  EdgeSet attacks_only_second;
};

// Program kernels (or matched rule pairs) differ by these rules.
struct RuleDiff {
  std::vector<Rule> only_first;
  std::vector<Rule> only_second;
};

// An SE-model present on one side only.
struct SeModelDiff {
  SymbolSet x;
  SymbolSet y;
  bool in_first = true;
};

// A concrete update that drives the two inputs apart, together with the
// answer sets of both updated programs for replay.
struct UpdateWitness {
  Program delta;
  InterpretationSet first_sets;
  InterpretationSet second_sets;
};

// Claim-framework comparison: clause 1 is the argument / claim-attack
// component, clause 2 the per-argument claim condition.
struct ClaimDiff {
  int clause = 1;
  SymbolSet args_only_first;
  SymbolSet args_only_second;
  EdgeSet claim_attacks_only_first;
  EdgeSet claim_attacks_only_second;
  std::optional<Symbol> argument;      // clause 2: offending argument
  std::optional<Symbol> first_claim;   // clause 2: its claim on each side
  std::optional<Symbol> second_claim;
};

using Witness =
    std::variant<AfKernelDiff, RuleDiff, SeModelDiff, UpdateWitness, ClaimDiff>;

struct SEVerdict {
  bool equivalent = false;
  // True when "equivalent" only means "no counterexample within the
  // enumeration budget".
  bool bounded = false;
  std::optional<Witness> witness;

  static SEVerdict yes(bool bounded = false) { return {true, bounded, {}}; }
  static SEVerdict no(Witness w, bool bounded = false) {
    return {false, bounded, std::move(w)};
  }
};

}  // namespace lpaf
