// Argumentation frameworks with ungrounded attacks, stable semantics.
#pragma once

#include <map>
#include <vector>

#include "lpaf/core.hpp"
#include "lpaf/verdict.hpp"

namespace lpaf {

// (args, attacks) where every attack target is an argument but sources
// may lie outside: those are the ungrounded attacks. The argument set
// must not be empty.
class ArgFramework {
 public:
  ArgFramework(SymbolSet args, EdgeSet attacks)
      : args_(std::move(args)), attacks_(std::move(attacks)) {
    if (args_.empty()) {
      throw ClassError("framework needs at least one argument");
    }
    for (const auto& a : args_) require_symbol(a, "argument");
    for (const auto& [src, tgt] : attacks_) {
      require_symbol(src, "attack source");
      if (!args_.count(tgt)) {
        throw ClassError("attack target '" + tgt + "' is not an argument");
      }
    }
  }

  const SymbolSet& args() const { return args_; }
  const EdgeSet& attacks() const { return attacks_; }

  EdgeSet proper_attacks() const {
    EdgeSet out;
    for (const auto& e : attacks_) {
      if (args_.count(e.first)) out.insert(e);
    }
    return out;
  }

  EdgeSet ungrounded_attacks() const {
    EdgeSet out;
    for (const auto& e : attacks_) {
      if (!args_.count(e.first)) out.insert(e);
    }
    return out;
  }

  // Strict: every attack runs between arguments.
  bool strict() const { return ungrounded_attacks().empty(); }

  friend bool operator==(const ArgFramework& a, const ArgFramework& b) {
    return a.args_ == b.args_ && a.attacks_ == b.attacks_;
  }
  friend bool operator!=(const ArgFramework& a, const ArgFramework& b) {
    return !(a == b);
  }

 private:
  SymbolSet args_;
  EdgeSet attacks_;
};

// Drop the ungrounded attacks, keep the arguments.
inline ArgFramework restricted(const ArgFramework& f) {
  return ArgFramework(f.args(), f.proper_attacks());
}

// No proper attack inside e. Ungrounded attacks never create conflicts.
inline bool is_conflict_free(const ArgFramework& f, const SymbolSet& e) {
  for (const auto& a : e) {
    if (!f.args().count(a)) {
      throw Error("is_conflict_free: '" + a + "' is not an argument");
    }
  }
  for (const auto& [src, tgt] : f.attacks()) {
    if (e.count(src) && e.count(tgt) && f.args().count(src)) return false;
  }
  return true;
}

// Stable extensions: conflict-free sets whose members plus their proper
// targets cover all arguments. Exhaustive 2^|args| sweep.
inline InterpretationSet stable_extensions(const ArgFramework& f) {
  std::vector<Symbol> names(f.args().begin(), f.args().end());
  if (names.size() > detail::kMaxEnumerationBits) {
    throw BudgetError("stable_extensions: " + std::to_string(names.size()) +
                      " arguments exceed the exhaustive search bound");
  }
  std::map<Symbol, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = int(i);

  // Per-argument masks over proper attacks only.
  std::vector<std::uint64_t> hits(names.size(), 0);  // targets of arg i
  std::vector<std::uint64_t> hit_by(names.size(), 0);
  for (const auto& [src, tgt] : f.attacks()) {
    auto s = index.find(src);
    if (s == index.end()) continue;
    int t = index.at(tgt);
    hits[s->second] |= std::uint64_t{1} << t;
    hit_by[t] |= std::uint64_t{1} << s->second;
  }

  InterpretationSet out;
  const std::uint64_t all = (names.size() == 64)
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << names.size()) - 1;
  for (std::uint64_t e = 0; e <= all; ++e) {
    std::uint64_t range = e;
    bool conflict = false;
    for (std::size_t i = 0; i < names.size() && !conflict; ++i) {
      if (!(e & (std::uint64_t{1} << i))) continue;
      if (hit_by[i] & e) conflict = true;
      range |= hits[i];
    }
    if (!conflict && range == all) out.insert(detail::unmask(e, names));
    if (e == all) break;
  }
  return out;
}

// Component-wise union; targets stay covered, so the result is valid.
inline ArgFramework framework_union(const ArgFramework& f,
                                    const ArgFramework& g) {
  SymbolSet args = f.args();
  args.insert(g.args().begin(), g.args().end());
  EdgeSet attacks = f.attacks();
  attacks.insert(g.attacks().begin(), g.attacks().end());
  return ArgFramework(std::move(args), std::move(attacks));
}

// Stable kernel: erase every attack leaving a self-attacker, except the
// self-attack itself. Self-attackers are always arguments, so this
// never touches ungrounded attacks.
inline ArgFramework stable_kernel(const ArgFramework& f) {
  SymbolSet self;
  for (const auto& [src, tgt] : f.attacks()) {
    if (src == tgt) self.insert(src);
  }
  EdgeSet kept;
  for (const auto& e : f.attacks()) {
    if (e.first != e.second && self.count(e.first)) continue;
    kept.insert(e);
  }
  return ArgFramework(f.args(), std::move(kept));
}

// Strong equivalence under stable semantics: equal stable kernels.
inline SEVerdict af_strongly_equivalent(const ArgFramework& f,
                                        const ArgFramework& g) {
  ArgFramework kf = stable_kernel(f);
  ArgFramework kg = stable_kernel(g);
  if (kf == kg) return SEVerdict::yes();

  AfKernelDiff diff;
  std::set_difference(kf.args().begin(), kf.args().end(), kg.args().begin(),
                      kg.args().end(),
                      std::inserter(diff.args_only_first,
                                    diff.args_only_first.end()));
  std::set_difference(kg.args().begin(), kg.args().end(), kf.args().begin(),
                      kf.args().end(),
                      std::inserter(diff.args_only_second,
                                    diff.args_only_second.end()));
  std::set_difference(kf.attacks().begin(), kf.attacks().end(),
                      kg.attacks().begin(), kg.attacks().end(),
                      std::inserter(diff.attacks_only_first,
                                    diff.attacks_only_first.end()));
  std::set_difference(kg.attacks().begin(), kg.attacks().end(),
                      kf.attacks().begin(), kf.attacks().end(),
                      std::inserter(diff.attacks_only_second,
                                    diff.attacks_only_second.end()));
  return SEVerdict::no(std::move(diff));
}

}  // namespace lpaf
