// Seed-deterministic random instances for property suites.
//
// The same RandomSpec always yields the same value, on every platform:
// draws use mt19937_64 output directly (modulo / bit tricks) instead of
// the implementation-defined standard distributions.
#pragma once

#include <cstdint>
#include <random>

#include "lpaf/caf.hpp"
#include "lpaf/io.hpp"
#include "lpaf/lp.hpp"

namespace lpaf {

struct RandomSpec {
  ValueKind kind = ValueKind::lp;
  int size = 3;          // rules (lp) or arguments (af/caf)
  double density = 0.5;  // chance of each candidate body literal / attack
  bool atomic = false;   // lp only: empty positive bodies
  bool strict = false;   // lp: no ungrounded vulnerabilities; af: no
                         // ungrounded attack sources
  bool h_unique = false;  // lp only: one rule per head, ids by head rank
  std::uint64_t seed = 0;
};

namespace detail {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  bool chance(double p) {
    // 53 uniform bits -> [0,1); exact and portable.
    double u = double(rng_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  std::size_t index(std::size_t n) { return std::size_t(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace detail

inline Value generate(const RandomSpec& spec) {
  if (spec.size < 0) throw Error("size must be non-negative");
  if (spec.density < 0.0 || spec.density > 1.0) {
    throw Error("density must lie in [0,1]");
  }
  detail::Draw draw(spec.seed);

  if (spec.kind == ValueKind::lp) {
    if (spec.strict && spec.size == 0) {
      throw Error("a strict program needs at least one rule");
    }
    std::size_t n = std::size_t(spec.size);
    std::vector<Symbol> pool = fresh_symbols({}, n == 0 ? 1 : n);
    std::vector<Symbol> heads(n);
    if (spec.h_unique) {
      for (std::size_t i = 0; i < n; ++i) heads[i] = pool[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        heads[i] = pool[draw.index(pool.size())];
      }
    }
    // Under strict, bodies only mention atoms that head a rule, so the
    // language stays inside the head set.
    std::vector<Symbol> body_pool =
        spec.strict ? [&] {
          SymbolSet hs(heads.begin(), heads.end());
          return std::vector<Symbol>(hs.begin(), hs.end());
        }()
                    : pool;
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < n; ++i) {
      SymbolSet pos, neg;
      for (const auto& atom : body_pool) {
        if (!draw.chance(spec.density)) continue;
        if (!spec.atomic && draw.chance(0.5)) {
          pos.insert(atom);
        } else {
          neg.insert(atom);
        }
      }
      rules.emplace_back(int(i + 1), heads[i], std::move(pos),
                         std::move(neg));
    }
    if (spec.h_unique) {
      // Canonical one-rule-per-head numbering: ids by head rank.
      std::map<Symbol, int> rank;
      for (const auto& r : rules) rank.emplace(r.head(), 0);
      int next = 1;
      for (auto& [head, id] : rank) id = next++;
      std::vector<Rule> renumbered;
      for (const auto& r : rules) {
        renumbered.emplace_back(rank.at(r.head()), r.head(), r.pos(),
                                r.neg());
      }
      rules = std::move(renumbered);
    }
    return Program{std::move(rules)};
  }

  if (spec.kind == ValueKind::af) {
    if (spec.atomic || spec.h_unique) {
      throw Error("class flags atomic/h-unique do not apply to frameworks");
    }
    if (spec.size == 0) {
      throw Error("a framework needs at least one argument");
    }
    std::vector<Symbol> pool = fresh_symbols({}, std::size_t(spec.size));
    SymbolSet args(pool.begin(), pool.end());
    EdgeSet attacks;
    for (const auto& src : pool) {
      for (const auto& tgt : pool) {
        if (draw.chance(spec.density)) attacks.insert({src, tgt});
      }
    }
    if (!spec.strict) {
      Symbol outside = fresh_symbols(args, 1).front();
      for (const auto& tgt : pool) {
        if (draw.chance(spec.density)) attacks.insert({outside, tgt});
      }
    }
    return ArgFramework(std::move(args), std::move(attacks));
  }

  // Claim framework: arguments x1..xn, claims drawn from a small pool.
  if (spec.atomic || spec.strict || spec.h_unique) {
    throw Error("class flags do not apply to claim frameworks");
  }
  std::size_t n = std::size_t(spec.size);
  std::vector<Symbol> args_vec;
  for (std::size_t i = 1; i <= n; ++i) {
    args_vec.push_back("x" + std::to_string(i));
  }
  std::vector<Symbol> claim_pool = fresh_symbols({}, n == 0 ? 1 : (n + 1) / 2);
  SymbolSet args(args_vec.begin(), args_vec.end());
  std::map<Symbol, Symbol> gamma;
  for (const auto& a : args_vec) {
    gamma[a] = claim_pool[draw.index(claim_pool.size())];
  }
  EdgeSet claim_attacks;
  for (const auto& c : claim_pool) {
    for (const auto& a : args_vec) {
      if (draw.chance(spec.density)) claim_attacks.insert({c, a});
    }
  }
  return ClaimFramework(std::move(args), std::move(claim_attacks),
                        std::move(gamma));
}

}  // namespace lpaf
