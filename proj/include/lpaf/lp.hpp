// Normal logic programs under the stable-model semantics.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lpaf/core.hpp"

namespace lpaf {

// A normal rule  id: head :- pos, not neg.
// The body is split into the positive atoms and the negated atoms; a
// rule with an empty body is a fact. Constraints (empty head) are not
// representable on purpose.
class Rule {
 public:
  Rule(int id, Symbol head, SymbolSet pos = {}, SymbolSet neg = {})
      : id_(id), head_(std::move(head)), pos_(std::move(pos)),
        neg_(std::move(neg)) {
    if (id_ < 1) throw Error("rule id must be a positive integer");
    require_symbol(head_, "head atom");
    for (const auto& a : pos_) require_symbol(a, "body atom");
    for (const auto& a : neg_) require_symbol(a, "body atom");
  }

  int id() const { return id_; }
  const Symbol& head() const { return head_; }
  const SymbolSet& pos() const { return pos_; }
  const SymbolSet& neg() const { return neg_; }

  bool atomic() const { return pos_.empty(); }
  bool fact() const { return pos_.empty() && neg_.empty(); }
  // A loop rule negates its own head.
  bool loop() const { return neg_.count(head_) != 0; }

  SymbolSet atoms() const {
    SymbolSet out = pos_;
    out.insert(neg_.begin(), neg_.end());
    out.insert(head_);
    return out;
  }

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.id_ == b.id_ && a.head_ == b.head_ && a.pos_ == b.pos_ &&
           a.neg_ == b.neg_;
  }
  friend bool operator!=(const Rule& a, const Rule& b) { return !(a == b); }
  friend bool operator<(const Rule& a, const Rule& b) {
    if (a.id_ != b.id_) return a.id_ < b.id_;
    if (a.head_ != b.head_) return a.head_ < b.head_;
    if (a.pos_ != b.pos_) return a.pos_ < b.pos_;
    return a.neg_ < b.neg_;
  }

 private:
  int id_;
  Symbol head_;
  SymbolSet pos_;
  SymbolSet neg_;
};

// A finite set of rules with pairwise distinct ids, kept sorted by id.
class Program {
 public:
  Program() = default;

  explicit Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
    std::sort(rules_.begin(), rules_.end(),
              [](const Rule& a, const Rule& b) { return a.id() < b.id(); });
    for (std::size_t i = 1; i < rules_.size(); ++i) {
      if (rules_[i].id() == rules_[i - 1].id()) {
        throw Error("duplicate rule id " + std::to_string(rules_[i].id()));
      }
    }
  }

  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }

  const Rule* find(int id) const {
    auto it = std::lower_bound(
        rules_.begin(), rules_.end(), id,
        [](const Rule& r, int key) { return r.id() < key; });
    return (it != rules_.end() && it->id() == id) ? &*it : nullptr;
  }

  std::set<int> ids() const {
    std::set<int> out;
    for (const auto& r : rules_) out.insert(r.id());
    return out;
  }

  friend bool operator==(const Program& a, const Program& b) {
    return a.rules_ == b.rules_;
  }
  friend bool operator!=(const Program& a, const Program& b) {
    return !(a == b);
  }

 private:
  std::vector<Rule> rules_;
};

struct ProgramClass {
  bool atomic = false;    // every positive body is empty
  bool strict = false;    // every atom of the program heads some rule
  bool h_unique = false;  // no atom heads two rules
};

inline SymbolSet heads(const Program& p) {
  SymbolSet out;
  for (const auto& r : p.rules()) out.insert(r.head());
  return out;
}

inline SymbolSet neg_atoms(const Program& p) {
  SymbolSet out;
  for (const auto& r : p.rules()) out.insert(r.neg().begin(), r.neg().end());
  return out;
}

inline SymbolSet language(const Program& p) {
  SymbolSet out;
  for (const auto& r : p.rules()) {
    out.insert(r.head());
    out.insert(r.pos().begin(), r.pos().end());
    out.insert(r.neg().begin(), r.neg().end());
  }
  return out;
}

inline ProgramClass class_of(const Program& p) {
  ProgramClass c{true, true, true};
  SymbolSet hs = heads(p);
  for (const auto& r : p.rules()) {
    if (!r.atomic()) c.atomic = false;
    for (const auto& a : r.pos()) {
      if (!hs.count(a)) c.strict = false;
    }
    for (const auto& a : r.neg()) {
      if (!hs.count(a)) c.strict = false;
    }
  }
  std::map<Symbol, int> seen;
  for (const auto& r : p.rules()) {
    if (++seen[r.head()] > 1) c.h_unique = false;
  }
  return c;
}

inline void require_atomic(const Program& p, const char* who) {
  for (const auto& r : p.rules()) {
    if (!r.atomic()) {
      throw ClassError(std::string(who) + ": rule " + std::to_string(r.id()) +
                       " has a positive body atom");
    }
  }
}

inline void require_h_unique(const Program& p, const char* who) {
  std::map<Symbol, int> first;
  for (const auto& r : p.rules()) {
    auto [it, inserted] = first.emplace(r.head(), r.id());
    if (!inserted) {
      throw ClassError(std::string(who) + ": atom '" + r.head() +
                       "' heads rules " + std::to_string(it->second) + " and " +
                       std::to_string(r.id()));
    }
  }
}

// Gelfond-Lifschitz reduct: drop every rule whose negative body meets s,
// strip the negative bodies of the rest. Rule ids survive.
inline Program reduct(const Program& p, const SymbolSet& s) {
  std::vector<Rule> out;
  for (const auto& r : p.rules()) {
    bool blocked = std::any_of(r.neg().begin(), r.neg().end(),
                               [&](const Symbol& a) { return s.count(a); });
    if (!blocked) out.emplace_back(r.id(), r.head(), r.pos(), SymbolSet{});
  }
  return Program(std::move(out));
}

// Least model of a negation-free program (fixpoint of the immediate
// consequence operator).
inline SymbolSet minimal_model(const Program& p) {
  for (const auto& r : p.rules()) {
    if (!r.neg().empty()) {
      throw ClassError("minimal_model: rule " + std::to_string(r.id()) +
                       " has a negative body literal");
    }
  }
  SymbolSet model;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.rules()) {
      if (model.count(r.head())) continue;
      bool fires = std::all_of(r.pos().begin(), r.pos().end(),
                               [&](const Symbol& a) { return model.count(a); });
      if (fires) {
        model.insert(r.head());
        changed = true;
      }
    }
  }
  return model;
}

inline bool is_answer_set(const Program& p, const SymbolSet& s) {
  return minimal_model(reduct(p, s)) == s;
}

namespace detail {

// Enumeration core shared by answer_sets and the framework semantics:
// candidate stable models are subsets of the rule heads, so everything
// is packed into bit masks indexed by head atoms. Atoms outside the
// head set can never be true and are dropped up front.
struct MaskRule {
  std::uint64_t blocked_by = 0;  // candidate bits that delete the rule
  std::uint64_t needs = 0;       // head bits required before firing
  std::uint64_t derives = 0;     // head bit produced
};

inline constexpr int kMaxEnumerationBits = 30;

inline SymbolSet unmask(std::uint64_t bits, const std::vector<Symbol>& names) {
  SymbolSet out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (bits & (std::uint64_t{1} << i)) out.insert(names[i]);
  }
  return out;
}

}  // namespace detail

// All answer sets of p. Candidates range over subsets of head(p); the
// search is a plain 2^|head(p)| sweep, so programs with more than 30
// distinct head atoms are rejected rather than silently running forever.
inline InterpretationSet answer_sets(const Program& p) {
  SymbolSet head_set = heads(p);
  std::vector<Symbol> names(head_set.begin(), head_set.end());
  if (names.size() > detail::kMaxEnumerationBits) {
    throw BudgetError("answer_sets: " + std::to_string(names.size()) +
                      " head atoms exceed the exhaustive search bound");
  }
  std::map<Symbol, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = int(i);

  std::vector<detail::MaskRule> rules;
  rules.reserve(p.size());
  for (const auto& r : p.rules()) {
    detail::MaskRule m;
    bool dead = false;
    for (const auto& a : r.pos()) {
      auto it = index.find(a);
      if (it == index.end()) {
        dead = true;  // positive atom can never hold
        break;
      }
      m.needs |= std::uint64_t{1} << it->second;
    }
    if (dead) continue;
    for (const auto& a : r.neg()) {
      auto it = index.find(a);
      if (it != index.end()) m.blocked_by |= std::uint64_t{1} << it->second;
    }
    m.derives = std::uint64_t{1} << index[r.head()];
    rules.push_back(m);
  }

  InterpretationSet out;
  const std::uint64_t limit = std::uint64_t{1} << names.size();
  for (std::uint64_t cand = 0; cand < limit; ++cand) {
    std::uint64_t model = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& m : rules) {
        if ((m.blocked_by & cand) || (m.derives & model)) continue;
        if ((m.needs & ~model) == 0) {
          model |= m.derives;
          grew = true;
        }
      }
    }
    if (model == cand) out.insert(detail::unmask(cand, names));
  }
  return out;
}

// Atoms that occur negated but head no rule; the program cannot react
// to updates on them.
inline SymbolSet ungrounded_vulnerabilities(const Program& p) {
  SymbolSet hs = heads(p);
  SymbolSet out;
  for (const auto& a : neg_atoms(p)) {
    if (!hs.count(a)) out.insert(a);
  }
  return out;
}

// Remove every ungrounded vulnerability from every body. Answer sets
// are untouched by this projection.
inline Program strict_projection(const Program& p) {
  require_atomic(p, "strict_projection");
  SymbolSet uv = ungrounded_vulnerabilities(p);
  std::vector<Rule> out;
  out.reserve(p.size());
  for (const auto& r : p.rules()) {
    SymbolSet neg;
    for (const auto& a : r.neg()) {
      if (!uv.count(a)) neg.insert(a);
    }
    out.emplace_back(r.id(), r.head(), r.pos(), std::move(neg));
  }
  return Program(std::move(out));
}

// Plain (ordinary) equivalence: same answer sets.
inline bool equivalent(const Program& p, const Program& q) {
  return answer_sets(p) == answer_sets(q);
}

// Set union of two programs; their id sets must not overlap, since a
// program cannot carry two rules with one id.
inline Program program_union(const Program& p, const Program& q) {
  std::vector<Rule> out = p.rules();
  for (const auto& r : q.rules()) {
    if (p.find(r.id())) {
      throw Error("program_union: rule id " + std::to_string(r.id()) +
                  " occurs in both programs");
    }
    out.push_back(r);
  }
  return Program(std::move(out));
}

// Equality after forgetting ids: same set of (head, pos, neg) triples.
inline bool same_rules_modulo_ids(const Program& p, const Program& q) {
  using Shape = std::pair<Symbol, std::pair<SymbolSet, SymbolSet>>;
  std::set<Shape> a, b;
  for (const auto& r : p.rules()) a.insert({r.head(), {r.pos(), r.neg()}});
  for (const auto& r : q.rules()) b.insert({r.head(), {r.pos(), r.neg()}});
  return a == b;
}

}  // namespace lpaf
