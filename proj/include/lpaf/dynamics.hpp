// Rule-refinement updates: merge new rules into a program by head or id.
#pragma once

#include <map>

#include "lpaf/core.hpp"
#include "lpaf/lp.hpp"

namespace lpaf {

// Keep the first rule's id and head, join the bodies.
inline Rule refine(const Rule& r, const Rule& other) {
  SymbolSet pos = r.pos();
  pos.insert(other.pos().begin(), other.pos().end());
  SymbolSet neg = r.neg();
  neg.insert(other.neg().begin(), other.neg().end());
  return Rule(r.id(), r.head(), std::move(pos), std::move(neg));
}

namespace detail {

inline void require_atomic_rule(const Rule& r, const char* who) {
  if (!r.atomic()) {
    throw ClassError(std::string(who) + ": update rule " +
                     std::to_string(r.id()) + " has a positive body atom");
  }
}

// In head-matched programs the id is just the rank of the head, so
// updates renumber canonically.
inline Program number_by_head(std::map<Symbol, SymbolSet>&& bodies) {
  std::vector<Rule> rules;
  int id = 1;
  for (auto& [head, neg] : bodies) {
    rules.emplace_back(id++, head, SymbolSet{}, std::move(neg));
  }
  return Program(std::move(rules));
}

}  // namespace detail

// Update an h-unique atomic program with one atomic rule: refine the
// rule with the same head, or insert when the head is new. Ids are
// reassigned by head rank, which keeps them meaningless aliases of the
// heads. The result stays h-unique and atomic.
inline Program head_update(const Program& p, const Rule& r) {
  require_atomic(p, "head_update");
  require_h_unique(p, "head_update");
  detail::require_atomic_rule(r, "head_update");
  std::map<Symbol, SymbolSet> bodies;
  for (const auto& old : p.rules()) bodies[old.head()] = old.neg();
  auto it = bodies.find(r.head());
  if (it == bodies.end()) {
    bodies[r.head()] = r.neg();
  } else {
    it->second.insert(r.neg().begin(), r.neg().end());
  }
  return detail::number_by_head(std::move(bodies));
}

// Fold head_update over all rules of q. The order does not matter:
// same-head rules merge into one refined rule either way.
inline Program head_update_program(const Program& p, const Program& q) {
  require_atomic(q, "head_update");
  Program out = p;
  for (const auto& r : q.rules()) out = head_update(out, r);
  return out;
}

// Update an atomic program with one atomic rule keyed by id: refine the
// rule with the same id (its head wins, the update's head is dropped),
// or insert when the id is new. Works on any atomic program, h-unique
// or not, and keeps it atomic.
inline Program id_update(const Program& p, const Rule& r) {
  require_atomic(p, "id_update");
  detail::require_atomic_rule(r, "id_update");
  std::vector<Rule> rules;
  rules.reserve(p.size() + 1);
  bool matched = false;
  for (const auto& old : p.rules()) {
    if (old.id() == r.id()) {
      rules.push_back(refine(old, r));
      matched = true;
    } else {
      rules.push_back(old);
    }
  }
  if (!matched) rules.push_back(r);
  return Program(std::move(rules));
}

// Fold id_update over all rules of q; q's ids are distinct, so the fold
// order is irrelevant.
inline Program id_update_program(const Program& p, const Program& q) {
  require_atomic(q, "id_update");
  Program out = p;
  for (const auto& r : q.rules()) out = id_update(out, r);
  return out;
}

}  // namespace lpaf
