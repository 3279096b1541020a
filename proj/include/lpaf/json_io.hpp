// JSON views of values, extension families, and equivalence verdicts.
#pragma once

#include <json.hpp>

#include "lpaf/io.hpp"

namespace lpaf {

using Json = nlohmann::ordered_json;

inline Json json_of(const SymbolSet& s) { return Json(s); }

inline Json json_of(const InterpretationSet& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(json_of(s));
  return out;
}

inline Json json_of(const EdgeSet& edges) {
  Json out = Json::array();
  for (const auto& [src, tgt] : edges) {
    out.push_back(Json::array({src, tgt}));
  }
  return out;
}

inline Json json_of(const Rule& r) {
  return Json{{"id", r.id()},
              {"head", r.head()},
              {"pos", json_of(r.pos())},
              {"neg", json_of(r.neg())}};
}

inline Json json_of(const Program& p) {
  Json rules = Json::array();
  for (const auto& r : p.rules()) rules.push_back(json_of(r));
  return Json{{"kind", "lp"}, {"rules", std::move(rules)}};
}

inline Json json_of(const ArgFramework& f) {
  return Json{{"kind", "af"},
              {"args", json_of(f.args())},
              {"attacks", json_of(f.attacks())}};
}

inline Json json_of(const ClaimFramework& cf) {
  Json gamma = Json::object();
  for (const auto& [arg, claim] : cf.gamma()) gamma[arg] = claim;
  return Json{{"kind", "caf"},
              {"args", json_of(cf.args())},
              {"claim_attacks", json_of(cf.claim_attacks())},
              {"gamma", std::move(gamma)}};
}

inline Json json_of(const Value& v) {
  return std::visit([](const auto& x) { return json_of(x); }, v);
}

namespace detail {

inline Json json_witness(const AfKernelDiff& d) {
  return Json{{"type", "kernel_diff"},
              {"args_only_first", json_of(d.args_only_first)},
              {"args_only_second", json_of(d.args_only_second)},
              {"attacks_only_first", json_of(d.attacks_only_first)},
              {"attacks_only_second", json_of(d.attacks_only_second)}};
}

inline Json json_witness(const RuleDiff& d) {
  Json a = Json::array(), b = Json::array();
  for (const auto& r : d.only_first) a.push_back(json_of(r));
  for (const auto& r : d.only_second) b.push_back(json_of(r));
  return Json{{"type", "rule_diff"},
              {"only_first", std::move(a)},
              {"only_second", std::move(b)}};
}

inline Json json_witness(const SeModelDiff& d) {
  return Json{{"type", "se_model"},
              {"x", json_of(d.x)},
              {"y", json_of(d.y)},
              {"in_first", d.in_first}};
}

inline Json json_witness(const UpdateWitness& d) {
  return Json{{"type", "update"},
              {"update", json_of(d.delta)},
              {"first_sets", json_of(d.first_sets)},
              {"second_sets", json_of(d.second_sets)}};
}

inline Json json_witness(const ClaimDiff& d) {
  if (d.clause == 2) {
    return Json{{"type", "claim_diff"},
                {"argument", *d.argument},
                {"first_claim", *d.first_claim},
                {"second_claim", *d.second_claim}};
  }
  return Json{{"type", "structure_diff"},
              {"args_only_first", json_of(d.args_only_first)},
              {"args_only_second", json_of(d.args_only_second)},
              {"claim_attacks_only_first", json_of(d.claim_attacks_only_first)},
              {"claim_attacks_only_second",
               json_of(d.claim_attacks_only_second)}};
}

}  // namespace detail

inline Json json_of(const SEVerdict& v) {
  Json out{{"equivalent", v.equivalent}, {"bounded", v.bounded}};
  if (v.witness) {
    out["witness"] = std::visit(
        [](const auto& w) { return detail::json_witness(w); }, *v.witness);
  }
  return out;
}

}  // namespace lpaf
