// lpaf: solve, translate, kernel, update and equivalence-check logic
// programs, argumentation frameworks and claim frameworks.
//
// Exit codes: 0 success (and "equivalent" for se/oracle), 1 not
// equivalent (witness printed), 2 bad input or class violation.
#include <CLI11.hpp>

#include <lpaf/json_io.hpp>
#include <lpaf/lpaf.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace lpaf;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ValueKind kind_from_name(const std::string& name) {
  if (name == "lp") return ValueKind::lp;
  if (name == "af") return ValueKind::af;
  if (name == "caf") return ValueKind::caf;
  throw Error("unknown format '" + name + "' (want lp, af or caf)");
}

Value parse_as(const std::string& path, ValueKind kind) {
  std::string text = read_file(path);
  switch (kind) {
    case ValueKind::lp: return parse_lp(text);
    case ValueKind::af: return parse_af(text);
    case ValueKind::caf: return parse_caf(text);
  }
  throw Error("unknown format");
}

Program parse_program(const std::string& path) {
  return parse_lp(read_file(path));
}

void emit_value(const Value& v, bool json) {
  if (json) {
    std::cout << json_of(v).dump(2) << "\n";
  } else {
    std::cout << render(v);
  }
}

void emit_sets(const InterpretationSet& sets, bool json) {
  if (json) {
    std::cout << json_of(sets).dump(2) << "\n";
  } else {
    std::cout << render(sets);
  }
}

int emit_verdict(const SEVerdict& v, bool json) {
  if (json) {
    std::cout << json_of(v).dump(2) << "\n";
  } else {
    std::cout << describe(v);
  }
  return v.equivalent ? 0 : 1;
}

UpdateMode mode_from_name(const std::string& name) {
  if (name == "union") return UpdateMode::Union;
  if (name == "head") return UpdateMode::Head;
  if (name == "id") return UpdateMode::Id;
  throw Error("unknown update mode '" + name + "'");
}

int run_solve(const std::string& file, bool json) {
  Value v = parse_value(read_file(file));
  if (const auto* p = std::get_if<Program>(&v)) {
    emit_sets(answer_sets(*p), json);
  } else if (const auto* f = std::get_if<ArgFramework>(&v)) {
    emit_sets(stable_extensions(*f), json);
  } else {
    emit_sets(stable_claim_extensions(std::get<ClaimFramework>(v)), json);
  }
  return 0;
}

int run_translate(const std::string& file, const std::string& from,
                  const std::string& to, bool json) {
  ValueKind src = kind_from_name(from);
  ValueKind dst = kind_from_name(to);
  Value v = parse_as(file, src);
  Value out;
  if (src == dst) {
    out = std::move(v);
  } else if (src == ValueKind::lp && dst == ValueKind::af) {
    out = lp_to_af(std::get<Program>(v));
  } else if (src == ValueKind::af && dst == ValueKind::lp) {
    out = af_to_lp(std::get<ArgFramework>(v));
  } else if (src == ValueKind::lp && dst == ValueKind::caf) {
    out = lp_to_caf(std::get<Program>(v));
  } else if (src == ValueKind::caf && dst == ValueKind::lp) {
    out = caf_to_lp(std::get<ClaimFramework>(v));
  } else {
    throw Error(
        "no direct translation between frameworks and claim frameworks; "
        "translate to lp first");
  }
  emit_value(out, json);
  return 0;
}

int run_kernel(const std::string& file, bool json) {
  Value v = parse_value(read_file(file));
  if (const auto* p = std::get_if<Program>(&v)) {
    emit_value(lp_kernel(*p), json);
  } else if (const auto* f = std::get_if<ArgFramework>(&v)) {
    emit_value(stable_kernel(*f), json);
  } else {
    throw Error("no kernel is defined for claim frameworks");
  }
  return 0;
}

int run_update(const std::string& base, const std::string& delta,
               const std::string& mode, bool json) {
  Program p = parse_program(base);
  Program q = parse_program(delta);
  Program out;
  switch (mode_from_name(mode)) {
    case UpdateMode::Union: out = program_union(p, q); break;
    case UpdateMode::Head: out = head_update_program(p, q); break;
    case UpdateMode::Id: out = id_update_program(p, q); break;
  }
  emit_value(out, json);
  return 0;
}

int run_se(const std::string& first, const std::string& second,
           const std::string& mode, bool json) {
  if (mode == "af") {
    ArgFramework f = std::get<ArgFramework>(parse_as(first, ValueKind::af));
    ArgFramework g = std::get<ArgFramework>(parse_as(second, ValueKind::af));
    return emit_verdict(af_strongly_equivalent(f, g), json);
  }
  if (mode == "caf") {
    ClaimFramework f =
        std::get<ClaimFramework>(parse_as(first, ValueKind::caf));
    ClaimFramework g =
        std::get<ClaimFramework>(parse_as(second, ValueKind::caf));
    return emit_verdict(caf_strongly_equivalent(f, g), json);
  }
  Program p = parse_program(first);
  Program q = parse_program(second);
  if (mode == "standard") return emit_verdict(standard_se(p, q), json);
  if (mode == "rr-head") return emit_verdict(rr_se_hunique(p, q), json);
  if (mode == "rr-id") return emit_verdict(rr_se_atomic(p, q), json);
  throw Error("unknown se mode '" + mode +
              "' (want standard, rr-head, rr-id, af or caf)");
}

int run_oracle(const std::string& first, const std::string& second,
               const std::string& mode, const OracleBudget& budget,
               bool json) {
  Program p = parse_program(first);
  Program q = parse_program(second);
  return emit_verdict(oracle_se(p, q, mode_from_name(mode), budget), json);
}

int run_gen(const std::string& kind, int size, double density,
            std::uint64_t seed, bool atomic, bool strict, bool h_unique,
            bool json) {
  RandomSpec spec;
  spec.kind = kind_from_name(kind);
  spec.size = size;
  spec.density = density;
  spec.atomic = atomic;
  spec.strict = strict;
  spec.h_unique = h_unique;
  spec.seed = seed;
  emit_value(generate(spec), json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Logic programs, argumentation frameworks and claim frameworks: "
      "semantics, translations, updates and strong equivalence."};
  app.require_subcommand(1);

  std::string file, second_file, base_file, delta_file;
  std::string from = "lp", to = "lp", mode;
  bool json = false;

  auto* solve = app.add_subcommand("solve", "Print the stable semantics");
  solve->add_option("file", file, "input file (format auto-detected)")
      ->required();
  solve->add_flag("--json", json, "machine-readable output");

  auto* translate =
      app.add_subcommand("translate", "Translate between formalisms");
  translate->add_option("file", file, "input file")->required();
  translate->add_option("--from", from, "source format: lp, af or caf")
      ->required();
  translate->add_option("--to", to, "target format: lp, af or caf")
      ->required();
  translate->add_flag("--json", json, "machine-readable output");

  auto* kernel = app.add_subcommand(
      "kernel", "Print the strong-equivalence kernel");
  kernel->add_option("file", file, "input file (format auto-detected)")
      ->required();
  kernel->add_flag("--json", json, "machine-readable output");

  auto* update =
      app.add_subcommand("update", "Apply an update program to a base");
  update->add_option("--base", base_file, "base program file")->required();
  update->add_option("--delta", delta_file, "update program file")
      ->required();
  update->add_option("--mode", mode, "union, head or id")->required();
  update->add_flag("--json", json, "machine-readable output");

  auto* se = app.add_subcommand(
      "se", "Decide strong equivalence of two inputs");
  se->add_option("first", file, "first input file")->required();
  se->add_option("second", second_file, "second input file")->required();
  se->add_option("--mode", mode, "standard, rr-head, rr-id, af or caf")
      ->required();
  se->add_flag("--json", json, "machine-readable output");

  OracleBudget budget;
  auto* oracle = app.add_subcommand(
      "oracle", "Search for a distinguishing update by brute force");
  oracle->add_option("first", file, "first program file")->required();
  oracle->add_option("second", second_file, "second program file")
      ->required();
  oracle->add_option("--mode", mode, "union, head or id")->required();
  oracle->add_option("--fresh-atoms", budget.fresh_atoms,
                     "fresh atoms beyond the joint language");
  oracle->add_option("--max-rules", budget.max_rules,
                     "maximum rules per candidate update");
  oracle->add_option("--max-body", budget.max_body,
                     "maximum body atoms per candidate rule");
  oracle->add_option("--fresh-ids", budget.fresh_ids,
                     "fresh rule ids (id mode only)");
  oracle->add_flag("--json", json, "machine-readable output");

  std::string kind = "lp";
  int size = 3;
  double density = 0.5;
  std::uint64_t seed = 0;
  bool atomic = false, strict = false, h_unique = false;
  auto* gen = app.add_subcommand(
      "gen", "Generate a seed-deterministic random instance");
  gen->add_option("--kind", kind, "lp, af or caf")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--size", size, "rules (lp) or arguments (af/caf)");
  gen->add_option("--density", density, "body-literal / attack density");
  gen->add_flag("--atomic", atomic, "lp only: empty positive bodies");
  gen->add_flag("--strict", strict, "no ungrounded vulnerabilities/attacks");
  gen->add_flag("--h-unique", h_unique, "lp only: one rule per head");
  gen->add_flag("--json", json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(solve)) return run_solve(file, json);
    if (app.got_subcommand(translate)) {
      return run_translate(file, from, to, json);
    }
    if (app.got_subcommand(kernel)) return run_kernel(file, json);
    if (app.got_subcommand(update)) {
      return run_update(base_file, delta_file, mode, json);
    }
    if (app.got_subcommand(se)) return run_se(file, second_file, mode, json);
    if (app.got_subcommand(oracle)) {
      return run_oracle(file, second_file, mode, budget, json);
    }
    if (app.got_subcommand(gen)) {
      return run_gen(kind, size, density, seed, atomic, strict, h_unique,
                     json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command given\n";
  return 2;
}
