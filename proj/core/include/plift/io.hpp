#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "plift/module.hpp"

namespace plift {

inline constexpr int kSchemaVersion = 1;

struct LiftEntry {
  std::string lift;  // module names
  std::string base;
  LiftWitness witness;
};

// One instance file: an algebra R over F_p, a quiver with relations, named
// modules over k or over R, and named lift witnesses between them.
struct Instance {
  AlgebraPtr algebra;
  AlgebraPtr residue_field;
  QuiverPtr quiver;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, LiftEntry> lifts;

  // Throw Error(UnknownModule) / Error(UnknownLift).
  const ModulePtr& module(const std::string& name) const;
  const LiftEntry& lift(const std::string& name) const;
};

// Throws Error(ValidationError) with the first failing diagnostic: algebra
// axioms, module relations, then lift witnesses.
void validate_instance(const Instance& inst);

// Parse and fully validate. Throws Error(ParseError) naming the line or the
// offending field, Error(ValidationError).
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical form: sorted keys, reduced coefficients, every matrix entry as a
// coefficient array, b_0 products omitted from the table.
nlohmann::json instance_to_json(const Instance& inst);
std::string save_instance(const Instance& inst);

// Matrix as rows of entries, each entry the coefficient array in R's basis.
nlohmann::json matrix_to_json(const MatrixR& m);
nlohmann::json matrix_to_json(const MatrixK& m);
// ranks plus arrow matrices keyed by label.
nlohmann::json module_to_json(const RepModule& m);

// Two-space indented JSON with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace plift
