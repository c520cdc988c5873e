#pragma once

// Library half of the command-line front end: each command produces one
// CommandResult holding the machine report (stable field order, rationals as
// "p/q" strings), the human-readable text with the same numeric content, and
// the exit code (0 pass, 1 failed check, 3 oracle skipped under its cap;
// invalid input is signalled by std::invalid_argument and mapped to 2 by the
// binary).  Keeping this below the argv layer makes the reports testable
// without spawning processes.

#include "symgap/hodge.hpp"
#include "symgap/model.hpp"
#include "symgap/signcheck.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symgap {

using OrderedJson = nlohmann::ordered_json;

enum class RealForm { split, complex_form };

RealForm parse_real_form(const std::string& name);  // "split" | "complex"
std::string real_form_str(RealForm r);

struct AnalysisRequest {
  SimpleType algebra{Family::A, 1};
  std::vector<int> cross;
  std::optional<HasseWord2> module;  // restricts the module listing
  RealForm real = RealForm::split;
  WeightLatticeSpec lattice = WeightLatticeSpec::simply_connected;
  long long oracle_cap = 200000;          // verify: Hodge oracle size cap
  std::vector<std::string> checks;        // verify: empty means all checks
};

struct CommandResult {
  OrderedJson json;
  std::string text;
  int exit_code = 0;
};

// Per-module harmonic data, bounds, twistor target, canonical-model report,
// and (for the split form) the +-phi0 verdict; U is the maximum bound.
CommandResult cmd_analyze(const AnalysisRequest& req);

// One row per algebra: U_mu for every regular module and the overall U.
CommandResult cmd_table(const std::vector<SimpleType>& algebras, const std::vector<int>& cross);

// Invariant suite; names: jacobi, harmonic, hodge, annihilator, mu, twistor,
// differentials.  Unknown names are rejected with std::invalid_argument.
CommandResult cmd_verify(const AnalysisRequest& req);

const std::vector<std::string>& verify_check_names();

}  // namespace symgap
