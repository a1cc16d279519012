#pragma once

#include <string>
#include <vector>

#include "sqmv/models/axioms.hpp"
#include "sqmv/semantics/check.hpp"

namespace sqmv::semantics {

struct AuditEntry {
  std::string name;
  CheckReport report;
};

// "quasi", "standard", "strong", "flat" or "strong-quasi" (quasi + strong),
// in the model's signature. SpecError for other names.
std::vector<models::Equation> equation_set(const std::string& set, syntax::Signature sig);

// Finite models are always walked exhaustively; `strat` applies to the rest.
std::vector<AuditEntry> audit(const Model& m, const std::vector<models::Equation>& eqs, const Strategy& strat);

bool audit_passed(const std::vector<AuditEntry>& entries);

}  // namespace sqmv::semantics
