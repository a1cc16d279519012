#include "sqmv/semantics/audit.hpp"

#include "sqmv/error.hpp"

namespace sqmv::semantics {

std::vector<models::Equation> equation_set(const std::string& set, syntax::Signature sig) {
  auto cat = [](std::vector<models::Equation> a, const std::vector<models::Equation>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (set == "quasi") return models::quasi_axioms(sig);
  if (set == "standard") return models::standard_axioms(sig);
  if (set == "strong") return models::strong_equations(sig);
  if (set == "flat") return models::flat_equations(sig);
  if (set == "strong-quasi") return cat(models::quasi_axioms(sig), models::strong_equations(sig));
  throw SpecError("unknown equation set " + set + " (quasi | standard | strong | flat | strong-quasi)");
}

std::vector<AuditEntry> audit(const Model& m, const std::vector<models::Equation>& eqs, const Strategy& strat) {
  const Strategy use = m.is_finite() ? Strategy::exhaustive() : strat;
  std::vector<AuditEntry> out;
  for (const auto& eq : eqs) out.push_back({eq.name, check_equation(eq.lhs, eq.rhs, m, use)});
  return out;
}

bool audit_passed(const std::vector<AuditEntry>& entries) {
  for (const auto& e : entries)
    if (e.report.verdict == Verdict::Countermodel) return false;
  return true;
}

}  // namespace sqmv::semantics
