#pragma once

#include <string>
#include <vector>

#include "sqmv/proofkit/script.hpp"
#include "sqmv/syntax/schema.hpp"

namespace sqmv::proofkit {

// A <-> axiom has two forms: [0] left-to-right, [1] right-to-left. All
// forms are stored in core syntax (abbreviations expanded).
struct AxiomSchema {
  std::string name;
  std::vector<Term> forms;
};

struct RuleSchema {
  std::string name;
  std::vector<Term> premises;
  Term conclusion;
};

const std::vector<AxiomSchema>& axiom_table(System s);
const std::vector<RuleSchema>& rule_table(System s);

const AxiomSchema& find_axiom(System s, const std::string& name);  // UnknownAxiom
const RuleSchema* find_rule(System s, const std::string& name);    // nullptr if unknown

// Instances of the named axiom, one per direction, in core syntax.
std::vector<Term> instantiate_axiom(System s, const std::string& name, const syntax::Assignment& sigma);

// STRONG expansion in the w signature; every formula is compared in this form.
Term core(const Term& t);

}  // namespace sqmv::proofkit
