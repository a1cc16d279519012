#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqmv/models/axioms.hpp"
#include "sqmv/models/model.hpp"

namespace sqmv::models {

struct AxiomResult {
  std::string name;
  bool holds = true;
  std::vector<std::string> vars;         // sorted
  std::vector<std::uint32_t> witness;    // first failing tuple, if any
};

struct Classification {
  ClassFlags flags;
  std::vector<AxiomResult> quasi, standard, strong, flat;
};

// Exhaustive check of one equation over a finite model.
AxiomResult check_exhaustive(const Equation& eq, const Model& m);

// Finite carriers only (DomainError otherwise).
Classification classify(const Model& m);

struct RegularSet {
  std::vector<std::uint32_t> elements;
  bool forms_standard = false;  // restricted structure is MV* (resp. Wajsberg*)
};

// R(A) = {x : x (+) 0 = x}, or {x : 0 -> x = x} with 0 = 1 -> 1.
RegularSet regular_elements(const Model& m);

}  // namespace sqmv::models
