#pragma once

#include <string>
#include <vector>

#include "sqmv/syntax/term.hpp"

namespace sqmv::models {

struct Equation {
  std::string name;
  syntax::Term lhs, rhs;
  syntax::Signature sig;
};

// QMV*1-14 / QW*1-12 with ^+ and ^- primitive. Chained equations are split
// (QMV*5a-d, QW*5a-d).
const std::vector<Equation>& quasi_axioms(syntax::Signature sig);
// MV*1-12 / W*1-11 plus "def+" and "def-" tying the primitive lattice parts
// to their defining terms.
const std::vector<Equation>& standard_axioms(syntax::Signature sig);
// x^+ = x^+ (+) 0, x^- = x^- (+) 0  or  x^+ = (1 -> 1) -> x^+, ...
const std::vector<Equation>& strong_equations(syntax::Signature sig);
// 0 = 1, written 1 -> 1 = 1 in the w signature.
const std::vector<Equation>& flat_equations(syntax::Signature sig);

}  // namespace sqmv::models
