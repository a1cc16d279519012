#pragma once

#include "sqmv/syntax/term.hpp"

namespace sqmv::syntax {

enum class ExpansionMode { Strong, Primitive };

// Defining forms of the lattice parts, valid in strong algebras:
//   mv: x^+ = 1 (+) (-1 (+) x),  x^- = -1 (+) (1 (+) x)
//   w:  x^+ = (x -> 1) -> 1,      x^- = (x -> ~1) -> ~1
Term pos_def(const Term& x, Signature sig);
Term neg_def(const Term& x, Signature sig);

// Join with primitive ^+/^-.
Term join(const Term& x, const Term& y, Signature sig);

// STRONG rewrites every ^+/^- (innermost first) into its defining form.
// PRIMITIVE leaves the term unchanged (joins are already expanded by the
// parser). Asking for STRONG against a target known to be non-strong is a
// ModeError.
Term expand_abbreviations(const Term& t, Signature sig, ExpansionMode mode = ExpansionMode::Strong,
                          bool target_strong = true);

}  // namespace sqmv::syntax
