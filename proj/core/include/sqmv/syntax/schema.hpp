#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "sqmv/syntax/term.hpp"

namespace sqmv::syntax {

// A pattern whose variables are read as metavariables.
struct Schema {
  Term pattern;
  Signature sig = Signature::W;

  std::set<std::string> metavariables() const { return variables(pattern); }
  std::size_t arity() const { return metavariables().size(); }
};

using Assignment = std::map<std::string, Term>;

std::optional<Assignment> match_schema(const Schema& s, const Term& ground);

// Extends sigma so that sigma(pattern) = ground. On failure sigma is left
// unchanged and false is returned.
bool match_into(const Term& pattern, const Term& ground, Assignment& sigma);

// Every metavariable must be bound (MissingBinding); the result must conform
// to s.sig (SignatureError).
Term substitute(const Schema& s, const Assignment& sigma);

// Replaces bound variables, leaves the others in place.
Term substitute_partial(const Term& t, const Assignment& sigma);

}  // namespace sqmv::syntax
