#pragma once

#include <map>
#include <string>

#include "sqmv/models/model.hpp"
#include "sqmv/syntax/term.hpp"

namespace sqmv::semantics {

using models::Element;
using models::Model;
using syntax::Term;

using Valuation = std::map<std::string, Element>;

// Homomorphic, exact. SignatureError if t uses a connective foreign to m,
// UnboundVariable for a free variable missing from v, DomainError for
// bindings outside the carrier.
Element evaluate(const Term& t, const Model& m, const Valuation& v);

}  // namespace sqmv::semantics
